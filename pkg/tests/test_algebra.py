from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slitpaths.algebra import (
    ONE,
    T,
    ZERO,
    FieldMatrix,
    Polynomial,
    RationalFunction,
    cofactor_determinant,
    determinant,
    minor,
    poly_gcd,
    rat_arith,
    ratfun_arith,
    series_coefficients,
)
from slitpaths.errors import DivisionByZero, IndexOutOfRange, NonSquareMatrix, NotAPowerSeries

small_rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_poly = st.lists(small_rat, max_size=3).map(Polynomial)
nonzero_poly = small_poly.filter(bool)


@st.composite
def ratfuns(draw, nonzero=False):
    num = draw(nonzero_poly if nonzero else small_poly)
    den = draw(nonzero_poly)
    return RationalFunction(num, den)


@st.composite
def power_series_ratfuns(draw):
    num = draw(small_poly)
    den = draw(st.lists(small_rat, min_size=1, max_size=3).filter(lambda c: c[0] != 0))
    return RationalFunction(num, Polynomial(den))


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2)
    assert rat_arith("2/4", 0, "add") == Fraction(1, 2)
    with pytest.raises(DivisionByZero):
        rat_arith(Fraction(1, 2), 0, "div")


def test_ratfun_examples():
    assert 1 / (1 - T) + 1 / (1 + T) == 2 / (1 - T ** 2)
    f = (1 + T) / (3 - T)
    assert ratfun_arith(f, 0, "mul") == ZERO
    g = RationalFunction(Polynomial((-1, 0, 1)), Polynomial((-1, 1)))
    assert g.num == Polynomial((1, 1)) and g.den == Polynomial((1,))
    with pytest.raises(DivisionByZero):
        ratfun_arith(f, ZERO, "div")


def test_canonical_form_monic_denominator():
    f = RationalFunction(Polynomial((2,)), Polynomial((4, -8)))
    assert f.den.lead == 1
    assert f == RationalFunction(Polynomial((-Fraction(1, 4),)), Polynomial((-Fraction(1, 2), 1)))
    assert str(f) == "1/(2 - 4*t)"


def test_zero_polynomial_conventions():
    z = Polynomial((0, 0))
    assert z.coeffs == () and z.degree == float("-inf")
    assert Polynomial((1, 2, 0)).degree == 1


def test_poly_gcd():
    a = Polynomial((-1, 0, 1))
    b = Polynomial((1, 2, 1))
    assert poly_gcd(a, b) == Polynomial((1, 1))
    assert poly_gcd(Polynomial(()), b) == b.monic()


@pytest.mark.parametrize("f, n, expected", [
    (1 / (1 - 2 * T), 3, [1, 2, 4, 8]),
    (1 / (1 - T ** 2), 4, [1, 0, 1, 0, 1]),
    ((1 - T ** 2) / (1 - 2 * T ** 2), 6, [1, 0, 1, 0, 2, 0, 4]),
])
def test_series_examples(f, n, expected):
    assert series_coefficients(f, n) == expected


def test_series_dyck_width2_matches_brute_force(dyck):
    from conftest import brute_force_weight
    f = (1 - T ** 2) / (1 - 2 * T ** 2)
    assert series_coefficients(f, 6) == [brute_force_weight(dyck, 2, 0, 0, n) for n in range(7)]


def test_series_not_a_power_series():
    with pytest.raises(NotAPowerSeries):
        series_coefficients(1 / T, 3)


def test_determinant_examples():
    assert determinant(FieldMatrix.identity(3)) == ONE
    m = FieldMatrix.from_rows([[1 / T, 1], [1, 1 / T]])
    assert determinant(m) == (1 - T ** 2) / T ** 2
    assert determinant(FieldMatrix(0, 0, [])) == ONE
    with pytest.raises(NonSquareMatrix):
        determinant(FieldMatrix.from_rows([[1, 2]]))


def test_determinant_needs_pivot_swap():
    m = FieldMatrix.from_rows([[0, 1, T], [1, 0, 0], [T, 1, 0]])
    assert determinant(m) == cofactor_determinant(m)
    assert determinant(FieldMatrix.from_rows([[0, 0], [1, T]])) == ZERO


def test_minor_examples():
    assert minor(FieldMatrix.identity(2), 0, 0) == FieldMatrix.from_rows([[1]])
    m = FieldMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert minor(m, 1, 2) == FieldMatrix.from_rows([[1, 2], [7, 8]])
    with pytest.raises(IndexOutOfRange):
        minor(m, 3, 0)


def test_format_styles():
    f = (1 - T) / (1 - 2 * T)
    assert f.format() == "(1 - t)/(1 - 2*t)"
    assert f.format("latex") == "\\frac{1 - t}{1 - 2 t}"
    assert (T / (1 - T ** 2)).format() == "t/(1 - t^2)"
    assert RationalFunction(Polynomial((Fraction(1, 2), 3))).format() == "(1 + 6*t)/2"


# -- properties -----------------------------------------------------------------

@given(ratfuns())
def test_normalize_idempotent(f):
    again = RationalFunction(f.num, f.den)
    assert again.num == f.num and again.den == f.den
    assert f.den.lead == 1
    assert poly_gcd(f.num, f.den).degree <= 0


@given(st.fractions(max_denominator=50), st.integers(1, 50))
def test_rational_canonical(x, k):
    y = Fraction(x.numerator * k, x.denominator * k)
    assert y == x and y.denominator > 0


@settings(max_examples=60)
@given(ratfuns(), ratfuns(), ratfuns())
def test_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + (-f) == ZERO
    if f:
        assert f * f.inverse() == ONE


@st.composite
def poly_matrices(draw):
    n = draw(st.integers(1, 5))
    entries = draw(st.lists(small_poly, min_size=n * n, max_size=n * n))
    return FieldMatrix(n, n, entries)


@settings(max_examples=40, deadline=None)
@given(poly_matrices())
def test_determinant_matches_cofactor(m):
    assert determinant(m) == cofactor_determinant(m)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(ratfuns(), min_size=n * n, max_size=n * n))))
def test_determinant_fraction_entries(arg):
    n, entries = arg
    m = FieldMatrix(n, n, entries)
    assert determinant(m) == cofactor_determinant(m)


@settings(max_examples=40, deadline=None)
@given(poly_matrices(), st.data())
def test_determinant_alternating(m, data):
    if m.rows < 2:
        return
    i = data.draw(st.integers(0, m.rows - 1))
    j = data.draw(st.integers(0, m.rows - 1).filter(lambda x: x != i))
    assert determinant(m.swap_rows(i, j)) == -determinant(m)


@settings(max_examples=60)
@given(power_series_ratfuns(), power_series_ratfuns(), st.integers(0, 12))
def test_series_of_product_is_convolution(f, g, n):
    a, b = series_coefficients(f, n), series_coefficients(g, n)
    conv = [sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1)]
    assert series_coefficients(f * g, n) == conv

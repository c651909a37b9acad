import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slitpaths.algebra import ONE, T, Polynomial, RationalFunction
from slitpaths.errors import DomainError
from slitpaths.kernel import (
    SlitProblem,
    WeightedStepSet,
    e_values,
    elementary_from_roots,
    kernel_coefficients,
    kernel_from_e_values,
    kernel_symmetry_check,
    numeric_kernel_roots,
)

pos_weight = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)
any_weight = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def step_sets(draw, max_alpha=4, max_beta=4, weight=any_weight):
    alpha = draw(st.integers(1, max_alpha))
    beta = draw(st.integers(1, max_beta))
    p = draw(st.lists(weight, min_size=alpha, max_size=alpha))
    q = draw(st.lists(weight, min_size=beta - 1, max_size=beta - 1))
    top_p = draw(weight.filter(bool))
    top_q = draw(weight.filter(bool))
    return WeightedStepSet(tuple(p) + (top_p,), tuple(q) + (top_q,))


def test_step_set_validation():
    with pytest.raises(DomainError):
        WeightedStepSet((1, 0), (1,))
    with pytest.raises(DomainError):
        WeightedStepSet((1, 1), (1, 0))
    with pytest.raises(DomainError):
        WeightedStepSet((1,), (1,))
    s = WeightedStepSet((0, 0, 2), (0, 3))
    assert (s.alpha, s.beta) == (2, 2)
    assert s.step_weight(2) == 2 and s.step_weight(-2) == 3 and s.step_weight(-1) == 0


def test_problem_validation():
    s = WeightedStepSet.dyck()
    with pytest.raises(DomainError):
        SlitProblem(s, 0, 0, 0)
    with pytest.raises(DomainError):
        SlitProblem(s, 2, 3, 0)
    with pytest.raises(DomainError):
        SlitProblem(s, 2, 0, -1)


def test_problem_json_round_trip():
    prob = SlitProblem(WeightedStepSet(("1/2", 0, 3), ("2/7",)), 4, 1, 3)
    assert SlitProblem.from_json(prob.to_json()) == prob
    bad = prob.to_json()
    bad["p"] = bad["p"][:-1]
    with pytest.raises(DomainError):
        SlitProblem.from_json(bad)


def test_kernel_coefficients_examples():
    # layout: index i holds the z^(i - beta) coefficient
    assert kernel_coefficients(WeightedStepSet.motzkin()) == (
        Polynomial((0, -1)), Polynomial((1, -1)), Polynomial((0, -1)))
    assert kernel_coefficients(WeightedStepSet.dyck()) == (
        Polynomial((0, -1)), Polynomial((1,)), Polynomial((0, -1)))
    sparse = WeightedStepSet((0, 0, 0, 1), (0, 1))
    assert sum(1 for c in kernel_coefficients(sparse) if c) == 3


def test_e_values_motzkin_general_weights():
    p0, p1, q1 = Fraction(2, 3), Fraction(5, 2), Fraction(7, 4)
    e = e_values(WeightedStepSet.motzkin(p0, p1, q1))
    assert e[0] == ONE
    assert e[1] == (1 - p0 * T) / (p1 * T)
    assert e[2] == RationalFunction(q1 / p1)
    assert e[3] == 0 and e[-1] == 0


def test_e_values_two_one_unit():
    e = e_values(WeightedStepSet.unit(2, 1))
    assert [e[i] for i in range(4)] == [ONE, -ONE, -(1 - T) / T, -ONE]


@settings(max_examples=100, deadline=None)
@given(step_sets())
def test_kernel_round_trip_from_e_values(steps):
    assert kernel_from_e_values(steps, e_values(steps)) == kernel_coefficients(steps)
    e = e_values(steps)
    assert e[0] == ONE
    top = e[steps.alpha + steps.beta]
    assert top.is_polynomial() and top.num.degree == 0


def test_numeric_roots_examples():
    roots = sorted(numeric_kernel_roots(WeightedStepSet.motzkin(), Fraction(1, 4)), key=abs)
    assert roots[0] == pytest.approx((3 - 5 ** 0.5) / 2, rel=1e-12)
    assert roots[1] == pytest.approx((3 + 5 ** 0.5) / 2, rel=1e-12)
    double = numeric_kernel_roots(WeightedStepSet.dyck(), Fraction(1, 2))
    assert all(abs(z - 1) < 1e-6 for z in double)
    with pytest.raises(DomainError):
        numeric_kernel_roots(WeightedStepSet.dyck(), 0)


def _eval_e(f: RationalFunction, t0: Fraction) -> complex:
    return complex(float(f(t0)))


@settings(max_examples=60, deadline=None)
@given(step_sets(max_alpha=3, max_beta=3, weight=pos_weight),
       st.fractions(min_value=Fraction(1, 100), max_value=Fraction(1, 10), max_denominator=100))
def test_numeric_roots_vieta(steps, t0):
    roots = numeric_kernel_roots(steps, t0)
    assert len(roots) == steps.alpha + steps.beta
    got = elementary_from_roots(roots)
    e = e_values(steps)
    for i in range(len(got)):
        want = _eval_e(e[i], t0)
        assert abs(got[i] - want) <= 1e-8 * max(1.0, abs(want))


def test_elementary_from_roots():
    e = elementary_from_roots([1, 2, 3])
    assert np.allclose(e, [1, 6, 11, 6])
    assert cmath.isclose(elementary_from_roots([2j])[1], 2j)


def test_kernel_symmetry():
    assert kernel_symmetry_check(WeightedStepSet.unit(2, 1))
    s = WeightedStepSet(("1/3", "2", "5/4"), ("7",))
    assert kernel_symmetry_check(s)
    # printed-order relabeling (p_0; q_1 | p_2, p_1) puts p_1 and p_2 on the wrong powers
    wrong = WeightedStepSet((s.p[0], s.q[0]), (s.p[2], s.p[1]))
    assert not kernel_symmetry_check(s, wrong)
    with pytest.raises(DomainError):
        kernel_symmetry_check(WeightedStepSet.unit(1, 2))


@given(step_sets(max_alpha=2, max_beta=1, weight=pos_weight).filter(lambda s: s.alpha == 2))
def test_kernel_symmetry_random(steps):
    assert kernel_symmetry_check(steps)

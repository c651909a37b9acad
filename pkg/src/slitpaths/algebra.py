"""Exact arithmetic in Q(t): rationals, polynomials, rational functions, matrices.

Rationals are :class:`fractions.Fraction`. Polynomials and rational functions
are immutable; every rational function is kept in canonical form (numerator
and denominator coprime, denominator monic), so ``==`` is structural.

Heavy lifting (gcd, determinants) happens on integer coefficient lists; the
public classes convert in and out.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, IndexOutOfRange, NonSquareMatrix, NotAPowerSeries

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals; pass a string or Fraction")
    try:
        return Fraction(x)
    except ZeroDivisionError as exc:
        raise DivisionByZero(f"zero denominator in {x!r}") from exc


def rat_arith(a, b, op: str) -> Fraction:
    a, b = rat(a), rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("rational division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# integer coefficient lists (index = power of t); the zero polynomial is []
# ---------------------------------------------------------------------------

def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _iadd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _isub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _imul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _iscale(a: list, k: int) -> list:
    return [x * k for x in a] if k else []


def _iexquo(a: list, b: list) -> list:
    """Exact quotient a/b in Z[t]; raises if b does not divide a."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db) if len(a) > db else []
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            qk, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[k] = qk
            for j in range(db + 1):
                r[k + j] -= qk * b[j]
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _icontent(a: list) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _iprimitive(a: list) -> list:
    if not a:
        return []
    g = _icontent(a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a] if g != 1 else list(a)


def _iprem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b (scaled so the arithmetic stays in Z)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r = _iprimitive(_trim(r))
    return r


def _igcd(a: list, b: list) -> list:
    """Primitive gcd in Z[t] with positive leading coefficient."""
    a, b = _iprimitive(a), _iprimitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _iprem(a, b)
        a, b = b, _iprimitive(r)
    return a


def _to_int(coeffs: Sequence[Fraction]) -> tuple[list, int]:
    """Return (ints, d) with coeffs == ints / d."""
    d = 1
    for c in coeffs:
        d = d * c.denominator // math.gcd(d, c.denominator)
    return [int(c * d) for c in coeffs], d


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------

class Polynomial:
    """Univariate polynomial in t over Q; ``coeffs[i]`` is the t**i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(c) for c in coeffs]
        self.coeffs = tuple(_trim(cs))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def from_ints(cls, ints: Sequence[int], denom: int = 1) -> "Polynomial":
        ints = _trim(list(ints))
        if denom == 1:
            return cls._raw(tuple(Fraction(x) for x in ints))
        return cls._raw(tuple(Fraction(x, denom) for x in ints))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self):
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def to_ints(self) -> tuple[list, int]:
        return _to_int(self.coeffs)

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        lc = self.coeffs[-1]
        return Polynomial._raw(tuple(c / lc for c in self.coeffs))

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Polynomial._raw(tuple(_trim(out)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(())
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(tuple(_trim(out)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        if len(r) - 1 < db:
            return Polynomial._raw(()), self
        q = [_ZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            q[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    r[k + j] -= c * y
        return Polynomial._raw(tuple(_trim(q))), Polynomial._raw(tuple(_trim(r[:db])))

    def __truediv__(self, other):
        return RationalFunction._coerce(self) / other

    def __rtruediv__(self, other):
        return as_ratfun(other) / RationalFunction._coerce(self)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_power(self, k: int) -> "Polynomial":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return Polynomial._raw((_ZERO,) * k + self.coeffs)

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self.coeffs)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q (gcd(0, 0) = 0)."""
    if not a and not b:
        return Polynomial._raw(())
    ia, _ = a.to_ints()
    ib, _ = b.to_ints()
    g = _igcd(ia, ib)
    return Polynomial.from_ints(g).monic()


def format_poly(coeffs: Sequence, var: str = "t", latex: bool = False) -> str:
    """Ascending-power string with explicit signs, e.g. ``1 - 2*t^2``."""
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _fmt_scalar(mag, latex)
        else:
            power = var if k == 1 else (f"{var}^{{{k}}}" if latex else f"{var}^{k}")
            if mag == 1:
                body = power
            else:
                body = f"{_fmt_scalar(mag, latex)}{' ' if latex else '*'}{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _fmt_scalar(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

class RationalFunction:
    """Element of Q(t) in canonical form: coprime parts, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, Polynomial) else Polynomial((num,))
        den = den if isinstance(den, Polynomial) else Polynomial((den,))
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def from_int_parts(cls, num: list, den: list) -> "RationalFunction":
        """Build from integer coefficient lists, reducing with an integer gcd."""
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            return cls._raw(Polynomial._raw(()), Polynomial._raw((_ONE,)))
        g = _igcd(num, den)
        if len(g) > 1:
            num, den = _iexquo(num, g), _iexquo(den, g)
        lc = den[-1]
        return cls._raw(Polynomial.from_ints(num, lc) if lc != 1 else Polynomial.from_ints(num),
                        Polynomial.from_ints(den, lc) if lc != 1 else Polynomial.from_ints(den))

    # -- properties -----------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # -- arithmetic ----------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction._raw(other, Polynomial._raw((_ONE,)))
        if isinstance(other, (int, Fraction)):
            return RationalFunction._raw(Polynomial((other,)), Polynomial._raw((_ONE,)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalFunction._raw(Polynomial._raw(()), Polynomial._raw((_ONE,)))
        if other.den.is_constant() and other.num.is_constant():
            c = other.num.coeffs[0]
            return RationalFunction._raw(self.num * c, self.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num ** k, self.den ** k)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"pole at t = {x}")
        return self.num(x) / d

    def series(self, n_max: int) -> list[Fraction]:
        return series_coefficients(self, n_max)

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return self.format()

    def integer_parts(self) -> tuple[list, list]:
        """Integer-cleared (numerator, denominator) with primitive overall content.

        The sign is fixed so the lowest nonzero denominator coefficient is positive.
        """
        n, dn = self.num.to_ints()
        d, dd = self.den.to_ints()
        # self == (n/dn) / (d/dd) == (n*dd) / (d*dn)
        n = [x * dd for x in n]
        d = [x * dn for x in d]
        g = math.gcd(_icontent(n), _icontent(d)) if n else _icontent(d)
        n = [x // g for x in n]
        d = [x // g for x in d]
        low = next(x for x in d if x)
        if low < 0:
            n = [-x for x in n]
            d = [-x for x in d]
        return n, d

    def format(self, style: str = "plain", var: str = "t") -> str:
        n, d = self.integer_parts()
        latex = style == "latex"
        ns = format_poly(n, var, latex)
        if d == [1]:
            return ns
        ds = format_poly(d, var, latex)
        if latex:
            return f"\\frac{{{ns}}}{{{ds}}}"
        if sum(1 for x in n if x) > 1:
            ns = f"({ns})"
        if sum(1 for x in d if x) > 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if not num:
        return Polynomial._raw(()), Polynomial._raw((_ONE,))
    if den.is_constant():
        c = den.coeffs[0]
        return (num if c == 1 else num * (1 / c)), Polynomial._raw((_ONE,))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    lc = den.lead
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return num, den


def as_ratfun(x) -> RationalFunction:
    f = RationalFunction._coerce(x)
    if f is NotImplemented:
        f = RationalFunction(rat(x))
    return f


def ratfun_arith(f, g, op: str) -> RationalFunction:
    f, g = as_ratfun(f), as_ratfun(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown op {op!r}")


T = RationalFunction._raw(Polynomial((0, 1)), Polynomial((1,)))
ZERO = RationalFunction._raw(Polynomial(()), Polynomial((1,)))
ONE = RationalFunction._raw(Polynomial((1,)), Polynomial((1,)))


def series_coefficients(f: RationalFunction, n_max: int) -> list[Fraction]:
    """Taylor coefficients c_0..c_{n_max} of f at t = 0."""
    f = as_ratfun(f)
    den = f.den.coeffs
    if not den or den[0] == 0:
        raise NotAPowerSeries("denominator vanishes at t = 0")
    if n_max < 0:
        return []
    # work with integers: den_i / dd, num_i / nd
    d_int, dd = _to_int(den)
    n_int, nd = _to_int(f.num.coeffs)
    d0 = d_int[0]
    # c_n = (num_n * dd/nd - sum_{k>=1} d_k c_{n-k}) / d0
    scale = Fraction(dd, nd)
    out: list[Fraction] = []
    tail = [(k, d_int[k]) for k in range(1, len(d_int)) if d_int[k]]
    for n in range(n_max + 1):
        acc = n_int[n] * scale if n < len(n_int) else _ZERO
        for k, dk in tail:
            if k > n:
                break
            acc -= dk * out[n - k]
        out.append(acc / d0)
    return out


# ---------------------------------------------------------------------------
# FieldMatrix
# ---------------------------------------------------------------------------

class FieldMatrix:
    """Dense immutable matrix over Q(t), row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_ratfun(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "FieldMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[RationalFunction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def swap_rows(self, a: int, b: int) -> "FieldMatrix":
        rows = self.to_rows()
        rows[a], rows[b] = rows[b], rows[a]
        return FieldMatrix.from_rows(rows) if rows else self

    def minor(self, row: int, col: int) -> "FieldMatrix":
        return minor(self, row, col)

    def determinant(self) -> RationalFunction:
        return determinant(self)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols}, {[str(x) for x in self.entries]})"


def minor(m: FieldMatrix, row: int, col: int) -> FieldMatrix:
    """Delete one row and one column."""
    if not (0 <= row < m.rows and 0 <= col < m.cols):
        raise IndexOutOfRange(f"minor ({row}, {col}) outside {m.rows}x{m.cols}")
    return FieldMatrix(m.rows - 1, m.cols - 1,
                       [m[i, j] for i in range(m.rows) if i != row
                        for j in range(m.cols) if j != col])


def _bareiss_int(rows: list[list[list]]) -> list:
    """Fraction-free elimination over Z[t]; returns the determinant as int coeffs."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                x = _imul(pivot, rowi[j])
                if mik and rowk[j]:
                    x = _isub(x, _imul(mik, rowk[j]))
                rowi[j] = _iexquo(x, prev) if k else x
            rowi[k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return [-x for x in det] if sign < 0 else det


def determinant(m: FieldMatrix) -> RationalFunction:
    """Exact determinant over Q(t).

    Each row is multiplied through by the lcm of its entry denominators and by
    the lcm of the resulting coefficient denominators, giving a matrix over
    Z[t]. Bareiss elimination runs on that, and the accumulated scale factor
    is divided out once at the end.
    """
    if m.rows != m.cols:
        raise NonSquareMatrix(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ONE
    int_rows = []
    scale = [1]  # product of row multipliers, integer polynomial
    for i in range(n):
        row = m.row(i)
        lcm_den: list = [1]
        for f in row:
            if f.num and not f.den.is_constant():
                d_int, _ = f.den.to_ints()
                d_int = _iprimitive(d_int)
                g = _igcd(lcm_den, d_int)
                lcm_den = _imul(lcm_den, _iexquo(d_int, g))
        # row entries times lcm_den are polynomials over Q
        polys = []
        for f in row:
            if not f.num:
                polys.append(Polynomial._raw(()))
                continue
            if f.den.is_constant():
                polys.append(f.num * Polynomial.from_ints(lcm_den))
            else:
                d_int, _ = f.den.to_ints()
                cof = Polynomial.from_ints(_iexquo(lcm_den, _iprimitive(d_int)))
                # f.den == primitive(d_int) * (lead of f.den / lead of primitive)
                prim = Polynomial.from_ints(_iprimitive(d_int))
                c = prim.lead / f.den.lead
                polys.append(f.num * cof * c)
        k = 1
        for p in polys:
            for c in p.coeffs:
                k = k * c.denominator // math.gcd(k, c.denominator)
        int_rows.append([[int(c * k) for c in p.coeffs] for p in polys])
        scale = _imul(scale, _iscale(lcm_den, k))
    det = _bareiss_int(int_rows)
    return RationalFunction.from_int_parts(det, scale)


def cofactor_determinant(m: FieldMatrix) -> RationalFunction:
    """Laplace expansion along the first row; exponential, for testing only."""
    if m.rows != m.cols:
        raise NonSquareMatrix(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return ONE
    if m.rows == 1:
        return m[0, 0]
    total = ZERO
    for j in range(m.cols):
        a = m[0, j]
        if a:
            term = a * cofactor_determinant(minor(m, 0, j))
            total = total + term if j % 2 == 0 else total - term
    return total

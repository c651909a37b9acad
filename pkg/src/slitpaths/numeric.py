"""Floating-point checks of the root-based formulas.

The exact routes never look at kernel roots. Here the roots are computed
numerically and plugged into Schur functions (ratio of alternants, or the
Jacobi-Trudi determinant when the roots are too close together) and into
the explicit small-(alpha, beta) monomial formulas. The results are compared
with the exact rational function evaluated at the same t.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import rat
from .errors import DegenerateRoots, DomainError
from .kernel import SlitProblem, WeightedStepSet, elementary_from_roots, numeric_kernel_roots
from .partitions import Partition, SkewShape, conjugate, pieri_expand, positive_part
from .schur import gf_skew_route, theorem_shapes

DEFAULT_T0 = Fraction(1, 10)

# distinct-root threshold relative to the largest root
_SEPARATION = 1e-6
# |Vandermonde| relative to prod_{i<j} (|z_i| + |z_j|) below which we switch to Jacobi-Trudi
_VANDERMONDE_GUARD = 1e-8


def _check_separation(z: np.ndarray) -> None:
    n = len(z)
    if n < 2:
        return
    scale = float(np.max(np.abs(z)))
    gap = min(abs(z[i] - z[j]) for i in range(n) for j in range(i + 1, n))
    if gap <= _SEPARATION * scale:
        raise DegenerateRoots(f"roots closer than {_SEPARATION:g} relative (gap {gap:.3g})")


def bialternant_schur(roots: Sequence[complex], lam: Partition | Sequence[int]) -> complex:
    """s_lam(roots) = det(z_i^(lam_j + n - j)) / det(z_i^(n - j))."""
    z = np.asarray(roots, dtype=complex)
    n = len(z)
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if lam.length > n:
        return 0j
    _check_separation(z)
    parts = lam.padded(n)
    alt = np.linalg.det(np.array([[zi ** (parts[j] + n - 1 - j) for j in range(n)] for zi in z]))
    vdm = np.linalg.det(np.array([[zi ** (n - 1 - j) for j in range(n)] for zi in z]))
    natural = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            natural *= abs(z[i]) + abs(z[j])
    if abs(vdm) < _VANDERMONDE_GUARD * natural:
        raise DegenerateRoots("Vandermonde determinant too small for a stable ratio")
    return complex(alt / vdm)


def numeric_jacobi_trudi_schur(roots: Sequence[complex], shape) -> complex:
    """Dual Jacobi-Trudi determinant with e_k computed from the roots; fine with repeated roots."""
    if isinstance(shape, SkewShape):
        outer, inner = shape.outer, shape.inner
    else:
        outer = shape if isinstance(shape, Partition) else Partition(tuple(shape))
        inner = Partition(())
    e = elementary_from_roots(roots)

    def ek(k: int) -> complex:
        return e[k] if 0 <= k < len(e) else 0j

    lc = conjugate(outer).parts
    mc = conjugate(inner).parts
    m = len(lc)
    if m == 0:
        return 1 + 0j
    mc = mc + (0,) * (m - len(mc))
    mat = np.array([[ek(lc[i] - mc[j] + j - i) for j in range(m)] for i in range(m)], dtype=complex)
    return complex(np.linalg.det(mat))


def schur_at_roots(roots: Sequence[complex], lam: Partition) -> tuple[complex, str]:
    """Bialternant when well conditioned, otherwise Jacobi-Trudi. Returns (value, method)."""
    try:
        return bialternant_schur(roots, lam), "bialternant"
    except DegenerateRoots:
        return numeric_jacobi_trudi_schur(roots, lam), "jacobi_trudi"


@dataclass(frozen=True)
class ValidationReport:
    exact: complex
    numeric: complex
    rel_error: float
    method: str = ""
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        for k in ("exact", "numeric"):
            d[k] = [self.__getattribute__(k).real, self.__getattribute__(k).imag]
        return d


def _rel(exact: complex, numeric: complex) -> float:
    if exact == 0:
        return float(abs(numeric))
    return float(abs(exact - numeric) / abs(exact))


def _exact_at(prob: SlitProblem, t0: Fraction) -> complex:
    return complex(float(gf_skew_route(prob).value(t0)))


def _note(steps: WeightedStepSet, t0: Fraction) -> str:
    bound = Fraction(1, 2 * sum(abs(x) for x in steps.p + steps.q))
    return "" if abs(t0) < bound else f"t0 outside the default safe radius {bound}"


def validate_theorem1_at(prob: SlitProblem, t0=DEFAULT_T0) -> ValidationReport:
    """Evaluate the skew-Schur ratio at numeric kernel roots and compare with the exact GF."""
    t0 = rat(t0)
    if t0 == 0:
        raise DomainError("t0 must be nonzero")
    steps = prob.steps
    roots = numeric_kernel_roots(steps, t0)
    skew, rect = theorem_shapes(prob.w, prob.alpha, prob.beta, prob.u, prob.v)
    methods = set()
    num = 0j
    for mu in pieri_expand(skew.outer, prob.v):
        val, how = schur_at_roots(roots, mu)
        num += val
        methods.add(how)
    den, how = schur_at_roots(roots, rect)
    methods.add(how)
    sign = 1 if (1 - prob.alpha) % 2 == 0 else -1
    numeric = sign / (float(t0) * float(steps.p[-1])) * num / den
    exact = _exact_at(prob, t0)
    return ValidationReport(exact, complex(numeric), _rel(exact, numeric),
                            "+".join(sorted(methods)), _note(steps, t0))


CLOSED_FORM_CASES = {"motzkin": (1, 1), "one_two": (1, 2), "two_one": (2, 1)}


def closed_form_value(case: str, roots: Sequence[complex], steps: WeightedStepSet,
                      w: int, u: int, v: int, t0) -> complex:
    """The explicit monomial formulas in the kernel roots for (alpha, beta) = (1,1), (1,2), (2,1)."""
    t0 = float(rat(t0))
    r = min(u, v, w - u, w - v)
    up, down = positive_part(v - u), positive_part(u - v)
    if case == "motzkin":
        z1, z2 = roots
        num = sum(z1 ** (w - up - l + 1) * z2 ** (down + l) - z2 ** (w - up - l + 1) * z1 ** (down + l)
                  for l in range(r + 1))
        den = z1 ** (w + 2) - z2 ** (w + 2)
        return num / den / (t0 * float(steps.p[1]))
    if case == "one_two":
        z1, z2, z3 = roots
        num = 0j
        for l in range(r + 1):
            a, b = w - up - l + 2, down + l + 1
            num += (z1 ** a * (z2 ** b - z3 ** b) - z2 ** a * (z1 ** b - z3 ** b)
                    + z3 ** a * (z1 ** b - z2 ** b))
        den = (z1 ** (w + 3) * (z2 - z3) - z2 ** (w + 3) * (z1 - z3)
               + z3 ** (w + 3) * (z1 - z2))
        return num / den / (t0 * float(steps.p[1]))
    if case == "two_one":
        z1, z2, z3 = roots
        num = 0j
        for l in range(r + 1):
            a, b = w - up - l + 1, down + l
            num += (z1 ** (w + 2) * (z2 ** a * z3 ** b - z3 ** a * z2 ** b)
                    - z2 ** (w + 2) * (z1 ** a * z3 ** b - z3 ** a * z1 ** b)
                    + z3 ** (w + 2) * (z1 ** a * z2 ** b - z2 ** a * z1 ** b))
        den = (z1 ** (w + 3) * (z2 ** (w + 2) - z3 ** (w + 2))
               - z2 ** (w + 3) * (z1 ** (w + 2) - z3 ** (w + 2))
               + z3 ** (w + 3) * (z1 ** (w + 2) - z2 ** (w + 2)))
        return -num / den / (t0 * float(steps.p[2]))
    raise DomainError(f"unknown closed-form case {case!r}")


def validate_section3_closed_forms(case: str, prob: SlitProblem, t0=DEFAULT_T0) -> ValidationReport:
    if case not in CLOSED_FORM_CASES:
        raise DomainError(f"unknown closed-form case {case!r}")
    if (prob.alpha, prob.beta) != CLOSED_FORM_CASES[case]:
        raise DomainError(f"{case} needs (alpha, beta) = {CLOSED_FORM_CASES[case]}")
    t0 = rat(t0)
    roots = numeric_kernel_roots(prob.steps, t0)
    _check_separation(roots)
    numeric = closed_form_value(case, roots, prob.steps, prob.w, prob.u, prob.v, t0)
    exact = _exact_at(prob, t0)
    return ValidationReport(exact, complex(numeric), _rel(exact, numeric), case, _note(prob.steps, t0))


def reflected_closed_forms(steps21: WeightedStepSet, w: int, u: int, v: int, t0=DEFAULT_T0) -> float:
    """Relative gap between the (2,1) formula at (u, v) and the (1,2) formula for the
    up/down exchanged steps at (w-u, w-v), each at its own kernel roots."""
    if (steps21.alpha, steps21.beta) != (2, 1):
        raise DomainError("needs (alpha, beta) = (2, 1)")
    steps12 = steps21.reflect()
    roots21 = numeric_kernel_roots(steps21, t0)
    roots12 = numeric_kernel_roots(steps12, t0)
    a = closed_form_value("two_one", roots21, steps21, w, u, v, t0)
    b = closed_form_value("one_two", roots12, steps12, w, w - u, w - v, t0)
    return _rel(a, b)

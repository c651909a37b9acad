"""Strip generating functions as ratios of (skew) Schur functions in the kernel roots.

Writing the boundary-corrected functional equation coefficient-wise in z gives
a banded (w+1)x(w+1) system A x = b with A = (e_{alpha+j-i}). By Cramer's rule

    G_(u,v)(t) = (-1)^(1-alpha) / (t p_alpha) * det A[u|v] / det A

where A[u|v] drops row u and column v. det A is the Jacobi-Trudi determinant
of the rectangle ((w+1)^alpha), and det A[u|v] that of the skew shape
(w^alpha, u, 0^(beta-1)) / (v). The horizontal-strip expansion of the skew shape
gives a second, independent route through straight Schur functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import ONE, ZERO, FieldMatrix, Polynomial, RationalFunction, determinant, minor
from .errors import DomainError
from .kernel import EValues, SlitProblem, WeightedStepSet, check_heights, e_values
from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    denominator_shape,
    endpoint_shape,
    lemma3_mu_list,
    strip_shape,
)

ROUTES = ("skew_determinant", "schur_sum", "transfer_matrix")


@dataclass(frozen=True)
class GFResult:
    value: RationalFunction
    route: str
    problem: SlitProblem

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")

    def series(self, n_max: int):
        return self.value.series(n_max)


def build_A(w: int, e: EValues) -> FieldMatrix:
    """The banded matrix (e_{alpha+j-i})_{i,j=0..w}."""
    if w < 1:
        raise DomainError(f"strip width must be >= 1, got w={w}")
    alpha = _alpha_of(e)
    return FieldMatrix(w + 1, w + 1, [e[alpha + j - i] for i in range(w + 1) for j in range(w + 1)])


def _alpha_of(e: EValues) -> int:
    # e_alpha is the only entry that is not constant in t
    for k in range(len(e)):
        if not e[k].is_polynomial() or e[k].num.degree > 0:
            return k
    raise DomainError("no t-dependent e-value; not a kernel e-sequence")


@lru_cache(maxsize=1024)
def _det_A_cached(steps: WeightedStepSet, w: int) -> RationalFunction:
    return determinant(build_A(w, e_values(steps)))


def det_A(w: int, e: EValues | WeightedStepSet) -> RationalFunction:
    if isinstance(e, WeightedStepSet):
        return _det_A_cached(e, w)
    return determinant(build_A(w, e))


def jacobi_trudi_matrix(e: EValues, shape: Partition | SkewShape) -> FieldMatrix:
    """(e_{lam'_i - mu'_j + j - i}) for a straight or skew shape, size l(lam')."""
    if isinstance(shape, SkewShape):
        outer, inner = shape.outer, shape.inner
    else:
        outer, inner = shape, Partition(())
    lc = conjugate(outer).parts
    mc = conjugate(inner).parts
    n = len(lc)
    mc = mc + (0,) * (n - len(mc))
    return FieldMatrix(n, n, [e[lc[i] - mc[j] + j - i] for i in range(n) for j in range(n)])


def jacobi_trudi_schur(e: EValues, shape: Partition | SkewShape) -> RationalFunction:
    """Schur (or skew Schur) function of the kernel roots, via the dual Jacobi-Trudi identity."""
    return determinant(jacobi_trudi_matrix(e, shape))


@lru_cache(maxsize=8192)
def _schur_cached(steps: WeightedStepSet, shape: Partition) -> RationalFunction:
    return jacobi_trudi_schur(e_values(steps), shape)


def theorem_shapes(w: int, alpha: int, beta: int, u: int, v: int) -> tuple[SkewShape, Partition]:
    """(numerator skew shape, denominator rectangle)."""
    return (SkewShape(strip_shape(w, alpha, beta, u), endpoint_shape(v, alpha, beta)),
            denominator_shape(w, alpha, beta))


def _prefactor(steps: WeightedStepSet) -> RationalFunction:
    """(-1)^(1-alpha) / (t p_alpha)."""
    sign = 1 if (1 - steps.alpha) % 2 == 0 else -1
    return RationalFunction(Polynomial((sign,)), Polynomial((0, steps.p[-1])))


def gf_skew_route(prob: SlitProblem) -> GFResult:
    steps, w = prob.steps, prob.w
    A = build_A(w, e_values(steps))
    num = determinant(minor(A, prob.u, prob.v))
    value = _prefactor(steps) * num / det_A(w, steps)
    return GFResult(value, "skew_determinant", prob)


def gf_skew_shape_route(prob: SlitProblem) -> RationalFunction:
    """Same quantity as :func:`gf_skew_route`, numerator built from the skew Jacobi-Trudi matrix
    of (w^alpha, u, 0^(beta-1))/(v) instead of a minor of A."""
    skew, rect = theorem_shapes(prob.w, prob.alpha, prob.beta, prob.u, prob.v)
    e = e_values(prob.steps)
    return _prefactor(prob.steps) * jacobi_trudi_schur(e, skew) / jacobi_trudi_schur(e, rect)


def gf_schur_sum_route(prob: SlitProblem) -> GFResult:
    steps = prob.steps
    shapes = lemma3_mu_list(prob.w, prob.alpha, prob.beta, prob.u, prob.v)
    num = ZERO
    for mu in shapes:
        num = num + _schur_cached(steps, mu)
    den = _schur_cached(steps, denominator_shape(prob.w, prob.alpha, prob.beta))
    return GFResult(_prefactor(steps) * num / den, "schur_sum", prob)


def gf_vector(steps: WeightedStepSet, w: int, u: int) -> list[GFResult]:
    """G_(u,v) for v = 0..w, sharing one det A."""
    check_heights(w, u, 0)
    A = build_A(w, e_values(steps))
    scale = _prefactor(steps) / det_A(w, steps)
    return [GFResult(scale * determinant(minor(A, u, v)), "skew_determinant",
                     SlitProblem(steps, w, u, v))
            for v in range(w + 1)]


def verify_linear_system(steps: WeightedStepSet, w: int, u: int,
                         g: Sequence[RationalFunction | GFResult]) -> bool:
    """Check sum_i (-1)^i e_i G_(u, v-alpha+i) == -[u == v] / (t p_alpha) for v = 0..w."""
    if len(g) != w + 1:
        return False
    vals = [x.value if isinstance(x, GFResult) else x for x in g]
    e = e_values(steps)
    alpha, beta = steps.alpha, steps.beta
    rhs = -RationalFunction(Polynomial((1,)), Polynomial((0, steps.p[-1])))
    for v in range(w + 1):
        acc = ZERO
        for i in range(alpha + beta + 1):
            j = v - alpha + i
            if 0 <= j <= w:
                term = e[i] * vals[j]
                acc = acc - term if i % 2 else acc + term
        if acc != (rhs if v == u else ZERO):
            return False
    return True


SPECIAL_CASES = ("excursion", "bridge_up", "bridge_down", "meander_from_floor",
                 "meander_from_ceiling", "meander_to_ceiling", "meander_to_floor")


def special_case_heights(kind: str, w: int, free: int | None = None) -> tuple[int, int]:
    """(u, v) for a named family; meanders take the free endpoint as ``free``."""
    fixed = {"excursion": (0, 0), "bridge_up": (0, w), "bridge_down": (w, 0)}
    if kind in fixed:
        return fixed[kind]
    if kind not in SPECIAL_CASES:
        raise DomainError(f"unknown special case {kind!r}")
    if free is None:
        raise DomainError(f"{kind} needs the free endpoint height")
    return {
        "meander_from_floor": (0, free),
        "meander_from_ceiling": (w, free),
        "meander_to_ceiling": (free, w),
        "meander_to_floor": (free, 0),
    }[kind]


def special_case(kind: str, steps: WeightedStepSet, w: int, free: int | None = None) -> GFResult:
    u, v = special_case_heights(kind, w, free)
    return gf_skew_route(SlitProblem(steps, w, u, v))


def special_case_shape(kind: str, w: int, alpha: int, beta: int,
                       free: int | None = None) -> Partition:
    """Straight numerator shape of the named family (a single Schur function)."""
    u, v = special_case_heights(kind, w, free)
    shapes = lemma3_mu_list(w, alpha, beta, u, v)
    if len(shapes) != 1:
        raise DomainError(f"{kind} at u={u}, v={v} is not a single Schur function")
    return shapes[0]


def shared_denominator(steps: WeightedStepSet, w: int) -> RationalFunction:
    """t^((w+1) alpha) det A, a polynomial in t divisible by every G_(u,v) denominator."""
    return RationalFunction(Polynomial.monomial((w + 1) * steps.alpha)) * det_A(w, steps)

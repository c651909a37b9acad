"""Weighted step sets and the kernel K(t, z) = 1 - t*sum p_a z^a - t*sum q_b z^-b.

Matching coefficients of z in

    K(t, z) = -t p_alpha * sum_i (-1)^i e_i z^(alpha - i)

gives every elementary symmetric function e_i of the alpha+beta kernel roots
as an explicit rational function of t. The exact routes only ever use these,
so no root of K is computed symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algebra import ONE, ZERO, Polynomial, RationalFunction, rat
from .errors import DomainError, NumericFailure


@dataclass(frozen=True)
class WeightedStepSet:
    """Up-step weights ``p[0..alpha]`` (``p[0]`` horizontal) and down-step weights ``q[1..beta]``.

    ``q`` is stored 0-based: ``q[b - 1]`` weighs the down step of height b.
    """

    p: tuple
    q: tuple

    def __post_init__(self):
        p = tuple(rat(x) for x in self.p)
        q = tuple(rat(x) for x in self.q)
        if len(p) < 2:
            raise DomainError("need at least one up step (alpha >= 1)")
        if len(q) < 1:
            raise DomainError("need at least one down step (beta >= 1)")
        if p[-1] == 0:
            raise DomainError(f"top up-step weight p_{len(p) - 1} must be nonzero")
        if q[-1] == 0:
            raise DomainError(f"top down-step weight q_{len(q)} must be nonzero")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def alpha(self) -> int:
        return len(self.p) - 1

    @property
    def beta(self) -> int:
        return len(self.q)

    def up(self, a: int) -> Fraction:
        return self.p[a] if 0 <= a <= self.alpha else Fraction(0)

    def down(self, b: int) -> Fraction:
        return self.q[b - 1] if 1 <= b <= self.beta else Fraction(0)

    def step_weight(self, d: int) -> Fraction:
        """Weight of a step changing the height by ``d``."""
        return self.up(d) if d >= 0 else self.down(-d)

    def steps(self) -> list[tuple[int, Fraction]]:
        """(height change, weight) for every nonzero-weight step."""
        out = [(a, w) for a, w in enumerate(self.p) if w]
        out += [(-b, w) for b, w in enumerate(self.q, start=1) if w]
        return out

    def reflect(self) -> "WeightedStepSet":
        """Mirror image under height h -> -h: up steps become down steps and vice versa."""
        return WeightedStepSet((self.p[0],) + self.q, self.p[1:])

    def scaled(self, c) -> "WeightedStepSet":
        c = rat(c)
        return WeightedStepSet(tuple(x * c for x in self.p), tuple(x * c for x in self.q))

    @classmethod
    def unit(cls, alpha: int, beta: int) -> "WeightedStepSet":
        return cls((1,) * (alpha + 1), (1,) * beta)

    @classmethod
    def motzkin(cls, p0=1, p1=1, q1=1) -> "WeightedStepSet":
        return cls((p0, p1), (q1,))

    @classmethod
    def dyck(cls) -> "WeightedStepSet":
        return cls((0, 1), (1,))

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta,
                "p": [str(x) for x in self.p], "q": [str(x) for x in self.q]}


@dataclass(frozen=True)
class SlitProblem:
    steps: WeightedStepSet
    w: int
    u: int
    v: int

    def __post_init__(self):
        check_heights(self.w, self.u, self.v)

    @property
    def alpha(self) -> int:
        return self.steps.alpha

    @property
    def beta(self) -> int:
        return self.steps.beta

    def key(self) -> tuple:
        return (self.alpha, self.beta, self.w, self.u, self.v)

    def to_json(self) -> dict:
        d = self.steps.to_json()
        d.update({"w": self.w, "u": self.u, "v": self.v})
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SlitProblem":
        try:
            alpha, beta = int(d["alpha"]), int(d["beta"])
            p, q = list(d["p"]), list(d["q"])
            w, u, v = int(d["w"]), int(d["u"]), int(d["v"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed problem: {exc}") from exc
        if len(p) != alpha + 1:
            raise DomainError(f"p must have alpha+1 = {alpha + 1} entries, got {len(p)}")
        if len(q) != beta:
            raise DomainError(f"q must have beta = {beta} entries, got {len(q)}")
        try:
            steps = WeightedStepSet(tuple(rat(x) for x in p), tuple(rat(x) for x in q))
        except (ValueError, TypeError) as exc:
            raise DomainError(f"bad weight: {exc}") from exc
        return cls(steps, w, u, v)


def check_heights(w: int, u: int, v: int) -> None:
    if w < 1:
        raise DomainError(f"strip width must be >= 1, got w={w}")
    if not 0 <= u <= w:
        raise DomainError(f"start height u={u} outside [0, {w}]")
    if not 0 <= v <= w:
        raise DomainError(f"end height v={v} outside [0, {w}]")


@dataclass(frozen=True)
class EValues:
    """e_0..e_{alpha+beta} as rational functions of t; out-of-range indices read as 0."""

    e: tuple

    def __getitem__(self, k: int) -> RationalFunction:
        return self.e[k] if 0 <= k < len(self.e) else ZERO

    def __len__(self) -> int:
        return len(self.e)

    @property
    def n(self) -> int:
        """Number of kernel roots."""
        return len(self.e) - 1


def kernel_coefficients(steps: WeightedStepSet) -> tuple:
    """Coefficients of K(t, z) in z; entry ``i`` is the z**(i - beta) coefficient, a polynomial in t."""
    out = []
    for b in range(steps.beta, 0, -1):
        out.append(Polynomial((0, -steps.down(b))))
    out.append(Polynomial((1, -steps.up(0))))
    for a in range(1, steps.alpha + 1):
        out.append(Polynomial((0, -steps.up(a))))
    return tuple(out)


@lru_cache(maxsize=512)
def e_values(steps: WeightedStepSet) -> EValues:
    alpha, beta = steps.alpha, steps.beta
    pa = steps.p[alpha]
    e = [ZERO] * (alpha + beta + 1)
    e[0] = ONE
    for a in range(1, alpha):
        e[alpha - a] = RationalFunction((-1) ** (alpha - a) * steps.up(a) / pa)
    # (1 - t p_0) / (t p_alpha), sign (-1)^(alpha+1)
    sign = -1 if alpha % 2 == 0 else 1
    e[alpha] = RationalFunction(Polynomial((sign, -sign * steps.up(0))), Polynomial((0, pa)))
    for b in range(1, beta + 1):
        e[alpha + b] = RationalFunction((-1) ** (alpha + b) * steps.down(b) / pa)
    return EValues(tuple(e))


def kernel_from_e_values(steps: WeightedStepSet, e: EValues) -> tuple:
    """Expand -t p_alpha * sum_i (-1)^i e_i z^(alpha-i) back into z-coefficients (same layout
    as :func:`kernel_coefficients`)."""
    alpha, beta = steps.alpha, steps.beta
    factor = RationalFunction(Polynomial((0, -steps.p[alpha])))
    out = [None] * (alpha + beta + 1)
    for i in range(alpha + beta + 1):
        c = factor * e[i]
        if i % 2:
            c = -c
        if not c.is_polynomial():
            raise ArithmeticError(f"non-polynomial kernel coefficient {c}")
        # z^(alpha - i) sits at index alpha - i + beta
        out[alpha - i + beta] = c.num
    return tuple(out)


def _kernel_numeric_poly(steps: WeightedStepSet, t0) -> np.ndarray:
    """z^beta K(t0, z) as numpy coefficients, highest power first."""
    t0 = float(rat(t0))
    coeffs = []
    for a in range(steps.alpha, 0, -1):
        coeffs.append(-t0 * float(steps.up(a)))
    coeffs.append(1.0 - t0 * float(steps.up(0)))
    for b in range(1, steps.beta + 1):
        coeffs.append(-t0 * float(steps.down(b)))
    return np.array(coeffs, dtype=complex)


def numeric_kernel_roots(steps: WeightedStepSet, t0, tol: float = 1e-10) -> np.ndarray:
    """Complex roots of z^beta K(t0, z) via companion-matrix eigenvalues plus Newton polishing."""
    if rat(t0) == 0:
        raise DomainError("t0 must be nonzero")
    c = _kernel_numeric_poly(steps, t0)
    c = c / c[0]
    roots = np.roots(c)
    dc = np.polyder(c)
    for k, z in enumerate(roots):
        for _ in range(50):
            f = np.polyval(c, z)
            d = np.polyval(dc, z)
            if d == 0:
                break
            step = f / d
            z_new = z - step
            if not np.isfinite(z_new):
                break
            if abs(np.polyval(c, z_new)) >= abs(f):
                break
            z = z_new
            if abs(step) <= 1e-16 * max(1.0, abs(z)):
                break
        roots[k] = z
    for z in roots:
        scale = float(np.sum(np.abs(c) * max(1.0, abs(z)) ** np.arange(len(c) - 1, -1, -1)))
        if abs(np.polyval(c, z)) > tol * scale:
            raise NumericFailure(f"kernel root {z} has residual {abs(np.polyval(c, z)):.3g}")
    return roots


def kernel_symmetry_check(steps21: WeightedStepSet, swapped: WeightedStepSet | None = None) -> bool:
    """Check K^(2,1)(t, z) == K^(1,2)(t, 1/z) for the up/down exchanged step set.

    ``swapped`` defaults to the exchanged set (p_0; q_1 | p_1, p_2); pass another
    (alpha, beta) = (1, 2) set to test a different relabeling.
    """
    if (steps21.alpha, steps21.beta) != (2, 1):
        raise DomainError("kernel symmetry check needs (alpha, beta) = (2, 1)")
    if swapped is None:
        swapped = steps21.reflect()
    if (swapped.alpha, swapped.beta) != (1, 2):
        return False
    # z -> 1/z reverses the coefficient sequence
    return tuple(reversed(kernel_coefficients(steps21))) == kernel_coefficients(swapped)


def elementary_from_roots(roots: Sequence[complex]) -> np.ndarray:
    """e_0..e_n of the given numbers."""
    c = np.poly(np.asarray(roots, dtype=complex))
    return np.array([(-1) ** i * c[i] for i in range(len(c))], dtype=complex)

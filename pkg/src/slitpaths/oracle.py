"""Ground truth that shares nothing with the Schur-function routes.

``dp_count`` sums path weights height by height; ``transfer_gf`` reads a
generating function off (I - tT)^-1 for the one-step weight matrix T.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import FieldMatrix, Polynomial, RationalFunction, determinant, minor, series_coefficients
from .kernel import SlitProblem, WeightedStepSet, check_heights
from .schur import GFResult, gf_skew_route


def dp_count(steps: WeightedStepSet, w: int, u: int, v: int, n: int) -> Fraction:
    """Total weight of the n-step paths from height u to height v inside [0, w]."""
    check_heights(w, u, v)
    if n < 0:
        raise ValueError("path length must be nonnegative")
    return dp_table(steps, w, u, n)[n][v]


def dp_table(steps: WeightedStepSet, w: int, u: int, n_max: int) -> list[list[Fraction]]:
    """``table[n][h]`` = total weight of n-step paths from u ending at h."""
    check_heights(w, u, 0)
    moves = steps.steps()
    row = [Fraction(0)] * (w + 1)
    row[u] = Fraction(1)
    table = [row]
    for _ in range(n_max):
        nxt = [Fraction(0)] * (w + 1)
        for h, x in enumerate(row):
            if not x:
                continue
            for d, wt in moves:
                k = h + d
                if 0 <= k <= w:
                    nxt[k] += x * wt
        row = nxt
        table.append(row)
    return table


def transfer_matrix(steps: WeightedStepSet, w: int) -> list[list[Fraction]]:
    """T[h][h'] = weight of the step h -> h' (0 if not a step)."""
    return [[steps.step_weight(k - h) for k in range(w + 1)] for h in range(w + 1)]


def transfer_gf(steps: WeightedStepSet, w: int, u: int, v: int) -> GFResult:
    """Entry (u, v) of (I - tT)^-1, by Cramer's rule on two determinants."""
    prob = SlitProblem(steps, w, u, v)
    T = transfer_matrix(steps, w)
    M = FieldMatrix(w + 1, w + 1, [
        RationalFunction(Polynomial(((1 if i == j else 0), -T[i][j])))
        for i in range(w + 1) for j in range(w + 1)
    ])
    # (M^-1)[u][v] = (-1)^(u+v) det M[v|u] / det M
    cof = determinant(minor(M, v, u))
    if (u + v) % 2:
        cof = -cof
    return GFResult(cof / determinant(M), "transfer_matrix", prob)


def motzkin_limit_check(n_max: int, p0=1) -> bool:
    """Compare the width-n_max excursion series with unrestricted DP counts up to t^n_max.

    A path of length n never climbs above height n, so the strip is invisible
    at this depth. ``p0=0`` gives Dyck paths.
    """
    if n_max > 12:
        raise ValueError("n_max is limited to 12")
    steps = WeightedStepSet.motzkin(p0=p0)
    w = max(n_max, 1)
    series = series_coefficients(gf_skew_route(SlitProblem(steps, w, 0, 0)).value, n_max)
    wide = dp_table(steps, n_max + 1, 0, n_max)
    return series == [wide[n][0] for n in range(n_max + 1)]

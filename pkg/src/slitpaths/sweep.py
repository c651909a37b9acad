"""Parameter sweeps cross-checking every route, oracle and certificate.

Everything here is deterministic for a given seed: instances are visited in
sorted (alpha, beta, w, u, v) order and the report carries no timings.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import RationalFunction, series_coefficients
from .errors import DegenerateRoots
from .kernel import SlitProblem, WeightedStepSet
from .numeric import DEFAULT_T0, validate_theorem1_at
from .oracle import dp_table, transfer_gf
from .partitions import lemma3_mu_list, pieri_expand, strip_shape
from .schur import gf_schur_sum_route, gf_skew_route, gf_vector, verify_linear_system

Route = Callable[[SlitProblem], RationalFunction]

DEFAULT_ROUTES: dict[str, Route] = {
    "skew_determinant": lambda prob: gf_skew_route(prob).value,
    "schur_sum": lambda prob: gf_schur_sum_route(prob).value,
    "transfer_matrix": lambda prob: transfer_gf(prob.steps, prob.w, prob.u, prob.v).value,
}

NUMERIC_TOL = 1e-8


def random_step_set(alpha: int, beta: int, seed: int, index: int) -> WeightedStepSet:
    """Positive rational weights with numerators and denominators in 1..9."""
    rng = random.Random(f"slitpaths:{seed}:{alpha}:{beta}:{index}")

    def draw() -> Fraction:
        return Fraction(rng.randint(1, 9), rng.randint(1, 9))

    return WeightedStepSet(tuple(draw() for _ in range(alpha + 1)), tuple(draw() for _ in range(beta)))


def step_sets_for(alpha: int, beta: int, weights: str, n_random: int,
                  seed: int | None) -> list[tuple[str, WeightedStepSet]]:
    out = []
    if weights in ("unit", "both"):
        out.append(("unit", WeightedStepSet.unit(alpha, beta)))
    if weights in ("random", "both"):
        if seed is None:
            raise ValueError("random weights need a seed")
        out += [(f"random{k}", random_step_set(alpha, beta, seed, k)) for k in range(n_random)]
    return out


@dataclass
class SweepReport:
    config: dict
    instances: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, key: tuple, weights: str, detail: str) -> None:
        self.failures.append({"check": check, "instance": list(key), "weights": weights,
                              "detail": detail})

    def tally(self, check: str, passed: bool) -> None:
        c = self.counts.setdefault(check, {"pass": 0, "fail": 0, "skipped": 0})
        c["pass" if passed else "fail"] += 1

    def skip(self, check: str) -> None:
        self.counts.setdefault(check, {"pass": 0, "fail": 0, "skipped": 0})["skipped"] += 1

    def to_json(self) -> str:
        return json.dumps({"config": self.config, "ok": self.ok, "counts": self.counts,
                           "failures": self.failures, "instances": self.instances},
                          sort_keys=True, indent=1)

    def summary(self) -> str:
        lines = [f"{'check':<20} {'pass':>7} {'fail':>7} {'skipped':>8}"]
        for name in sorted(self.counts):
            c = self.counts[name]
            lines.append(f"{name:<20} {c['pass']:>7} {c['fail']:>7} {c['skipped']:>8}")
        if self.failures:
            f = self.failures[0]
            lines.append("FIRST FAILURE: {} at (alpha,beta,w,u,v)=({}) weights={}: {}".format(
                f["check"], ",".join(map(str, f["instance"])), f["weights"], f["detail"]))
        lines.append("RESULT: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


def run_sweep(pairs: Iterable[tuple[int, int]], max_w: int, *, weights: str = "unit",
              n_random: int = 3, seed: int | None = None, n_series: int = 25,
              numeric: bool = True, pieri: bool = True, t0=DEFAULT_T0,
              routes: dict[str, Route] | None = None) -> SweepReport:
    routes = dict(DEFAULT_ROUTES if routes is None else routes)
    pairs = sorted(set(pairs))
    report = SweepReport(config={"pairs": [list(p) for p in pairs], "max_w": max_w,
                                 "weights": weights, "n_random": n_random, "seed": seed,
                                 "n_series": n_series, "numeric": numeric, "t0": str(t0),
                                 "routes": sorted(routes)})
    for alpha, beta in pairs:
        sets = step_sets_for(alpha, beta, weights, n_random, seed)
        for w in range(1, max_w + 1):
            if pieri:
                _check_pieri(report, alpha, beta, w)
            for label, steps in sets:
                for u in range(w + 1):
                    _check_start(report, routes, steps, label, w, u, n_series, numeric, t0)
    return report


def _check_pieri(report: SweepReport, alpha: int, beta: int, w: int) -> None:
    for u in range(w + 1):
        for v in range(w + 1):
            got = sorted(p.trimmed() for p in lemma3_mu_list(w, alpha, beta, u, v))
            want = sorted(p.trimmed() for p in pieri_expand(strip_shape(w, alpha, beta, u), v))
            ok = got == want
            report.tally("lemma3_pieri", ok)
            if not ok:
                report.fail("lemma3_pieri", (alpha, beta, w, u, v), "-", f"{got} != {want}")


def _check_start(report, routes, steps, label, w, u, n_series, numeric, t0) -> None:
    alpha, beta = steps.alpha, steps.beta
    table = dp_table(steps, w, u, n_series)
    vector = gf_vector(steps, w, u)
    key_u = (alpha, beta, w, u, "*")
    ok = verify_linear_system(steps, w, u, vector)
    report.tally("linear_system", ok)
    if not ok:
        report.fail("linear_system", key_u, label, "gf_vector does not solve the banded system")
    for v in range(w + 1):
        prob = SlitProblem(steps, w, u, v)
        key = prob.key()
        values = {name: route(prob) for name, route in routes.items()}
        texts = {name: str(val) for name, val in values.items()}
        agree = len(set(values.values())) == 1
        report.tally("route_equivalence", agree)
        if not agree:
            report.fail("route_equivalence", key, label, json.dumps(texts, sort_keys=True))
        ref = next(iter(values.values())) if agree else values.get("transfer_matrix",
                                                                    next(iter(values.values())))
        series_ok = True
        try:
            coeffs = series_coefficients(ref, n_series)
            series_ok = coeffs == [table[n][v] for n in range(n_series + 1)]
        except ArithmeticError:
            series_ok = False
        report.tally("series_vs_dp", series_ok)
        if not series_ok:
            report.fail("series_vs_dp", key, label, "series coefficients differ from DP counts")
        entry = {"instance": list(key), "weights": label, "gf": texts, "agree": agree,
                 "series_ok": series_ok}
        if numeric:
            try:
                rep = validate_theorem1_at(prob, t0)
                nok = rep.rel_error < NUMERIC_TOL
                report.tally("numeric_theorem1", nok)
                entry["numeric_rel_error"] = float(f"{rep.rel_error:.3e}")
                if not nok:
                    report.fail("numeric_theorem1", key, label, f"rel_error {rep.rel_error:.3e}")
            except DegenerateRoots:
                report.skip("numeric_theorem1")
                entry["numeric_rel_error"] = None
        report.instances.append(entry)

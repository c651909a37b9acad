"""The eight acceptance criteria, one test each.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and also when this file is run directly
with ``python3 tests/test_acceptance.py``.
"""
import json
import random
import sys
from itertools import product

import pytest

from slitpaths.algebra import T
from slitpaths.cli import main
from slitpaths.kernel import SlitProblem, WeightedStepSet, e_values, kernel_coefficients, kernel_from_e_values
from slitpaths.numeric import CLOSED_FORM_CASES, validate_section3_closed_forms
from slitpaths.oracle import dp_table, transfer_gf
from slitpaths.partitions import lemma3_mu_list, pieri_expand, strip_shape
from slitpaths.schur import gf_skew_route
from slitpaths.sweep import random_step_set, run_sweep

PAIRS = [(1, 1), (1, 2), (2, 1), (2, 2)]
SEED = 2026
TENTH = "1/10"

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(RESULTS[n])
    assert ok, RESULTS[n]


@pytest.fixture(scope="module")
def sweep():
    # unit weights plus 3 seeded random positive-rational sets, w in [1, 6]
    return run_sweep(PAIRS, 6, weights="both", n_random=3, seed=SEED, n_series=25, pieri=False)


def _counts(report, check):
    return report.counts.get(check, {"pass": 0, "fail": 0, "skipped": 0})


def _first(report, check):
    for f in report.failures:
        if f["check"] == check:
            return f" first failure {f['instance']} ({f['weights']})"
    return ""


def test_criterion_1_route_equivalence(sweep):
    c = _counts(sweep, "route_equivalence")
    record(1, c["fail"] == 0 and c["pass"] == 2224,
           f"{c['pass']} instances, skew = schur-sum = transfer exactly{_first(sweep, 'route_equivalence')}")


def test_criterion_2_series_vs_dp(sweep):
    c = _counts(sweep, "series_vs_dp")
    record(2, c["fail"] == 0 and c["pass"] == 2224,
           f"{c['pass']} instances, coefficients n <= 25 equal DP{_first(sweep, 'series_vs_dp')}")


def test_criterion_3_strip_list_exhaustive():
    checked, bad = 0, []
    for alpha, beta in product(range(1, 4), repeat=2):
        for w in range(1, 9):
            for u, v in product(range(w + 1), repeat=2):
                got = sorted(m.trimmed() for m in lemma3_mu_list(w, alpha, beta, u, v))
                want = sorted(m.trimmed() for m in pieri_expand(strip_shape(w, alpha, beta, u), v))
                checked += 1
                if got != want:
                    bad.append((alpha, beta, w, u, v))
    record(3, not bad, f"{checked} cases, closed-form list = brute-force Pieri" + (f" first {bad[0]}" if bad else ""))


def test_criterion_4_closed_form_anchors():
    dyck, motzkin = WeightedStepSet.dyck(), WeightedStepSet.motzkin()
    anchors = [
        (SlitProblem(dyck, 1, 0, 0), 1 / (1 - T ** 2)),
        (SlitProblem(dyck, 2, 0, 0), (1 - T ** 2) / (1 - 2 * T ** 2)),
        (SlitProblem(motzkin, 1, 0, 0), (1 - T) / (1 - 2 * T)),
    ]
    ok = True
    for prob, want in anchors:
        # the expected values are themselves confirmed by the transfer oracle
        ok &= transfer_gf(prob.steps, prob.w, prob.u, prob.v).value == want
        ok &= gf_skew_route(prob).value == want
    table = dp_table(motzkin, 6, 0, 6)
    ok &= [table[n][0] for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    ok &= gf_skew_route(SlitProblem(motzkin, 6, 0, 0)).series(6) == [1, 1, 2, 4, 9, 21, 51]
    record(4, ok, "Dyck w=1,2, Motzkin w=1 excursions and Motzkin [1,1,2,4,9,21,51] at w=6")


def test_criterion_5_linear_system(sweep):
    c = _counts(sweep, "linear_system")
    record(5, c["fail"] == 0 and c["pass"] == 432,
           f"{c['pass']} gf vectors solve the banded system exactly{_first(sweep, 'linear_system')}")


def test_criterion_6_numeric(sweep):
    c = _counts(sweep, "numeric_theorem1")
    worst = max((i["numeric_rel_error"] for i in sweep.instances if i.get("numeric_rel_error") is not None),
                default=0.0)
    closed, closed_bad = 0, []
    for case, (alpha, beta) in sorted(CLOSED_FORM_CASES.items()):
        sets = [WeightedStepSet.unit(alpha, beta)] + [random_step_set(alpha, beta, SEED, k) for k in range(3)]
        for steps in sets:
            for w in range(1, 5):
                for u, v in product(range(w + 1), repeat=2):
                    rep = validate_section3_closed_forms(case, SlitProblem(steps, w, u, v), TENTH)
                    closed += 1
                    if not rep.rel_error < 1e-8:
                        closed_bad.append((case, w, u, v))
    ok = c["fail"] == 0 and c["pass"] > 0 and not closed_bad
    record(6, ok, f"root formula {c['pass']} ok / {c['skipped']} skipped (max rel err {worst:.1e}); "
                  f"closed forms {closed} ok" + (f", first bad {closed_bad[0]}" if closed_bad else ""))


def test_criterion_7_kernel_round_trip():
    rng = random.Random(SEED)
    bad = []
    for k in range(100):
        alpha, beta = rng.randint(1, 4), rng.randint(1, 4)
        steps = random_step_set(alpha, beta, SEED, 1000 + k)
        if kernel_from_e_values(steps, e_values(steps)) != kernel_coefficients(steps):
            bad.append((alpha, beta, k))
    record(7, not bad, "100 random step sets with alpha, beta <= 4 reconstruct the kernel exactly"
           + (f"; first bad {bad[0]}" if bad else ""))


def test_criterion_8_determinism(tmp_path, capsys):
    blobs = []
    for k in range(2):
        path = tmp_path / f"report{k}.json"
        code = main(["--seed", str(SEED), "--out", str(path), "verify", "--max-w", "4",
                     "--weights", "both", "--n-random", "3"])
        blobs.append((code, path.read_bytes()))
    capsys.readouterr()
    ok = blobs[0] == blobs[1] and blobs[0][0] == 0 and json.loads(blobs[0][1])["ok"]
    record(8, ok, f"two seeded verify runs give byte-identical reports ({len(blobs[0][1])} bytes)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))

# coding: utf-8

# # A verification sweep
#
# run_sweep visits every (alpha, beta, w, u, v) and checks that the three
# exact routes agree, that the series matches a dynamic-programming count,
# that the full G vector solves its banded linear system, and that the numeric
# root formula agrees with the exact value. The same sweep is behind
# `python3 -m slitpaths verify`.

# %%
from slitpaths.sweep import DEFAULT_ROUTES, run_sweep

report = run_sweep([(1, 1), (1, 2), (2, 1), (2, 2)], 3, weights="both", n_random=2, seed=1)
print(report.summary())

# %% [markdown]
# A negative control: flip the sign of one route on one instance and the
# sweep points at it.

# %%
routes = dict(DEFAULT_ROUTES)
honest = routes["schur_sum"]
routes["schur_sum"] = lambda prob: -honest(prob) if prob.key() == (2, 1, 3, 2, 0) else honest(prob)
print(run_sweep([(2, 1)], 3, routes=routes, numeric=False).summary())

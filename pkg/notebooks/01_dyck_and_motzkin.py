# coding: utf-8

# # Dyck and Motzkin paths in a strip
#
# A path starts at height u, takes steps from a weighted step set and must stay
# inside heights 0..w. Its generating function G_(u,v)(t) counts paths ending at
# height v, weighted by the product of step weights, with t marking length.
# Everything below is exact: coefficients are Fractions.

# %%
from fractions import Fraction

from slitpaths.algebra import T
from slitpaths.kernel import SlitProblem, WeightedStepSet
from slitpaths.oracle import dp_table, transfer_gf
from slitpaths.schur import gf_schur_sum_route, gf_skew_route, gf_vector

dyck = WeightedStepSet.dyck()        # up 1, down 1, no level step
motzkin = WeightedStepSet.motzkin()  # up, level and down, all weight 1

# %% [markdown]
# Dyck excursions in a strip of width 2. The determinant route, the
# Schur-sum route and the transfer matrix all land on the same canonical form.

# %%
prob = SlitProblem(dyck, 2, 0, 0)
for name, value in [("skew determinant", gf_skew_route(prob).value),
                    ("schur sum", gf_schur_sum_route(prob).value),
                    ("transfer matrix", transfer_gf(dyck, 2, 0, 0).value)]:
    print(f"{name:18s} {value}")
print("series:", ", ".join(map(str, gf_skew_route(prob).series(10))))

# %% [markdown]
# With a wide enough strip the boundary is never felt, and the Motzkin
# excursion counts come out: 1, 1, 2, 4, 9, 21, 51, ...

# %%
g = gf_skew_route(SlitProblem(motzkin, 6, 0, 0))
print(g.value)
print(", ".join(map(str, g.series(6))))
table = dp_table(motzkin, 6, 0, 6)
print(", ".join(str(table[n][0]) for n in range(7)))

# %% [markdown]
# Weights need not be 1. Here the level step costs 1/2 and the down step 3;
# all endpoints from start height 1 in width 3:

# %%
weighted = WeightedStepSet.motzkin(Fraction(1, 2), 1, 3)
for v, gv in enumerate(gf_vector(weighted, 3, 1)):
    print(f"G_(1,{v}) = {gv.value}")

# %% [markdown]
# A step set with jumps of two up and one down: alpha = 2, beta = 1.

# %%
two_one = WeightedStepSet((1, 1, 1), (1,))
print(gf_skew_route(SlitProblem(two_one, 3, 0, 0)).value.format("latex"))

# coding: utf-8

# # Kernel roots and the numeric check
#
# For fixed t the kernel 1 - t*(sum of step weights z^d) has alpha + beta
# roots in z. The generating function is a ratio of Schur functions evaluated
# at those roots. We compute the roots in floating point and compare the ratio
# with the exact rational function at the same t.

# %%
from fractions import Fraction
from itertools import product

import numpy as np

from slitpaths.kernel import SlitProblem, WeightedStepSet, e_values, elementary_from_roots, numeric_kernel_roots
from slitpaths.numeric import validate_section3_closed_forms, validate_theorem1_at

motzkin = WeightedStepSet.motzkin()
t0 = Fraction(1, 4)
roots = numeric_kernel_roots(motzkin, t0)
print(np.sort_complex(roots))   # (3 -+ sqrt 5)/2

# %% [markdown]
# Vieta: the elementary symmetric functions of the roots are rational in t
# and known in closed form.

# %%
steps = WeightedStepSet((Fraction(1, 3), 2, Fraction(5, 4)), (7,))
t0 = Fraction(1, 10)
print(elementary_from_roots(numeric_kernel_roots(steps, t0)).real)
e = e_values(steps)
print([float(e[i](t0)) for i in range(4)])

# %% [markdown]
# The root formula against the exact value, over every (u, v) in width 4.

# %%
errors = [validate_theorem1_at(SlitProblem(steps, 4, u, v), t0).rel_error
          for u, v in product(range(5), repeat=2)]
print(f"max relative error {max(errors):.2e}")

# %% [markdown]
# The explicit monomial formulas for small step sets.

# %%
for case, s in [("motzkin", motzkin), ("one_two", WeightedStepSet.unit(1, 2)),
                ("two_one", WeightedStepSet.unit(2, 1))]:
    rep = validate_section3_closed_forms(case, SlitProblem(s, 4, 1, 3), t0)
    print(f"{case:8s} exact {rep.exact.real:.12f}  rel err {rep.rel_error:.1e}")

# %% [markdown]
# At Dyck t = 1/2 the two roots collide at z = 1. The bialternant is 0/0
# there, so the Schur values fall back to the Jacobi-Trudi determinant. A double
# root is only located to about sqrt(machine epsilon), so expect ~1e-8 here
# rather than ~1e-15.

# %%
rep = validate_theorem1_at(SlitProblem(WeightedStepSet.dyck(), 1, 0, 0), Fraction(1, 2))
print(rep.method, f"{rep.rel_error:.1e}")

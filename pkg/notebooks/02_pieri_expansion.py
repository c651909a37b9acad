# coding: utf-8

# # The horizontal-strip expansion behind the numerator
#
# The numerator of G_(u,v) is a skew Schur function s_{lam/(v)}, with
# lam = (w^alpha, u, 0^(beta-1)). Removing a horizontal strip of v cells from
# lam in every possible way gives a short list of shapes, and there is a closed
# form for that list. Here we compare it with brute-force enumeration.

# %%
from itertools import product

from slitpaths.cli import format_expansion
from slitpaths.partitions import (Partition, SkewShape, conjugate, is_horizontal_strip,
                                  lemma3_mu_list, pieri_expand, strip_shape)

# %%
lam = Partition.of(3, 1)
print("conjugate of", lam.trimmed(), "is", conjugate(lam).trimmed())
print(is_horizontal_strip(SkewShape(Partition.of(3, 1), Partition.of(2))))
print(is_horizontal_strip(SkewShape(Partition.of(2, 2), Partition.of(1))))

# %%
print(format_expansion(3, 1, 1, 1, 1))
print(format_expansion(5, 2, 2, 2, 3))
print(format_expansion(5, 2, 2, 2, 3, "latex"))

# %% [markdown]
# Exhaustive comparison for small parameters.

# %%
checked = 0
for alpha, beta, w in product(range(1, 4), range(1, 4), range(1, 7)):
    for u, v in product(range(w + 1), repeat=2):
        closed = sorted(m.trimmed() for m in lemma3_mu_list(w, alpha, beta, u, v))
        brute = sorted(m.trimmed() for m in pieri_expand(strip_shape(w, alpha, beta, u), v))
        assert closed == brute, (alpha, beta, w, u, v)
        checked += 1
print(checked, "cases agree")

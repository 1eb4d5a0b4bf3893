"""Lower bounds, upper bounds and the exact oracle on small multigraphs.

The three-vertex multigraph with 7, 7 and 2 parallel edges separates the
bounds: the density bound is exact for d = 1 but not for d = 3.
"""

# %%
from defcol import (
    exact_chi,
    gamma_d,
    goldberg_counterexample,
    lower_bound_trivial,
    upper_bound_degree,
    upper_bound_multiplicity,
)
from defcol.cli import bound_table

g = goldberg_counterexample()
print("max degree", g.max_degree, "max multiplicity", g.max_multiplicity)

# %% Side by side
for d in (1, 2, 3):
    print(f"d={d}:", dict(bound_table(g, d)))

# %% The density bound picks the densest vertex set
for d in (1, 3):
    print(f"gamma_{d} = {gamma_d(g, d)}, exact = {exact_chi(g, d)}")

# %% Individual bound functions
print(lower_bound_trivial(g, 3), upper_bound_multiplicity(g, 3), upper_bound_degree(g.max_degree, 3))

"""Factors: the building blocks of every colouring in the package.

A k-factor is a spanning k-regular subgraph.  The colourers cut graphs into
factors by Euler tours (even degree), Petersen's 2-factorization and a
general f-factor solver built on blossom matching.
"""

# %%
from defcol import (
    complete_graph,
    euler_split_even,
    euler_split_odd,
    f_factor,
    find_bridges,
    k_factor_bridged,
    k_factor_containing,
    petersen_decompose,
    petersen_graph,
    random_regular_multigraph,
    shannon_graph,
)
from defcol.graph import Multigraph

# %% Euler splits: alternate the edges of an Euler tour
a, b = euler_split_even(complete_graph(5))
print("K5 halves:", a.edges, b.edges, "degrees", a.degrees, b.degrees)
a, b = euler_split_odd(shannon_graph(6), e=0)
print("Sh(6) minus edge 0:", len(a), len(b), "max degrees", max(a.degrees), max(b.degrees))

# %% 2-factorization of an 8-regular multigraph
g = random_regular_multigraph(8, 8, seed=1)
parts = petersen_decompose(g)
print(f"{len(parts)} disjoint 2-factors cover all {g.m} edges:", [len(p) for p in parts])

# %% General degree prescriptions
g = random_regular_multigraph(10, 5, seed=4)
f = [1, 2, 3, 1, 2, 3, 1, 2, 3, 2]
print("f-factor:", f_factor(g, f))
print("odd degree sum has no f-factor:", f_factor(shannon_graph(5), [3, 3, 3]))

# %% A 2-factor through every edge of the Petersen graph
p = petersen_graph()
print(all(e in k_factor_containing(p, 2, e).edges for e in range(p.m)))

# %% A regular graph with a bridge: two Sh(7) joined at their degree-6 vertices
sh = shannon_graph(7)
low = sh.degrees.index(6)
g = Multigraph(6, sh.edges + tuple((u + 3, v + 3) for u, v in sh.edges) + ((low, low + 3),))
print("bridges:", find_bridges(g))
four = k_factor_bridged(g, 4)
print("4-factor degrees:", four.degrees, "->", four.serialize())

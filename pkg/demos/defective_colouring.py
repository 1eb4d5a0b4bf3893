"""Colouring with defect d: every vertex may meet d edges of one colour.

Even d always reaches the vertex bound ceil(delta/d).  Odd d stays within
ceil((3 delta - 1)/(3d - 1)) through a recursion on regular graphs; the
trace shows which reduction handled each subproblem.
"""

# %%
import collections

import numpy as np

from defcol import (
    colour_defective,
    colour_odd_defect_regular,
    lower_bound_trivial,
    random_regular_multigraph,
    upper_bound_degree,
    verify_colouring,
)

# %% A table over random regular multigraphs: colours used minus vertex bound
rows = []
for seed in range(40):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7)) * 2
    delta = int(rng.integers(3, 14))
    g = random_regular_multigraph(n, delta, seed)
    row = []
    for d in range(1, 8):
        c = colour_defective(g, d)
        assert verify_colouring(g, c, d).valid
        assert c.num_colours <= upper_bound_degree(delta, d)
        row.append(c.num_colours - lower_bound_trivial(g, d))
    rows.append(row)
excess = np.array(rows)
print("mean colours above ceil(delta/d), per d = 1..7:", excess.mean(axis=0).round(2))
print("even d is always exact:", not excess[:, 1::2].any())

# %% Watch the recursion on one graph
g = random_regular_multigraph(8, 19, seed=3)
trace = []
c = colour_odd_defect_regular(g, 3, trace)
print(f"19-regular, d=3: {c.num_colours} colours (bound {upper_bound_degree(19, 3)})")
for depth, delta, n, step in trace[:12]:
    print("  " * depth + f"{step}: delta={delta} n={n}")
print(collections.Counter(step for *_, step in trace))

"""Simple graphs: proper colouring, binning, and the hardness gadget.

A proper colouring with delta + 1 colours, merged d classes at a time,
gives ceil((delta + 1)/d) defective colours.  Deciding between that and
ceil(delta/d) is hard; the reduction below turns a regular graph into an
instance whose answer encodes the proper chromatic index.
"""

# %%
import numpy as np

from defcol import (
    bin_colours,
    complete_graph,
    exact_chi,
    gadget_G,
    np_reduction,
    petersen_graph,
    reduction_colouring,
    verify_colouring,
    vizing_colour,
)

# %% Vizing colourings
for name, g in (("K4", complete_graph(4)), ("K7", complete_graph(7)), ("Petersen", petersen_graph())):
    c = vizing_colour(g)
    print(f"{name}: delta={g.max_degree}, proper colours={c.num_colours}, "
          f"binned d=2: {bin_colours(c, 2).num_colours}, d=3: {bin_colours(c, 3).num_colours}")

# %% Gadgets: kd-regular simple graphs that need exactly k colours
g = gadget_G(2, 3)
print("G(2,3):", g.n, "vertices,", g.max_degree, "-regular, chi_3 =", exact_chi(g, 3))

# %% The reduction of K4 with d = 3 and the colouring lifted from K4
k4 = complete_graph(4)
big = np_reduction(k4, 3)
cols = reduction_colouring(k4, vizing_colour(k4).colours, 3)
report = verify_colouring(big, cols, 3)
print(f"reduction: {big.n} vertices, {big.m} edges, valid={report.valid}, colours={report.colours_used}")
print("class sizes:", np.bincount(cols))

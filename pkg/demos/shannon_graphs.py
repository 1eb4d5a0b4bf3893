"""Shannon triangles: the graphs that need the most colours.

Sh(k) is a triangle whose three sides carry floor(k/2), floor(k/2) and
ceil(k/2) parallel edges.  For odd defect d it needs
ceil((3k - 1)/(3d - 1)) colours, which is more than the ceil(k/d) forced at
a single vertex.  Run with ``python demos/shannon_graphs.py``.
"""

# %% Build a few triangles and look at them
from defcol import colour_shannon_graph, exact_chi, lower_bound_trivial, shannon_graph, verify_colouring

for k in (4, 5, 9):
    g = shannon_graph(k)
    print(f"Sh({k}): {g.m} edges, degrees {g.degrees}, multiplicities {dict(g.multiplicities)}")

# %% The block colouring: order edges so that every three consecutive ones
# form a triangle, then cut the order into blocks of (3d - 1)/2 edges.
c = colour_shannon_graph(9, 3)
print("Sh(9), d=3 colour classes:", c.classes())
print(verify_colouring(shannon_graph(9), c, 3).lines())

# %% Compare with the vertex bound and the exact oracle
print(f"{'k':>3} {'d':>3} {'vertex':>7} {'blocks':>7} {'exact':>6}")
for d in (1, 3, 5):
    for k in range(d, 13, 2):
        g = shannon_graph(k)
        print(f"{k:>3} {d:>3} {lower_bound_trivial(g, d):>7} "
              f"{colour_shannon_graph(k, d).num_colours:>7} {exact_chi(g, d):>6}")

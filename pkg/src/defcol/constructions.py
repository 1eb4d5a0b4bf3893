"""Generators for the graph families used throughout the package."""

from __future__ import annotations

import random
from typing import Sequence

from .errors import PreconditionError
from .graph import Multigraph

__all__ = [
    "shannon_graph",
    "gadget_G",
    "gadget_colouring",
    "np_reduction",
    "reduction_colouring",
    "goldberg_counterexample",
    "random_regular_multigraph",
    "complete_graph",
    "cycle_graph",
    "petersen_graph",
]


def shannon_graph(k: int) -> Multigraph:
    """Triangle with multiplicities ceil(k/2) on 01 and floor(k/2) on 12, 02.

    Vertices 0 and 1 have degree k; vertex 2 has degree k - 1 when k is odd.
    """
    if k < 1:
        raise PreconditionError("Shannon graph needs k >= 1")
    return Multigraph.from_multiplicities(3, {(0, 1): (k + 1) // 2, (1, 2): k // 2, (0, 2): k // 2})


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise PreconditionError("a simple cycle needs n >= 3")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


def _gadget(k: int, d: int) -> tuple[Multigraph, list[int]]:
    if k < 1 or d < 1:
        raise PreconditionError("gadget needs k, d >= 1")
    g = complete_graph(d + 1)
    colours = [0] * g.m
    for level in range(1, k):
        n = g.n
        edges = list(g.edges) + [(u + n, v + n) for u, v in g.edges]
        colours = colours + colours
        # circulant d-regular bipartite join: u_i -> v_i, ..., v_{i+d-1}
        for i in range(n):
            for j in range(d):
                edges.append((i, n + (i + j) % n))
                colours.append(level)
        g = Multigraph(2 * n, tuple(edges))
    return g, colours


def gadget_G(k: int, d: int) -> Multigraph:
    """Simple kd-regular graph on (d+1) 2^(k-1) vertices needing k colours
    at defect d."""
    return _gadget(k, d)[0]


def gadget_colouring(k: int, d: int) -> list[int]:
    """The level colouring of ``gadget_G(k, d)``: K_{d+1} edges get colour 0
    and the join added at step j gets colour j."""
    return _gadget(k, d)[1]


def _check_reduction_input(g: Multigraph, d: int) -> int:
    if not g.is_simple():
        raise PreconditionError("reduction needs a simple graph")
    if not g.is_regular() or g.max_degree < 3:
        raise PreconditionError("reduction needs a k-regular graph with k >= 3")
    if d < 3 or d % 2 == 0:
        raise PreconditionError("reduction needs odd d >= 3")
    return g.max_degree


def _reduction(g: Multigraph, d: int, base_colours: Sequence[int] | None):
    k = _check_reduction_input(g, d)
    gadget, gcol = _gadget(k, d)
    copies = k * (d - 1) // 2
    edges = list(g.edges)
    colours = list(base_colours) if base_colours is not None else None
    a, b = gadget.edges[0]
    removed_colour = gcol[0]
    nxt = g.n
    for v in range(g.n):
        for i in range(1, copies + 1):
            off = nxt
            nxt += gadget.n
            link = i % k
            # swap the colour of the removed edge with the link colour so that
            # a and b each miss exactly the link colour
            swap = {removed_colour: link, link: removed_colour}
            for e in range(1, gadget.m):
                x, y = gadget.edges[e]
                edges.append((x + off, y + off))
                if colours is not None:
                    colours.append(swap.get(gcol[e], gcol[e]))
            edges.append((a + off, v))
            edges.append((b + off, v))
            if colours is not None:
                colours.extend((link, link))
    return Multigraph(nxt, tuple(edges)), colours


def np_reduction(g: Multigraph, d: int) -> Multigraph:
    """Simple kd-regular graph G' with chi'_1(g) = k iff chi'_d(G') = k.

    Every vertex v of the k-regular simple graph ``g`` receives k(d-1)/2
    copies of ``gadget_G(k, d)``, each with its edge 0 (ab) removed and a, b
    joined to v.  Edge ids of ``g`` are kept.
    """
    return _reduction(g, d, None)[0]


def reduction_colouring(g: Multigraph, proper: Sequence[int], d: int) -> list[int]:
    """Extend a proper k-edge-colouring of ``g`` to a (k, d)-colouring of
    ``np_reduction(g, d)``; the i-th gadget at a vertex is linked in colour
    i mod k."""
    k = _check_reduction_input(g, d)
    if len(proper) != g.m or any(not 0 <= c < k for c in proper):
        raise PreconditionError(f"expected a colouring of the {g.m} edges with colours 0..{k - 1}")
    return _reduction(g, d, proper)[1]


def goldberg_counterexample() -> Multigraph:
    """Three vertices joined by 7, 7 and 2 parallel edges."""
    return Multigraph.from_multiplicities(3, {(0, 1): 7, (1, 2): 7, (0, 2): 2})


def random_regular_multigraph(n: int, delta: int, seed: int, max_tries: int = 100_000) -> Multigraph:
    """Loop-free delta-regular multigraph from the pairing model.

    Pairings containing a loop are rejected and redrawn.  Deterministic for a
    fixed seed.
    """
    if n < 2:
        raise PreconditionError("need at least two vertices")
    if delta < 0 or (n * delta) % 2:
        raise PreconditionError(f"n * delta = {n * delta} must be even")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(delta)]
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = list(zip(points[0::2], points[1::2]))
        if all(u != v for u, v in pairs):
            return Multigraph(n, tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))
    raise RuntimeError(f"no loop-free pairing found in {max_tries} tries")

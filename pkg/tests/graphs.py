"""Instance generators used only by the test-suite."""

from __future__ import annotations

import random

from defcol.constructions import shannon_graph
from defcol.graph import Multigraph, connected_components, find_bridges


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def add(self, g: Multigraph) -> int:
        off = self.n
        self.n += g.n
        self.edges.extend((u + off, v + off) for u, v in g.edges)
        return off

    def graph(self) -> Multigraph:
        return Multigraph(self.n, tuple(self.edges))


def _connected(n: int, edges: list[tuple[int, int]], bridgeless: bool = True) -> bool:
    g = Multigraph(n, tuple(edges))
    return len(connected_components(g)) == 1 and not (bridgeless and find_bridges(g))


def _matching_union(n: int, delta: int, rng: random.Random) -> Multigraph:
    # union of delta random perfect matchings: loop-free and delta-regular
    edges = []
    for _ in range(delta):
        perm = list(range(n))
        rng.shuffle(perm)
        edges.extend((min(a, b), max(a, b)) for a, b in zip(perm[0::2], perm[1::2]))
    return Multigraph(n, tuple(sorted(edges)))


def _two_port_piece(delta: int, rng: random.Random) -> tuple[Multigraph, int, int]:
    # delta-regular multigraph on 4 or 6 vertices with one edge removed
    while True:
        n = rng.choice([4, 6])
        g = _matching_union(n, delta, rng)
        edges = list(g.edges)
        a, b = edges.pop(rng.randrange(len(edges)))
        if _connected(n, edges):
            return Multigraph(n, tuple(edges)), a, b


def one_port_piece(delta: int, rng: random.Random) -> tuple[Multigraph, int]:
    """Bridgeless graph with degrees delta except one vertex of degree
    delta - 1: a new vertex takes over (delta - 1)/2 removed edges."""
    while True:
        n = rng.choice([4, 6])
        edges = list(_matching_union(n, delta, rng).edges)
        rng.shuffle(edges)
        stubs = [x for _ in range((delta - 1) // 2) for x in edges.pop()]
        edges.extend((x, n) for x in stubs)
        if _connected(n + 1, edges):
            return Multigraph(n + 1, tuple(edges)), n


def single_bridge(delta: int, seed: int, shannon: int = 1) -> Multigraph:
    """Two one-port pieces joined by a bridge; ``shannon`` of them (0, 1 or
    2) are Shannon triangles."""
    rng = random.Random(seed)
    b = _Builder()
    ends = []
    for i in range(2):
        if i < shannon:
            ends.append(b.add(shannon_graph(delta)) + 2)
        else:
            piece, port = one_port_piece(delta, rng)
            ends.append(b.add(piece) + port)
    b.edges.append((ends[0], ends[1]))
    return b.graph()


def _arm(b: _Builder, port: int, delta: int, rng: random.Random, depth: int) -> None:
    # hang a chain of non-Shannon pieces ending in a Shannon triangle off port
    for _ in range(depth):
        piece, a, c = _two_port_piece(delta, rng)
        off = b.add(piece)
        b.edges.append((port, a + off))
        port = c + off
    off = b.add(shannon_graph(delta))
    b.edges.append((port, off + 2))


def bridged_regular(delta: int, seed: int, arms: int = 2, max_depth: int = 2, shared: bool = False) -> Multigraph:
    """Connected delta-regular multigraph (delta odd) whose bridges form a
    tree of pieces with Shannon triangles at the leaves.

    ``shared`` makes one core vertex carry two bridges.
    """
    assert delta % 2 == 1 and delta >= 3
    rng = random.Random(seed)
    while True:
        core = _matching_union(6, delta, rng)
        edges = list(core.edges)
        ports: list[int] = []
        ok = True
        if shared:
            u = 0
            inc = [i for i, (x, y) in enumerate(edges) if u in (x, y)]
            i, j = inc[0], inc[1]
            x = edges[i][0] + edges[i][1] - u
            y = edges[j][0] + edges[j][1] - u
            if x == y:
                ok = False
            else:
                for k in sorted((i, j), reverse=True):
                    edges.pop(k)
                edges.append((x, y))
                ports += [u, u]
        extra = max(0, arms - len(ports))
        extra += extra % 2
        for _ in range(extra // 2):
            a, c = edges.pop(rng.randrange(len(edges)))
            ports += [a, c]
        if ok and _connected(6, edges, bridgeless=False):
            break
    b = _Builder()
    b.add(Multigraph(6, tuple(edges)))
    for p in ports:
        _arm(b, p, delta, rng, rng.randint(0, max_depth))
    return b.graph()


def f_factor_exists(g: Multigraph, f) -> bool:
    """Exhaustive search over edge subsets, pruned by remaining capacity."""
    need = list(f)
    left = list(g.degrees)

    def go(e: int) -> bool:
        if e == g.m:
            return not any(need)
        u, v = g.edges[e]
        left[u] -= 1
        left[v] -= 1
        ok = False
        if need[u] and need[v]:
            need[u] -= 1
            need[v] -= 1
            ok = need[u] <= left[u] and need[v] <= left[v] and go(e + 1)
            need[u] += 1
            need[v] += 1
        if not ok and need[u] <= left[u] and need[v] <= left[v]:
            ok = go(e + 1)
        left[u] += 1
        left[v] += 1
        return ok

    return go(0)


def random_f_instance(rng: random.Random, max_m: int = 18) -> tuple[Multigraph, list[int]]:
    n = rng.randint(2, 8)
    m = rng.randint(0, max_m)
    edges = []
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((u, v))
    g = Multigraph(n, tuple(edges))
    return g, [rng.randint(0, x) for x in g.degrees]

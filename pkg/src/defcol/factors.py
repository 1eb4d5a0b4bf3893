"""Factor extraction: Euler splits, 2-factorisation, f-factors.

A factor is a set of edge ids of a host multigraph.  Everything here reduces
either to Euler circuits or to a single perfect-matching computation on an
auxiliary simple graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InternalContradiction, PreconditionError
from .graph import (
    Multigraph,
    component_walks,
    connected_components,
    euler_walk,
    find_bridges,
)
from .matching import maximum_matching

__all__ = [
    "Factor",
    "euler_split_even",
    "euler_split_odd",
    "petersen_decompose",
    "f_factor",
    "k_factor_containing",
    "k_factor_bridged",
]


@dataclass(frozen=True)
class Factor:
    host: Multigraph = field(repr=False)
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("factor repeats an edge")

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.host.n
        for e in self.edges:
            u, v = self.host.edges[e]
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def is_k_factor(self, k: int) -> bool:
        return all(x == k for x in self.degrees)

    def complement(self) -> Factor:
        inside = set(self.edges)
        return Factor(self.host, tuple(e for e in range(self.host.m) if e not in inside))

    def subgraph(self) -> Multigraph:
        """The factor as a graph of its own; edge ``i`` is ``self.edges[i]``."""
        return self.host.edge_subgraph(self.edges)

    def serialize(self) -> str:
        return " ".join(map(str, self.edges))

    def __len__(self) -> int:
        return len(self.edges)


def _check_connected_even_regular(g: Multigraph) -> int:
    if g.m == 0 or not g.is_regular() or g.max_degree % 2:
        raise PreconditionError("graph must be 2k-regular with k >= 1")
    if len(connected_components(g)) != 1:
        raise PreconditionError("graph must be connected")
    return g.max_degree // 2


def euler_split_even(g: Multigraph) -> tuple[Factor, Factor]:
    """Split a connected 2k-regular graph with an even edge count into two
    k-factors by alternating along an Euler circuit."""
    _check_connected_even_regular(g)
    if g.m % 2:
        raise PreconditionError(f"edge count {g.m} is odd")
    circuit, _ = euler_walk(g)
    return Factor(g, tuple(circuit[0::2])), Factor(g, tuple(circuit[1::2]))


def euler_split_odd(g: Multigraph, e: int) -> tuple[Factor, Factor]:
    """Split ``E(g) - {e}`` into two parts of maximum degree at most k.

    ``g`` is connected, 2k-regular with an odd number of edges.  The Euler
    circuit is rotated so that ``e`` comes last and is left out.
    """
    _check_connected_even_regular(g)
    if g.m % 2 == 0:
        raise PreconditionError(f"edge count {g.m} is even")
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge {e} not in graph")
    circuit, _ = euler_walk(g)
    i = circuit.index(e)
    rotated = circuit[i + 1:] + circuit[:i]
    return Factor(g, tuple(rotated[0::2])), Factor(g, tuple(rotated[1::2]))


def _bipartite_perfect_matching(g: Multigraph, left: int, ids: Sequence[int]) -> list[int]:
    # Kuhn's augmenting paths; vertices < left are the left side.
    adj: dict[int, list[int]] = {}
    for e in ids:
        u, v = g.edges[e]
        if u >= left:
            u, v = v, u
        adj.setdefault(u, []).append(e)
    owner: dict[int, int] = {}  # right vertex -> matched edge

    def augment(u: int, seen: set[int]) -> bool:
        for e in adj[u]:
            w = g.other(e, u)
            if w in seen:
                continue
            seen.add(w)
            if w not in owner or augment(g.other(owner[w], w), seen):
                owner[w] = e
                return True
        return False

    for u in sorted(adj):
        if not augment(u, set()):
            raise InternalContradiction("regular bipartite graph without a perfect matching")
    return sorted(owner.values())


def _euler_halves(g: Multigraph, ids: Sequence[int]) -> tuple[list[int], list[int]]:
    sub = g.edge_subgraph(ids)
    a, b = [], []
    for circuit, _ in component_walks(sub):
        a.extend(ids[i] for i in circuit[0::2])
        b.extend(ids[i] for i in circuit[1::2])
    return sorted(a), sorted(b)


def _split_regular_bipartite(g: Multigraph, left: int, ids: list[int], r: int) -> list[list[int]]:
    # r perfect matchings: halve by Euler circuits when r is even, otherwise
    # peel one matching by augmenting paths.
    if r == 0:
        return []
    if r == 1:
        return [ids]
    if r % 2 == 0:
        a, b = _euler_halves(g, ids)
        return _split_regular_bipartite(g, left, a, r // 2) + _split_regular_bipartite(g, left, b, r // 2)
    matching = _bipartite_perfect_matching(g, left, ids)
    taken = set(matching)
    rest = [e for e in ids if e not in taken]
    return [matching] + _split_regular_bipartite(g, left, rest, r - 1)


def petersen_decompose(g: Multigraph) -> list[Factor]:
    """Partition a 2r-regular graph into r edge-disjoint 2-factors.

    Each component is oriented along an Euler circuit; the out/in incidence
    graph is r-regular bipartite, and each of its perfect matchings gives
    every vertex one outgoing and one incoming edge.
    """
    if not g.is_regular() or g.max_degree % 2:
        raise PreconditionError("petersen_decompose needs an even-regular graph")
    r = g.max_degree // 2
    if r == 0:
        return []
    n = g.n
    bip = [None] * g.m
    for circuit, walk in component_walks(g):
        for i, e in enumerate(circuit):
            bip[e] = (walk[i], n + walk[i + 1])
    bg = Multigraph(2 * n, tuple(bip))
    parts = _split_regular_bipartite(bg, n, list(range(g.m)), r)
    factors = [Factor(g, tuple(p)) for p in parts]
    factors.sort(key=lambda f: f.edges[0])
    for f in factors:
        if not f.is_k_factor(2):
            raise InternalContradiction("petersen_decompose produced a non 2-factor")
    return factors


def _solve_f_factor(g: Multigraph, f: Sequence[int]) -> list[int] | None:
    # Tutte gadget: one stub per (vertex, incident edge), deg(v) - f(v) slack
    # vertices joined to every stub of v, and a stub-stub edge per edge of g.
    # Stubs matched across their edge are exactly the chosen edges.
    stub_base, slack_base = [], []
    count = 0
    for v in range(g.n):
        stub_base.append(count)
        count += g.degrees[v]
    for v in range(g.n):
        slack_base.append(count)
        count += g.degrees[v] - f[v]
    position = {}
    for v in range(g.n):
        for j, e in enumerate(g.incidence[v]):
            position[v, e] = stub_base[v] + j
    gadget: list[tuple[int, int]] = []
    # Slack edges are offered to the greedy start from the highest edge id
    # down, which leaves low ids free to enter the factor.
    for v in range(g.n):
        inc = g.incidence[v]
        for j in range(g.degrees[v] - f[v]):
            for e in reversed(inc):
                gadget.append((position[v, e], slack_base[v] + j))
    first_real = len(gadget)
    for e, (u, v) in enumerate(g.edges):
        gadget.append((position[u, e], position[v, e]))
    mate = maximum_matching(count, gadget, perfect_only=True)
    if mate is None:
        return None
    chosen = []
    for e, (u, v) in enumerate(g.edges):
        a, b = gadget[first_real + e]
        if mate[a] == b:
            chosen.append(e)
    return chosen


def f_factor(g: Multigraph, f: Sequence[int]) -> Factor | None:
    """A spanning subgraph with degree exactly ``f[v]`` at every vertex, or None."""
    if len(f) != g.n:
        raise PreconditionError(f"degree constraint has {len(f)} entries, graph has {g.n} vertices")
    for v, (want, deg) in enumerate(zip(f, g.degrees)):
        if not 0 <= want <= deg:
            raise PreconditionError(f"f({v}) = {want} outside [0, {deg}]")
    if sum(f) % 2:
        return None
    # Solve whichever of f and deg - f needs fewer slack vertices.
    complement = sum(f) < sum(g.degrees) - sum(f)
    target = [d - x for d, x in zip(g.degrees, f)] if complement else list(f)
    chosen = _solve_f_factor(g, target)
    if chosen is None:
        return None
    factor = Factor(g, tuple(chosen))
    if complement:
        factor = factor.complement()
    if factor.degrees != tuple(f):
        raise InternalContradiction("f-factor gadget returned wrong degrees")
    return factor


def _forced_factor(g: Multigraph, k: int, forced: Iterable[int]) -> Factor:
    # A k-factor through every forced edge: decrement the endpoint targets,
    # delete the forced edges and solve the remaining f-factor.
    forced = sorted(set(forced))
    target = [k] * g.n
    for e in forced:
        u, v = g.edges[e]
        target[u] -= 1
        target[v] -= 1
    skip = set(forced)
    kept = [e for e in range(g.m) if e not in skip]
    if min(target, default=0) < 0:
        raise InternalContradiction("forced edges exceed the factor degree")
    rest = f_factor(g.edge_subgraph(kept), target)
    if rest is None:
        raise InternalContradiction(f"no {k}-factor through edges {forced}")
    return Factor(g, tuple(kept[i] for i in rest.edges) + tuple(forced))


def _check_factor_degree(g: Multigraph, k: int) -> int:
    if not g.is_regular():
        raise PreconditionError("graph must be regular")
    delta = g.max_degree
    if k % 2 or k < 0:
        raise PreconditionError(f"factor degree {k} must be even and nonnegative")
    if 3 * k > 2 * delta:
        raise PreconditionError(f"factor degree {k} exceeds 2/3 of {delta}")
    return delta


def k_factor_containing(g: Multigraph, k: int, e: int) -> Factor:
    """A k-factor containing edge ``e`` of a 2-edge-connected regular graph."""
    _check_factor_degree(g, k)
    if not 0 <= e < g.m:
        raise PreconditionError(f"edge {e} not in graph")
    if len(connected_components(g)) != 1 or find_bridges(g):
        raise PreconditionError("graph must be 2-edge-connected")
    if k == 0:
        raise PreconditionError("a 0-factor contains no edge")
    return _forced_factor(g, k, [e])


def _bridge_sides(g: Multigraph, bridge: int) -> tuple[set[int], set[int]]:
    u, v = g.edges[bridge]
    side = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for e in g.incidence[x]:
            if e == bridge:
                continue
            y = g.other(e, x)
            if y not in side:
                side.add(y)
                stack.append(y)
    comp = next(c for c in connected_components(g) if u in c)
    return side, set(comp) - side


def k_factor_bridged(g: Multigraph, k: int) -> Factor:
    """A k-factor of a regular graph whose components have at most one bridge
    each, every bridge having a Shannon triangle on one side.

    Even degree: group 2-factors.  Otherwise each bridge ``uv`` (``v`` in the
    triangle ``{v, w, x}``, ``y`` a neighbour of ``u``) is rerouted as
    ``G + uv + yw - uy - vw``, which is 2-edge-connected; a k-factor through
    ``yw`` there maps back by the reverse swap.
    """
    delta = _check_factor_degree(g, k)
    if k == 0:
        return Factor(g, ())
    if delta % 2 == 0:
        parts = petersen_decompose(g)
        return Factor(g, tuple(e for p in parts[: k // 2] for e in p.edges))

    bridges = sorted(find_bridges(g))
    comp_of = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_of[v] = i
    seen_comps = set()
    for b in bridges:
        c = comp_of[g.edges[b][0]]
        if c in seen_comps:
            raise PreconditionError("a component has more than one bridge")
        seen_comps.add(c)

    edges = list(g.edges)
    dropped: set[int] = set()
    swaps = []  # (bridge, uy, vw, new uv id, new yw id)
    for b in bridges:
        side_a, side_b = _bridge_sides(g, b)
        u, v = g.edges[b]
        if len(side_b) != 3:
            if len(side_a) != 3:
                raise PreconditionError(f"bridge {b} has no Shannon side")
            u, v = v, u
        uy = next(e for e in g.incidence[u] if e != b)
        y = g.other(uy, u)
        vw = next(e for e in g.incidence[v] if e != b)
        w = g.other(vw, v)
        dropped.update((uy, vw))
        edges.append((u, v))
        edges.append((y, w))
        swaps.append((b, uy, vw, len(edges) - 2, len(edges) - 1))

    kept = [e for e in range(len(edges)) if e not in dropped]
    rerouted = Multigraph(g.n, tuple(edges[e] for e in kept))
    index = {e: i for i, e in enumerate(kept)}
    forced = [index[s[4]] for s in swaps]
    factor = _forced_factor(rerouted, k, forced)

    chosen = {kept[i] for i in factor.edges}
    for b, uy, vw, new_uv, new_yw in swaps:
        if (b in chosen) == (new_uv in chosen):
            raise InternalContradiction("rerouted factor must use exactly one bridge copy")
        chosen.discard(b)
        chosen.discard(new_uv)
        chosen.discard(new_yw)
        chosen.update((uy, vw))
    result = Factor(g, tuple(chosen))
    if not result.is_k_factor(k):
        raise InternalContradiction("bridge swap broke the factor degrees")
    return result

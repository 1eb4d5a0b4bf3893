"""Loop-free multigraphs with stable edge identities.

Vertices are the integers ``0..n-1`` and edge ``i`` is ``edges[i]``.  Parallel
edges are distinct objects with distinct ids, which is what colourings and
factors operate on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphFormatError, PreconditionError

__all__ = [
    "Multigraph",
    "parse_graph",
    "serialize_graph",
    "max_degree",
    "connected_components",
    "find_bridges",
    "euler_circuit",
    "euler_walk",
    "component_walks",
    "regularize_by_doubling",
    "regularize_by_matching",
]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"edge {i} is a loop at vertex {u}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_multiplicities(cls, n: int, mult: dict[tuple[int, int], int]) -> Multigraph:
        """Build a graph from ``{(u, v): count}`` in dict order."""
        edges = []
        for (u, v), c in mult.items():
            edges.extend([(u, v)] * c)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in increasing id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees)
        if k is None:
            return len(degs) <= 1
        return degs <= {k}

    @cached_property
    def multiplicities(self) -> Counter:
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities.values(), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity <= 1

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Multigraph:
        """Spanning subgraph on the given edges, renumbered in the given order."""
        return Multigraph(self.n, tuple(self.edges[e] for e in edge_ids))

    def induced(self, vertices: Sequence[int]) -> tuple[Multigraph, list[int]]:
        """Subgraph induced by ``vertices`` (relabelled in the given order).

        Returns the subgraph and the list mapping its edge ids to ours.
        """
        index = {v: i for i, v in enumerate(vertices)}
        edges, origin = [], []
        for e, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                edges.append((index[u], index[v]))
                origin.append(e)
        return Multigraph(len(vertices), tuple(edges)), origin


def parse_graph(text: str) -> Multigraph:
    """Parse the ``p mg <n> <m>`` / ``e <u> <v>`` text format."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "mg":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative header counts", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in {line!r}", lineno)
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing header")
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def serialize_graph(g: Multigraph) -> str:
    lines = [f"p mg {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def max_degree(g: Multigraph) -> int:
    return g.max_degree


def connected_components(g: Multigraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for e in g.incidence[x]:
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def find_bridges(g: Multigraph) -> set[int]:
    """Edge ids whose removal disconnects their component.

    Iterative low-link search that skips only the tree edge itself when
    looking back at the parent, so parallel edges are never bridges.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, id of edge used to enter it, incidence cursor)
        stack = [(root, -1, 0)]
        while stack:
            x, via, i = stack[-1]
            inc = g.incidence[x]
            if i < len(inc):
                stack[-1] = (x, via, i + 1)
                e = inc[i]
                if e == via:
                    continue
                y = g.other(e, x)
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, e, 0))
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > disc[p]:
                        bridges.add(via)
    return bridges


def _circuit_from(g: Multigraph, start: int, used: list[bool]) -> tuple[list[int], list[int]]:
    # Hierholzer; at each vertex the lowest unused incident edge id is taken.
    ptr = {}
    stack: list[tuple[int, int]] = [(start, -1)]
    edges: list[int] = []
    walk: list[int] = []
    while stack:
        x, via = stack[-1]
        inc = g.incidence[x]
        j = ptr.get(x, 0)
        while j < len(inc) and used[inc[j]]:
            j += 1
        ptr[x] = j
        if j < len(inc):
            e = inc[j]
            used[e] = True
            stack.append((g.other(e, x), e))
        else:
            stack.pop()
            walk.append(x)
            if via != -1:
                edges.append(via)
    edges.reverse()
    walk.reverse()
    return edges, walk


def euler_walk(g: Multigraph) -> tuple[list[int], list[int]]:
    """Euler circuit as ``(edge ids, vertices)`` with ``len(vertices) == m + 1``.

    Edge ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]``.  The walk
    starts at the lowest vertex of positive degree.
    """
    if g.m == 0:
        raise PreconditionError("euler_circuit needs at least one edge")
    odd = [v for v in range(g.n) if g.degrees[v] % 2]
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree {g.degrees[odd[0]]}")
    start = next(v for v in range(g.n) if g.degrees[v])
    used = [False] * g.m
    edges, walk = _circuit_from(g, start, used)
    if len(edges) != g.m:
        raise PreconditionError("edge set is disconnected")
    return edges, walk


def component_walks(g: Multigraph) -> list[tuple[list[int], list[int]]]:
    """One Euler walk per component that has edges (all degrees must be even)."""
    odd = [v for v in range(g.n) if g.degrees[v] % 2]
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree {g.degrees[odd[0]]}")
    used = [False] * g.m
    walks = []
    for v in range(g.n):
        if any(not used[e] for e in g.incidence[v]):
            walks.append(_circuit_from(g, v, used))
    return walks


def euler_circuit(g: Multigraph) -> list[int]:
    """Closed walk using every edge exactly once, as a list of edge ids."""
    return euler_walk(g)[0]


def regularize_by_doubling(g: Multigraph, target: int) -> Multigraph:
    """Two disjoint copies of ``g`` plus ``target - deg(v)`` edges joining the
    two copies of every vertex ``v``.

    Copy one keeps the original vertex and edge ids, so restricting a
    colouring of the result to its first ``g.m`` edges colours ``g``.
    """
    if target < g.max_degree:
        raise PreconditionError(f"target degree {target} below max degree {g.max_degree}")
    n = g.n
    edges = list(g.edges)
    edges.extend((u + n, v + n) for u, v in g.edges)
    for v in range(n):
        edges.extend([(v, v + n)] * (target - g.degrees[v]))
    return Multigraph(2 * n, tuple(edges))


def regularize_by_matching(g: Multigraph) -> Multigraph:
    """Two copies of a regular ``g`` joined by a perfect matching of twins."""
    if not g.is_regular():
        raise PreconditionError("regularize_by_matching needs a regular graph")
    return regularize_by_doubling(g, g.max_degree + 1)

"""Defective edge colourings within the worst-case optimal colour counts.

For even d every multigraph gets ceil(max degree / d) colours by grouping
2-factors.  For odd d the colouring follows the inductive argument for the
bound ceil((3 delta - 1) / (3d - 1)): lift to a regular graph of "special"
degree, cut away bridges by surgery, then treat the five smallest special
degrees directly and peel (3d - 1)-factors off the rest.

Internally colourings are plain lists indexed by edge id; the public
functions wrap them in :class:`EdgeColouring`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .bounds import lower_bound_trivial, upper_bound_degree
from .colouring import EdgeColouring
from .constructions import shannon_graph
from .errors import InternalContradiction, PreconditionError
from .factors import (
    Factor,
    _bridge_sides,
    euler_split_even,
    euler_split_odd,
    k_factor_bridged,
    petersen_decompose,
)
from .graph import Multigraph, connected_components, find_bridges, regularize_by_doubling

__all__ = [
    "colour_defective",
    "colour_even_defect",
    "colour_odd_defect_regular",
    "colour_case2",
    "colour_case3",
    "colour_case4",
    "colour_case5",
    "colour_shannon_graph",
    "colour_two_d_regular",
    "is_special",
    "next_special",
]


def is_special(delta: int, d: int) -> bool:
    """True when the odd-defect bound grows between delta and delta + 1."""
    return upper_bound_degree(delta, d) < upper_bound_degree(delta + 1, d)


def next_special(delta: int, d: int) -> int:
    while not is_special(delta, d):
        delta += 1
    return delta


@dataclass
class _Recursion:
    d: int
    trace: list | None = None
    depth: int = 0

    def call(self, solve: Callable, g: Multigraph, parent: tuple[int, int], step: str) -> list[int]:
        key = (g.max_degree, g.n)
        if not key < parent:
            raise InternalContradiction(f"{step}: {key} does not decrease from {parent}")
        self.depth += 1
        try:
            return solve(g, self, key, step)
        finally:
            self.depth -= 1

    def note(self, key: tuple[int, int], step: str) -> None:
        if self.trace is not None:
            self.trace.append((self.depth, key[0], key[1], step))


# -- helpers -----------------------------------------------------------------

def _per_component(g: Multigraph, solve: Callable[[Multigraph], list[int]]) -> list[int]:
    # colour every component on its own; colour indices are shared
    out = [0] * g.m
    for comp in connected_components(g):
        sub, origin = g.induced(comp)
        if sub.m == 0:
            continue
        for i, c in enumerate(solve(sub)):
            out[origin[i]] = c
    return out


def _paste(g: Multigraph, parts: Sequence[tuple[Sequence[int], Sequence[int], int]]) -> list[int]:
    # parts: (edge ids of g, colours of those edges, palette offset)
    out: list[int | None] = [None] * g.m
    for ids, cols, offset in parts:
        for e, c in zip(ids, cols):
            out[e] = c + offset
    if any(c is None for c in out):
        raise InternalContradiction("pasting left an edge uncoloured")
    return out  # type: ignore[return-value]


def _triangle_order(groups: Sequence[Sequence[int]]) -> list[int]:
    # edges of a three-vertex multigraph such that any three consecutive
    # ones form a triangle: take the three parallel classes round robin,
    # starting with the largest
    groups = sorted(groups, key=len, reverse=True)
    order = []
    for i in range(max(len(x) for x in groups)):
        for grp in groups:
            if i < len(grp):
                order.append(grp[i])
    return order


def _shannon_blocks(groups: Sequence[Sequence[int]], d: int) -> dict[int, int]:
    block = (3 * d - 1) // 2
    return {e: i // block for i, e in enumerate(_triangle_order(groups))}


def _pair_groups(g: Multigraph, vertices: Sequence[int]) -> list[list[int]]:
    a, b, c = vertices
    groups: dict[frozenset, list[int]] = {frozenset(p): [] for p in ((a, b), (b, c), (a, c))}
    for e, (u, v) in enumerate(g.edges):
        key = frozenset((u, v))
        if key in groups:
            groups[key].append(e)
    return list(groups.values())


def _colour_shannon_end(g: Multigraph, side: Sequence[int], v: int, link: int, palette: int, d: int) -> dict[int, int]:
    """Colour the Shannon triangle ``side`` hanging off ``v`` so that ``v``
    has spare room in colour ``link`` for its bridge.

    ``v`` has degree delta - 1 inside the triangle, so some colour of the
    palette is used at most d - 1 times there; that colour is renamed to
    ``link``.
    """
    cols = _shannon_blocks(_pair_groups(g, side), d)
    at_v = [0] * palette
    for e, c in cols.items():
        if v in g.edges[e]:
            at_v[c] += 1
    spare = next((c for c in range(palette) if at_v[c] <= d - 1), None)
    if spare is None:
        raise InternalContradiction("no spare colour at the deficient Shannon vertex")
    swap = {spare: link, link: spare}
    return {e: swap.get(c, c) for e, c in cols.items()}


def _build(n: int, edges: list[tuple[int, int]]) -> Multigraph:
    return Multigraph(n, tuple(edges))


# -- Euler-split based pieces ------------------------------------------------

def _split_components(g: Multigraph, ids: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """Split a 2k-regular spanning subgraph into two parts of max degree <= k
    plus a matching: one left-out edge per component with an odd edge count."""
    sub = g.edge_subgraph(ids)
    part_a, part_b, matching = [], [], []
    for comp in connected_components(sub):
        csub, origin = sub.induced(comp)
        if csub.m == 0:
            continue
        if csub.m % 2 == 0:
            a, b = euler_split_even(csub)
        else:
            a, b = euler_split_odd(csub, 0)
            matching.append(ids[origin[0]])
        part_a.extend(ids[origin[e]] for e in a.edges)
        part_b.extend(ids[origin[e]] for e in b.edges)
    return part_a, part_b, matching


def _two_colour_even_order(c: Multigraph, d: int) -> list[int]:
    # c is connected with max degree 2d; double it up to 2d-regular if needed
    # and alternate along an Euler circuit
    h = c if c.is_regular(2 * d) else regularize_by_doubling(c, 2 * d)
    a, _ = euler_split_even(h)
    inside = set(a.edges)
    return [0 if e in inside else 1 for e in range(c.m)]


# -- the five base cases -----------------------------------------------------

def _case2(g: Multigraph, rec: _Recursion) -> list[int]:
    d = rec.d
    f = k_factor_bridged(g, d - 1)
    inside = set(f.edges)
    return [0 if e in inside else 1 for e in range(g.m)]


def _case3(g: Multigraph, d: int) -> list[int]:
    parts = petersen_decompose(g)
    f = sorted(e for p in parts[:d] for e in p.edges)
    a, b, matching = _split_components(g, f)
    colours = [2] * g.m
    for e in a:
        colours[e] = 0
    for e in b:
        colours[e] = 1
    return colours


def _case4(g: Multigraph, rec: _Recursion) -> list[int]:
    d = rec.d
    big = k_factor_bridged(g, 2 * d)
    a1, a2, matching = _split_components(g, big.edges)
    colours = [0] * g.m
    for e in a2:
        colours[e] = 1
    rest = sorted(set(big.complement().edges) | set(matching))
    sub = g.edge_subgraph(rest)
    for comp in connected_components(sub):
        csub, origin = sub.induced(comp)
        if csub.m == 0:
            continue
        for i, c in enumerate(_two_colour_even_order(csub, d)):
            colours[rest[origin[i]]] = 2 + c
    return colours


def _case5(g: Multigraph, rec: _Recursion, key: tuple[int, int]) -> list[int]:
    d = rec.d
    b = k_factor_bridged(g, 3 * d - 1)
    a = b.complement()
    acols = rec.call(_odd_regular, a.subgraph(), key, "case5-remainder")
    bcols = _case3(b.subgraph(), d)
    return _paste(g, [(a.edges, acols, 0), (b.edges, bcols, 2)])


def _peel(g: Multigraph, rec: _Recursion, key: tuple[int, int]) -> list[int]:
    d = rec.d
    f = k_factor_bridged(g, 3 * d - 1)
    rest = f.complement()
    fcols = _case3(f.subgraph(), d)
    rcols = rec.call(_odd_regular, rest.subgraph(), key, "peel-remainder")
    return _paste(g, [(f.edges, fcols, 0), (rest.edges, rcols, 3)])


# -- bridge surgery ----------------------------------------------------------

def _with_shannon_end(g: Multigraph, keep: set[int], bridge: int) -> tuple[Multigraph, list[int]]:
    """Keep one side of ``bridge`` and hang a fresh Sh(delta) off it.

    Returns the graph and, per edge, the original id (-1 for new edges).
    """
    order = sorted(keep)
    index = {v: i for i, v in enumerate(order)}
    edges, origin = [], []
    for e, (u, v) in enumerate(g.edges):
        if u in index and v in index:
            edges.append((index[u], index[v]))
            origin.append(e)
    inner = next(x for x in g.edges[bridge] if x in index)
    base = len(order)
    edges.append((index[inner], base + 2))
    origin.append(bridge)
    for x, y in shannon_graph(g.max_degree).edges:
        edges.append((base + x, base + y))
        origin.append(-1)
    return _build(base + 3, edges), origin


def _split_at_bridge(g: Multigraph, rec: _Recursion, key, bridge: int, side_a: set[int], side_b: set[int]) -> list[int]:
    # neither side is a Shannon triangle: colour each side with a Shannon
    # end in place of the other side, align the bridge colours, paste
    ga, origin_a = _with_shannon_end(g, side_b, bridge)
    gb, origin_b = _with_shannon_end(g, side_a, bridge)
    ca = rec.call(_odd_regular, ga, key, "bridge-split")
    cb = rec.call(_odd_regular, gb, key, "bridge-split")
    ta = ca[origin_a.index(bridge)]
    tb = cb[origin_b.index(bridge)]
    swap = {tb: ta, ta: tb}
    out = [0] * g.m
    for i, e in enumerate(origin_a):
        if e >= 0:
            out[e] = ca[i]
    for i, e in enumerate(origin_b):
        if e >= 0 and e != bridge:
            out[e] = swap.get(cb[i], cb[i])
    return out


def _join_shannon_ends(g: Multigraph, rec: _Recursion, key, first, second) -> list[int]:
    # two bridges u-v and u'-v' ending in Shannon triangles S and S'
    d, delta = rec.d, g.max_degree
    palette = upper_bound_degree(delta, d)
    (b1, u1, v1, s1), (b2, u2, v2, s2) = first, second
    rest = sorted(set(range(g.n)) - s1 - s2)
    index = {v: i for i, v in enumerate(rest)}
    edges, origin = [], []
    for e, (x, y) in enumerate(g.edges):
        if x in index and y in index:
            edges.append((index[x], index[y]))
            origin.append(e)
    if u1 != u2:
        # A + uu'
        edges.append((index[u1], index[u2]))
        origin.append(-1)
        h = _build(len(rest), edges)
        ch = rec.call(_odd_regular, h, key, "two-bridges")
        link1 = link2 = ch[-1]
    else:
        # replace both triangles by the four-vertex gadget w, x, y, z
        half = delta // 2
        w, x, y, z = (len(rest) + i for i in range(4))
        u = index[u1]
        gadget = [(u, w), (u, w)]
        gadget += [(w, x)] * (half - 1) + [(w, y)] * (half - 1) + [(w, z)]
        gadget += [(x, z)] * half + [(y, z)] * half + [(x, y)] * 2
        first_new = len(edges)
        edges.extend(gadget)
        origin.extend([-1] * len(gadget))
        h = _build(len(rest) + 4, edges)
        ch = rec.call(_odd_regular, h, key, "two-bridges-shared")
        link1, link2 = ch[first_new], ch[first_new + 1]
    out: list[int] = [0] * g.m
    for i, e in enumerate(origin):
        if e >= 0:
            out[e] = ch[i]
    out[b1], out[b2] = link1, link2
    for side, v, link in ((s1, v1, link1), (s2, v2, link2)):
        for e, c in _colour_shannon_end(g, sorted(side), v, link, palette, d).items():
            out[e] = c
    return out


def _bridge_surgery(g: Multigraph, rec: _Recursion, key) -> list[int] | None:
    bridges = sorted(find_bridges(g))
    if not bridges:
        return None
    ends = []
    for b in bridges:
        side_a, side_b = _bridge_sides(g, b)
        if len(side_a) != 3 and len(side_b) != 3:
            rec.note(key, "bridge-split")
            return _split_at_bridge(g, rec, key, b, side_a, side_b)
        # side_a holds x; record (bridge, u, v, triangle) with v in the triangle
        x, y = g.edges[b]
        if len(side_b) == 3:
            ends.append((b, x, y, side_b))
        else:
            ends.append((b, y, x, side_a))
    if len(ends) >= 2:
        rec.note(key, "two-bridges")
        return _join_shannon_ends(g, rec, key, ends[0], ends[1])
    return None


# -- the odd-defect recursion ------------------------------------------------

def _odd_regular(g: Multigraph, rec: _Recursion, key: tuple[int, int], step: str = "root") -> list[int]:
    """Colour a regular graph of special degree with the odd-defect bound."""
    d = rec.d
    delta = g.max_degree
    rec.note(key, step)
    if g.m == 0:
        return []
    if not g.is_regular() or not is_special(delta, d):
        raise InternalContradiction(f"expected a regular graph of special degree, got {delta}")
    if delta <= d:
        return [0] * g.m
    comps = [c for c in connected_components(g)]
    if len(comps) > 1:
        return _per_component(g, lambda sub: rec.call(_odd_regular, sub, key, "component"))
    if delta % 2:
        pasted = _bridge_surgery(g, rec, key)
        if pasted is not None:
            return pasted
    if delta == 2 * d - 1:
        return _case2(g, rec)
    if delta == 3 * d - 1:
        return _case3(g, d)
    if delta == 4 * d - 1:
        return _case4(g, rec)
    if delta == 5 * d - 2:
        return _case5(g, rec, key)
    if delta < 5 * d - 1:
        raise InternalContradiction(f"special degree {delta} missed by the base cases")
    return _peel(g, rec, key)


def _colour_odd(g: Multigraph, d: int, trace: list | None = None) -> list[int]:
    rec = _Recursion(d, trace)

    def solve(comp: Multigraph) -> list[int]:
        delta = comp.max_degree
        if delta <= d:
            return [0] * comp.m
        target = next_special(delta, d)
        lifted = comp
        if not (comp.is_regular() and target == delta):
            lifted = regularize_by_doubling(comp, target)
        # the lifted graph may have up to twice the vertices; the sentinel
        # parent only has to dominate the first recursion key
        return _odd_regular(lifted, rec, (lifted.max_degree, lifted.n))[: comp.m]

    return _per_component(g, solve)


# -- public API --------------------------------------------------------------

def _check_odd(d: int) -> None:
    if d < 1 or d % 2 == 0:
        raise PreconditionError(f"defect {d} must be odd")


def _check_regular(g: Multigraph, delta: int) -> None:
    if not g.is_regular(delta) or g.m == 0:
        raise PreconditionError(f"graph must be {delta}-regular")


def _check_shannon_bridges(g: Multigraph) -> None:
    bridges = sorted(find_bridges(g))
    owner = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            owner[v] = i
    seen = set()
    for b in bridges:
        c = owner[g.edges[b][0]]
        if c in seen:
            raise PreconditionError("a component has more than one bridge")
        seen.add(c)
        side_a, side_b = _bridge_sides(g, b)
        if len(side_a) != 3 and len(side_b) != 3:
            raise PreconditionError(f"bridge {b} has no Shannon side")


def colour_even_defect(g: Multigraph, d: int) -> EdgeColouring:
    """ceil(delta/d) colours for even d.

    Each component is lifted to an even-regular graph (doubling, then one
    more matching layer if the degree is odd), split into 2-factors, and d/2
    consecutive 2-factors share a colour.
    """
    if d < 2 or d % 2:
        raise PreconditionError(f"defect {d} must be even")

    def solve(comp: Multigraph) -> list[int]:
        delta = comp.max_degree
        target = delta + delta % 2
        lifted = comp if comp.is_regular(target) else regularize_by_doubling(comp, target)
        cols = [0] * lifted.m
        for i, part in enumerate(petersen_decompose(lifted)):
            for e in part.edges:
                cols[e] = i // (d // 2)
        return cols[: comp.m]

    return EdgeColouring(g, tuple(_per_component(g, solve)))


def colour_odd_defect_regular(g: Multigraph, d: int, trace: list | None = None) -> EdgeColouring:
    """At most ceil((3 delta - 1)/(3d - 1)) colours for a delta-regular graph
    and odd d.

    ``trace``, when given, receives ``(depth, delta, n, step)`` for every
    recursive call.
    """
    _check_odd(d)
    if not g.is_regular():
        raise PreconditionError("graph must be regular")
    return EdgeColouring(g, tuple(_colour_odd(g, d, trace)))


def colour_case2(g: Multigraph, d: int) -> EdgeColouring:
    """Two colours for a (2d-1)-regular graph: a (d-1)-factor and its
    complement."""
    _check_odd(d)
    if d == 1:
        raise PreconditionError("case 2 needs d >= 3")
    _check_regular(g, 2 * d - 1)
    _check_shannon_bridges(g)
    return EdgeColouring(g, tuple(_case2(g, _Recursion(d))))


def colour_case3(g: Multigraph, d: int) -> EdgeColouring:
    """Three colours for a (3d-1)-regular graph.

    A 2d-factor is Euler-split component by component; the edges left out of
    odd components form a matching that joins the complementary
    (d-1)-factor as the third colour.
    """
    _check_odd(d)
    _check_regular(g, 3 * d - 1)
    return EdgeColouring(g, tuple(_case3(g, d)))


def colour_case4(g: Multigraph, d: int) -> EdgeColouring:
    """Four colours for a (4d-1)-regular graph."""
    _check_odd(d)
    _check_regular(g, 4 * d - 1)
    _check_shannon_bridges(g)
    return EdgeColouring(g, tuple(_case4(g, _Recursion(d))))


def colour_case5(g: Multigraph, d: int) -> EdgeColouring:
    """Five colours for a (5d-2)-regular graph: a (3d-1)-factor takes three
    colours and the (2d-1)-regular rest takes two."""
    _check_odd(d)
    if d == 1:
        raise PreconditionError("case 5 needs d >= 3")
    _check_regular(g, 5 * d - 2)
    _check_shannon_bridges(g)
    rec = _Recursion(d)
    return EdgeColouring(g, tuple(_case5(g, rec, (g.max_degree, g.n + 1))))


def colour_shannon_graph(k: int, d: int) -> EdgeColouring:
    """Optimal colouring of Sh(k): triangle order, blocks of (3d-1)/2 edges."""
    _check_odd(d)
    g = shannon_graph(k)
    cols = _shannon_blocks(_pair_groups(g, (0, 1, 2)), d)
    return EdgeColouring(g, tuple(cols[e] for e in range(g.m)))


def _has_odd_regular_component(g: Multigraph, delta: int) -> bool:
    for comp in connected_components(g):
        if len(comp) % 2 and all(g.degrees[v] == delta for v in comp):
            return True
    return False


def colour_two_d_regular(g: Multigraph, d: int) -> EdgeColouring:
    """Colouring of a graph of maximum degree 2d, d odd.

    Two colours unless some 2d-regular component has odd order, in which
    case two are impossible and three are used.
    """
    _check_odd(d)
    if g.max_degree != 2 * d:
        raise PreconditionError(f"maximum degree must be {2 * d}")
    if _has_odd_regular_component(g, 2 * d):
        return EdgeColouring(g, tuple(_colour_odd(g, d)))
    h = regularize_by_doubling(g, 2 * d)
    cols = _per_component(h, lambda comp: _two_colour_even_order(comp, d))
    return EdgeColouring(g, tuple(cols[: g.m]))


def colour_defective(g: Multigraph, d: int) -> EdgeColouring:
    """A defect-d colouring within the worst-case bound for the degree.

    Even d: ceil(delta/d) colours, which is optimal.  Odd d: at most
    ceil((3 delta - 1)/(3d - 1)); for simple graphs the binned Vizing
    colouring and the 2d-parity argument are tried first and the smallest
    result wins.
    """
    if d < 1:
        raise PreconditionError(f"defect must be >= 1, got {d}")
    if g.m == 0:
        return EdgeColouring(g, ())
    if d % 2 == 0:
        return colour_even_defect(g, d)
    delta = g.max_degree
    best: EdgeColouring | None = None
    if g.is_simple():
        from .proper import bin_colours, vizing_colour

        if delta == 2 * d:
            best = colour_two_d_regular(g, d)
        binned = bin_colours(vizing_colour(g), d)
        if best is None or binned.num_colours < best.num_colours:
            best = binned
        if best.num_colours <= lower_bound_trivial(g, d) or best.num_colours <= upper_bound_degree(delta, d):
            return best
    general = EdgeColouring(g, tuple(_colour_odd(g, d)))
    if best is not None and best.num_colours <= general.num_colours:
        return best
    return general

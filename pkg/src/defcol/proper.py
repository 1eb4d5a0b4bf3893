"""Proper edge colouring of simple graphs and defect binning."""

from __future__ import annotations

from .colouring import EdgeColouring
from .errors import PreconditionError
from .graph import Multigraph

__all__ = ["vizing_colour", "bin_colours"]


def vizing_colour(g: Multigraph) -> EdgeColouring:
    """Proper edge colouring of a simple graph with at most delta + 1 colours.

    Misra-Gries: each uncoloured edge ``xy`` grows a maximal fan at ``x``,
    flips the cd-path through ``x`` (c the lowest colour free at ``x``, d the
    lowest free at the fan's tip) and rotates a prefix of the fan.  A final
    Kempe-chain pass tries to empty the top colour class.
    """
    if not g.is_simple():
        u, v = next(p for p, c in g.multiplicities.items() if c > 1)
        raise PreconditionError(f"parallel edges between {u} and {v}")
    palette = g.max_degree + 1
    colour: list[int | None] = [None] * g.m
    # at[v][c] = edge of colour c at v
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    edge_id = {}
    for e, (u, v) in enumerate(g.edges):
        edge_id[u, v] = edge_id[v, u] = e

    def paint(e: int, c: int | None) -> None:
        old = colour[e]
        u, v = g.edges[e]
        if old is not None:
            del at[u][old]
            del at[v][old]
        colour[e] = c
        if c is not None:
            at[u][c] = e
            at[v][c] = e

    def lowest_free(v: int) -> int:
        return next(c for c in range(palette) if c not in at[v])

    for e0, (x, y) in enumerate(g.edges):
        fan = [y]
        in_fan = {y}
        while True:
            tip = fan[-1]
            for c in range(palette):
                if c in at[tip]:
                    continue
                e = at[x].get(c)
                if e is not None and g.other(e, x) not in in_fan:
                    w = g.other(e, x)
                    fan.append(w)
                    in_fan.add(w)
                    break
            else:
                break
        c = lowest_free(x)
        d = lowest_free(fan[-1])
        if c != d and d in at[x]:
            # invert the path from x alternating d, c
            path = []
            v, want = x, d
            while want in at[v]:
                e = at[v][want]
                path.append(e)
                v = g.other(e, v)
                want = c if want == d else d
            old = [colour[e] for e in path]
            for e in path:
                paint(e, None)
            for e, col in zip(path, old):
                paint(e, c if col == d else d)
        # first fan vertex with d free such that the prefix is still a fan
        stop = None
        for i, w in enumerate(fan):
            if i > 0:
                prev_col = colour[edge_id[x, w]]
                if prev_col is None or prev_col in at[fan[i - 1]]:
                    break
            if d not in at[w]:
                stop = i
                break
        if stop is None:
            raise AssertionError("fan rotation failed")
        for i in range(stop):
            nxt = colour[edge_id[x, fan[i + 1]]]
            paint(edge_id[x, fan[i + 1]], None)
            paint(edge_id[x, fan[i]], nxt)
        paint(edge_id[x, fan[stop]], d)

    # Try to empty the top colour class: recolour each of its edges uv with a
    # colour a free at u after flipping the ab-chain at v, for the
    # lexicographically smallest (a, b) with b free at v that works.
    top = palette - 1
    for e in [e for e in range(g.m) if colour[e] == top]:
        u, v = g.edges[e]
        paint(e, None)
        free_u = [a for a in range(top) if a not in at[u]]
        free_v = [b for b in range(top) if b not in at[v]]
        for a in free_u:
            if a not in at[v]:
                paint(e, a)
                break
            done = False
            for b in free_v:
                chain, w, want = [], v, a
                while want in at[w]:
                    f = at[w][want]
                    chain.append(f)
                    w = g.other(f, w)
                    want = b if want == a else a
                if w == u:
                    continue
                old = [colour[f] for f in chain]
                for f in chain:
                    paint(f, None)
                for f, col in zip(chain, old):
                    paint(f, b if col == a else a)
                paint(e, a)
                done = True
                break
            if done:
                break
        if colour[e] is None:
            paint(e, top)
    return EdgeColouring(g, tuple(colour))  # type: ignore[arg-type]


def bin_colours(c: EdgeColouring, d: int) -> EdgeColouring:
    """Merge each run of ``d`` consecutive proper colour classes into one."""
    if d < 1:
        raise PreconditionError(f"defect must be >= 1, got {d}")
    if c.max_defect() > 1:
        raise PreconditionError("input colouring is not proper")
    return EdgeColouring(c.host, tuple(col // d for col in c.colours))

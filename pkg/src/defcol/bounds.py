"""Bounds on the d-defective chromatic index, the exact oracle and the verifier."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .colouring import EdgeColouring
from .errors import PreconditionError
from .graph import Multigraph

__all__ = [
    "ColouringReport",
    "verify_colouring",
    "lower_bound_trivial",
    "upper_bound_degree",
    "gamma_d",
    "upper_bound_multiplicity",
    "exact_chi",
    "GAMMA_CUTOFF",
    "ORACLE_CUTOFF",
]

GAMMA_CUTOFF = 20
ORACLE_CUTOFF = 24


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_defect(d: int) -> None:
    if d < 1:
        raise PreconditionError(f"defect must be >= 1, got {d}")


@dataclass
class ColouringReport:
    valid: bool
    violations: list[tuple[int, int, int]]
    colours_used: int
    bounds: dict[str, int] = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"valid {'yes' if self.valid else 'no'}", f"colours {self.colours_used}"]
        out.extend(f"bound {name} {value}" for name, value in self.bounds.items())
        out.extend(f"violation {v} {c} {count}" for v, c, count in self.violations)
        return out


def verify_colouring(
    g: Multigraph,
    colouring: EdgeColouring | Sequence[int | None],
    d: int,
) -> ColouringReport:
    """Check that no vertex meets more than ``d`` edges of one colour.

    Violations are ``(vertex, colour, incidence count)`` triples in vertex
    then colour order.
    """
    _check_defect(d)
    colours = colouring.colours if isinstance(colouring, EdgeColouring) else tuple(colouring)
    if len(colours) != g.m:
        raise PreconditionError(f"colouring covers {len(colours)} of {g.m} edges")
    for e, c in enumerate(colours):
        if c is None:
            raise PreconditionError(f"edge {e} is uncoloured")
    violations = []
    for v in range(g.n):
        count: dict[int, int] = {}
        for e in g.incidence[v]:
            count[colours[e]] = count.get(colours[e], 0) + 1
        violations.extend((v, c, k) for c, k in sorted(count.items()) if k > d)
    bounds = {
        "trivial": lower_bound_trivial(g, d),
        "degree_upper": upper_bound_degree(g.max_degree, d),
    }
    return ColouringReport(not violations, violations, len(set(colours)), bounds)


def lower_bound_trivial(g: Multigraph, d: int) -> int:
    """ceil(max degree / d): the colours needed at one vertex."""
    _check_defect(d)
    return _ceil_div(g.max_degree, d)


def upper_bound_degree(delta: int, d: int) -> int:
    """Colours sufficient for any multigraph of maximum degree ``delta``:
    ceil(delta/d) for even d, ceil((3 delta - 1)/(3d - 1)) for odd d."""
    _check_defect(d)
    if delta <= 0:
        return 0
    if d % 2 == 0:
        return _ceil_div(delta, d)
    return _ceil_div(3 * delta - 1, 3 * d - 1)


def upper_bound_multiplicity(g: Multigraph, d: int) -> int:
    """ceil((max degree + max multiplicity) / d)."""
    _check_defect(d)
    return _ceil_div(g.max_degree + g.max_multiplicity, d)


def _subset_edge_counts(n: int, mult: dict[tuple[int, int], int]) -> np.ndarray:
    # counts[mask] = edges inside the vertex set encoded by mask
    counts = np.zeros(1, dtype=np.int64)
    for v in range(n):
        towards = np.zeros(1, dtype=np.int64)
        for u in range(v):
            towards = np.concatenate([towards, towards + mult.get((u, v), 0)])
        counts = np.concatenate([counts, counts + towards])
    return counts


def gamma_d(
    g: Multigraph,
    d: int,
    cutoff: int = GAMMA_CUTOFF,
    sampled: bool = False,
    samples: int = 20000,
    seed: int = 0,
) -> int:
    """Density lower bound: max over X with |X| >= 2 of
    ceil(|E(G[X])| / floor(d|X|/2)).

    Exhaustive over subsets of non-isolated vertices up to ``cutoff`` of them.
    Beyond that, ``sampled=True`` returns the best value over randomly grown
    connected subsets, which is still a valid lower bound.
    """
    _check_defect(d)
    active = [v for v in range(g.n) if g.degrees[v]]
    if not active:
        return 0
    index = {v: i for i, v in enumerate(active)}
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = sorted((index[u], index[v]))
        mult[a, b] = mult.get((a, b), 0) + 1
    n = len(active)
    if n > cutoff:
        if not sampled:
            raise PreconditionError(f"{n} vertices exceed the exhaustive cutoff {cutoff}")
        return _gamma_sampled(n, mult, d, samples, seed)
    counts = _subset_edge_counts(n, mult)
    sizes = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        sizes = np.concatenate([sizes, sizes + 1])
    keep = sizes >= 2
    denom = (d * sizes[keep]) // 2
    return int(np.max(-(-counts[keep] // denom)))


def _gamma_sampled(n: int, mult: dict[tuple[int, int], int], d: int, samples: int, seed: int) -> int:
    rng = random.Random(seed)
    nbrs: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in mult:
        nbrs[a].append(b)
        nbrs[b].append(a)
    best = 0
    for _ in range(samples):
        start = rng.randrange(n)
        chosen, inside = [start], 0
        frontier = list(nbrs[start])
        target = rng.randint(2, n)
        while len(chosen) < target and frontier:
            v = frontier.pop(rng.randrange(len(frontier)))
            if v in chosen:
                continue
            inside += sum(mult.get((min(u, v), max(u, v)), 0) for u in chosen)
            chosen.append(v)
            frontier.extend(nbrs[v])
            best = max(best, _ceil_div(inside, (d * len(chosen)) // 2))
    return best


def exact_chi(g: Multigraph, d: int, cutoff: int = ORACLE_CUTOFF) -> int:
    """The d-defective chromatic index by exhaustive search.

    Iterative deepening on the colour count, starting from the larger of the
    trivial and density bounds.  Edges are coloured in id order; a new colour
    is only opened as the next unused index, and parallel edges take
    nondecreasing colours.
    """
    _check_defect(d)
    if g.m > cutoff:
        raise PreconditionError(f"{g.m} edges exceed the oracle cutoff {cutoff}")
    if g.m == 0:
        return 0
    k = lower_bound_trivial(g, d)
    if sum(1 for x in g.degrees if x) <= GAMMA_CUTOFF:
        k = max(k, gamma_d(g, d))
    while not _colourable(g, d, k):
        k += 1
    return k


def _colourable(g: Multigraph, d: int, k: int) -> bool:
    m = g.m
    edges = g.edges
    prev_parallel = [-1] * m
    last: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(edges):
        key = (min(u, v), max(u, v))
        prev_parallel[e] = last.get(key, -1)
        last[key] = e
    load = [[0] * k for _ in range(g.n)]
    remaining = list(g.degrees)
    colour = [-1] * m

    def capacity_ok(left: int) -> bool:
        # each colour class can still absorb at most half its free slots
        total = 0
        for c in range(k):
            free = 0
            for v in range(g.n):
                if remaining[v]:
                    free += min(d - load[v][c], remaining[v])
            total += free // 2
        return total >= left

    def place(e: int, opened: int) -> bool:
        if e == m:
            return True
        if not capacity_ok(m - e):
            return False
        u, v = edges[e]
        lo = colour[prev_parallel[e]] if prev_parallel[e] >= 0 else 0
        hi = min(opened + 1, k)
        lu, lv = load[u], load[v]
        for c in range(lo, hi):
            if lu[c] < d and lv[c] < d:
                lu[c] += 1
                lv[c] += 1
                remaining[u] -= 1
                remaining[v] -= 1
                colour[e] = c
                if place(e + 1, max(opened, c + 1)):
                    return True
                lu[c] -= 1
                lv[c] -= 1
                remaining[u] += 1
                remaining[v] += 1
        colour[e] = -1
        return False

    return place(0, 0)

"""Maximum cardinality matching in general simple graphs (Edmonds' blossoms)."""

from __future__ import annotations

from collections import deque
from typing import Sequence


def maximum_matching(
    n: int,
    edges: Sequence[tuple[int, int]],
    perfect_only: bool = False,
) -> list[int] | None:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1.

    Edges are scanned in the given order both for the greedy start and for
    every search, so the result is deterministic.  With ``perfect_only`` the
    search stops at the first vertex that cannot be matched and returns
    ``None``.

    Runs in O(n^3): one alternating-tree search per exposed vertex, each
    search contracting blossoms by relabelling bases.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        adj[u].append(v)
        adj[v].append(u)

    mate = [-1] * n
    for u, v in edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u] = v
            mate[v] = u

    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def search(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_tree[i] = False
        in_tree[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, b, to)
                    mark_path(to, b, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        v = search(root)
        if v == -1:
            if perfect_only:
                return None
            continue
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return mate

"""Maximum bipartite matching (Hopcroft-Karp) on integer-indexed bipartite graphs.

Left vertices are ``0..len(adjacency)-1``, right vertices ``0..right_count-1``.
All scans follow the adjacency order given by the caller, so the matching
returned for a fixed input is always the same.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

_INF = float("inf")


def hopcroft_karp(adjacency: Sequence[Sequence[int]], right_count: int) -> list[Optional[int]]:
    """Maximum-cardinality matching.

    Args:
        adjacency: ``adjacency[u]`` lists the right neighbours of left vertex ``u``.
        right_count: number of right vertices.

    Returns:
        ``match[u]`` is the right vertex matched to ``u``, or ``None``.
    """
    left_count = len(adjacency)
    match_left: list[Optional[int]] = [None] * left_count
    match_right: list[Optional[int]] = [None] * right_count

    # greedy warm start; Hopcroft-Karp phases finish the job
    for u, nbrs in enumerate(adjacency):
        for w in nbrs:
            if match_right[w] is None:
                match_left[u] = w
                match_right[w] = u
                break

    dist = [0.0] * left_count

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(left_count):
            if match_left[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                mate = match_right[w]
                if mate is None:
                    found = True
                elif dist[mate] == _INF:
                    dist[mate] = dist[u] + 1
                    queue.append(mate)
        return found

    def dfs(root: int) -> bool:
        # iterative layered search; recursion depth could reach |left|
        stack = [(root, iter(adjacency[root]))]
        path: list[tuple[int, int]] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                mate = match_right[w]
                if mate is None:
                    path.append((u, w))
                    for pu, pw in path:
                        match_left[pu] = pw
                        match_right[pw] = pu
                    return True
                if dist[mate] == dist[u] + 1:
                    path.append((u, w))
                    stack.append((mate, iter(adjacency[mate])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(left_count):
            if match_left[u] is None:
                dfs(u)
    return match_left


def matching_size(match_left: Sequence[Optional[int]]) -> int:
    return sum(1 for w in match_left if w is not None)


def alternating_reach(
    adjacency: Sequence[Sequence[int]],
    match_left: Sequence[Optional[int]],
    right_count: int,
    start: int,
) -> tuple[list[int], list[int]]:
    """Left and right vertices reachable from ``start`` by alternating paths.

    ``start`` must be unsaturated by a maximum matching. Every reached right
    vertex is then matched to a reached left vertex, so the reached left set
    Z has exactly |Z| - 1 neighbours: a Hall violator.
    """
    match_right: list[Optional[int]] = [None] * right_count
    for u, w in enumerate(match_left):
        if w is not None:
            match_right[w] = u
    seen_left = {start}
    seen_right: set[int] = set()
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w in seen_right:
                continue
            seen_right.add(w)
            mate = match_right[w]
            if mate is not None and mate not in seen_left:
                seen_left.add(mate)
                queue.append(mate)
    return sorted(seen_left), sorted(seen_right)

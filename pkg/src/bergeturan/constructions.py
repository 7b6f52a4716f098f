"""Named hypergraphs: complete r-graphs, balanced complete partite r-graphs, expansions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class PartiteStructure:
    """Ordered partition of ``0..N-1`` into (possibly empty) parts."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    def is_balanced(self) -> bool:
        return not self.parts or max(self.sizes) - min(self.sizes) <= 1

    def is_partition_of(self, vertex_count: int) -> bool:
        flat = sorted(v for p in self.parts for v in p)
        return flat == list(range(vertex_count))

    def as_sets(self) -> set[frozenset[int]]:
        """Parts without their order, for comparisons up to part relabelling."""
        return {frozenset(p) for p in self.parts}

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> PartiteStructure:
        return cls(tuple(tuple(int(v) for v in p) for p in data["parts"]))


def _balanced_layout(vertex_count: int, parts: int) -> tuple[int, int]:
    # N = l*k + j with 1 <= j <= k, so j = k when k divides N
    ell = (vertex_count - 1) // parts
    return ell, vertex_count - ell * parts


def turan_count(vertex_count: int, parts: int, uniformity: int) -> int:
    """Edge count of the balanced complete ``parts``-partite r-graph on N vertices.

    Writes N = l*k + j with 1 <= j <= k and evaluates

        sum_{i=0}^{r} l^(r-i) * C(j, i) * C(k-i, r-i)

    exactly: choose i of the j surplus vertices (one per large part), then
    r-i ordinary vertices from distinct remaining parts, l choices in each.
    """
    if parts < 1:
        raise ValueError(f"number of parts must be positive, got {parts}")
    if uniformity < 2:
        raise ValueError(f"uniformity must be at least 2, got {uniformity}")
    if vertex_count <= 0:
        return 0
    ell, j = _balanced_layout(vertex_count, parts)
    # math.comb already returns 0 when the lower index exceeds the upper one
    return sum(
        ell ** (uniformity - i) * comb(j, i) * comb(parts - i, uniformity - i)
        for i in range(uniformity + 1)
        if i <= parts
    )


def balanced_part_sizes(vertex_count: int, parts: int) -> list[int]:
    """Part sizes of T_r(N, k): the larger parts come first."""
    if parts < 1:
        raise ValueError(f"number of parts must be positive, got {parts}")
    if vertex_count <= 0:
        return [0] * parts
    ell, j = _balanced_layout(vertex_count, parts)
    return [ell + 1] * j + [ell] * (parts - j)


def _partite_edges(part_of: list[int], uniformity: int) -> list[Edge]:
    n = len(part_of)
    # first vertex of the next part, for each vertex; parts are contiguous
    next_start = [0] * n
    for v in range(n - 1, -1, -1):
        if v == n - 1 or part_of[v + 1] != part_of[v]:
            next_start[v] = v + 1
        else:
            next_start[v] = next_start[v + 1]
    edges: list[Edge] = []

    def extend(prefix: tuple[int, ...], start: int) -> None:
        if len(prefix) == uniformity:
            edges.append(prefix)
            return
        need = uniformity - len(prefix)
        for v in range(start, n - need + 1):
            extend(prefix + (v,), next_start[v])

    extend((), 0)
    return edges


def build_turan_partite(vertex_count: int, parts: int, uniformity: int) -> tuple[Hypergraph, PartiteStructure]:
    """T_r(N, k) together with its partition.

    Vertices fill the parts in increasing order and larger parts take the
    lowest indices, so ``build_turan_partite(6, 3, 3)`` has parts
    ``(0, 1), (2, 3), (4, 5)``. Edges are the r-sets meeting each part at
    most once, generated directly in lexicographic order.
    """
    if uniformity < 2:
        raise ValueError(f"uniformity must be at least 2, got {uniformity}")
    sizes = balanced_part_sizes(vertex_count, parts)
    layout = []
    start = 0
    for size in sizes:
        layout.append(tuple(range(start, start + size)))
        start += size
    part_of = [i for i, p in enumerate(layout) for _ in p]
    edges = _partite_edges(part_of, uniformity)
    return Hypergraph._trusted(max(vertex_count, 0), uniformity, edges), PartiteStructure(tuple(layout))


def build_complete(vertex_count: int, uniformity: int) -> Hypergraph:
    """K_N^r, all C(N, r) edges."""
    if uniformity < 2:
        raise ValueError(f"uniformity must be at least 2, got {uniformity}")
    return Hypergraph._trusted(vertex_count, uniformity, list(combinations(range(vertex_count), uniformity)))


def build_expansion(order: int, uniformity: int) -> Hypergraph:
    """The expansion of K_n: each pair {i, j} of 0..n-1 padded with r-2 fresh vertices.

    Pair number p (pairs in lexicographic order) receives the padding
    vertices ``n + p*(r-2), ..., n + p*(r-2) + r-3``.
    """
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    if uniformity < 3:
        raise ValueError(f"uniformity must be at least 3, got {uniformity}")
    pad = uniformity - 2
    edges = [
        (i, j, *range(order + p * pad, order + (p + 1) * pad))
        for p, (i, j) in enumerate(combinations(range(order), 2))
    ]
    vertex_count = pad * comb(order, 2) + order
    return Hypergraph(vertex_count, uniformity, edges)

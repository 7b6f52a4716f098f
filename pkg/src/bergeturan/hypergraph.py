"""Finite uniform hypergraphs on dense 0-based vertex sets."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

Edge = tuple[int, ...]


def _members(vertices: Iterable[int], vertex_count: int) -> tuple[int, ...]:
    members = sorted(set(vertices))
    for v in members:
        if not isinstance(v, int) or v < 0 or v >= vertex_count:
            raise ValueError(f"vertex {v!r} out of range [0, {vertex_count})")
    return tuple(members)


class Hypergraph:
    """An r-uniform hypergraph H = (V, E) with V = {0, ..., N-1}.

    Edges are stored as strictly increasing tuples, in lexicographic order,
    so two hypergraphs compare equal exactly when their vertex count,
    uniformity and edge sets agree. Instances are immutable.

    Args:
        vertex_count: number of vertices N.
        uniformity: edge size r, at least 2.
        edges: iterable of r-element vertex collections. Vertex order inside
            an edge does not matter.

    Raises:
        ValueError: on a malformed edge or a duplicate edge.
    """

    def __init__(self, vertex_count: int, uniformity: int, edges: Iterable[Iterable[int]] = ()):
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be nonnegative, got {vertex_count}")
        if uniformity < 2:
            raise ValueError(f"uniformity must be at least 2, got {uniformity}")
        canonical = []
        for raw in edges:
            edge = tuple(sorted(raw))
            if len(edge) != uniformity or len(set(edge)) != uniformity:
                raise ValueError(f"edge {tuple(raw)!r} does not have {uniformity} distinct vertices")
            if edge[0] < 0 or edge[-1] >= vertex_count:
                raise ValueError(f"edge {edge!r} has a vertex outside [0, {vertex_count})")
            canonical.append(edge)
        canonical.sort()
        for a, b in zip(canonical, canonical[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a!r}")
        self._n = vertex_count
        self._r = uniformity
        self._edges: tuple[Edge, ...] = tuple(canonical)

    @classmethod
    def _trusted(cls, vertex_count: int, uniformity: int, edges: Sequence[Edge]) -> Hypergraph:
        # edges must already be canonical, sorted and distinct
        h = cls.__new__(cls)
        h._n = vertex_count
        h._r = uniformity
        h._edges = tuple(edges)
        return h

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def uniformity(self) -> int:
        return self._r

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Edges as vertex bitmasks, in canonical edge order."""
        return tuple(sum(1 << v for v in e) for e in self._edges)

    @cached_property
    def shadow(self) -> tuple[int, ...]:
        """Per-vertex bitmask of the vertices sharing at least one edge with it."""
        adj = [0] * self._n
        for e, mask in zip(self._edges, self.edge_masks):
            for v in e:
                adj[v] |= mask
        return tuple(a & ~(1 << v) for v, a in enumerate(adj))

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, edge: object) -> bool:
        try:
            return tuple(sorted(edge)) in self.edge_set  # type: ignore[arg-type]
        except TypeError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self._n, self._r, self._edges) == (other._n, other._r, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._r, self._edges))

    def __repr__(self) -> str:
        return f"Hypergraph(N={self._n}, r={self._r}, m={len(self._edges)})"

    def edge_count(self) -> int:
        """Number of edges, e(H)."""
        return len(self._edges)

    def degree(self, v: int) -> int:
        """Number of edges containing ``v``."""
        self._check_vertex(v)
        return sum(1 for e in self._edges if v in e)

    def complement(self) -> Hypergraph:
        """All r-subsets of V that are not edges of this hypergraph."""
        present = self.edge_set
        missing = [e for e in combinations(range(self._n), self._r) if e not in present]
        return Hypergraph._trusted(self._n, self._r, missing)

    def induced(self, vertices: Iterable[int]) -> Hypergraph:
        """Sub-hypergraph spanned by the edges lying entirely inside ``vertices``.

        The result is relabelled onto ``0..|U|-1`` preserving the sorted order
        of ``U``.
        """
        members = _members(vertices, self._n)
        index = {v: i for i, v in enumerate(members)}
        kept = [tuple(index[v] for v in e) for e in self._edges if all(v in index for v in e)]
        return Hypergraph._trusted(len(members), self._r, kept)

    def cross(self, first: Iterable[int], second: Iterable[int]) -> Hypergraph:
        """Edges meeting both vertex sets, on the full vertex set."""
        u = set(_members(first, self._n))
        w = set(_members(second, self._n))
        if u & w:
            raise ValueError(f"vertex sets overlap on {sorted(u & w)}")
        kept = [e for e in self._edges if not u.isdisjoint(e) and not w.isdisjoint(e)]
        return Hypergraph._trusted(self._n, self._r, kept)

    def delete_vertex(self, v: int) -> Hypergraph:
        """H - v: drop ``v`` and its edges; higher indices shift down by one."""
        self._check_vertex(v)
        kept = [tuple(x - (x > v) for x in e) for e in self._edges if v not in e]
        return Hypergraph._trusted(self._n - 1, self._r, kept)

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        """True when no edge contains two members of ``vertices``."""
        mask = sum(1 << v for v in _members(vertices, self._n))
        return all((m & mask).bit_count() < 2 for m in self.edge_masks)

    def with_edge(self, edge: Iterable[int]) -> Hypergraph:
        """Copy with one additional edge."""
        return Hypergraph(self._n, self._r, (*self._edges, tuple(edge)))

    def without_edge(self, edge: Iterable[int]) -> Hypergraph:
        key = tuple(sorted(edge))
        if key not in self.edge_set:
            raise ValueError(f"{key!r} is not an edge")
        return Hypergraph._trusted(self._n, self._r, [e for e in self._edges if e != key])

    def relabel(self, permutation: Sequence[int]) -> Hypergraph:
        """Image under the vertex map ``v -> permutation[v]``."""
        if sorted(permutation) != list(range(self._n)):
            raise ValueError("relabelling must be a permutation of the vertex set")
        return Hypergraph(self._n, self._r, ([permutation[v] for v in e] for e in self._edges))

    def non_edges(self) -> list[Edge]:
        return list(self.complement().edges)

    def max_edge_count(self) -> int:
        return comb(self._n, self._r)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise ValueError(f"vertex {v} out of range [0, {self._n})")


def edge_count(h: Hypergraph) -> int:
    return h.edge_count()


def complement(h: Hypergraph) -> Hypergraph:
    return h.complement()


def induced(h: Hypergraph, vertices: Iterable[int]) -> Hypergraph:
    return h.induced(vertices)


def cross(h: Hypergraph, first: Iterable[int], second: Iterable[int]) -> Hypergraph:
    return h.cross(first, second)


def degree(h: Hypergraph, v: int) -> int:
    return h.degree(v)


def delete_vertex(h: Hypergraph, v: int) -> Hypergraph:
    return h.delete_vertex(v)


def is_independent_set(h: Hypergraph, vertices: Iterable[int]) -> bool:
    return h.is_independent_set(vertices)

"""Berge-clique detection through the pair/edge incidence graph.

A Berge-K_n with core v_1..v_n is an injective assignment of the C(n, 2)
core pairs to edges containing them. That is precisely a matching which
saturates the pair side of the bipartite incidence graph, so a maximum
matching decides containment for a fixed core and yields the witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence

from .hypergraph import Edge, Hypergraph
from .matching import hopcroft_karp

Pair = tuple[int, int]


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph between core pairs (left) and edges (right).

    ``adjacency[p]`` lists indices into ``right`` of the edges containing
    ``left[p]``, in canonical edge order.
    """

    left: tuple[Pair, ...]
    right: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def left_degree(self, p: int) -> int:
        return len(self.adjacency[p])

    def right_degrees(self) -> list[int]:
        deg = [0] * len(self.right)
        for nbrs in self.adjacency:
            for w in nbrs:
                deg[w] += 1
        return deg


@dataclass(frozen=True)
class BergeWitness:
    """Core sequence plus the pair -> edge assignment certifying a Berge-K_n."""

    core: tuple[int, ...]
    assignment: tuple[tuple[Pair, Edge], ...]

    def to_json(self) -> dict:
        return {
            "core": list(self.core),
            "assignment": [{"pair": list(p), "edge": list(e)} for p, e in self.assignment],
        }

    @classmethod
    def from_json(cls, data: dict) -> BergeWitness:
        return cls(
            tuple(data["core"]),
            tuple((tuple(a["pair"]), tuple(a["edge"])) for a in data["assignment"]),  # type: ignore[misc]
        )


def _check_core(h: Hypergraph, core: Sequence[int]) -> tuple[int, ...]:
    core = tuple(core)
    if len(core) < 2:
        raise ValueError("a core needs at least two vertices")
    if len(set(core)) != len(core):
        raise ValueError(f"core {core!r} repeats a vertex")
    for v in core:
        if not 0 <= v < h.vertex_count:
            raise ValueError(f"core vertex {v} out of range [0, {h.vertex_count})")
    return core


def _core_pairs(core: Sequence[int]) -> list[Pair]:
    return [(min(a, b), max(a, b)) for a, b in combinations(core, 2)]


def incidence_graph(h: Hypergraph, core: Sequence[int]) -> IncidenceGraph:
    """B(H) restricted to the pairs of ``core`` and the edges holding one of them."""
    core = _check_core(h, core)
    pairs = _core_pairs(core)
    index = {p: i for i, p in enumerate(pairs)}
    core_mask = sum(1 << v for v in core)
    right = []
    adjacency: list[list[int]] = [[] for _ in pairs]
    for e, m in zip(h.edges, h.edge_masks):
        if (m & core_mask).bit_count() < 2:
            continue
        w = len(right)
        right.append(e)
        # e is sorted, so each pair comes out as (smaller, larger)
        for pair in combinations([v for v in e if core_mask >> v & 1], 2):
            adjacency[index[pair]].append(w)
    return IncidenceGraph(tuple(pairs), tuple(right), tuple(map(tuple, adjacency)))


def max_matching(g: IncidenceGraph) -> list[tuple[Pair, Edge]]:
    """Maximum matching of ``g`` as (pair, edge) matches in left order."""
    match = hopcroft_karp(g.adjacency, len(g.right))
    return [(g.left[p], g.right[w]) for p, w in enumerate(match) if w is not None]


def berge_clique_on_core(h: Hypergraph, core: Sequence[int]) -> Optional[BergeWitness]:
    """Witness for a Berge-K_n on exactly this core, or ``None`` if there is none."""
    g = incidence_graph(h, core)
    if len(g.right) < len(g.left) or any(not nbrs for nbrs in g.adjacency):
        return None
    matches = max_matching(g)
    if len(matches) < len(g.left):
        return None
    return BergeWitness(tuple(core), tuple(matches))


def covered_cores(h: Hypergraph, n: int, through: Optional[Sequence[int]] = None) -> Iterator[tuple[int, ...]]:
    """n-sets whose pairs are all covered by edges, in lexicographic order.

    These are the n-cliques of the 2-shadow of H; any other n-set has a
    pair in no edge and cannot be a core. With ``through``, only sets
    holding at least two of those vertices are produced.
    """
    nbr = h.shadow
    need = 0 if through is None else 2
    through_mask = 0 if through is None else sum(1 << v for v in through)
    total = h.vertex_count

    def extend(chosen: list[int], candidates: int, start: int) -> Iterator[tuple[int, ...]]:
        k = len(chosen)
        if k == n:
            yield tuple(chosen)
            return
        # not enough candidates left to finish the set
        if (candidates >> start).bit_count() < n - k:
            return
        for v in range(start, total):
            if not candidates >> v & 1:
                continue
            if need:
                have = sum(1 for c in chosen if through_mask >> c & 1) + (through_mask >> v & 1)
                remaining = (through_mask & candidates & nbr[v]) >> (v + 1)
                if have + min(remaining.bit_count(), n - k - 1) < need:
                    continue
            chosen.append(v)
            yield from extend(chosen, candidates & nbr[v], v + 1)
            chosen.pop()

    yield from extend([], (1 << total) - 1, 0)


def contains_berge_clique(h: Hypergraph, n: int, through: Optional[Sequence[int]] = None) -> Optional[BergeWitness]:
    """First Berge-K_n witness in lexicographic core order, or ``None``.

    Cores are restricted to pair-covered n-sets before any matching is
    built. ``through`` limits the scan to cores with two or more vertices of
    the given set, which is all that needs checking after adding that set as
    an edge to a hypergraph known to be free.
    """
    if n < 2:
        raise ValueError(f"clique order must be at least 2, got {n}")
    if n > h.vertex_count:
        raise ValueError(f"clique order {n} exceeds vertex count {h.vertex_count}")
    if len(h) < comb(n, 2):
        return None
    for core in covered_cores(h, n, through):
        witness = berge_clique_on_core(h, core)
        if witness is not None:
            return witness
    return None


def is_berge_free(h: Hypergraph, n: int) -> bool:
    return contains_berge_clique(h, n) is None


def verify_witness(h: Hypergraph, w: BergeWitness) -> bool:
    """Independent certificate check: distinct core, every core pair assigned
    once, assigned edges distinct, present in H and containing their pair."""
    core = w.core
    if len(core) < 2 or len(set(core)) != len(core):
        return False
    if any(not isinstance(v, int) or not 0 <= v < h.vertex_count for v in core):
        return False
    expected = set(_core_pairs(core))
    seen_pairs = set()
    seen_edges = set()
    for pair, edge in w.assignment:
        key = (min(pair), max(pair)) if len(pair) == 2 else None
        if key not in expected or key in seen_pairs:
            return False
        edge = tuple(sorted(edge))
        if edge in seen_edges or edge not in h.edge_set:
            return False
        if key[0] not in edge or key[1] not in edge:
            return False
        seen_pairs.add(key)
        seen_edges.add(edge)
    return seen_pairs == expected

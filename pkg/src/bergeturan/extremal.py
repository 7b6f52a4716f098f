"""Extremal checks: saturation, partite recognition, exhaustive ex(N, F_n) search,
and the desk-scale verification suite for T_3(N, n-1)."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Optional, Sequence

from .berge import BergeWitness, contains_berge_clique, is_berge_free
from .constructions import PartiteStructure, build_turan_partite, turan_count
from .hypergraph import Edge, Hypergraph

SCOPE_NOTE = (
    "Uniqueness is checked structurally (complete partite recognition plus "
    "saturation of every non-edge). Exhaustive uniqueness over all "
    "2^C(N,3) hypergraphs is not attempted."
)


class BudgetExceeded(RuntimeError):
    """The exhaustive search hit a resource cap before finishing."""

    def __init__(self, message: str, nodes: int, elapsed: float):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed


class NodeBudgetExceeded(BudgetExceeded):
    pass


class TimeBudgetExceeded(BudgetExceeded):
    pass


class VerificationFailure(AssertionError):
    """A desk-suite instance failed; carries the instance report and certificate."""

    def __init__(self, report: InstanceReport, reason: str, certificate: object = None):
        super().__init__(f"N={report.N}, n={report.n}: {reason}")
        self.report = report
        self.reason = reason
        self.certificate = certificate


def resolve_jobs(jobs: Optional[int] = None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("BERGE_JOBS", "1"))
    return max(1, jobs)


# --- saturation ---------------------------------------------------------------


@dataclass
class SaturationReport:
    saturated: bool
    creating: list[Edge]
    non_creating: list[Edge]
    witnesses: list[BergeWitness] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "saturated": self.saturated,
            "non_edges": len(self.creating) + len(self.non_creating),
            "creating": [list(e) for e in self.creating],
            "non_creating": [list(e) for e in self.non_creating],
        }


def _clique_after_adding(args: tuple[Hypergraph, Edge, int]) -> Optional[BergeWitness]:
    h, edge, n = args
    return contains_berge_clique(h.with_edge(edge), n)


def saturation_check(h: Hypergraph, n: int, jobs: Optional[int] = 1) -> SaturationReport:
    """Test every missing r-set: does adding it create a Berge-K_n?

    H is expected to be Berge-K_n-free. Each augmented hypergraph gets a
    full containment scan, so the verdicts do not depend on that assumption.
    """
    non_edges = h.non_edges()
    tasks = [(h, e, n) for e in non_edges]
    workers = resolve_jobs(jobs)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_clique_after_adding, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_clique_after_adding(t) for t in tasks]
    creating, non_creating, witnesses = [], [], []
    for e, w in zip(non_edges, results):
        if w is None:
            non_creating.append(e)
        else:
            creating.append(e)
            witnesses.append(w)
    return SaturationReport(not non_creating, creating, non_creating, witnesses)


# --- partite recognition -------------------------------------------------------


def _elementary_symmetric(values: Sequence[int], k: int) -> int:
    e = [1] + [0] * k
    for x in values:
        for i in range(k, 0, -1):
            e[i] += e[i - 1] * x
    return e[k]


def recognize_complete_partite(h: Hypergraph) -> Optional[PartiteStructure]:
    """Recover the parts when H is a complete partite r-graph.

    Two vertices are related when no edge holds both. If that relation is an
    equivalence, every edge already meets each class at most once, so H is
    complete partite exactly when its edge count equals the number of r-sets
    meeting each class at most once. Fewer than r classes is degenerate (no
    edge can exist) and yields ``None``.
    """
    total = h.vertex_count
    if total == 0:
        return None
    everything = (1 << total) - 1
    nbr = h.shadow
    classes: dict[int, int] = {}
    for v in range(total):
        cls = everything & ~nbr[v]
        for w in range(total):
            if cls >> w & 1 and (everything & ~nbr[w]) != cls:
                return None
        classes.setdefault(cls, v)
    parts = [tuple(w for w in range(total) if cls >> w & 1) for cls in sorted(classes, key=classes.__getitem__)]
    if len(parts) < h.uniformity:
        return None
    if len(h) != _elementary_symmetric([len(p) for p in parts], h.uniformity):
        return None
    return PartiteStructure(tuple(parts))


# --- exhaustive search -----------------------------------------------------------


@dataclass(frozen=True)
class Budget:
    max_nodes: Optional[int] = 10_000_000
    max_seconds: Optional[float] = None


@dataclass
class ExtremalResult:
    vertex_count: int
    clique_order: int
    uniformity: int
    max_edges: int
    extremal_count: int
    samples: list[Hypergraph]
    nodes: int
    elapsed: float
    isomorphism_folded: bool = False

    def to_json(self) -> dict:
        return {
            "N": self.vertex_count,
            "n": self.clique_order,
            "r": self.uniformity,
            "max_edges": self.max_edges,
            "extremal_count": self.extremal_count,
            "isomorphism_folded": self.isomorphism_folded,
            "samples": [[list(e) for e in s.edges] for s in self.samples],
            "nodes": self.nodes,
        }


def canonical_form(h: Hypergraph) -> tuple[Edge, ...]:
    """Lexicographically least relabelled edge list over all N! relabellings."""
    best: Optional[tuple[Edge, ...]] = None
    for perm in permutations(range(h.vertex_count)):
        image = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in h.edges))
        if best is None or image < best:
            best = image
    return best if best is not None else ()


def brute_force_ex(
    vertex_count: int,
    clique_order: int,
    uniformity: int = 3,
    budget: Optional[Budget] = None,
    fold_isomorphism: bool = False,
    max_samples: int = 3,
) -> ExtremalResult:
    """Exact ex(N, F_n) for r-graphs by depth-first search over edges.

    Edges are decided in canonical order, include before exclude. A branch
    is cut when the edges chosen plus the edges still undecided fall short
    of the incumbent, which keeps ties alive so every maximum hypergraph is
    counted. An edge is included only if it creates no Berge-K_n, and that
    test only scans pair-covered cores holding two vertices of the new edge,
    since any new copy must use it.

    Raises:
        NodeBudgetExceeded, TimeBudgetExceeded: when a cap in ``budget`` is hit.
    """
    if clique_order < 2 or clique_order > vertex_count:
        raise ValueError(f"need 2 <= n <= N, got n={clique_order}, N={vertex_count}")
    budget = budget or Budget()
    all_edges = list(combinations(range(vertex_count), uniformity))
    total = len(all_edges)
    start = time.monotonic()
    nodes = 0
    best = -1
    labelled = 0
    samples: list[Hypergraph] = []
    forms: set[tuple[Edge, ...]] = set()
    chosen: list[Edge] = []

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if budget.max_nodes is not None and nodes > budget.max_nodes:
            raise NodeBudgetExceeded(f"node budget {budget.max_nodes} exceeded", nodes, time.monotonic() - start)
        if budget.max_seconds is not None and nodes % 256 == 0:
            elapsed = time.monotonic() - start
            if elapsed > budget.max_seconds:
                raise TimeBudgetExceeded(f"time budget {budget.max_seconds}s exceeded", nodes, elapsed)

    def record() -> None:
        nonlocal best, labelled
        h = Hypergraph._trusted(vertex_count, uniformity, chosen)
        if len(chosen) > best:
            best = len(chosen)
            labelled = 0
            samples.clear()
            forms.clear()
        labelled += 1
        if fold_isomorphism:
            form = canonical_form(h)
            if form in forms:
                return
            forms.add(form)
        if len(samples) < max_samples:
            samples.append(h)

    def search(i: int) -> None:
        tick()
        if len(chosen) + (total - i) < best:
            return
        if i == total:
            record()
            return
        edge = all_edges[i]
        chosen.append(edge)
        trial = Hypergraph._trusted(vertex_count, uniformity, chosen)
        if contains_berge_clique(trial, clique_order, through=edge) is None:
            search(i + 1)
        chosen.pop()
        search(i + 1)

    search(0)
    for s in samples:
        if not is_berge_free(s, clique_order):
            raise AssertionError(f"search produced a non-free sample {s.edges}")
    return ExtremalResult(
        vertex_count=vertex_count,
        clique_order=clique_order,
        uniformity=uniformity,
        max_edges=best,
        extremal_count=len(forms) if fold_isomorphism else labelled,
        samples=samples,
        nodes=nodes,
        elapsed=time.monotonic() - start,
        isomorphism_folded=fold_isomorphism,
    )


# --- desk verification of the main statement ---------------------------------------


@dataclass
class InstanceReport:
    n: int
    N: int
    edges: int
    expected_edges: int
    free: bool
    saturated: bool
    partite: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "edges": self.edges,
            "free": self.free,
            "saturated": self.saturated,
            "partite": self.partite,
        }

    @property
    def passed(self) -> bool:
        return self.edges == self.expected_edges and self.free and self.saturated and self.partite


@dataclass
class DeskReport:
    n: int
    instances: list[InstanceReport]
    scope: str = SCOPE_NOTE

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.instances)

    def aggregate_json(self) -> dict:
        return {
            "aggregate": True,
            "n": self.n,
            "N": [i.N for i in self.instances],
            "instances": len(self.instances),
            "pass": self.passed,
            "scope": self.scope,
        }


def check_instance(vertex_count: int, n: int, jobs: Optional[int] = 1) -> InstanceReport:
    """Run the four checks on T_3(N, n-1); raise :class:`VerificationFailure` on the first miss."""
    h, parts = build_turan_partite(vertex_count, n - 1, 3)
    expected = turan_count(vertex_count, n - 1, 3)
    report = InstanceReport(n, vertex_count, len(h), expected, False, False, False)
    if len(h) != expected:
        raise VerificationFailure(report, f"edge count {len(h)} != {expected}")
    witness = contains_berge_clique(h, n)
    if witness is not None:
        raise VerificationFailure(report, "Berge clique found", witness)
    report.free = True
    sat = saturation_check(h, n, jobs)
    if not sat.saturated:
        raise VerificationFailure(report, "non-edge that creates no Berge clique", sat.non_creating)
    report.saturated = True
    found = recognize_complete_partite(h)
    if found is None or len(found.parts) != n - 1 or not found.is_balanced() or found.as_sets() != parts.as_sets():
        raise VerificationFailure(report, "not recognized as balanced complete partite", found)
    report.partite = True
    return report


def iter_theorem_desk(
    n: int = 13, max_vertices: int = 16, min_vertices: Optional[int] = None, beyond: bool = False, jobs: Optional[int] = 1
) -> Iterator[InstanceReport]:
    """Instance reports for N = min_vertices..max_vertices, one at a time."""
    if n < 13:
        raise ValueError(f"the statement is for n >= 13, got {n}")
    low = n if min_vertices is None else min_vertices
    if not n <= low <= max_vertices:
        raise ValueError(f"need n <= min N <= max N, got {n}, {low}, {max_vertices}")
    if max_vertices > 2 * n - 2 and not beyond:
        raise ValueError(f"max N {max_vertices} is past 2n-2 = {2 * n - 2}; pass beyond=True to allow")
    for vertex_count in range(low, max_vertices + 1):
        yield check_instance(vertex_count, n, jobs)


def verify_theorem_desk(
    n: int = 13, max_vertices: int = 16, min_vertices: Optional[int] = None, beyond: bool = False, jobs: Optional[int] = 1
) -> DeskReport:
    return DeskReport(n, list(iter_theorem_desk(n, max_vertices, min_vertices, beyond, jobs)))

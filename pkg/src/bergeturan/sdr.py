"""Systems of distinct representatives and the exhaustive SDR-bound check.

The bound under test concerns a point x outside U = {u_0, ..., u_{m-1}} and
sets A_i of triples {x, u_i, u_k}. A triple is identified with the pair
{i, k}, so a family is an m-tuple of bitmasks over the C(m, 2) pairs, where
A_i may only use pairs incident to i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Literal, Sequence, Union

import numpy as np

from .matching import alternating_reach, hopcroft_karp


@dataclass(frozen=True)
class HallViolator:
    """Index set Q whose sets jointly hold fewer than |Q| elements."""

    index_set: tuple[int, ...]
    union_size: int

    def __post_init__(self):
        if self.union_size >= len(self.index_set):
            raise ValueError("a Hall violator needs union_size < |index_set|")

    def to_json(self) -> dict:
        return {"indices": list(self.index_set), "union_size": self.union_size}


SetFamily = Sequence[Iterable[Hashable]]


def find_sdr(family: SetFamily) -> Union[tuple, HallViolator]:
    """Distinct representatives ``(a_0, ..., a_{m-1})`` with ``a_i`` in ``A_i``, or a Hall violator.

    The violator is the set of indices reachable by alternating paths from an
    index left unmatched by a maximum matching; it is certified but not
    necessarily minimal.
    """
    sets = [list(dict.fromkeys(s)) for s in family]
    universe: dict[Hashable, int] = {}
    for s in sets:
        for a in s:
            universe.setdefault(a, len(universe))
    elements = list(universe)
    adjacency = [[universe[a] for a in s] for s in sets]
    match = hopcroft_karp(adjacency, len(elements))
    for i, w in enumerate(match):
        if w is None:
            indices, _ = alternating_reach(adjacency, match, len(elements), i)
            union = {a for q in indices for a in sets[q]}
            return HallViolator(tuple(indices), len(union))
    return tuple(elements[w] for w in match)  # type: ignore[index]


def has_sdr(family: SetFamily) -> bool:
    return not isinstance(find_sdr(family), HallViolator)


@dataclass
class LemmaReport:
    """Outcome of :func:`verify_sdr_lemma`.

    ``holds`` is true when no family without an SDR exceeds ``bound`` and
    the families attaining it are exactly the characterized ones.
    """

    m: int
    shape: str
    bound: int
    families_checked: int
    no_sdr_families: int
    max_union: int
    bound_violations: int
    equality_families: int
    characterized_families: int
    characterization_mismatches: int
    holds: bool
    counterexamples: list[list[list[list[int]]]] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _pairs(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def _incident_masks(m: int) -> list[list[int]]:
    """For each index i, the single-bit masks of the pairs incident to i."""
    pairs = _pairs(m)
    return [[1 << p for p, pair in enumerate(pairs) if i in pair] for i in range(m)]


def _characterized(m: int) -> set[tuple[int, ...]]:
    """Families with one empty set A_z and A_i = all triples avoiding u_z elsewhere."""
    pairs = _pairs(m)
    out = set()
    for z in range(m):
        fam = tuple(
            0 if i == z else sum(1 << p for p, pair in enumerate(pairs) if i in pair and z not in pair)
            for i in range(m)
        )
        out.add(fam)
    return out


def _hall_ok(masks: np.ndarray, m: int, popcount: np.ndarray) -> np.ndarray:
    """Vectorised Hall test over rows of ``masks`` (shape: families x m)."""
    ok = np.ones(masks.shape[0], dtype=bool)
    for q in range(1, m + 1):
        for subset in combinations(range(m), q):
            union = np.bitwise_or.reduce(masks[:, subset], axis=1)
            ok &= popcount[union] >= q
    return ok


def _decode(fam: Sequence[int], m: int) -> list[list[list[int]]]:
    pairs = _pairs(m)
    return [[list(pairs[p]) for p in range(len(pairs)) if mask >> p & 1] for mask in fam]


def verify_sdr_lemma(m: int = 5, shape: Literal["free", "link"] = "free", max_counterexamples: int = 5) -> LemmaReport:
    """Exhaustively test the SDR union bound C(m-1, 2) and its equality case.

    ``shape="free"`` chooses every A_i independently among the subsets of the
    m-1 triples through u_i ((2^(m-1))^m families; 1,048,576 at m=5).
    ``shape="link"`` chooses one set S of triples and puts each triple of S
    into both sets it can belong to, i.e. A_i = {B in S : u_i in B}
    (2^C(m,2) families). The latter is how the bound is used on hypergraphs,
    where A_i collects the edges through x and u_i.

    Hall's condition is evaluated over all 2^m - 1 index subsets in bulk;
    every family at or above the bound is re-checked with :func:`find_sdr`
    so the two routes must agree.
    """
    if m < 5:
        raise ValueError(f"the bound is stated for m >= 5, got {m}")
    if shape not in ("free", "link"):
        raise ValueError(f"unknown shape {shape!r}")
    pairs = _pairs(m)
    npairs = len(pairs)
    bound = comb(m - 1, 2)
    popcount = np.array([bin(x).count("1") for x in range(1 << npairs)], dtype=np.int64)
    dtype = np.int64

    if shape == "free":
        incident = _incident_masks(m)
        choices = []
        for i in range(m):
            opts = [sum(b for k, b in enumerate(incident[i]) if sel >> k & 1) for sel in range(1 << (m - 1))]
            choices.append(np.array(opts, dtype=dtype))
        # one chunk per choice of A_0 keeps memory at (2^(m-1))^(m-1) rows
        rest = np.stack([g.ravel() for g in np.meshgrid(*choices[1:], indexing="ij")], axis=1)
        chunks = (np.column_stack([np.full(rest.shape[0], a0, dtype=dtype), rest]) for a0 in choices[0])
    else:
        incident_full = [sum(1 << p for p, pair in enumerate(pairs) if i in pair) for i in range(m)]
        s = np.arange(1 << npairs, dtype=dtype)
        chunks = iter([np.stack([s & incident_full[i] for i in range(m)], axis=1)])

    characterized = _characterized(m)
    checked = no_sdr = violations = equality = mismatches = 0
    max_union = -1
    seen_characterized = 0
    counterexamples: list[list[list[list[int]]]] = []

    for masks in chunks:
        checked += masks.shape[0]
        union = np.bitwise_or.reduce(masks, axis=1)
        sizes = popcount[union]
        failing = ~_hall_ok(masks, m, popcount)
        no_sdr += int(failing.sum())
        if failing.any():
            max_union = max(max_union, int(sizes[failing].max()))
        for row in np.nonzero(failing & (sizes >= bound))[0]:
            fam = tuple(int(x) for x in masks[row])
            sets = [[p for p in range(npairs) if x >> p & 1] for x in fam]
            if has_sdr(sets):
                raise AssertionError(f"Hall test and matching disagree on {fam}")
            if sizes[row] > bound:
                violations += 1
            else:
                equality += 1
                if fam not in characterized:
                    mismatches += 1
            if fam not in characterized and len(counterexamples) < max_counterexamples:
                counterexamples.append(_decode(fam, m))
        for fam in characterized:
            # characterized families present in this chunk must be extremal
            hit = np.all(masks == np.array(fam, dtype=dtype), axis=1)
            for row in np.nonzero(hit)[0]:
                seen_characterized += 1
                if not failing[row] or sizes[row] != bound:
                    mismatches += 1

    holds = violations == 0 and mismatches == 0 and seen_characterized == len(characterized)
    return LemmaReport(
        m=m,
        shape=shape,
        bound=bound,
        families_checked=checked,
        no_sdr_families=no_sdr,
        max_union=max_union,
        bound_violations=violations,
        equality_families=equality,
        characterized_families=seen_characterized,
        characterization_mismatches=mismatches,
        holds=holds,
        counterexamples=counterexamples,
    )

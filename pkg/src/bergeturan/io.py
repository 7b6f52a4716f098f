"""Edge-list text format, its JSON mirror, and set-family JSON.

Text format::

    N r m
    v v v
    ...

one edge per line, vertices increasing, edges in lexicographic order,
LF endings and no trailing whitespace.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .hypergraph import Hypergraph


def dumps_text(h: Hypergraph) -> str:
    lines = [f"{h.vertex_count} {h.uniformity} {len(h)}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def to_json(h: Hypergraph) -> dict:
    return {"n": h.vertex_count, "r": h.uniformity, "edges": [list(e) for e in h.edges]}


def dumps_json(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def loads_text(text: str) -> Hypergraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty hypergraph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [[int(x) for x in row] for row in rows[1:]]
    except ValueError as exc:
        raise ValueError(f"non-integer token in hypergraph file: {exc}") from None
    if len(header) != 3:
        raise ValueError(f"header must be 'N r m', got {rows[0]!r}")
    n, r, m = header
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    return Hypergraph(n, r, body)


def from_json(data: dict) -> Hypergraph:
    return Hypergraph(int(data["n"]), int(data["r"]), data["edges"])


def loads(text: str) -> Hypergraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return from_json(json.loads(text))
    return loads_text(text)


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    return loads(Path(path).read_text())


def read_set_family(path: Union[str, Path]) -> list[list]:
    """Load ``{"sets": [[...], ...]}``; elements are strings or integers."""
    data = json.loads(Path(path).read_text())
    sets = data["sets"]
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise ValueError("'sets' must be a list of lists")
    for s in sets:
        for a in s:
            if not isinstance(a, (str, int)) or isinstance(a, bool):
                raise ValueError(f"set elements must be strings or integers, got {a!r}")
    return sets

"""Command-line front end.

Exit codes: 0 success / property holds, 1 property false, 2 usage or input
error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import io
from .berge import contains_berge_clique
from .constructions import build_complete, build_expansion, build_turan_partite, turan_count
from .extremal import (
    SCOPE_NOTE,
    Budget,
    BudgetExceeded,
    NodeBudgetExceeded,
    VerificationFailure,
    brute_force_ex,
    iter_theorem_desk,
    recognize_complete_partite,
    resolve_jobs,
    saturation_check,
)
from .sdr import HallViolator, find_sdr, verify_sdr_lemma

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=None, help="worker cap (default: $BERGE_JOBS or 1)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="bergeturan", description="Berge-clique Turan machinery for uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="emit a named hypergraph")
    gen.add_argument("kind", choices=("turan", "complete", "expansion"))
    gen.add_argument("--N", dest="vertices", type=int, help="vertex count (turan, complete)")
    gen.add_argument("--n", dest="order", type=int, help="clique order; turan uses k = n-1")
    gen.add_argument("--k", dest="parts", type=int, help="number of parts (turan)")
    gen.add_argument("--r", dest="r", type=int, default=3)
    gen.add_argument("--parts-out", help="also write the partition JSON here (turan)")

    count = sub.add_parser("count", parents=[common], help="t_r(N, k)")
    count.add_argument("--N", dest="vertices", type=int, required=True)
    count.add_argument("--k", dest="parts", type=int, required=True)
    count.add_argument("--r", dest="r", type=int, default=3)

    free = sub.add_parser("check-free", parents=[common], help="Berge-K_n containment")
    free.add_argument("--file", required=True)
    free.add_argument("--clique-n", type=int, required=True)

    sdr = sub.add_parser("sdr", parents=[common], help="SDR or Hall violator of a set family")
    sdr.add_argument("--file", required=True)

    lemma = sub.add_parser("verify-lemma", parents=[common], help="exhaustive SDR union-bound check")
    lemma.add_argument("--m", type=int, default=5)
    lemma.add_argument("--shape", choices=("free", "link"), default="free")

    sat = sub.add_parser("saturate", parents=[common], help="does every non-edge create a Berge-K_n?")
    sat.add_argument("--file", required=True)
    sat.add_argument("--clique-n", type=int, required=True)

    rec = sub.add_parser("recognize", parents=[common], help="complete partite recognition")
    rec.add_argument("--file", required=True)

    search = sub.add_parser("search", parents=[common], help="exhaustive ex(N, F_n)")
    search.add_argument("--N", dest="vertices", type=int, required=True)
    search.add_argument("--clique-n", type=int, required=True)
    search.add_argument("--r", dest="r", type=int, default=3)
    search.add_argument("--budget-nodes", type=int, default=10_000_000)
    search.add_argument("--budget-secs", type=float, default=None)
    search.add_argument("--fold-isomorphism", action="store_true")
    search.add_argument("--samples", type=int, default=3)

    verify = sub.add_parser("verify", parents=[common], help="desk suite for T_3(N, n-1)")
    verify.add_argument("--clique-n", type=int, default=13)
    verify.add_argument("--max-N", dest="max_vertices", type=int, default=16)
    verify.add_argument("--min-N", dest="min_vertices", type=int, default=None, help="resume from this N")
    verify.add_argument("--beyond", action="store_true", help="allow N > 2n-2")
    return parser


def _emit(out: TextIO, fmt: str, text: str, payload: object) -> None:
    if fmt == "json":
        out.write(io.dumps_json(payload) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")
    out.flush()


def _word(value: object) -> str:
    return str(value).lower() if isinstance(value, bool) else str(value)


def _edges_text(edges) -> str:
    return "\n".join(" ".join(map(str, e)) for e in edges)


def _cmd_gen(args, out: TextIO) -> int:
    if args.kind == "turan":
        k = args.parts if args.parts is not None else (args.order - 1 if args.order is not None else None)
        if args.vertices is None or k is None:
            raise ValueError("gen turan needs --N and one of --k / --n")
        h, parts = build_turan_partite(args.vertices, k, args.r)
        if args.parts_out:
            with open(args.parts_out, "w") as fh:
                fh.write(io.dumps_json(parts.to_json()) + "\n")
    elif args.kind == "complete":
        if args.vertices is None:
            raise ValueError("gen complete needs --N")
        h = build_complete(args.vertices, args.r)
    else:
        if args.order is None:
            raise ValueError("gen expansion needs --n")
        h = build_expansion(args.order, args.r)
    if args.format == "json":
        _emit(out, "json", "", io.to_json(h))
    else:
        out.write(io.dumps_text(h))
    return EXIT_OK


def _cmd_count(args, out: TextIO) -> int:
    value = turan_count(args.vertices, args.parts, args.r)
    _emit(out, args.format, str(value), {"N": args.vertices, "k": args.parts, "r": args.r, "count": value})
    return EXIT_OK


def _cmd_check_free(args, out: TextIO) -> int:
    h = io.read_hypergraph(args.file)
    witness = contains_berge_clique(h, args.clique_n)
    payload = {"free": witness is None, "witness": None if witness is None else witness.to_json()}
    if witness is None:
        text = "free"
    else:
        lines = ["not free", "core " + " ".join(map(str, witness.core))]
        lines += [f"pair {p[0]} {p[1]} edge {' '.join(map(str, e))}" for p, e in witness.assignment]
        text = "\n".join(lines)
    _emit(out, args.format, text, payload)
    return EXIT_OK if witness is None else EXIT_FALSE


def _cmd_sdr(args, out: TextIO) -> int:
    result = find_sdr(io.read_set_family(args.file))
    if isinstance(result, HallViolator):
        text = f"violator {' '.join(map(str, result.index_set))}\nunion_size {result.union_size}"
        _emit(out, args.format, text, {"violator": result.to_json()})
        return EXIT_FALSE
    _emit(out, args.format, "sdr " + " ".join(map(str, result)), {"sdr": list(result)})
    return EXIT_OK


def _cmd_verify_lemma(args, out: TextIO) -> int:
    report = verify_sdr_lemma(args.m, args.shape)
    data = report.to_json()
    text = "\n".join(f"{k} {_word(v)}" for k, v in data.items() if k != "counterexamples")
    _emit(out, args.format, text, data)
    return EXIT_OK if report.holds else EXIT_FALSE


def _cmd_saturate(args, out: TextIO) -> int:
    h = io.read_hypergraph(args.file)
    report = saturation_check(h, args.clique_n, resolve_jobs(args.jobs))
    data = report.to_json()
    lines = [
        "saturated" if report.saturated else "not saturated",
        f"non_edges {data['non_edges']}",
        f"creating {len(report.creating)}",
        f"non_creating {len(report.non_creating)}",
    ]
    if report.non_creating:
        lines.append(_edges_text(report.non_creating))
    _emit(out, args.format, "\n".join(lines), data)
    return EXIT_OK if report.saturated else EXIT_FALSE


def _cmd_recognize(args, out: TextIO) -> int:
    parts = recognize_complete_partite(io.read_hypergraph(args.file))
    if parts is None:
        _emit(out, args.format, "not complete partite", {"parts": None})
        return EXIT_FALSE
    text = "parts\n" + "\n".join(" ".join(map(str, p)) for p in parts.parts)
    _emit(out, args.format, text, parts.to_json())
    return EXIT_OK


def _cmd_search(args, out: TextIO) -> int:
    budget = Budget(args.budget_nodes, args.budget_secs)
    try:
        result = brute_force_ex(args.vertices, args.clique_n, args.r, budget, args.fold_isomorphism, args.samples)
    except BudgetExceeded as exc:
        kind = "nodes" if isinstance(exc, NodeBudgetExceeded) else "seconds"
        _emit(out, args.format, f"budget exceeded ({kind}) after {exc.nodes} nodes",
              {"error": "budget-exceeded", "kind": kind, "nodes": exc.nodes})
        return EXIT_BUDGET
    data = result.to_json()
    lines = [f"{k} {_word(data[k])}" for k in ("N", "n", "r", "max_edges", "extremal_count", "isomorphism_folded", "nodes")]
    for i, s in enumerate(result.samples):
        lines.append(f"sample {i}")
        lines.append(_edges_text(s.edges))
    _emit(out, args.format, "\n".join(line for line in lines if line), data)
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    n = args.clique_n
    seen = []
    try:
        for report in iter_theorem_desk(n, args.max_vertices, args.min_vertices, args.beyond, resolve_jobs(args.jobs)):
            seen.append(report.N)
            data = report.to_json()
            _emit(out, args.format, " ".join(f"{k}={_word(v)}" for k, v in data.items()), data)
    except VerificationFailure as exc:
        data = exc.report.to_json() | {"reason": exc.reason}
        _emit(out, args.format, " ".join(f"{k}={_word(v)}" for k, v in data.items()), data)
        seen.append(exc.report.N)
        aggregate = {"aggregate": True, "n": n, "N": seen, "instances": len(seen), "pass": False, "scope": SCOPE_NOTE}
        _emit(out, args.format, f"FAIL ({exc.reason})", aggregate)
        return EXIT_FALSE
    aggregate = {"aggregate": True, "n": n, "N": seen, "instances": len(seen), "pass": True, "scope": SCOPE_NOTE}
    _emit(out, args.format, f"PASS {len(seen)} instances\nscope: {SCOPE_NOTE}", aggregate)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "count": _cmd_count,
    "check-free": _cmd_check_free,
    "sdr": _cmd_sdr,
    "verify-lemma": _cmd_verify_lemma,
    "saturate": _cmd_saturate,
    "recognize": _cmd_recognize,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, OSError, KeyError) as exc:
        print(f"bergeturan {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

"""Command-line entry point: ``zsramsey <command> [flags]``.

Exit status is 0 on success, 1 on a typed domain error (the message names the
violated hypothesis or error kind) and 2 on malformed input or flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import _log
from .coloring import COLORING_MODES, make_coloring, parse_coloring
from .embedder import parse_embedding, run_pipeline
from .errors import FormatError, ZeroSumError
from .graph import gen_degenerate_graph, min_vertices_for, parse_graph
from .oracle import StressConfig, exact_R, stress, verify_zero_sum


class InputError(Exception):
    """Malformed input that is not a file-format problem (unreadable path, bad flag value)."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_embed(args) -> int:
    G = parse_graph(_read(args.graph))
    c = parse_coloring(_read(args.coloring))
    res = run_pipeline(G, args.p, c, args.mode)
    emb_text = res.embedding.to_text(0)
    if args.out:
        Path(args.out).write_text(emb_text)
    elif args.format == "text":
        sys.stdout.write(emb_text)
    if args.format == "json":
        doc = {
            "zero_sum": True,
            "route": res.route,
            "events": res.events,
            "warnings": res.warnings,
            "diagnostics": res.diagnostics,
        }
        if not args.out:
            doc["map"] = list(res.embedding.map)
        sys.stdout.write(_dump(doc))
    else:
        sys.stdout.write(f"zero_sum: true\nroute: {res.route}\n")
        for w in res.warnings:
            sys.stdout.write(f"warning: {w}\n")
    return 0


def cmd_verify(args) -> int:
    G = parse_graph(_read(args.graph))
    c = parse_coloring(_read(args.coloring))
    emb = parse_embedding(_read(args.embedding))
    rep = verify_zero_sum(G, emb.map, c, args.p)
    if args.format == "json":
        text = _dump({
            "injective": rep.injective,
            "in_range": rep.in_range,
            "edge_sum": rep.edge_sum.value,
            "zero_sum": rep.zero_sum,
            "per_edge_terms": [[list(e), col] for e, col in rep.per_edge_terms],
        })
    else:
        text = rep.to_text()
    _emit(text, args.out)
    return 0 if rep.ok else 1


def cmd_gen_graph(args) -> int:
    n = args.n if args.n is not None else min_vertices_for(args.m, args.d)
    G = gen_degenerate_graph(n, args.d, args.m, args.seed)
    _emit(G.to_text(), args.out)
    return 0


def cmd_gen_coloring(args) -> int:
    try:
        c = make_coloring(args.mode, args.ell, args.p, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(c.to_text(), args.out)
    return 0


def cmd_exact_r(args) -> int:
    G = parse_graph(_read(args.graph))
    r = exact_R(G, args.p, args.ell)
    if args.format == "json":
        text = _dump({"p": args.p, "ell_max": args.ell, "R": r})
    else:
        text = f"R: {'none' if r is None else r}\n"
    _emit(text, args.out)
    return 0


def cmd_stress(args) -> int:
    cfg = StressConfig(
        d=args.d, p=args.p, m=args.m, trials=args.trials, seed=args.seed,
        colorings=tuple(x for x in args.colorings.split(",") if x),
        n_extra=args.n_extra, mode=args.mode,
    )
    for mode in cfg.colorings:
        try:
            make_coloring(mode, 2, cfg.p, 0)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    rep = stress(cfg, jobs=args.jobs)
    if args.format == "json":
        text = rep.to_json(include_timing=args.timing)
    else:
        lines = [f"trials: {rep.trials}", f"successes: {rep.successes}",
                 f"failures: {len(rep.failures)}", f"reached_tau: {rep.reached_tau}"]
        lines += [f"route {k}: {v}" for k, v in sorted(rep.routes.items())]
        lines += [f"failure seed={f['seed']} kind={f['kind']}: {f['message']}" for f in rep.failures]
        if args.timing:
            lines += [f"time {k}: {v:.3f}s" for k, v in sorted(rep.timings.items())]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if not rep.failures else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zsramsey", description="Zero-sum embeddings of degenerate graphs in Z_p colorings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--out", help="output file (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("embed", help="find a zero-sum copy of a graph in a colored host")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mode", choices=("strict", "permissive"), default="strict")
    common(sp)
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("verify", help="recompute the edge sum of an embedding")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--embedding", required=True)
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen-graph", help="random d-degenerate graph with exactly m edges")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, help="vertex count (default: smallest feasible)")
    sp.add_argument("--seed", type=int, default=0)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_gen_graph)

    sp = sub.add_parser("gen-coloring", help="Z_p coloring of a complete graph")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--mode", default="uniform", help="one of " + ", ".join(COLORING_MODES))
    sp.add_argument("--seed", type=int, default=0)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_gen_coloring)

    sp = sub.add_parser("oracle-exact-r", help="exact zero-sum Ramsey number by full enumeration")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True, help="largest host order to try")
    common(sp)
    sp.set_defaults(func=cmd_exact_r)

    sp = sub.add_parser("stress", help="seeded end-to-end runs checked by the verifier")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--colorings", default="uniform", help="comma-separated coloring modes, used round-robin")
    sp.add_argument("--n-extra", type=int, default=4, help="vertex count is the minimum plus 0..N")
    sp.add_argument("--mode", choices=("strict", "permissive"), default="strict")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include per-phase timings (not reproducible)")
    common(sp)
    sp.set_defaults(func=cmd_stress)
    return ap


def main(argv=None) -> int:
    _log.configure_from_env()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroSumError as exc:
        print(f"error [{exc.kind}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

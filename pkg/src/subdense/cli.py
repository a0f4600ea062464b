"""Command-line front end.

Exit codes: 0 success/holds, 2 input error, 3 not locally dense, 4 verdict
violated or engine mismatch, 5 cap exceeded or inconclusive, 6 invalid witness.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify
from .constructions import ConstructionSpec, named_graph, named_pattern
from .density import DensityError, is_locally_dense, k_local_density, local_density
from .graph import CapExceeded, Graph, Pattern, as_pattern
from .io import GraphFormatError, parse_graph, serialize_graph
from .subdivision import (
    EMBED_MAX_N,
    SUBSET_MAX_N,
    SubdivisionWitness,
    enumerate_distinguishable_embed,
    enumerate_distinguishable_subset,
    extract_subclique_subdivision,
    validate_witness,
)

EXIT_OK, EXIT_INPUT, EXIT_SPARSE, EXIT_VIOLATED, EXIT_CAP, EXIT_WITNESS = 0, 2, 3, 4, 5, 6


class InputError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def load_graph(spec: str) -> Graph:
    """A file path, ``-`` for stdin, or a built-in name such as ``k5`` or ``split(4,5)``."""
    if spec == "-":
        return parse_graph(sys.stdin.buffer.read())
    if os.path.exists(spec):
        with open(spec, "rb") as fh:
            return parse_graph(fh.read())
    try:
        return named_graph(spec)
    except KeyError:
        raise InputError(f"{spec!r} is neither a readable file nor a built-in graph name") from None


def load_pattern(spec: str) -> Pattern:
    if os.path.exists(spec) or spec == "-":
        return as_pattern(load_graph(spec))
    try:
        return named_pattern(spec)
    except KeyError:
        raise InputError(f"unknown pattern {spec!r}") from None


def cmd_density(args) -> int:
    g, f = load_graph(args.graph), load_pattern(args.pattern)
    if args.t is not None:
        dense, rep = is_locally_dense(g, f, args.t, args.k, args.anchor, args.subgraphs)
        out = rep.to_json()
        out["t"] = args.t
        out["dense"] = dense
        _emit(out)
        return EXIT_OK if dense else EXIT_SPARSE
    rep = local_density(g, f, args.anchor) if args.k is None else k_local_density(g, f, args.k, args.anchor, args.subgraphs)
    _emit(rep.to_json())
    return EXIT_OK


def _caps(args, default: int) -> dict:
    if args.max_n is None:
        return {}
    if args.max_n > default:
        print(f"warning: raising host cap from {default} to {args.max_n}; run time may explode", file=sys.stderr)
    return {"max_n": args.max_n}


def cmd_subdivisions(args) -> int:
    g, f = load_graph(args.graph), load_pattern(args.pattern)
    results = {}
    if args.engine in ("subset", "both"):
        results["subset"] = enumerate_distinguishable_subset(g, f, args.max_size, **_caps(args, SUBSET_MAX_N))
    if args.engine in ("embed", "both"):
        results["embed"] = enumerate_distinguishable_embed(g, f, args.max_size, **_caps(args, EMBED_MAX_N))
    first = next(iter(results.values()))
    out = first.to_json(include_sets=args.list)
    if args.engine == "both":
        out["engine"] = "both"
        out["agree"] = results["subset"].vertex_sets == results["embed"].vertex_sets
    _emit(out)
    if args.engine == "both" and not out["agree"]:
        print("engine mismatch", file=sys.stderr)
        return EXIT_VIOLATED
    if any(r.truncated for r in results.values()):
        return EXIT_CAP
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "split":
        spec = ConstructionSpec("split", {"ell": args.ell, "t": args.t})
    elif args.kind == "complete":
        spec = ConstructionSpec("complete", {"r": args.r})
    elif args.kind == "bipartite":
        spec = ConstructionSpec("complete-bipartite", {"r": args.r, "s": args.s})
    else:
        spec = ConstructionSpec("random", {"n": args.n, "p": args.p, "seed": args.seed})
    try:
        g = spec.build()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fmt = args.format
    if fmt is None:
        fmt = "g6" if args.output and args.output.endswith(".g6") else "edges"
    text = serialize_graph(g, fmt, comments=[spec.header()])
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _route_graph(w: SubdivisionWitness) -> Graph:
    edges = set()
    top = max(w.branch, default=-1)
    for route in w.paths.values():
        for a, b in zip(route, route[1:]):
            if a != b:
                edges.add((min(a, b), max(a, b)))
            top = max(top, a, b)
    return Graph(top + 1, sorted(edges))


def cmd_extract(args) -> int:
    try:
        with (sys.stdin if args.witness == "-" else open(args.witness)) as fh:
            w = SubdivisionWitness.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read witness: {exc}") from None
    host = load_graph(args.graph) if args.graph else _route_graph(w)
    bad = validate_witness(host, w)
    if bad:
        _emit({"valid": False, "violations": bad})
        return EXIT_WITNESS
    try:
        out = extract_subclique_subdivision(w, args.ell)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bad = validate_witness(host, out)
    if bad:
        _emit({"valid": False, "violations": bad})
        return EXIT_WITNESS
    _emit(out.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    h = args.harness
    pattern = load_pattern(args.pattern) if args.pattern else None

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise InputError(f"verify {h} needs --{' --'.join(missing)}")

    if h == "tuza-count":
        need("ell", "r")
        rep = verify.tuza_count(args.ell, args.r)
    elif h == "thm2i":
        need("d", "ell")
        rep = verify.thm2i(args.d, args.ell, args.cap)
    elif h == "thm2ii":
        need("ell", "t")
        rep = verify.thm2ii(args.ell, args.t, pattern)
    elif h == "lemma5":
        need("ell", "t")
        rep = verify.lemma5(args.ell, args.t, pattern)
    elif h == "thm2iii":
        need("ell", "t")
        rep = verify.thm2iii(args.ell, args.t, args.eps, args.cap)
    elif h == "thm7":
        need("ell", "t", "k")
        rep = verify.thm7(args.ell, args.t, args.k, pattern)
    else:
        need("r")
        rep = verify.jung(args.r)
    _emit(rep.to_json())
    return {verify.HOLDS: EXIT_OK, verify.VIOLATED: EXIT_VIOLATED}.get(rep.verdict, EXIT_CAP)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="subdense",
        description="Local density, distinguishable subdivisions and extremal constructions.",
        epilog="Graphs: a file (edge list or graph6), '-' for stdin, or a built-in name: "
        "k3..k12, k4-..k12-, c3..c12, p2/path2.., s3/star3.., e1.., split(L,T), kb(R,S), random(N,P,SEED).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="copies of a pattern through every edge or vertex")
    d.add_argument("--graph", required=True, help="host graph (path, '-' or built-in name)")
    d.add_argument("--pattern", required=True, help="pattern name or path")
    d.add_argument("--k", type=int, help="use the (F,k,t) variant over subgraphs with >= k vertices")
    d.add_argument("--anchor", choices=["edge", "vertex"], default="edge", help="anchor kind (default edge)")
    d.add_argument("--t", type=int, help="exit 3 unless every anchor lies in >= t copies")
    d.add_argument("--subgraphs", choices=["induced", "all"], default="induced", help="subgraph family for --k")
    d.set_defaults(func=cmd_density)

    s = sub.add_parser("subdivisions", help="count distinguishable subdivisions s(F,G)")
    s.add_argument("--graph", required=True, help="host graph")
    s.add_argument("--pattern", required=True, help="pattern to subdivide")
    s.add_argument("--engine", choices=["subset", "embed", "both"], default="subset", help="enumeration engine")
    s.add_argument("--max-size", type=int, help="largest subdivision vertex set to consider (default n)")
    s.add_argument("--max-n", type=int, help="override the host size cap (prints a warning)")
    s.add_argument("--list", action="store_true", help="include every vertex set in the output")
    s.set_defaults(func=cmd_subdivisions)

    c = sub.add_parser("construct", help="write a generated graph")
    c.add_argument("kind", choices=["split", "complete", "bipartite", "random"], help="construction")
    c.add_argument("--ell", type=int, help="split: pattern order (>= 4)")
    c.add_argument("--t", type=int, help="split: density parameter")
    c.add_argument("--r", type=int, help="complete / bipartite: (first) part size")
    c.add_argument("--s", type=int, help="bipartite: second part size")
    c.add_argument("--n", type=int, help="random: vertex count")
    c.add_argument("--p", type=float, help="random: edge probability")
    c.add_argument("--seed", type=int, default=0, help="random: seed (default 0)")
    c.add_argument("-o", "--output", help="output path (default stdout)")
    c.add_argument("--format", choices=["g6", "edges"], help="output format (default from extension, else edges)")
    c.set_defaults(func=cmd_construct)

    x = sub.add_parser("extract", help="extract a subdivided K_ell from a subdivided K_k")
    x.add_argument("--witness", required=True, help="witness JSON path or '-'")
    x.add_argument("--ell", type=int, required=True, help="target clique order")
    x.add_argument("--graph", help="host graph to validate against (default: the witness's own routes)")
    x.set_defaults(func=cmd_extract)

    v = sub.add_parser("verify", help="run a verification harness")
    v.add_argument("harness", choices=sorted(verify.HARNESSES), help="which harness")
    for flag in ("ell", "t", "r", "d", "k", "cap"):
        v.add_argument(f"--{flag}", type=int, help=f"harness parameter {flag}")
    v.add_argument("--eps", type=float, default=0.5, help="epsilon for thm2iii (default 0.5)")
    v.add_argument("--pattern", help="pattern override for thm2ii / lemma5 / thm7")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "construct":
        required = {"split": ("ell", "t"), "complete": ("r",), "bipartite": ("r", "s"), "random": ("n", "p")}[args.kind]
        missing = [f"--{r}" for r in required if getattr(args, r) is None]
        if missing:
            print(f"construct {args.kind}: missing {' '.join(missing)}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, GraphFormatError, DensityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

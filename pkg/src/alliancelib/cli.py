"""Command-line front end.

Exit codes: 0 feasible / valid / all checks passed, 1 infeasible / invalid /
failures, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import harness
from .alliances import (
    DAInstance,
    brute_force_min_da,
    is_defensive_alliance,
    solve_da,
)
from .circle import (
    ds_forward_certificate,
    ds_to_daf,
    parse_ds_instance,
    solve_ds_bruteforce,
    write_diagram,
    write_ds_instance,
)
from .errors import AllianceError, ParseError
from .generators import gen_daf, gen_ds_circle, gen_mrss, gen_rbds, gen_vc
from .graph import parse_graph, write_graph
from .reductions import (
    daf_to_da,
    mrss_forward_certificate,
    mrss_to_da,
    parse_daf,
    parse_mrss,
    parse_rbds,
    parse_vc,
    rbds_forward_certificate,
    rbds_to_da,
    solve_mrss_bruteforce,
    solve_rbds_bruteforce,
    solve_vc_bruteforce,
    vc_forward_certificate,
    vc_to_da,
    write_daf,
    write_mrss,
    write_rbds,
    write_vc,
)

REDUCE_KINDS = ("mrss", "rbds", "vc", "ds-circle", "daf")


def _parse_id_list(spec: str | None) -> frozenset[int]:
    if not spec:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in spec.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad id list {spec!r}") from exc


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def cmd_check(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    members = _parse_id_list(args.set)
    forbidden = _parse_id_list(args.forbidden)
    for v in sorted(members):
        inside = g.deg_in(v, members)
        outside = g.degree(v) - inside
        status = "protected" if inside + 1 >= outside else "UNPROTECTED"
        print(f"v={v} deg={g.degree(v)} in={inside} out={outside} {status}")
    clash = sorted(members & forbidden)
    if clash:
        print(f"forbidden members: {clash}")
    ok = is_defensive_alliance(g, members) and not clash
    print(f"verdict: {'defensive alliance' if ok else 'not a defensive alliance'}")
    return 0 if ok else 1


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    forbidden = _parse_id_list(args.forbidden)
    witness = solve_da(DAInstance(g, args.budget), forbidden)
    if args.format == "json":
        payload = {
            "feasible": witness is not None,
            "budget": args.budget,
            "witness": sorted(witness.vertices) if witness else None,
        }
        print(json.dumps(payload, sort_keys=True))
    elif witness is None:
        print(f"infeasible at budget {args.budget}")
    else:
        print(f"witness size={witness.size}: {' '.join(map(str, witness.vertices))}")
    return 0 if witness is not None else 1


def _compile(kind: str, text: str):
    """Run one reduction; returns (DA-or-DAF instance, gadget map, diagram|None)."""
    if kind == "mrss":
        da, gm = mrss_to_da(parse_mrss(text))
        return da, gm, None
    if kind == "rbds":
        da, gm = rbds_to_da(parse_rbds(text))
        return da, gm, None
    if kind == "vc":
        da, gm = vc_to_da(parse_vc(text))
        return da, gm, None
    if kind == "ds-circle":
        daf, diagram, gm = ds_to_daf(parse_ds_instance(text))
        return daf, gm, diagram
    if kind == "daf":
        da, gm = daf_to_da(parse_daf(text))
        return da, gm, None
    raise ParseError(f"unknown kind {kind!r}")


def cmd_reduce(args: argparse.Namespace) -> int:
    inst, gm, diagram = _compile(args.kind, _read(args.input))
    budget = inst.r if hasattr(inst, "r") else inst.k

    def emit(suffix: str, text: str) -> str:
        path = Path(args.out + suffix)
        path.write_text(text)
        return path.name

    graph_text = f"c budget {budget}\n" + write_graph(inst.graph)
    written = [
        emit(".graph", graph_text),
        emit(".budget", f"{budget}\n"),
        emit(".gadgets.json", gm.to_json()),
    ]
    if getattr(inst, "forbidden", None):
        forb = " ".join(str(v) for v in sorted(inst.forbidden))
        written.append(emit(".forbidden", forb + "\n"))
    if diagram is not None:
        written.append(emit(".diagram", write_diagram(diagram)))
    print(
        f"{args.kind}: n={inst.graph.n} m={inst.graph.m} budget={budget} -> "
        + ", ".join(written)
    )
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    text = _read(args.input)
    kind = args.kind
    if kind == "mrss":
        inst = parse_mrss(text)
        sol = (
            sorted(_parse_id_list(args.solution))
            if args.solution is not None
            else solve_mrss_bruteforce(inst)
        )
        if sol is None:
            print("source infeasible: nothing to certify")
            return 1
        da, gm = mrss_to_da(inst)
        cert = mrss_forward_certificate(gm, sol)
    elif kind == "rbds":
        inst = parse_rbds(text)
        sol = (
            sorted(_parse_id_list(args.solution))
            if args.solution is not None
            else solve_rbds_bruteforce(inst)
        )
        if sol is None:
            print("source infeasible: nothing to certify")
            return 1
        da, gm = rbds_to_da(inst)
        cert = rbds_forward_certificate(gm, sol)
    elif kind == "vc":
        inst = parse_vc(text)
        sol = (
            sorted(_parse_id_list(args.solution))
            if args.solution is not None
            else solve_vc_bruteforce(inst)
        )
        if sol is None:
            print("source infeasible: nothing to certify")
            return 1
        da, gm = vc_to_da(inst)
        cert = vc_forward_certificate(gm, sol)
    elif kind == "ds-circle":
        inst = parse_ds_instance(text)
        if args.solution is not None:
            labels = inst.diagram.chords()
            sol = [lab for lab in labels if str(lab) in args.solution.replace(",", " ").split()]
        else:
            sol = solve_ds_bruteforce(inst)
        if sol is None:
            print("source infeasible: nothing to certify")
            return 1
        da, _, gm = ds_to_daf(inst)
        cert = ds_forward_certificate(gm, sol)
    elif kind == "daf":
        inst = parse_daf(text)
        if args.solution is not None:
            sol = sorted(_parse_id_list(args.solution))
        else:
            found = brute_force_min_da(
                inst.graph, forbidden=inst.forbidden, max_size=inst.r
            )
            sol = list(found.vertices) if found else None
        if sol is None:
            print("source infeasible: nothing to certify")
            return 1
        da, gm = daf_to_da(inst)
        cert = frozenset(sol)
    else:
        raise ParseError(f"unknown kind {kind!r}")

    budget = da.r if hasattr(da, "r") else da.k
    valid = len(cert) <= budget and is_defensive_alliance(da.graph, cert)
    if hasattr(da, "forbidden") and cert & da.forbidden:
        valid = False
    print(
        f"{kind}: solution={list(sol)} certificate size={len(cert)} "
        f"budget={budget} valid={'yes' if valid else 'NO'}"
    )
    return 0 if valid else 1


def cmd_equiv_test(args: argparse.Namespace) -> int:
    reports, summary = harness.run_equiv_test(
        args.kind, count=args.count, max_n=args.max_n, seed=args.seed
    )
    sys.stdout.write(harness.render_reports(reports, summary, args.format))
    return 0 if summary.failures == 0 else 1


def cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    kind = args.kind
    if kind == "mrss":
        text = write_mrss(
            gen_mrss(rng, max_dim=args.dim, max_vectors=args.max_n, max_entry=args.max_entry)
        )
    elif kind == "rbds":
        text = write_rbds(
            gen_rbds(rng, max_terminals=args.max_n, max_sources=args.max_n, density=args.density)
        )
    elif kind == "vc":
        text = write_vc(gen_vc(rng, max_n=args.max_n))
    elif kind == "ds-circle":
        text = write_ds_instance(gen_ds_circle(rng, max_chords=args.max_n))
    elif kind == "daf":
        text = write_daf(gen_daf(rng, max_n=args.max_n))
    else:
        raise ParseError(f"unknown kind {kind!r}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alliance",
        description="Defensive alliances: check, solve, compile reductions, verify certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify a vertex set against the alliance predicate")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("--forbidden", help="comma-separated vertex ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="exact minimum alliance within a budget")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--forbidden", help="comma-separated vertex ids")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="compile a source instance into an alliance instance")
    p.add_argument("kind", choices=REDUCE_KINDS)
    p.add_argument("input")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("certify", help="build and verify a forward certificate")
    p.add_argument("kind", choices=REDUCE_KINDS)
    p.add_argument("input")
    p.add_argument("--solution", help="source solution (ids/labels); brute-forced if omitted")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("equiv-test", help="randomized forward/iff verification stream")
    p.add_argument("kind", choices=harness.KINDS)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_equiv_test)

    p = sub.add_parser("gen", help="write a reproducible random instance")
    p.add_argument("kind", choices=REDUCE_KINDS)
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    p.add_argument("--max-n", type=int, default=4, help="size bound (vectors/parts/vertices/chords)")
    p.add_argument("--density", type=float, default=0.5, help="rbds edge density")
    p.add_argument("--dim", type=int, default=2, help="mrss dimension bound")
    p.add_argument("--max-entry", type=int, default=2, help="mrss entry bound")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AllianceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``symtree compute|spectrum|gen|verify``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from symtree import brute
from symtree.campaigns import REGISTRY, run_campaign
from symtree.eccentric import eccentric_sequence_of
from symtree.errors import CycleError, DisconnectedError, SymtreeError
from symtree.extremal import CONSTRUCTION_IDS, construct, gk_certificates
from symtree.graph import Coloring, Graph, Tree, parse_edge_list, to_dot, to_edge_list
from symtree.params import distinguishing_number, fixing_number
from symtree.universal import PAINT, PLAIN, UniversalSpec, build_universal

PARAM_NAMES = ("D", "F", "witness", "density", "ecc")
DEFAULT_PARAMS = ("D", "F", "witness", "density")


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _param_list(text: str) -> list[str]:
    names = [p.strip() for p in text.split(",") if p.strip()]
    bad = [p for p in names if p not in PARAM_NAMES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown parameter(s) {', '.join(bad)}; choose from {', '.join(PARAM_NAMES)}")
    return names


def cmd_compute(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    wanted = set(args.params or DEFAULT_PARAMS)
    try:
        g = parse_edge_list(text, tree=not args.brute)
    except (CycleError, DisconnectedError) as exc:
        raise SymtreeError(f"{exc} (input is not a tree; --brute accepts general graphs)") from None
    if args.brute:
        d = brute.brute_distinguishing_number(g) if wanted & {"D"} else None
        f, wit = brute.brute_fixing_number(g) if wanted & {"F", "witness", "density"} else (None, ())
    else:
        assert isinstance(g, Tree)
        d = distinguishing_number(g) if "D" in wanted else None
        f, wit = fixing_number(g) if wanted & {"F", "witness", "density"} else (None, ())
    out: dict[str, Any] = {"n": g.n}
    if "D" in wanted:
        out["D"] = d
    if "F" in wanted:
        out["F"] = f
    if "witness" in wanted:
        out["fixing_witness"] = list(wit)
    if "density" in wanted:
        out["density"] = _frac(Fraction(f, g.n))
    if "ecc" in wanted:
        if not isinstance(g, Tree):
            raise SymtreeError("eccentric sequences are computed for trees only")
        seq = eccentric_sequence_of(g)
        out["radius"] = seq.r
        out["diameter"] = seq.d
        out["eccentric_sequence"] = seq.as_lists()
    print(_dump(out))
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_input(args.input))
    spec = brute.paint_cost_spectrum(g, max_colors=args.max_colors)
    print(_dump({"D": spec.D, "spectrum": list(spec.costs)}))
    return 0


def _emit_graph(g: Graph, fmt: str, coloring: Coloring | None = None) -> str:
    if fmt == "dot":
        return to_dot(g, coloring)
    if fmt == "json":
        return _dump({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n"
    return to_edge_list(g)


def cmd_gen_universal(args: argparse.Namespace) -> int:
    spec = UniversalSpec(args.r, args.D, args.kind)
    catalog_only = args.catalog_only or args.format == "csv"
    u = build_universal(spec, catalog_only=catalog_only, budget=args.budget, experimental=args.experimental)
    if u.experimental:
        print(f"warning: {spec.name} comes from the experimental search mode", file=sys.stderr)
    if args.dot:
        if u.tree is None:
            raise SymtreeError("--dot needs the explicit tree; drop --catalog-only")
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(u.tree.tree, name=spec.name.replace("^", "_")))
    if catalog_only:
        sys.stdout.write(u.catalog.to_csv())
    elif args.format == "json":
        print(_dump({
            "kind": spec.kind,
            "r": spec.r,
            "D": spec.D,
            "order": u.order,
            "root_degree": u.catalog.root_degree,
            "catalog": [{"canonical_code": c, "capacity": m} for c, m in u.catalog.entries],
        }))
    else:
        assert u.tree is not None
        sys.stdout.write(_emit_graph(u.tree.tree, args.format))
    return 0


def _parse_kv(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in items:
        if "=" not in item:
            raise SymtreeError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_gen_extremal(args: argparse.Namespace) -> int:
    params = _parse_kv(args.params or [])
    if args.certify:
        if args.id != "gk":
            raise SymtreeError("--certify applies to --id gk only")
        cert = gk_certificates(int(params.get("k", 7)), int(params.get("D", 2)))
        print(_dump(cert.as_dict()))
        return 0 if cert.ok else 1
    g = construct(args.id, **params)
    sys.stdout.write(_emit_graph(g, args.format))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for name, check in REGISTRY.items():
            print(f"{name}\t{check.description}")
        return 0
    if not args.check:
        raise SymtreeError("verify needs --check (or --list)")
    report = run_campaign(args.check, args.max_n, jobs=args.jobs)
    sys.stdout.write(report.to_csv(timing=not args.no_timing))
    for v in report.violations:
        print(f"violation: {args.check} {v}", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symtree", description="Symmetry parameters of trees.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="distinguishing and fixing numbers of a tree")
    c.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    c.add_argument("--params", type=_param_list, help=f"comma-separated subset of {','.join(PARAM_NAMES)}")
    c.add_argument("--brute", action="store_true", help="use the brute-force oracle (accepts any graph)")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("spectrum", help="paint cost spectrum by brute force")
    s.add_argument("--input", required=True)
    s.add_argument("--max-colors", type=int, default=None, help="largest palette to search")
    s.set_defaults(func=cmd_spectrum)

    g = sub.add_parser("gen", help="generate universal or extremal trees")
    gsub = g.add_subparsers(dest="what", required=True)
    gu = gsub.add_parser("universal")
    gu.add_argument("--kind", choices=[PLAIN, PAINT], default=PLAIN)
    gu.add_argument("--r", type=int, required=True)
    gu.add_argument("--D", type=int, required=True)
    gu.add_argument("--catalog-only", action="store_true")
    gu.add_argument("--format", choices=["edges", "dot", "json", "csv"], default="edges")
    gu.add_argument("--dot", metavar="PATH", help="also write the tree as DOT")
    gu.add_argument("--budget", type=int, default=10**6, help="vertex budget for the explicit tree")
    gu.add_argument("--experimental", action="store_true", help="allow the search mode for U with r >= 3")
    gu.set_defaults(func=cmd_gen_universal)
    ge = gsub.add_parser("extremal")
    ge.add_argument("--id", required=True, choices=CONSTRUCTION_IDS)
    ge.add_argument("--params", nargs="*", metavar="KEY=VALUE", help="e.g. k=2 D=3, or X='3^(1),4^(3)'")
    ge.add_argument("--format", choices=["edges", "dot", "json"], default="edges")
    ge.add_argument("--certify", action="store_true", help="print generator certificates (gk only)")
    ge.set_defaults(func=cmd_gen_extremal)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--check", choices=list(REGISTRY))
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    v.add_argument("--no-timing", action="store_true", help="write 0 in the seconds column")
    v.add_argument("--list", action="store_true", help="list checks and exit")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SymtreeError, OSError) as exc:
        print(f"symtree: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

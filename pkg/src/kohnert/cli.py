"""Command line entry point: ``kohnert {closure,analyze,hasse,verify,poly}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .closure import DEFAULT_NODE_CAP, kd_closure
from .diagram import Diagram, normalize
from .errors import BoundExceededError, KohnertError, ParseError, PreconditionError, ResourceLimitError
from .families import FAMILIES, analyze_auto
from .families.checkered import checkered, checkered_report
from .families.key import key_diagram, key_report
from .io import (
    closure_to_dict,
    dumps,
    hasse_to_dict,
    load_text,
    parse_composition,
    parse_diagram,
    render_grid,
    render_pairs,
    render_report,
    report_to_dict,
    to_dot,
)
from .obstruction import scan_closure_for_obstruction
from .polynomial import kohnert_polynomial
from .poset import DEFAULT_CHAIN_CAP
from .verify import CLAIMS, CorpusSpec, check_claim, obstruction_gap_probe

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class Config:
    node_cap: Optional[int] = None
    chain_cap: int = DEFAULT_CHAIN_CAP
    out: str = "text"
    fmt: str = "auto"

    def __post_init__(self):
        if self.node_cap is not None and self.node_cap < 1:
            raise PreconditionError("--node-cap must be positive")
        if self.chain_cap < 1:
            raise PreconditionError("--chain-cap must be positive")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _checkered_arg(text: str) -> tuple[int, int]:
    try:
        n, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected n,variant such as 5,1") from None
    if n < 1 or v not in (1, 2):
        raise argparse.ArgumentTypeError("n must be positive and variant 1 or 2")
    return n, v


def _input_diagram(args, cfg: Config) -> Diagram:
    if getattr(args, "key", None) is not None:
        return key_diagram(parse_composition(args.key))
    if getattr(args, "checkered", None) is not None:
        return checkered(*args.checkered)
    src = args.source
    if src is None or src == "-":
        text = sys.stdin.read()
    else:
        try:
            text = load_text(src, sys.stdin)
        except FileNotFoundError:
            text = src  # treat as an inline diagram
        except OSError as exc:
            raise UsageError(str(exc)) from None
    return parse_diagram(text, cfg.fmt)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_closure(args, cfg: Config) -> int:
    d = _input_diagram(args, cfg)
    p = kd_closure(d, node_cap=cfg.node_cap)
    if cfg.out == "json":
        _emit(dumps(closure_to_dict(p, with_nodes=args.list)))
        return EXIT_OK
    n = len(p)
    _emit(f"{n} diagram" + ("" if n == 1 else "s"))
    if args.list:
        for x in p.nodes:
            _emit(render_pairs(x) if args.pairs else render_grid(x) + "\n")
    return EXIT_OK


def cmd_analyze(args, cfg: Config) -> int:
    if args.key is not None and not args.force_generic:
        rep = key_report(parse_composition(args.key))
    elif args.checkered is not None and not args.force_generic:
        rep = checkered_report(*args.checkered)
    else:
        d = _input_diagram(args, cfg)
        family = args.family
        rep = analyze_auto(d, family=family, force_generic=args.force_generic, node_cap=cfg.node_cap)
        if args.obstruction and not rep.ranked:
            w = scan_closure_for_obstruction(normalize(d), node_cap=cfg.node_cap)
            rep.details["obstruction"] = w.to_dict() if w else None
    if cfg.out == "json":
        _emit(dumps(report_to_dict(rep)))
    else:
        _emit(render_report(rep))
    return EXIT_OK


def cmd_hasse(args, cfg: Config) -> int:
    d = _input_diagram(args, cfg)
    p = kd_closure(d, node_cap=cfg.node_cap)
    if cfg.out == "json":
        _emit(dumps(hasse_to_dict(p)))
    elif cfg.out == "dot" or args.dot:
        _emit(to_dot(p))
    else:
        idx = {x: i for i, x in enumerate(p.nodes)}
        _emit(f"{len(p)} nodes, {len(p.cover_edges())} cover edges")
        for i, x in enumerate(p.nodes):
            _emit(f"  [{i}] {render_pairs(x)}")
        for u, v in p.cover_edges():
            _emit(f"  {idx[u]} -> {idx[v]}")
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    ids = list(CLAIMS) if args.claims in ([], ["all"]) else args.claims
    unknown = [c for c in ids if c not in CLAIMS and c != "gap-probe"]
    if unknown:
        raise UsageError(f"unknown claim id(s): {', '.join(unknown)}; try --list")
    overrides = {k: getattr(args, k) for k in ("max_rows", "max_cols", "max_cells", "max_entry", "length", "max_n", "max_m") if getattr(args, k) is not None}
    if args.allow_large:
        overrides["allow_large"] = True
    outcomes = []
    for cid in ids:
        if cid == "gap-probe":
            outcomes.append(obstruction_gap_probe(CorpusSpec(**overrides)))
        else:
            outcomes.append(check_claim(cid, **overrides))
    failed = any(not o.passed for o in outcomes)
    if cfg.out == "json":
        _emit(dumps({"passed": not failed, "outcomes": [o.to_dict() for o in outcomes]}))
    else:
        width = max(len(o.claim) for o in outcomes)
        for o in outcomes:
            status = "PASS" if o.passed else "FAIL"
            extra = ""
            if o.gaps:
                extra = f"  gaps={len(o.gaps)}"
            if "counts" in o.data:
                extra += "  counts=" + ",".join(str(v) for _, v in sorted(o.data["counts"].items()))
            _emit(f"{o.claim:<{width}}  {status}  instances={o.instances}  failures={len(o.failures)}{extra}")
            for inst, exp, act in o.failures[: args.show_failures]:
                _emit(f"    {inst}: expected {exp}, got {act}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_poly(args, cfg: Config) -> int:
    d = _input_diagram(args, cfg)
    poly = kohnert_polynomial(d, node_cap=cfg.node_cap)
    if cfg.out == "json" or args.json:
        _emit(json.dumps(poly.to_json()))
    else:
        _emit(str(poly))
    return EXIT_OK


def _add_input(sp) -> None:
    sp.add_argument("source", nargs="?", help="diagram file, '-' for stdin, or an inline diagram such as '(1,1),(2,1)'")
    sp.add_argument("--key", metavar="A1,A2,...", help="use the key diagram of a weak composition")
    sp.add_argument("--checkered", metavar="N,VARIANT", type=_checkered_arg, help="use a checkered diagram")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["auto", "grid", "pairs", "json"], default="auto", help="input format (default: detect)")
    common.add_argument("--out", choices=["text", "json", "dot"], default="text", help="output format")
    common.add_argument("--node-cap", type=_positive, help=f"closure size limit (default {DEFAULT_NODE_CAP}, or $KOHNERT_NODE_CAP)")
    common.add_argument("--chain-cap", type=_positive, default=DEFAULT_CHAIN_CAP, help="node limit for chain enumeration")

    parser = argparse.ArgumentParser(
        prog="kohnert",
        description="Kohnert posets of cell diagrams: closures, Hasse diagrams, bounded/ranked analysis.",
        epilog="Exit status: 0 ok, 1 verification failure, 2 usage or parse error, 3 resource limit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("closure", parents=[common], help="enumerate KD(D0)")
    _add_input(sp)
    sp.add_argument("--list", action="store_true", help="print every diagram")
    sp.add_argument("--pairs", action="store_true", help="list diagrams in pair form instead of grids")
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("analyze", parents=[common], help="bounded/ranked verdicts with certificates")
    _add_input(sp)
    sp.add_argument("--family", choices=["auto", *FAMILIES], default="auto", help="closed-form family (default: detect)")
    sp.add_argument("--force-generic", action="store_true", help="always enumerate the closure")
    sp.add_argument("--obstruction", action="store_true", help="search the closure for a known obstruction when not ranked")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("hasse", parents=[common], help="cover relations of the poset")
    _add_input(sp)
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT (same as --out dot)")
    sp.set_defaults(func=cmd_hasse)

    sp = sub.add_parser("verify", parents=[common], help="cross-check closed forms against brute force")
    sp.add_argument("claims", nargs="*", help="claim ids, 'gap-probe', or 'all' (default)")
    sp.add_argument("--list", action="store_true", help="list claim ids and exit")
    for name in ("max-rows", "max-cols", "max-cells", "max-entry", "length", "max-n", "max-m"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--allow-large", action="store_true", help="lift the enumeration guards")
    sp.add_argument("--show-failures", type=int, default=5, metavar="K", help="failures shown per claim")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("poly", parents=[common], help="Kohnert polynomial")
    _add_input(sp)
    sp.add_argument("--json", action="store_true", help="JSON term list")
    sp.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        for cid, (desc, _, _) in CLAIMS.items():
            print(f"{cid:32s} {desc}")
        print(f"{'gap-probe':32s} non-ranked closures with no detected obstruction")
        return EXIT_OK
    try:
        cfg = Config(node_cap=args.node_cap, chain_cap=args.chain_cap, out=args.out, fmt=args.format)
        return args.func(args, cfg)
    except ParseError as exc:
        print(f"kohnert: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, BoundExceededError) as exc:
        print(f"kohnert: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, PreconditionError, KohnertError, ValueError) as exc:
        print(f"kohnert: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

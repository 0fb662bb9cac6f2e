"""Command-line interface: ``linkrep <command> ...``.

Exit codes: 0 report produced, 2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .alexander import alexander_report
from .analysis import DEFAULT_BUDGET, DEFAULT_PRIMES, AnalysisOptions, analyze, worker_count
from .diagram import LinkDiagram, parse_pd
from .errors import BudgetExhausted, ExhaustedSearchSpace, InternalInvariantViolation, InvalidInput
from .families import NAMES, named, parse_forest
from .graphs import classify
from .modp import Certificate, search_certificate, verify_certificate
from .presentation import wirtinger
from .reps import dihedral_solutions, enumerate_dihedral, rep_from_coloring, verify_rep

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INTERNAL = 3


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        try:
            return Path(value[1:]).read_text()
        except OSError as exc:
            raise InvalidInput(f"cannot read {value[1:]}: {exc}") from exc
    return value


def load_diagram(args) -> LinkDiagram:
    if getattr(args, "name", None):
        return named(args.name)
    if getattr(args, "pd", None):
        return parse_pd(_read_arg(args.pd))
    raise InvalidInput("give a diagram with --pd TEXT|@FILE or --name NAME")


def _emit(args, data: dict, text: str | None = None) -> None:
    if getattr(args, "json", False) or text is None:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def _primes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad prime list {text!r}") from exc


# -- commands ----------------------------------------------------------------------


def cmd_parse(args) -> int:
    d = load_diagram(args)
    data = {
        "crossings": d.crossing_count,
        "edges": d.edge_count,
        "components": [list(c) for c in d.components],
        "arcs": len(d.arcs),
        "pd": d.to_pd(),
    }
    _emit(args, data, f"{d.crossing_count} crossings, {d.component_count} components, {len(d.arcs)} arcs\n{d.to_pd()}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = load_diagram(args)
    g = d.linking_graph()
    data = {
        "components": d.component_count,
        "crossings": d.crossing_count,
        "signs": list(d.signs),
        "writhe": d.writhe(),
        "linking_matrix": [list(r) for r in d.linking_matrix],
        "linking_graph": g.to_json(),
        "wirtinger": wirtinger(d).dump().splitlines(),
    }
    lines = [f"components {d.component_count}", f"writhe {d.writhe()}", "linking matrix:"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in d.linking_matrix]
    lines.append(f"linking graph edges {g.edge_list()}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_alexander(args) -> int:
    r = alexander_report(load_diagram(args))
    data = r.to_json()
    _emit(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return EXIT_OK


def cmd_graph_classify(args) -> int:
    if args.graph:
        g = parse_forest(_read_arg(args.graph))
    else:
        g = load_diagram(args).linking_graph()
    v = classify(g)
    data = {"graph": g.to_json(), "verdict": v.to_json(), "verified": v.verify(g)}
    _emit(args, data, f"{v.variant} {json.dumps(v.to_json(), sort_keys=True)}")
    return EXIT_OK


def cmd_rep_coloring(args) -> int:
    d = load_diagram(args)
    rep = rep_from_coloring(d, args.phi)
    data = {"rep": rep.to_json(), "report": verify_rep(d, rep).to_json()}
    _emit(args, data)
    return EXIT_OK


def cmd_rep_dihedral(args) -> int:
    d = load_diagram(args)
    s = dihedral_solutions(d, args.base_arc, args.drop_row)
    samples = None
    if args.samples:
        try:
            samples = [Fraction(x) for x in args.samples.split(",")]
        except ValueError as exc:
            raise InvalidInput(f"bad samples {args.samples!r}") from exc
    data = s.to_json()
    if args.enumerate:
        reps = enumerate_dihedral(s, samples)
        data["reps"] = [r.to_json() for r in reps]
        data["irreducible"] = sum(r.irreducible for r in reps)
    _emit(args, data)
    return EXIT_OK


def _search(args) -> dict:
    d = load_diagram(args)
    try:
        cert = search_certificate(d, args.prime, args.budget)
    except ExhaustedSearchSpace:
        return {"p": args.prime, "status": "exhausted"}
    except BudgetExhausted:
        return {"p": args.prime, "status": "budget"}
    return {"p": args.prime, "status": "found", "certificate": cert.to_json(), "verified": verify_certificate(d, cert)}


def cmd_certify(args) -> int:
    data = _search(args)
    _emit(args, data, None if data["status"] == "found" else f"no certificate mod {args.prime} ({data['status']})")
    return EXIT_OK


def cmd_verify_cert(args) -> int:
    d = load_diagram(args)
    try:
        data = json.loads(_read_arg(args.cert))
        # accept the full 'certify --json' output as well as the bare certificate
        cert = Certificate.from_json(data.get("certificate", data))
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InvalidInput(f"bad certificate: {exc}") from exc
    ok = verify_certificate(d, cert)
    _emit(args, {"valid": ok}, "valid" if ok else "invalid")
    return EXIT_OK


def cmd_families_list(args) -> int:
    _emit(args, {"names": list(NAMES)}, "\n".join(NAMES))
    return EXIT_OK


def cmd_families_emit(args) -> int:
    d = named(args.family)
    _emit(args, {"name": args.family, "pd": d.to_pd()}, d.to_pd())
    return EXIT_OK


def cmd_analyze(args) -> int:
    d = load_diagram(args)
    opts = AnalysisOptions(
        primes=_primes(args.primes),
        budget=args.budget,
        modp=not args.no_modp,
        threads=worker_count(),
    )
    r = analyze(d, opts)
    data = r.to_json()
    text = [
        f"linking graph: {r.linking_graph.edge_list()} -> {r.verdict.variant}",
        f"dihedral: {data['dihedral']['count']} solutions, {r.dihedral.abelian_count} abelian",
    ]
    if r.alexander:
        text.append(f"instanton bound: {r.alexander.instanton_bound} (threshold {2 ** (r.components - 1)})")
    for c in r.certificates:
        text.append(f"mod {c.p}: {c.status}")
    text.append(f"conclusion: {r.conclusion}")
    _emit(args, data, "\n".join(text))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _diagram_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pd", help="PD code inline or @file")
    p.add_argument("--name", help="named link, see 'families list'")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    parser = argparse.ArgumentParser(prog="linkrep", description="Link diagram invariants and traceless representations", parents=[common])
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name, fn, help_ in (
        ("parse", cmd_parse, "validate a PD code"),
        ("invariants", cmd_invariants, "signs, linking numbers, linking graph"),
        ("alexander", cmd_alexander, "Alexander polynomials, norms, bounds"),
    ):
        p = sub.add_parser(name, help=help_, parents=[common])
        _diagram_args(p)
        p.set_defaults(func=fn)

    g = sub.add_parser("graph", help="graph tools", parents=[common]).add_subparsers(dest="graph_cmd", required=True)
    p = g.add_parser("classify", help="forest / induced cycle / G0 / coloring", parents=[common])
    p.add_argument("--graph", help='"n;a-b,c-d,..." or @file')
    _diagram_args(p)
    p.set_defaults(func=cmd_graph_classify)

    r = sub.add_parser("rep", help="representations", parents=[common]).add_subparsers(dest="rep_cmd", required=True)
    p = r.add_parser("coloring", help="rep from an {i,j,k} coloring", parents=[common])
    _diagram_args(p)
    p.add_argument("--phi", required=True, help="axes per component, e.g. ijk")
    p.set_defaults(func=cmd_rep_coloring)
    p = r.add_parser("dihedral", help="binary dihedral solution set", parents=[common])
    _diagram_args(p)
    p.add_argument("--base-arc", type=int)
    p.add_argument("--drop-row", type=int)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--samples", help="comma-separated values for free directions, e.g. 1/4,1/3")
    p.set_defaults(func=cmd_rep_dihedral)
    p = r.add_parser("modp", help="SL(2,Z/p) search", parents=[common])
    _diagram_args(p)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("certify", help="search an SL(2,Z/p) certificate", parents=[common])
    _diagram_args(p)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-cert", help="check a certificate", parents=[common])
    _diagram_args(p)
    p.add_argument("--cert", required=True, help="certificate JSON inline or @file")
    p.set_defaults(func=cmd_verify_cert)

    f = sub.add_parser("families", help="named links", parents=[common]).add_subparsers(dest="fam_cmd", required=True)
    p = f.add_parser("list", parents=[common])
    p.set_defaults(func=cmd_families_list)
    p = f.add_parser("emit", parents=[common])
    p.add_argument("family")
    p.set_defaults(func=cmd_families_emit)

    p = sub.add_parser("analyze", help="full evidence pipeline", parents=[common])
    _diagram_args(p)
    p.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--no-modp", action="store_true")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

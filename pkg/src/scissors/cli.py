"""Command-line façade: polytope reports, congruence verdicts, homology and
Hochschild tables, differential-form images, and certificate rechecks.

Exit codes: 0 success (verdicts live in the payload), 1 failed verification
suite, 2 input error, 3 geometry validation error, 4 resource cap, 5 internal
invariant violation.
"""

import argparse
import json
import sys

from .algebraic import as_scalar
from .dehn import DEFAULT_HEIGHT_BOUND, compare_polytopes, dehn_invariant, is_zero, nonzero_certificate
from .geom import GeometryError, dihedral_edges
from .geom.refine import RefinementTooLarge
from .homology import DegreeOutOfRange, InvalidComplex, SizeCap
from .hochschild import SizeCapExceeded, builtin_algebra, hochschild_homology_table
from .homology.groups import group_homology
from .io import (
    complex_from_json,
    group_from_spec,
    load_json,
    module_from_spec,
    polytope_from_json,
    tensor_terms_from_json,
)
from .kahler import FieldTower, NotExpressible, NotFiniteDimensional, phi_map
from .numbers import ParseError, format_number
from .report import (
    ReportTimer,
    digest_inputs,
    make_report,
    recheck_certificates,
)
from .suites import SUITES, UnknownSuite, run_suite

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_INPUT = 2
EXIT_GEOMETRY = 3
EXIT_CAP = 4
EXIT_INTERNAL = 5


def _tensor_certificates(tensor):
    certs = []
    if tensor.rational_drops:
        certs.append({"type": "rational-angles",
                      "dropped": tensor.rational_drops})
    if tensor.relations_used:
        certs.append({"type": "angle-relations",
                      "relations": [r.to_json()
                                    for r in tensor.relations_used]})
    return certs


def cmd_polytope_info(args) -> dict:
    obj = load_json(args.file)
    p = polytope_from_json(obj, exact_strict=args.exact_strict)
    results = {
        "name": p.name,
        "dim": p.dim,
        "cells": len(p.chain),
        "volume": format_number(as_scalar(p.volume())),
    }
    certificates = []
    if p.dim == 3:
        edges = dihedral_edges(p)
        results["edges"] = [e.to_json() for e in edges]
        tensor = dehn_invariant(p, args.height_bound)
        verdict = is_zero(tensor)
        results["dehn_invariant"] = tensor.to_json()
        results["dehn_verdict"] = verdict
        certificates.extend(_tensor_certificates(tensor))
        if verdict == "NonzeroCertified":
            cert = nonzero_certificate(tensor)
            certificates.append({"type": "nonzero-dehn", **cert})
    return {"results": results, "certificates": certificates,
            "inputs": [args.file]}


def cmd_compare(args) -> dict:
    a = polytope_from_json(load_json(args.file_a),
                           exact_strict=args.exact_strict)
    b = polytope_from_json(load_json(args.file_b),
                           exact_strict=args.exact_strict)
    verdict = compare_polytopes(a, b, args.height_bound)
    certificates = []
    if verdict.tag == "NotCongruent_Volume":
        certificates.append({"type": "volume-mismatch",
                             "volume_a": verdict.witness["volume_a"],
                             "volume_b": verdict.witness["volume_b"]})
    elif verdict.tag == "NotCongruent_Dehn":
        cert = verdict.witness.get("certificate")
        if cert:
            certificates.append({"type": "nonzero-dehn", **cert})
        diff = verdict.witness.get("difference", {})
        if diff.get("relations"):
            certificates.append({"type": "angle-relations",
                                 "relations": diff["relations"]})
    elif verdict.tag == "Congruent_DSJ":
        if verdict.witness.get("relations"):
            certificates.append({"type": "angle-relations",
                                 "relations": verdict.witness["relations"]})
    return {"results": {"verdict": verdict.to_json()},
            "certificates": certificates,
            "inputs": [args.file_a, args.file_b]}


def cmd_verify(args) -> dict:
    outcome = run_suite(args.suite, args.seed, args.cases)
    exit_code = EXIT_OK if outcome["all_pass"] else EXIT_SUITE_FAILED
    return {"results": outcome, "certificates": [], "inputs": [],
            "seed": args.seed, "exit_code": exit_code}


def cmd_hochschild(args) -> dict:
    inputs = []
    if args.algebra in ("Q", "QI", "quat", "mat2", "mat4"):
        A = builtin_algebra(args.algebra)
    else:
        from .hochschild import algebra_from_json
        A = algebra_from_json(load_json(args.algebra))
        inputs.append(args.algebra)
    cap = 2 if A.dim > 4 else 3
    if args.max_degree > cap:
        raise SizeCapExceeded(
            f"max degree for {args.algebra} is {cap}")
    table = hochschild_homology_table(A, args.max_degree)
    return {"results": {"algebra": args.algebra,
                        "hh_dimensions": table},
            "certificates": [], "inputs": inputs}


def cmd_homology(args) -> dict:
    if args.complex:
        cx = complex_from_json(load_json(args.complex))
        values = {str(k): str(cx.homology(k)) for k in cx.degrees()}
        return {"results": {"complex": args.complex, "homology": values},
                "certificates": [], "inputs": [args.complex]}
    group = group_from_spec(args.group)
    module = module_from_spec(group, args.module)
    hs = group_homology(group, module, args.max_degree)
    return {"results": {
        "group": args.group,
        "module": args.module,
        "homology": [str(h) for h in hs],
    }, "certificates": [], "inputs": []}


def cmd_phi(args) -> dict:
    tower = FieldTower(args.tower)
    terms = tensor_terms_from_json(load_json(args.tensor))
    parsed = []
    for length, cos, sin in terms:
        length = _tower_number(length)
        cos = _tower_number(cos)
        if sin is None:
            parsed.append((length, cos))
        else:
            parsed.append((length, cos, _tower_number(sin)))
    image = phi_map(parsed, tower)
    return {"results": {
        "tower": tower.spec,
        "image": image.to_json(),
        "rendered": image.render(),
    }, "certificates": [], "inputs": [args.tensor]}


def _tower_number(value):
    """Tensor entries are tower expressions or exact number literals."""
    if isinstance(value, str) and value.startswith("rat:"):
        from .numbers import parse_fraction
        return parse_fraction(value[4:])
    if isinstance(value, dict):
        raise NotExpressible(
            "irrational algebraic literals contribute 0; write the term "
            "with a tower expression instead")
    return value


def cmd_recheck(args) -> dict:
    report = load_json(args.report)
    outcome = recheck_certificates(report)
    exit_code = EXIT_OK if outcome["recheck_passed"] else EXIT_SUITE_FAILED
    return {"results": outcome, "certificates": [],
            "inputs": [args.report], "exit_code": exit_code}


def _render_text(report: dict, indent: str = "") -> str:
    lines = []

    def walk(obj, prefix):
        if isinstance(obj, dict):
            width = max((len(str(k)) for k in obj), default=0)
            for k in sorted(obj, key=str):
                v = obj[k]
                if isinstance(v, (dict, list)) and v:
                    lines.append(f"{prefix}{k}:")
                    walk(v, prefix + "  ")
                else:
                    lines.append(f"{prefix}{str(k):<{width}}  {v}")
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                if isinstance(v, (dict, list)) and v:
                    lines.append(f"{prefix}- [{i}]")
                    walk(v, prefix + "  ")
                else:
                    lines.append(f"{prefix}- {v}")

    walk(report, indent)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="scissors",
        description="Exact scissors-congruence invariants and the finite "
                    "homological identities behind them.")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polytope-info", help="volume, edges, Dehn invariant")
    p.add_argument("file")
    p.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)
    p.add_argument("--exact-strict", action="store_true")
    p.set_defaults(fn=cmd_polytope_info)

    p = sub.add_parser("compare", help="scissors-congruence verdict")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND)
    p.add_argument("--exact-strict", action="store_true")
    p.add_argument("--recheck", action="store_true",
                   help="immediately re-verify the emitted certificates")
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=25)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("hochschild", help="HH dimension table")
    p.add_argument("--algebra", required=True,
                   help="builtin name (Q, QI, quat, mat2, mat4) "
                        "or an algebra JSON file")
    p.add_argument("--max-degree", type=int, default=2)
    p.set_defaults(fn=cmd_hochschild)

    p = sub.add_parser("homology", help="chain-complex or group homology")
    p.add_argument("--complex")
    p.add_argument("--group")
    p.add_argument("--module", default="trivialZ")
    p.add_argument("--max-degree", type=int, default=3)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("phi", help="length·dcos/sin image of tensor terms")
    p.add_argument("--tensor", required=True)
    p.add_argument("--tower", required=True)
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("recheck", help="re-verify a report's certificates")
    p.add_argument("report")
    p.set_defaults(fn=cmd_recheck)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    timer = ReportTimer()
    try:
        if args.command == "homology" and not (args.complex or args.group):
            raise ParseError("homology needs --complex or --group")
        out = args.fn(args)
        exit_code = out.pop("exit_code", EXIT_OK)
        inputs = out.pop("inputs", [])
        seed = out.pop("seed", getattr(args, "seed", None))
        report = make_report(
            command=[args.command] + _echo_args(args),
            inputs_digest=digest_inputs(inputs),
            results=out["results"],
            certificates=out["certificates"],
            seed=seed,
            timer=timer)
        if args.command == "compare" and args.recheck:
            report["recheck"] = recheck_certificates(report)
            if not report["recheck"]["recheck_passed"]:
                exit_code = EXIT_INTERNAL
    except (ParseError, UnknownSuite, NotExpressible,
            NotFiniteDimensional) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeometryError as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (SizeCap, SizeCapExceeded, RefinementTooLarge) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidComplex, DegreeOutOfRange, AssertionError,
            RuntimeError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_render_text(report))
    return exit_code


def _echo_args(args) -> list:
    skip = {"fn", "command", "format"}
    out = []
    for k in sorted(vars(args)):
        if k in skip:
            continue
        out.append(f"{k}={getattr(args, k)}")
    return out


if __name__ == "__main__":
    sys.exit(main())

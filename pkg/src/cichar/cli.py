"""Command-line surface: parse descriptors, dispatch computations, emit
tables or machine-readable JSON.

Exit codes: 0 on success with every property flag passing, 1 when a
property check reports a violation, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .charnum import (
    Residue,
    complete_intersection_family,
    divisibility_sweep,
    hurewicz_vector,
    lambda_integrality,
    s_number,
    surface_family,
    t_number,
)
from .chow import AmbientSpace, VarietyDescriptor
from .degform import (
    VIOLATED,
    degree_formula_check,
    obstruction_ideal,
    preset_point_degrees,
    quadric_chain,
)
from .errors import PropertyViolation, StructureError
from .oracle import DEFAULT_ROOT_COEFFS, equivalence_sweep
from .symfunc import AlphaTuple

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

DEFAULT_LAMBDAS = tuple(range(-4, 5))


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise StructureError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_multidegrees(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(_parse_int_list(part) for part in text.split(";"))


def _descriptor_from_args(args) -> VarietyDescriptor:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            return VarietyDescriptor.from_json(json.load(fh))
    if not args.ambient:
        raise StructureError("an --ambient (or --file) is required")
    ambient = AmbientSpace(_parse_int_list(args.ambient))
    degrees = _parse_multidegrees(args.degrees or "")
    return VarietyDescriptor(ambient, degrees)


def _add_descriptor_flags(sub):
    sub.add_argument("--ambient", help="projective factors, e.g. 3 or 2,1")
    sub.add_argument(
        "--degrees",
        help="hypersurface multidegrees: entries comma-separated, "
        "hypersurfaces semicolon-separated, e.g. 2 or 1,1;2,0",
    )
    sub.add_argument("--file", help="JSON descriptor file instead of flags")


def _emit(payload: dict, args) -> None:
    if args.json:
        data = {k: v for k, v in payload.items() if k != "table"}
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
        return
    for line in payload["table"]:
        print(line)


def _residue_str(r: Residue) -> str:
    base = f"{r.value} (mod {r.modulus})"
    if r.signed() != r.value:
        base += f" [signed {r.signed()}]"
    return base


# -- subcommand handlers -------------------------------------------------


def _cmd_snumber(args):
    X = _descriptor_from_args(args)
    alpha = AlphaTuple.parse(args.alpha)
    value = s_number(X, alpha)
    payload = {
        "command": "snumber",
        "descriptor": X.to_json(),
        "alpha": list(alpha.counts),
        "value": str(value),
        "table": [f"variety: {X}", f"alpha: {alpha}", f"s_number = {value}"],
    }
    return payload, EXIT_OK


def _cmd_hurewicz(args):
    X = _descriptor_from_args(args)
    vec = hurewicz_vector(X)
    table = [f"variety: {X}", f"dimension: {vec.dimension}"]
    for alpha, value in vec.entries:
        table.append(f"  {alpha}: {value}")
    payload = {
        "command": "hurewicz",
        "descriptor": X.to_json(),
        "vector": vec.to_json(),
        "table": table,
    }
    return payload, EXIT_OK


def _cmd_tnumber(args):
    X = _descriptor_from_args(args)
    r = t_number(X, args.q, args.t)
    payload = {
        "command": "tnumber",
        "descriptor": X.to_json(),
        "q": args.q,
        "t": args.t,
        "residue": r.value,
        "table": [f"variety: {X}", f"t = {_residue_str(r)}"],
    }
    return payload, EXIT_OK


def _cmd_lambda_family(args):
    X = _descriptor_from_args(args)
    lams = _parse_int_list(args.lambdas) if args.lambdas else DEFAULT_LAMBDAS
    report = lambda_integrality(X, lams)
    table = [
        f"variety: {X}",
        f"S = deg s_(0,1)(T_X) = {report.s_invariant}"
        f" (3 | S: {report.s_divisible_by_3})",
        f"C = deg(s_(1)^2 - s_(2))(T_X) = {report.combo_invariant}"
        f" (4 | 2S+C: {report.combo_divisible_by_4})",
    ]
    for e in report.entries:
        flag = "ok" if e.integral else "NOT AN INTEGER"
        table.append(f"  lambda={e.lam}: {e.value}  [{flag}]")
    table.append(f"all integral: {report.all_integral}")
    payload = {
        "command": "lambda-family",
        "report": report.to_json(),
        "table": table,
    }
    return payload, EXIT_OK if report.all_integral else EXIT_VIOLATION


def _cmd_check_divisibility(args):
    if args.ambient or args.file:
        family = [_descriptor_from_args(args)]
    else:
        dimension = args.q**args.t - 1
        ambients = None
        if dimension == 2:
            ambients = [tuple(_parse_int_list(a)) for a in args.family_ambients.split("/")] \
                if args.family_ambients else [(3,), (4,), (2, 1)]
            family = surface_family(
                max_entry=args.max_entry,
                max_hypersurfaces=args.max_hypersurfaces,
                ambients=ambients,
            )
        else:
            family = complete_intersection_family(
                dimension,
                max_entry=args.max_entry,
                max_hypersurfaces=args.max_hypersurfaces,
            )
    report = divisibility_sweep(family, args.q, args.t)
    table = [f"q = {args.q}, t = {args.t}, members: {len(report.entries)}"]
    for e in report.entries:
        flag = "ok" if e.divisible else "FAIL"
        table.append(
            f"  {e.descriptor}: deg s_{e.alpha}(T_X) = {e.value}  [{flag}]"
        )
    table.append(f"all divisible: {report.all_divisible}")
    payload = {
        "command": "check-divisibility",
        "report": report.to_json(),
        "table": table,
    }
    return payload, EXIT_OK if report.all_divisible else EXIT_VIOLATION


def _cmd_degree_formula(args):
    Y = _descriptor_from_args(args)
    if args.preset:
        points = preset_point_degrees(args.preset)
    else:
        points = _parse_int_list(args.points or "")
    ideal = obstruction_ideal(points, args.q)
    X_t = Residue.reduce(args.target_t, args.q)
    verdict = degree_formula_check(Y, X_t, args.deg_f, ideal, args.q, args.t)
    table = [
        f"source: {Y}",
        f"lhs t(Y) = {_residue_str(verdict.lhs)}",
        f"rhs deg(f)*t(X) = {_residue_str(verdict.rhs)}",
        f"ideal: {verdict.ideal}",
        f"status: {verdict.status}",
    ]
    payload = {
        "command": "degree-formula",
        "descriptor": Y.to_json(),
        "verdict": verdict.to_json(),
        "table": table,
    }
    code = EXIT_VIOLATION if verdict.status == VIOLATED else EXIT_OK
    return payload, code


def _cmd_quadric(args):
    chain = quadric_chain(args.m)
    table = [
        f"quadric of dimension 2^{args.m} - 1 = {2 ** args.m - 1} in P^{2 ** args.m}",
        f"deg of hyperplane-power section: {chain.hyperplane_section_degree}",
        f"s_top = {chain.s_top} (closed form {chain.closed_form})",
        f"t = {_residue_str(chain.t)}",
    ]
    payload = {
        "command": "quadric",
        "chain": chain.to_json(),
        "table": table,
    }
    ok = (
        chain.t.value == 1
        and chain.hyperplane_section_degree == 2
        and chain.s_top == chain.closed_form
    )
    return payload, EXIT_OK if ok else EXIT_VIOLATION


def _cmd_oracle(args):
    coeffs = _parse_int_list(args.coeffs) if args.coeffs else DEFAULT_ROOT_COEFFS
    samples = None if args.exhaustive else args.samples
    report = equivalence_sweep(
        max_degree=args.max_degree,
        root_coeffs=coeffs,
        max_roots=args.max_roots,
        samples=samples,
        seed=args.seed,
    )
    table = [
        f"checked {report.checked} (bundle, alpha) pairs "
        f"up to weighted degree {report.max_degree}",
    ]
    by_alpha: dict[str, list[bool]] = {}
    for case in report.cases:
        by_alpha.setdefault(str(case.alpha), []).append(case.ok)
    for name in sorted(by_alpha):
        oks = by_alpha[name]
        table.append(f"  {name}: {sum(oks)}/{len(oks)} ok")
    table.append(f"all equivalent: {report.all_ok}")
    payload = {
        "command": "oracle",
        "report": report.to_json(),
        "table": table,
    }
    return payload, EXIT_OK if report.all_ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cichar",
        description="Exact characteristic numbers for complete intersections "
        "in products of projective spaces.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("snumber", help="degree of an s-class of the tangent bundle")
    _add_descriptor_flags(sp)
    sp.add_argument("--alpha", required=True, help="count tuple, e.g. 0,1")
    sp.set_defaults(handler=_cmd_snumber)

    sp = subs.add_parser("hurewicz", help="all deg s_alpha(-T_X) in the top dimension")
    _add_descriptor_flags(sp)
    sp.set_defaults(handler=_cmd_hurewicz)

    sp = subs.add_parser("tnumber", help="the mod-q invariant of a descriptor")
    _add_descriptor_flags(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(handler=_cmd_tnumber)

    sp = subs.add_parser("lambda-family", help="surface lambda-family integrality")
    _add_descriptor_flags(sp)
    sp.add_argument("--lambda", dest="lambdas", help="comma list, default -4..4")
    sp.set_defaults(handler=_cmd_lambda_family)

    sp = subs.add_parser(
        "check-divisibility",
        help="q-divisibility of top single-row numbers over a family",
    )
    _add_descriptor_flags(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--max-entry", type=int, default=5)
    sp.add_argument("--max-hypersurfaces", type=int, default=2)
    sp.add_argument(
        "--family-ambients",
        help="slash-separated ambients for the surface family, e.g. 3/4/2,1",
    )
    sp.set_defaults(handler=_cmd_check_divisibility)

    sp = subs.add_parser("degree-formula", help="congruence verdict for a rational map")
    _add_descriptor_flags(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--target-t", type=int, required=True, help="t-invariant of the target")
    sp.add_argument("--deg-f", type=int, required=True, help="degree of the map")
    sp.add_argument("--points", help="comma list of closed-point degrees of the target")
    sp.add_argument(
        "--preset",
        choices=["algebraically-closed", "anisotropic-quadric"],
        help="named preset for the point degrees",
    )
    sp.set_defaults(handler=_cmd_degree_formula)

    sp = subs.add_parser("quadric", help="full quadric chain in P^{2^m}")
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(handler=_cmd_quadric)

    sp = subs.add_parser("oracle", help="splitting-principle equivalence sweep")
    sp.add_argument("--max-degree", type=int, default=8)
    sp.add_argument("--max-roots", type=int, default=None)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--coeffs", help="comma list of root coefficients, default 1,2,3,-1")
    sp.add_argument(
        "--exhaustive",
        action="store_true",
        help="walk every multiset of root coefficients instead of sampling",
    )
    sp.set_defaults(handler=_cmd_oracle)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload, code = args.handler(args)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (StructureError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, args)
    return code


def main() -> None:
    sys.exit(run())

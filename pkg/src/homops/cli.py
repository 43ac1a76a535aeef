"""Command-line front end: ``homops <area> <action> [options]``.

Every leaf subcommand is a :class:`Route` in :data:`DISPATCH`, which names
the single library operation it exposes.  Reports are plain dicts with the
keys ``command``, ``status``, ``exit_code``, ``result`` and ``error``; with
``--json`` they are printed as sorted, indented JSON, otherwise as text.

Exit codes: 0 success, 1 domain error (named in ``error.name``), 2 usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from homops import functors, oracle, pointmaps, verify
from homops.abgroup import FgAbGroup, IntMatrix, ParseError, cokernel, direct_sum, order, smith_normal_form
from homops.chains import ChainComplex, homology, kunneth_check, moore_complex, tensor_complex
from homops.errors import DomainError, Unknown
from homops.moorecalc import (
    MooreExpr,
    StemTable,
    default_stem_table,
    homotopy_with_coeffs,
    smash_decompose,
    stem,
)
from homops.opsclassify import (
    OperationType,
    SpecialKind,
    basic_range_check,
    bo_group,
    classify,
    commutativity_sign,
    count_special_ops,
    count_whitehead_direct,
    ext_ops_enumerate,
    neisendorfer_shift,
    special_kind,
    torsion_exists,
    triviality_check,
)

__all__ = ["Command", "Route", "DISPATCH", "ORACLE_CHECKS", "parse_group_expr", "build_parser", "parse_command", "run", "render", "main"]

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def parse_group_expr(text: str) -> FgAbGroup:
    """Parse ``0``, ``Z``, ``Z^r``, ``Z/n`` joined by ``+`` into canonical form."""
    return FgAbGroup.parse(text)


@dataclass(frozen=True)
class Command:
    path: tuple[str, str]
    args: dict[str, Any] = field(default_factory=dict)
    json: bool = False
    oracle: bool = False
    stem_table: str | None = None

    @property
    def name(self) -> str:
        return " ".join(self.path)


# --- argument types ----------------------------------------------------------


def _group_arg(text: str) -> FgAbGroup:
    try:
        return parse_group_expr(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _space_arg(text: str) -> MooreExpr:
    try:
        return MooreExpr.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _matrix_arg(text: str) -> IntMatrix:
    try:
        rows = json.loads(text)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError
        return IntMatrix.from_rows([[int(x) for x in r] for r in rows], len(rows[0]) if rows else 0)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"matrix must be a JSON list of integer rows, got {text!r}") from None


def _type_arg(text: str) -> OperationType:
    try:
        return OperationType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _point_arg(text: str) -> pointmaps.AbstractPoint:
    return pointmaps.BASE if text.strip() == "*" else pointmaps.AbstractPoint(text.strip())


# --- JSON helpers ------------------------------------------------------------


def _g(x) -> Any:
    if isinstance(x, Unknown):
        return {"unknown": x.reason}
    return str(x)


def _card(x) -> Any:
    return "infinite" if x == math.inf else x


def _complex_dict(c: ChainComplex) -> dict:
    return {
        "cells": [{"degree": n, "rank": c.rank(n)} for n in c.degrees],
        "boundaries": [
            {"degree": n, "matrix": c.boundary(n).to_rows()}
            for n in c.degrees if c.rank(n - 1) and c.rank(n)
        ],
    }


def _frac(x: Fraction) -> str:
    return str(x)


def _susp(p: pointmaps.SuspensionPoint) -> Any:
    return "*" if p.is_basepoint else {"point": repr(p.x), "u": _frac(p.u)}


def _product(p: pointmaps.ProductPoint) -> dict:
    return {"first": _susp(p.first), "second": _susp(p.second), "smash_basepoint": p.is_smash_basepoint}


def _join(args) -> pointmaps.JoinPoint:
    return pointmaps.JoinPoint(args["a"], args["b"], args["t"])


def _table(cmd: Command) -> StemTable | None:
    if cmd.stem_table is None:
        return None
    return default_stem_table().merged(StemTable.load(cmd.stem_table))


# --- handlers ------------------------------------------------------------------


def _group_canon(cmd, a):
    g = a["expr"]
    return {"group": str(g), "free_rank": g.free_rank, "torsion": list(g.torsion)}


def _group_order(cmd, a):
    return {"group": str(a["expr"]), "order": _card(order(a["expr"]))}


def _group_sum(cmd, a):
    out = FgAbGroup.trivial()
    for g in a["exprs"]:
        out = direct_sum(out, g)
    return {"summands": [str(g) for g in a["exprs"]], "group": str(out)}


def _group_snf(cmd, a):
    d, diag = smith_normal_form(a["matrix"])
    return {"normal_form": d.to_rows(), "diagonal": diag}


def _group_cokernel(cmd, a):
    return {"group": str(cokernel(a["matrix"]))}


# Brute-force recomputations run by ``functor <kind> --oracle``.
ORACLE_CHECKS: dict[functors.FunctorKind, tuple[Callable, ...]] = {
    functors.FunctorKind.HOM: (oracle.oracle_hom, oracle.oracle_hom_count),
    functors.FunctorKind.EXT: (oracle.oracle_ext,),
    functors.FunctorKind.TENSOR: (oracle.oracle_tensor,),
    functors.FunctorKind.TOR: (oracle.oracle_tor,),
}


def _functor(kind: functors.FunctorKind):
    def handler(cmd, a):
        g, h = a["g"], a["h"]
        value = functors.apply(kind, g, h)
        out = {"functor": kind.value, "g": str(g), "h": str(h), "value": str(value)}
        if not cmd.oracle:
            return out
        if not (g.is_finite and (kind is functors.FunctorKind.EXT or h.is_finite)):
            out["oracle"] = {"applicable": False, "reason": "oracle needs finite groups"}
            return out
        brute, *extra = ORACLE_CHECKS[kind]
        check = brute(g, h) if kind is functors.FunctorKind.EXT else brute(g, h, a["bound"])
        out["oracle"] = {"applicable": True, "value": str(check), "agrees": check == value}
        for count in extra:
            n = count(g, h, a["bound"])
            out["oracle"]["hom_count"] = n
            out["oracle"]["agrees"] = out["oracle"]["agrees"] and n == order(value)
        return out

    return handler


def _chain_moore(cmd, a):
    return {"group": str(a["g"]), "degree": a["n"], **_complex_dict(moore_complex(a["g"], a["n"]))}


def _chain_tensor(cmd, a):
    cx = tensor_complex(moore_complex(a["g1"], a["q1"]), moore_complex(a["g2"], a["q2"]), a["sign_on"])
    return {"sign_on": a["sign_on"], **_complex_dict(cx)}


def _chain_homology(cmd, a):
    cx = a["space"].to_complex()
    if a["with_space"] is not None:
        cx = tensor_complex(cx, a["with_space"].to_complex())
    degrees = [a["degree"]] if a["degree"] is not None else cx.degrees
    return {"homology": [{"degree": n, "group": str(homology(cx, n))} for n in degrees]}


def _chain_kunneth(cmd, a):
    return kunneth_check(a["g1"], a["q1"], a["g2"], a["q2"]).to_dict()


def _moore_decompose(cmd, a):
    w = smash_decompose(a["a"], a["b"])
    return {"a": str(a["a"]), "b": str(a["b"]), "wedge": str(w),
            "atoms": [{"group": str(x.group), "degree": x.degree} for x in w.atoms]}


def _moore_stem(cmd, a):
    return {"group": str(a["g"]), "k": a["k"], "n": a["n"], "value": _g(stem(a["g"], a["k"], a["n"], _table(cmd)))}


def _moore_pi(cmd, a):
    return homotopy_with_coeffs(a["space"], a["n"], a["coeff"], _table(cmd)).to_dict()


def _ops_classify(cmd, a):
    return classify(a["type"], _table(cmd)).to_dict()


def _ops_range(cmd, a):
    return {"type": str(a["type"]), **basic_range_check(a["type"]).to_dict()}


def _ops_trivial(cmd, a):
    return {"type": str(a["type"]), "trivially_zero": triviality_check(a["type"])}


def _ops_bo(cmd, a):
    return {"type": str(a["type"]), "bo": bo_group(a["type"], _table(cmd)).to_dict()}


def _ops_kind(cmd, a):
    return {"type": str(a["type"]), "kind": special_kind(a["type"]).value}


def _ops_count(cmd, a):
    return {"type": str(a["type"]), **count_special_ops(a["type"], _table(cmd)).to_dict()}


def _ops_count_whitehead(cmd, a):
    g3 = functors.tensor(a["g1"], a["g2"])
    t = OperationType(a["g1"], a["g2"], g3, a["q1"], a["q2"], a["q1"] + a["q2"] - 1)
    c = count_whitehead_direct(a["g1"], a["g2"], a["q1"], a["q2"], _table(cmd))
    return {"type": str(t), "count": _g(c) if isinstance(c, Unknown) else c}


def _ops_torsion_exists(cmd, a):
    return {"m": a["m"], "n": a["n"], "q1": a["q1"], "q2": a["q2"],
            "result": torsion_exists(a["m"], a["n"], a["q1"], a["q2"])}


def _ops_ext_enumerate(cmd, a):
    ops = ext_ops_enumerate(a["k"], a["q1"], a["q2"])
    return {"k": a["k"], "count": len(ops), "operations": [o.to_dict() for o in ops]}


def _ops_sign(cmd, a):
    return commutativity_sign(a["kind"], a["q1"], a["q2"]).to_dict()


def _ops_shift(cmd, a):
    return {"n": a["n"], "direction": a["direction"], "result": neisendorfer_shift(a["n"], a["direction"])}


def _maps_lambda(cmd, a):
    return {"value": _product(pointmaps.eval_lambda(_join(a), a["u"]))}


def _maps_phi(cmd, a):
    return {"value": _product(pointmaps.eval_phi(_join(a), a["u"], a["s"]))}


def _maps_mu_prime(cmd, a):
    p = pointmaps.eval_mu_prime(_join(a))
    return {"value": "*" if p.is_basepoint else {"a": repr(p.a), "b": repr(p.b), "coords": [_frac(c) for c in p.coords]}}


def _maps_sigma(cmd, a):
    p = pointmaps.SigmaSmashPoint(a["a"], a["b"], (a["t"], a["u"]))
    return {"value": _product(pointmaps.eval_sigma(p))}


def _maps_check(cmd, a):
    checks = pointmaps.check_identities(a["denominator"], a["samples"], a["seed"])
    return {"passed": all(c.passed for c in checks), "identities": [c.to_dict() for c in checks]}


def _verify_all(cmd, a):
    results = verify.run_all(quick=a["quick"])
    return {"passed": all(r.passed for r in results), "sweeps": [r.to_dict() for r in results]}


@dataclass(frozen=True)
class Route:
    operation: Callable
    handler: Callable[[Command, dict], Any]
    help: str


DISPATCH: dict[tuple[str, str], Route] = {
    ("group", "canon"): Route(parse_group_expr, _group_canon, "canonical form of a group expression"),
    ("group", "order"): Route(order, _group_order, "order of a group (or 'infinite')"),
    ("group", "sum"): Route(direct_sum, _group_sum, "direct sum of group expressions"),
    ("group", "snf"): Route(smith_normal_form, _group_snf, "Smith normal form of an integer matrix"),
    ("group", "cokernel"): Route(cokernel, _group_cokernel, "group presented by relation rows"),
    ("functor", "hom"): Route(functors.hom, _functor(functors.FunctorKind.HOM), "Hom(G, H)"),
    ("functor", "ext"): Route(functors.ext, _functor(functors.FunctorKind.EXT), "Ext(G, H)"),
    ("functor", "tensor"): Route(functors.tensor, _functor(functors.FunctorKind.TENSOR), "G (x) H"),
    ("functor", "tor"): Route(functors.tor, _functor(functors.FunctorKind.TOR), "Tor(G, H)"),
    ("chain", "moore"): Route(moore_complex, _chain_moore, "cellular chain complex of M(G, n)"),
    ("chain", "tensor"): Route(tensor_complex, _chain_tensor, "tensor product of two Moore complexes"),
    ("chain", "homology"): Route(homology, _chain_homology, "homology of a Moore wedge or of a product of two"),
    ("chain", "kunneth"): Route(kunneth_check, _chain_kunneth, "compare tensor-complex homology with Kunneth"),
    ("moore", "decompose"): Route(smash_decompose, _moore_decompose, "split a smash of Moore spaces into a wedge"),
    ("moore", "stem"): Route(stem, _moore_stem, "pi_{n+k} M(G, n) from the stem table"),
    ("moore", "pi"): Route(homotopy_with_coeffs, _moore_pi, "universal coefficient data for pi_n(X; G)"),
    ("ops", "classify"): Route(classify, _ops_classify, "full report for an operation type"),
    ("ops", "range"): Route(basic_range_check, _ops_range, "basic-operation range test"),
    ("ops", "trivial"): Route(triviality_check, _ops_trivial, "whether every basic operation is zero"),
    ("ops", "bo"): Route(bo_group, _ops_bo, "order of the group of basic operations"),
    ("ops", "kind"): Route(special_kind, _ops_kind, "Whitehead, Torsion or neither"),
    ("ops", "count"): Route(count_special_ops, _ops_count, "number of Whitehead or Torsion products of a type"),
    ("ops", "count-whitehead"): Route(count_whitehead_direct, _ops_count_whitehead, "Whitehead count from the closed formula"),
    ("ops", "torsion-exists"): Route(torsion_exists, _ops_torsion_exists, "existence of a Torsion product for Z/m, Z/n"),
    ("ops", "ext-enumerate"): Route(ext_ops_enumerate, _ops_ext_enumerate, "list the k Ext operations"),
    ("ops", "sign"): Route(commutativity_sign, _ops_sign, "commutativity sign of a Whitehead/Torsion product"),
    ("ops", "shift"): Route(neisendorfer_shift, _ops_shift, "reindex between Moore and co-Moore coefficients"),
    ("maps", "lambda"): Route(pointmaps.eval_lambda, _maps_lambda, "evaluate Lambda at a point"),
    ("maps", "phi"): Route(pointmaps.eval_phi, _maps_phi, "evaluate the homotopy Phi_s at a point"),
    ("maps", "mu-prime"): Route(pointmaps.eval_mu_prime, _maps_mu_prime, "evaluate mu' at a join point"),
    ("maps", "sigma"): Route(pointmaps.eval_sigma, _maps_sigma, "evaluate sigma at a double-suspension point"),
    ("maps", "check"): Route(pointmaps.check_identities, _maps_check, "run every pointwise identity over the grid"),
    ("verify", "all"): Route(verify.run_all, _verify_all, "run the property sweeps and print a summary"),
}


# --- parser --------------------------------------------------------------------


def _add_arguments(path: tuple[str, str], p: argparse.ArgumentParser):
    area, action = path
    group, space = _group_arg, _space_arg
    uses_table = path in {("moore", "stem"), ("moore", "pi"), ("ops", "classify"), ("ops", "bo"),
                          ("ops", "count"), ("ops", "count-whitehead")}
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    if uses_table:
        p.add_argument("--stem-table", metavar="PATH", help="extra stem records, overriding the shipped table")

    if area == "group":
        if action in ("canon", "order"):
            p.add_argument("expr", type=group)
        elif action == "sum":
            p.add_argument("exprs", type=group, nargs="+")
        else:
            p.add_argument("--matrix", type=_matrix_arg, required=True, help="JSON rows, e.g. '[[2,4],[6,8]]'")
    elif area == "functor":
        p.add_argument("--g", type=group, required=True)
        p.add_argument("--h", type=group, required=True)
        p.add_argument("--oracle", action="store_true", help="recompute by brute force and compare")
        p.add_argument("--bound", type=int, default=oracle.DEFAULT_BOUND, help="oracle enumeration bound")
    elif area == "chain":
        if action == "moore":
            p.add_argument("--g", type=group, required=True)
            p.add_argument("--n", type=int, required=True)
        elif action == "homology":
            p.add_argument("--space", type=space, required=True, help="Moore wedge, e.g. 'Z/4@4 | Z@6'")
            p.add_argument("--with", dest="with_space", type=space, help="second factor for the tensor product")
            p.add_argument("--degree", type=int)
        else:
            for name in ("g1", "q1", "g2", "q2"):
                p.add_argument(f"--{name}", type=group if name[0] == "g" else int, required=True)
            if action == "tensor":
                p.add_argument("--sign-on", choices=["first", "second"], default="second")
    elif area == "moore":
        if action == "decompose":
            p.add_argument("--a", type=space, required=True)
            p.add_argument("--b", type=space, required=True)
        elif action == "stem":
            p.add_argument("--g", type=group, required=True)
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--space", type=space, required=True)
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--coeff", type=group, required=True)
    elif area == "ops":
        if action in ("classify", "range", "trivial", "bo", "kind", "count"):
            p.add_argument("--type", type=_type_arg, required=True, help='"G1,G2,G3;q1,q2,q3"')
        elif action == "count-whitehead":
            p.add_argument("--g1", type=group, required=True)
            p.add_argument("--g2", type=group, required=True)
            p.add_argument("--q1", type=int, required=True)
            p.add_argument("--q2", type=int, required=True)
        elif action == "torsion-exists":
            for name in ("m", "n", "q1", "q2"):
                p.add_argument(f"--{name}", type=int, required=True)
        elif action == "ext-enumerate":
            for name in ("k", "q1", "q2"):
                p.add_argument(f"--{name}", type=int, required=True)
        elif action == "sign":
            p.add_argument("--kind", type=SpecialKind.parse, required=True, help="w (Whitehead) or t (Torsion)")
            p.add_argument("--q1", type=int, required=True)
            p.add_argument("--q2", type=int, required=True)
        else:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--direction", choices=["to_comoore", "to_moore"], required=True)
    elif area == "maps":
        if action == "check":
            p.add_argument("--denominator", type=int, default=8)
            p.add_argument("--samples", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
        else:
            p.add_argument("--a", type=_point_arg, default=pointmaps.AbstractPoint("a"), help="'*' for the basepoint")
            p.add_argument("--b", type=_point_arg, default=pointmaps.AbstractPoint("b"))
            p.add_argument("--t", type=_fraction_arg, required=True)
            if action != "mu-prime":
                p.add_argument("--u", type=_fraction_arg, required=True)
            if action == "phi":
                p.add_argument("--s", type=_fraction_arg, required=True)
    elif area == "verify":
        p.add_argument("--quick", action="store_true", help="smaller sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homops", description="Exact computations with abelian groups, Moore spaces and homotopy operations.")
    areas = parser.add_subparsers(dest="area", required=True, metavar="AREA")
    area_parsers: dict[str, argparse._SubParsersAction] = {}
    for area, action in DISPATCH:
        if area not in area_parsers:
            ap = areas.add_parser(area)
            area_parsers[area] = ap.add_subparsers(dest="action", required=True, metavar="ACTION")
        sp = area_parsers[area].add_parser(action, help=DISPATCH[(area, action)].help)
        _add_arguments((area, action), sp)
    return parser


def parse_command(argv: Sequence[str]) -> Command:
    """Parse argv into a :class:`Command`; argparse exits with code 2 on usage errors."""
    ns = vars(build_parser().parse_args(list(argv)))
    path = (ns.pop("area"), ns.pop("action"))
    as_json = ns.pop("json", False)
    use_oracle = ns.pop("oracle", False)
    table = ns.pop("stem_table", None)
    return Command(path, ns, as_json, use_oracle, table)


# --- execution -----------------------------------------------------------------


def _find_unknown(obj) -> str | None:
    if isinstance(obj, dict):
        if set(obj) == {"unknown"}:
            return obj["unknown"]
        for v in obj.values():
            r = _find_unknown(v)
            if r is not None:
                return r
    elif isinstance(obj, list):
        for v in obj:
            r = _find_unknown(v)
            if r is not None:
                return r
    return None


def run(cmd: Command) -> tuple[int, dict]:
    """Execute a parsed command; never raises for domain or usage problems."""
    report = {"command": cmd.name, "status": "ok", "exit_code": EXIT_OK, "result": None, "error": None}

    def fail(code: int, name: str, message: str):
        report.update(status="error", exit_code=code, error={"name": name, "message": message})

    route = DISPATCH.get(cmd.path)
    if route is None:
        fail(EXIT_USAGE, "UsageError", f"unknown command {cmd.name!r}")
        return EXIT_USAGE, report
    try:
        result = route.handler(cmd, cmd.args)
    except DomainError as exc:
        fail(EXIT_DOMAIN, exc.name, str(exc))
        return EXIT_DOMAIN, report
    except oracle.BoundExceeded as exc:
        fail(EXIT_DOMAIN, "BoundExceeded", str(exc))
        return EXIT_DOMAIN, report
    except (ValueError, OSError) as exc:
        fail(EXIT_USAGE, "ParseError" if isinstance(exc, ParseError) else "UsageError", str(exc))
        return EXIT_USAGE, report
    report["result"] = result
    unknown = _find_unknown(result)
    if unknown is not None:
        fail(EXIT_DOMAIN, Unknown.name, unknown)
    elif isinstance(result, dict) and result.get("errors"):
        first = result["errors"][0]
        fail(EXIT_DOMAIN, first["error"], first["message"])
    elif isinstance(result, dict) and result.get("oracle", {}).get("agrees") is False:
        fail(EXIT_DOMAIN, "OracleMismatch", f"oracle computed {result['oracle']['value']}, closed form {result['value']}")
    elif isinstance(result, dict) and result.get("passed") is False:
        fail(EXIT_DOMAIN, "CheckFailed", "one or more checks failed")
    return report["exit_code"], report


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, dict):
                sub = _text_lines(v, indent + 1)
                lines.append(f"{pad}- {sub[0].strip()}" if sub else f"{pad}-")
                lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {_scalar(v)}")
        return lines
    return [f"{pad}{_scalar(obj)}"]


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v == [] or v == {}:
        return "none"
    return str(v)


def _summary_table(rows: list[dict], name_key: str, extra: Callable[[dict], str]) -> list[str]:
    width = max(len(r[name_key]) for r in rows)
    return [f"{'PASS' if r['passed'] else 'FAIL'}  {r[name_key]:<{width}}  {extra(r)}" for r in rows]


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True)
    res = report["result"]
    lines = []
    if report["command"] == "verify all" and res is not None:
        lines = _summary_table(res["sweeps"], "name", lambda r: f"{r['cases']:>6} cases  {r['seconds']:8.2f}s  {r['detail']}")
    elif report["command"] == "maps check" and res is not None:
        lines = _summary_table(res["identities"], "identity",
                               lambda r: f"{r['failures']}/{r['cases']} failures" + (f"  e.g. {r['first_failure']}" if r["first_failure"] else ""))
    elif res is not None:
        lines = _text_lines(res)
    if report["error"] is not None:
        lines.append(f"error: {report['error']['name']}: {report['error']['message']}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cmd = parse_command(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code, report = run(cmd)
    print(render(report, cmd.json))
    return code


if __name__ == "__main__":
    sys.exit(main())

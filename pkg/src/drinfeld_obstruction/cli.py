"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 bad input (including cap
violations). JSON output is sorted and carries "schema": 1 plus an echo of the
input, so identical invocations give identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .algebra import FieldError, FiniteField, parse_field
from .groups import CapExceeded, GroupError, MatrixGroup, Unclassified, classify, closure, matrix
from .skewdrinfeld import ParseError

SCHEMA = 1


class InputError(ValueError):
    pass


# -- input parsing ----------------------------------------------------------------

def _load_json(text: str, what: str):
    path = Path(text)
    if not text.lstrip().startswith(("[", "{")) and path.exists():
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def parse_gens(F: FiniteField, payload) -> list:
    """A list of square matrices; int entries embed Z -> F_p, list entries are coefficient vectors."""
    if not isinstance(payload, list) or not payload:
        raise InputError("generators must be a nonempty JSON list of matrices")
    out = []
    for i, m in enumerate(payload):
        try:
            out.append(matrix(F, m))
        except (TypeError, ValueError) as exc:
            raise InputError(f"generator {i}: {exc}") from None
    r = {int(len(g) ** 0.5) for g in out}
    if len(r) != 1:
        raise InputError("all generators must have the same size")
    return out


def build_group(F: FiniteField, payload, cap: int) -> MatrixGroup:
    gens = parse_gens(F, payload)
    r = int(round(len(gens[0]) ** 0.5))
    return closure(F, r, gens, cap=cap)


def _field(desc: str) -> FiniteField:
    try:
        return parse_field(desc)
    except (FieldError, ValueError) as exc:
        raise InputError(f"--field {desc!r}: {exc}") from None


# -- subcommands -------------------------------------------------------------------

def cmd_h1(args) -> tuple[int, dict]:
    from .cohomology import h1_bruteforce, h1_elem_abelian
    from .groups import unipotent_coordinates

    F = _field(args.field)
    G = build_group(F, _load_json(args.gens, "--gens"), args.cap)
    if args.method == "resolution":
        if not G.is_abelian() or G.order % F.p or any(G.trace(g) != F.from_int(2) for g in G.elements):
            raise InputError("the resolution method needs an elementary abelian unipotent group")
        _, lams = unipotent_coordinates(G)  # H^1 dims are invariant under the conjugation
        space = h1_elem_abelian(lams, F)
    else:
        space = h1_bruteforce(G, full_system=args.method == "full", cap=args.cap)
    out = {"group_order": G.order, "dim_F": space.dim_over_F, "dim_Fp": space.dim_over_prime, "method": space.method}
    return 0, out


def cmd_classify(args) -> tuple[int, dict]:
    F = _field(args.field)
    G = build_group(F, _load_json(args.gens, "--gens"), args.cap)
    if G.r != 2 or any(G.det(g) != 1 for g in G.elements):
        raise InputError("classify expects a subgroup of Sl_2(F)")
    try:
        t = classify(G)
    except Unclassified as exc:
        return 1, {"group_order": G.order, "error": str(exc)}
    return 0, {"group_order": G.order, **t.to_json()}


def cmd_newton(args) -> tuple[int, dict]:
    from .skewdrinfeld import DrinfeldModule, newton_polygon, parse_place, parse_poly, ramification_bound, torsion_polynomial

    F = _field(args.field)
    dm = DrinfeldModule.parse(args.phi, F)
    a = parse_poly(args.a, F)
    place = parse_place(args.place, F)
    ap = torsion_polynomial(dm, a)
    npg = newton_polygon(ap, place)
    return 0, {"torsion_polynomial": repr(ap), "rank": dm.rank, **npg.to_json(), "ramification_bound": ramification_bound(npg)}


def _decomp(F: FiniteField, payload, cap: int):
    from .localglobal import DecompositionDatum

    if not isinstance(payload, list):
        raise InputError("--decomp must be a JSON list of {label, gens, ramified}")
    out = []
    for i, d in enumerate(payload):
        if not isinstance(d, dict) or "gens" not in d:
            raise InputError(f"decomposition datum {i} needs a 'gens' entry")
        out.append(DecompositionDatum(str(d.get("label", f"D{i}")), build_group(F, d["gens"], cap), bool(d.get("ramified", False))))
    return out


def cmd_sdim(args) -> tuple[int, dict]:
    from .localglobal import s_dimension, s_dimension_borel

    F = _field(args.field)
    G = build_group(F, _load_json(args.group, "--group"), args.cap)
    data = _decomp(F, _load_json(args.decomp, "--decomp"), args.cap) if args.decomp else []
    if args.borel:
        rep = s_dimension_borel(G, data)
    else:
        rep = s_dimension(G, data)
    out = rep.to_json()
    out.pop("inputs", None)
    return 0, out


def cmd_report(args) -> tuple[int, dict]:
    from .constructions import example51_report, reduction_chain_check, theorem53_dimension

    if args.kind == "example51":
        rep = example51_report(args.q)
        return (0 if rep.passed else 1), rep.to_json()
    if args.kind == "chain":
        rep = reduction_chain_check(args.q)
        return (0 if rep.passed else 1), rep.to_json()
    try:
        rep = theorem53_dimension(args.p, args.k)
    except ArithmeticError as exc:
        return 1, {"error": str(exc)}
    out = rep.to_json()
    out.pop("kernel_basis", None)
    out.pop("inputs", None)
    return 0, out


def cmd_verify(args) -> tuple[int, dict]:
    from .acceptance import CRITERIA, run_criterion

    if not args.paper:
        raise InputError("use `verify --paper` to run the acceptance checks")
    wanted = [n for n, _, _ in CRITERIA]
    if args.only:
        wanted = [int(x) for x in args.only.split(",")]
    results = [run_criterion(n) for n in wanted]
    if args.format == "text":
        for r in results:
            print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    return (0 if ok else 1), {"passed": ok, "criteria": [r.to_json() for r in results]}


# -- argument parsing ---------------------------------------------------------------

GENS_HELP = "JSON list of matrices (or a file path); int entries embed Z -> F_p, list entries are coefficient vectors over F_p"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="drinfeld-obstruction", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("json", "text"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, gens=True):
        p.add_argument("--field", required=True, help='field descriptor, e.g. "p=3,k=2" or "p=3,k=2,mod=x^2+1"')
        if gens:
            p.add_argument("--gens", required=True, help=GENS_HELP)
        p.add_argument("--cap", type=int, default=10**4, help="size cap for closures and unknown counts")
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)

    p = sub.add_parser("h1", help="dim H^1(G, F^r)", description="Output JSON: {schema, input, dim_F, dim_Fp, group_order, method}.")
    common(p)
    p.add_argument("--method", choices=("brute", "full", "resolution"), default="brute")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("classify", help="type (1)-(6) of a subgroup of Sl_2", description="Output JSON: {schema, input, type, name, parameters, group_order}.")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("newton", help="Newton polygon of phi_a(Z) at a place", description="Output JSON: {schema, input, vertices, slopes, ramification_bound, torsion_polynomial, rank}.")
    common(p, gens=False)
    p.add_argument("--phi", required=True, help='phi_t, e.g. "t + t*T + t^2*T^2" (T is the Frobenius)')
    p.add_argument("--a", required=True, help="element a of F_q[t]")
    p.add_argument("--place", default="inf", help="monic irreducible polynomial in t, or inf")
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("s-dim", help="dimension of the intersection of restriction kernels", description="Output JSON: {schema, input, dim_F, dim_Fp, h1_dim_F, kernel_basis, per_datum, shortcut, assumptions, cross_check}.")
    common(p, gens=False)
    p.add_argument("--group", required=True, help=GENS_HELP)
    p.add_argument("--decomp", help="JSON list (or file) of {label, gens, ramified}")
    p.add_argument("--borel", action="store_true", help="use the <sigma> shortcut; --decomp then lists the places with p^2 | #D")
    p.set_defaults(func=cmd_sdim)

    p = sub.add_parser("report", help="construction reports", description="Output JSON: {schema, input, name, passed, checks, values} or an S-dimension report for thm53.")
    p.add_argument("kind", choices=("example51", "thm53", "chain"))
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run the acceptance checks", description="Output JSON: {schema, input, passed, criteria: [{criterion, title, passed, measured, elapsed_s}]}.")
    p.add_argument("--paper", action="store_true", help="run every acceptance criterion")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return ap


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format")}


def _render_text(out: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, val in out.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True) if isinstance(val, list) else val}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, out = args.func(args)
    except (InputError, ParseError, FieldError, GroupError) as exc:
        status, out = 2, {"error": str(exc)}
    except CapExceeded as exc:
        status, out = 2, {"error": str(exc), "size": exc.size, "cap": exc.cap}
    except ValueError as exc:
        status, out = 2, {"error": str(exc)}
    payload = {"schema": SCHEMA, "input": _echo(args), "command": args.command, **out}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_render_text(payload))
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

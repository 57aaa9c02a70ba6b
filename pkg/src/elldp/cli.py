"""Command-line entry point.  Every subcommand prints one JSON document.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import dplattice as dp
from .ellmoduli import (
    EllipticCurve,
    PsiHom,
    construct_marked_dp,
    effective_roots,
    point_from_json,
    random_psi,
    recover_psi,
)
from .gmweights import looijenga_weights, presentation, scan_e
from .instability import classify
from .localsing import CapTooSmall, DEFAULT_P, milnor_number, parse_poly
from .rootdata import TYPES, root_system
from .verify import run_tables


class BadInput(Exception):
    pass


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _type(tag: str | None, required: bool = True) -> str | None:
    if tag is None:
        if required:
            raise BadInput("--type is required")
        return None
    if tag not in TYPES:
        raise BadInput(f"unsupported type {tag!r}; expected one of {', '.join(TYPES)}")
    return tag


def cmd_tables(args) -> tuple[dict, int]:
    tags = [_type(args.type)] if args.type else list(TYPES)
    reports = run_tables(tags, threads=args.threads)
    ok = all(r.status == "pass" for r in reports)
    return {"reports": [r.to_json() for r in reports], "all_pass": ok}, 0 if ok else 1


def _lattice(tag: str) -> dp.DPLattice:
    return dp.build_dplattice(root_system(tag))


def _enumeration(args, fn) -> tuple[dict, int]:
    tag = _type(args.type)
    L = _lattice(tag)
    vecs, cert = fn(L)
    print(f"{tag}: {len(vecs)} found; certificate {json.dumps(cert.to_json(), sort_keys=True)}",
          file=sys.stderr)
    if args.count_only:
        return {"count": len(vecs)}, 0
    return {"type": tag, "count": len(vecs), "vectors": dp.canonical(vecs),
            "basis": "delta_1..delta_l, gamma", "certificate": cert.to_json()}, 0


def cmd_lines(args):
    return _enumeration(args, dp.enumerate_lines)


def cmd_roots(args):
    return _enumeration(args, dp.enumerate_roots)


def cmd_cochar(args) -> tuple[dict, int]:
    rs = root_system(_type(args.type))
    c = classify(rs, args.mode)
    out = {"type": rs.tag, "mode": args.mode}
    out.update(c.to_json())
    return out, 0


def cmd_ci(args) -> tuple[dict, int]:
    rs = root_system(_type(args.type))
    ci = presentation(rs)
    print(str(ci), file=sys.stderr)
    return {"type": rs.tag, "presentation": str(ci), "ambient": list(ci.ambient),
            "relations": list(ci.relations), "e_feasible": scan_e(rs),
            "multiplicity": ci.multiplicity(),
            "looijenga_weights": sorted(looijenga_weights(rs).elements())}, 0


def _load_psi(path: str, E: EllipticCurve, L: dp.DPLattice) -> PsiHom:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise BadInput(f"cannot read {path}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("delta_images", data.get("psi"))
    try:
        pts = tuple(point_from_json(P) for P in data)
        return PsiHom(E, L, pts)
    except (TypeError, ValueError, KeyError) as exc:
        raise BadInput(f"bad psi file: {exc}") from exc


def cmd_marked_dp(args) -> tuple[dict, int]:
    try:
        E = EllipticCurve(args.p, args.a, args.b)
    except ValueError as exc:
        raise BadInput(str(exc)) from exc
    if args.roundtrip:
        tags = [_type(args.type)] if args.type else list(TYPES)
        rng = random.Random(args.seed)
        results = {}
        ok = True
        for tag in tags:
            L = _lattice(tag)
            B = dp.geometric_basis(L)
            good = 0
            for _ in range(args.count):
                psi = random_psi(E, L, rng)
                good += recover_psi(construct_marked_dp(psi, B)) == psi
            results[tag] = {"trials": args.count, "identity": good}
            ok &= good == args.count
        return {"curve": {"p": E.p, "a": E.a, "b": E.b}, "seed": args.seed,
                "roundtrip": results, "all_pass": ok}, 0 if ok else 1
    tag = _type(args.type)
    if not args.psi:
        raise BadInput("either --psi or --roundtrip is required")
    L = _lattice(tag)
    psi = _load_psi(args.psi, E, L)
    M = construct_marked_dp(psi)
    back = recover_psi(M)
    roots, _ = dp.enumerate_roots(L)
    eff = effective_roots(psi, roots)
    return {"type": tag, "curve": {"p": E.p, "a": E.a, "b": E.b},
            "blowup_points": M.to_json()["points"], "plane_class": M.plane_class.to_json(),
            "recovered_psi": back.to_json(), "roundtrip_ok": back == psi,
            "effective_roots": dp.canonical(eff), "effective_root_count": len(eff)}, 0


def cmd_milnor(args) -> tuple[dict, int]:
    p = None if args.rational else args.p
    try:
        f = parse_poly(args.poly, p)
    except Exception as exc:  # sympy raises a zoo of parse errors
        raise BadInput(f"cannot parse polynomial: {exc}") from exc
    try:
        res = milnor_number(f, args.cap, p)
    except ValueError as exc:
        raise BadInput(str(exc)) from exc
    except CapTooSmall as exc:
        print(str(exc), file=sys.stderr)
        return {"mu": None, "error": "cap too small", "cap": args.cap}, 1
    out = res.to_json()
    out["field"] = "Q" if p is None else f"F_{p}"
    return out, 0


def cmd_nef(args) -> tuple[dict, int]:
    tag = _type(args.type)
    L = _lattice(tag)
    try:
        x = tuple(int(s) for s in args.cls.split(","))
    except ValueError as exc:
        raise BadInput(f"bad class: {exc}") from exc
    if len(x) != L.dim:
        raise BadInput(f"class needs {L.dim} coefficients (delta_1..delta_{L.l}, gamma)")
    roots, _ = dp.enumerate_roots(L)
    if args.effective == "all":
        eff = roots
    elif args.effective == "none":
        eff = []
    else:
        try:
            eff = [tuple(v) for v in json.loads(Path(args.effective).read_text())]
        except (OSError, ValueError, TypeError) as exc:
            raise BadInput(f"cannot read {args.effective}: {exc}") from exc
        stray = set(eff) - set(roots)
        if stray:
            raise BadInput(f"not roots: {sorted(stray)}")
    try:
        rep = dp.nef_report(L, x, eff)
    except ValueError as exc:
        raise BadInput(str(exc)) from exc
    out = {"type": tag, "class": list(x), "square": L.dot(x, x),
           "kappa_pairing": L.dot(x, L.kappa)}
    out.update(rep.to_json())
    return out, 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=True,
                        help="JSON output (the only format)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)

    ap = argparse.ArgumentParser(prog="elldp", parents=[common], description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="recompute and check the weight tables")
    p.add_argument("--type")
    p.set_defaults(func=cmd_tables)

    for name, func in (("lines", cmd_lines), ("roots", cmd_roots)):
        p = sub.add_parser(name, parents=[common], help=f"enumerate {name} of I_(1,l)")
        p.add_argument("--type", required=True)
        p.add_argument("--count-only", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("cochar", parents=[common], help="cocharacter classification")
    p.add_argument("action", choices=["classify"])
    p.add_argument("--type", required=True)
    p.add_argument("--mode", choices=["regular", "subregular"], required=True)
    p.set_defaults(func=cmd_cochar)

    p = sub.add_parser("ci", parents=[common], help="complete-intersection presentation")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("marked-dp", parents=[common], help="marked del Pezzo construction")
    p.add_argument("--type")
    p.add_argument("--p", type=int, default=101)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=7)
    p.add_argument("--psi")
    p.add_argument("--roundtrip", action="store_true")
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_marked_dp)

    p = sub.add_parser("milnor", parents=[common], help="Milnor number at the origin")
    p.add_argument("--poly", required=True)
    p.add_argument("--p", type=int, default=DEFAULT_P)
    p.add_argument("--cap", type=int, default=20)
    p.add_argument("--rational", action="store_true")
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("nef", parents=[common], help="nef test for a class")
    p.add_argument("--type", required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--effective", default="none")
    p.set_defaults(func=cmd_nef)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dump(out))
    return code


if __name__ == "__main__":
    sys.exit(main())

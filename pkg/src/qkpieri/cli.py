"""The ``qk`` command line.

Exit codes: 0 on success, 1 on domain or usage errors, 2 when two computations
that must agree do not.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import coeffs, tableaux
from .errors import ConsistencyError, DomainError, ParseError
from .qk_ring import QKClass, pieri, undeformed_pieri_lg
from .seidel import SeidelElement, act_on_shape, seidel_degree, seidel_multiply
from .strip_poset import (
    GRA, Family, derived_subshapes, ne_arm, parse_shape, skew, skew_stats,
)
from .symplectic_model import (
    SchubertSymbol, curve_nbhd_symbols, descriptor_text, diagram, gw_pieri, ppq_descriptor,
    richardson_dimension, theta_stats,
)
from .verify import iter_suite_names, run_suites


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit with 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "∅"):
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from exc


def _family(args: argparse.Namespace) -> Family:
    kind = getattr(args, "family", "lg")
    if kind in ("gr", "gra"):
        if args.m is None:
            raise DomainError("--m is required for Grassmannians of type A")
        return Family.gr(args.m, args.n)
    return Family(kind, args.n)


def _add_family(p: argparse.ArgumentParser, default: str | None = None) -> None:
    p.add_argument("--family", choices=["gr", "og", "lg"], default=default, required=default is None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="Gr(m,n) only")


# ---------------------------------------------------------------------------
# Commands: each returns (text, json-able record)

def cmd_pieri(args):
    f = _family(args)
    lam = parse_shape(f, args.shape)
    route = args.route
    if route and f.kind != "LG":
        raise DomainError("--route applies to LG(n,2n) only")
    c = pieri(args.p, lam, route)
    return str(c), c.to_dict()


def cmd_odot(args):
    f = Family.lg(args.n)
    mu = parse_shape(f, args.shape)
    c = undeformed_pieri_lg(args.p, mu, args.max_degree)
    top = mu.d + 2 if args.max_degree is None else args.max_degree
    rec = c.to_dict()
    rec["max_degree"] = top
    return f"{c}  (terms through q^{top})", rec


def cmd_seidel(args):
    f = _family(args)
    s = SeidelElement.parse(f, args.element)
    u = parse_shape(f, args.shape)
    c = seidel_multiply(s, QKClass.basis(u))
    rec = c.to_dict()
    rec["element"] = str(s)
    lines = [f"{s} * O[{','.join(map(str, u.mu))}]" + (f"·q^{u.d}" if u.d else "") + f" = {c}"]
    if u.d == 0:
        d = seidel_degree(s, u)
        if d != act_on_shape(s, u).d:
            raise ConsistencyError("degree from codimensions disagrees with the poset action")
        rec["degree"] = d
        lines.append(f"degree from codimensions: {d}")
    return "\n".join(lines), rec


def cmd_gw(args):
    lam, mu = _ints(args.lam), _ints(args.mu)
    value = gw_pieri(lam, mu, args.d, args.p, args.n)
    st = theta_stats(lam, mu, args.d, args.n)
    rec = {"value": value, "R": st.R if st else None, "N": st.N if st else None}
    return str(value), rec


def _skew_from_args(args):
    f = _family(args)
    outer = parse_shape(f, args.outer)
    inner = parse_shape(f, args.inner)
    return skew(outer, inner)


def cmd_tableaux(args):
    theta = _skew_from_args(args)
    if theta.family.kind == GRA:
        raise DomainError("tableaux are defined for OG and LG")
    ts = tableaux.enumerate_tableaux(args.kind.upper(), theta, args.p)
    sign = (-1) ** ((len(theta.boxes) - args.p) % 2)
    blocks = [t.serialize() for t in ts]
    text = "\n\n".join(blocks + [f"count: {len(ts)}  signed: {sign * len(ts)}"])
    rec = {"kind": args.kind.upper(), "p": args.p, "count": len(ts), "signed": sign * len(ts),
           "tableaux": [t.rows() for t in ts]}
    return text, rec


def cmd_diagram(args):
    if args.lam is not None or args.mu is not None:
        if args.lam is None or args.mu is None or args.d is None:
            raise DomainError("--lambda, --mu and --d must be given together")
        P, Q = curve_nbhd_symbols(_ints(args.lam), _ints(args.mu), args.d, args.n)
    else:
        if args.P is None or args.Q is None:
            raise DomainError("give either --P/--Q or --lambda/--mu/--d")
        P, Q = SchubertSymbol(args.n, _ints(args.P)), SchubertSymbol(args.n, _ints(args.Q))
    M = diagram(P, Q)
    if M.dimension != richardson_dimension(P, Q):
        raise ConsistencyError("diagram dimension disagrees with the length difference")
    stats = M.stats()
    desc = descriptor_text(M.n, ppq_descriptor(P, Q))
    text = "\n".join([
        M.ascii(args.bars),
        f"P = {P}  Q = {Q}",
        f"dimension: {M.dimension}",
        f"components: {' '.join(map(str, M.components))}",
        f"lone stars: {list(M.lone_stars)}",
        f"quadratic components: {list(M.quadratic_components)}",
        f"movable rows: {list(M.movable_rows)}",
        f"image: {desc}",
    ])
    stats["image"] = desc
    return text, stats


def cmd_poset(args):
    theta = _skew_from_args(args)
    st = skew_stats(theta)
    rec = {"boxes": [list(b) for b in sorted(theta.boxes)], "stats": st._asdict()}
    lines = [f"boxes: {sorted(theta.boxes)}"]
    lines += [f"{k}: {v}" for k, v in st._asdict().items()]
    if theta.family.kind != GRA and theta.boxes:
        sub = derived_subshapes(theta)
        arm = ne_arm(theta)
        rec["derived"] = {k: sorted(map(list, v.boxes)) for k, v in sub._asdict().items()}
        rec["arm"] = {"psi": sorted(map(list, arm.psi.boxes)), "row": arm.arm_is_row,
                      "column": arm.arm_is_column, "connected": arm.connected}
        for k, v in sub._asdict().items():
            lines.append(f"{k}: {sorted(v.boxes)}")
        lines.append(f"arm: {sorted(arm.psi.boxes)} row={arm.arm_is_row} "
                     f"column={arm.arm_is_column} connected={arm.connected}")
        if args.p is not None:
            vals = {"C": coeffs.coeff_C(theta, args.p), "H": coeffs.coeff_H(theta, args.p),
                    "N": coeffs.coeff_N(theta, args.p)}
            rec["coefficients"] = vals
            lines.append("coefficients: " + " ".join(f"{k}={v}" for k, v in vals.items()))
    return "\n".join(lines), rec


def cmd_verify(args):
    names = list(iter_suite_names(args.suite))
    results = run_suites(names, args.max_size)
    lines = [r.summary() for r in results]
    for r in results:
        lines += [f"  {msg}" for msg in r.failures]
    rec = {"suites": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                       "failures": r.failures} for r in results]}
    failed = any(not r.ok for r in results)
    return "\n".join(lines), rec, (2 if failed else 0)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qk", description="Quantum K-theory Pieri calculator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("pieri", help="O^p * O^lambda")
    _add_family(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--shape", required=True, help='shape literal, e.g. "7,5,4,2" or "2,1@d1"')
    p.add_argument("--route", choices=list(coeffs.ROUTES["N"]), default=None)
    common(p)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("odot", help="undeformed product for LG(n,2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--shape", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_odot)

    p = sub.add_parser("seidel", help="multiply by a Seidel element")
    _add_family(p)
    p.add_argument("--element", required=True, help='word such as "sigma^2*q"')
    p.add_argument("--shape", required=True)
    common(p)
    p.set_defaults(func=cmd_seidel)

    p = sub.add_parser("gw", help="Pieri-type Gromov-Witten invariant of LG(n,2n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("tableaux", help="enumerate KOG/KLG/QKLG tableaux on outer/inner")
    _add_family(p)
    p.add_argument("--kind", choices=["kog", "klg", "qklg", "KOG", "KLG", "QKLG"], required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("diagram", help="matrix diagram of a Richardson variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--P", default=None)
    p.add_argument("--Q", default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--bars", choices=["double-cuts", "cuts"], default="double-cuts")
    common(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("poset", help="statistics of the skew shape outer/inner")
    _add_family(p)
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    p.add_argument("--p", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-size", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ConsistencyError as exc:
        print(f"qk: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"qk: {exc}", file=sys.stderr)
        return 1
    text, rec, *rest = result
    code = rest[0] if rest else 0
    if args.format == "json":
        _emit(json.dumps(rec, sort_keys=False), args.out)
    else:
        _emit(text, args.out)
    return code


run = main


if __name__ == "__main__":
    sys.exit(main())

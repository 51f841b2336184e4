"""
Command-line front end.

Element literals are Python-style expressions over T[i,j,...] (T_w for the
word), Tinv[...] (its inverse), Z[c1,...,cn], q, integers, +, -, *, ** or ^
with integer exponents, and parentheses. T[] is the unit.

Exit codes: 0 success, 1 failed verification, 2 parse error, 3 math-domain
error, 4 word cap exceeded.
"""

from __future__ import annotations

import argparse
import ast
import json
import re
import sys
from pathlib import Path

from .blalgebra import BLAlgebra, BLElt, bl_algebra
from .errors import LengthCapExceeded, MathDomainError
from .heckew import HWElt, hecke_w
from .rootdata import RootDatum, load_datum
from .suites import SUITES, SuiteConfig, run_suite
from .supportsets import VARIANTS, reverse_tilde_T, script_S, script_T_of_elt
from .weyl import weyl_group

EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAP = 1, 2, 3, 4


class ParseError(ValueError):
    pass


# element grammar


def _ints(node: ast.AST) -> list[int]:
    elts = node.elts if isinstance(node, ast.Tuple) else [node]
    out = []
    for e in elts:
        if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
            out.append(-_int(e.operand))
        else:
            out.append(_int(e))
    return out


def _int(node: ast.AST) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    raise ParseError(f"expected an integer, got {ast.dump(node)}")


def parse_element(alg: BLAlgebra, text: str) -> BLElt:
    src = re.sub(r"\b(T|Tinv|Z)\[\s*\]", r"\1[()]", text.replace("^", "**"))
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(alg, tree.body)


def _eval(alg: BLAlgebra, node: ast.AST):
    if isinstance(node, ast.BinOp):
        left = _eval(alg, node.left)
        if isinstance(node.op, ast.Pow):
            k = _int(node.right) if not isinstance(node.right, ast.UnaryOp) else -_int(node.right.operand)
            return _power(alg, left, k)
        right = _eval(alg, node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval(alg, node.operand)
        return -val if isinstance(node.op, ast.USub) else val
    elif isinstance(node, ast.Constant) and isinstance(node.value, int):
        return alg.scalar(node.value)
    elif isinstance(node, ast.Name) and node.id == "q":
        return alg.scalar(alg.H.q)
    elif isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name):
        args = _ints(node.slice) if not (isinstance(node.slice, ast.Tuple) and not node.slice.elts) else []
        name = node.value.id
        if name == "T":
            return alg.T(args)
        if name == "Tinv":
            return alg.Tinv(args)
        if name == "Z":
            if len(args) != alg.datum.n:
                raise ParseError(f"Z needs {alg.datum.n} coordinates, got {len(args)}")
            return alg.Z(args)
    raise ParseError(f"unsupported syntax: {ast.unparse(node)}")


def _power(alg: BLAlgebra, base: BLElt, k: int) -> BLElt:
    if k < 0:
        if base == alg.scalar(alg.H.q):
            return alg.scalar(alg.H.q ** k)
        raise ParseError("negative powers are only allowed for q")
    out = alg.scalar(1)
    for _ in range(k):
        out = out * base
    return out


def parse_ints(text: str) -> list[int]:
    text = text.strip().strip("[]()")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


# serialization


def hw_json(h: HWElt | dict) -> list[dict]:
    terms = h.terms if isinstance(h, HWElt) else h
    return [{"word": list(w.word), "coeff": terms[w].to_json(), "text": str(terms[w])}
            for w in sorted(terms)]


def bl_json(a: BLElt) -> list[dict]:
    rows = a.to_json()
    for row in rows:
        lam, w = tuple(row["coweight"]), a.alg.W.from_word(row["word"])
        row["text"] = str(a.terms[lam][w])
    return rows


# commands


def cmd_compute(datum: RootDatum, args) -> dict:
    alg = bl_algebra(datum)
    W = alg.W
    if args.kind == "product":
        a, b = parse_element(alg, args.a), parse_element(alg, args.b)
        return {"product": bl_json(a * b)}
    if args.kind == "convert":
        a = parse_element(alg, args.elt)
        if args.to == "Z":
            return {"Z": bl_json(a)}
        if args.to == "T":
            exp = alg.expand_in_T(a)
            return {"T": [{"coweight": list(lam), "coeff": hw_json(exp[lam])} for lam in sorted(exp)]}
        if args.to == "full":
            exp = alg.expand_full_T(a)
            return {"full": [{"coweight": list(mu), "word": list(x.word), "coeff": c.to_json(),
                              "text": str(c)} for (mu, x), c in sorted(exp.items())]}
        exp = alg.right_decomposition_raw(a.terms)
        return {"right": [{"coweight": list(lam), "coeff": hw_json(exp[lam])} for lam in sorted(exp)]}
    if args.kind == "support":
        w = W.from_word(parse_ints(args.w))
        lam = tuple(parse_ints(args.lam))
        if args.variant == "S":
            pts = script_S(datum, w, lam, args.cap)
        elif args.variant == "reverse":
            pts, exact = reverse_tilde_T(datum, lam, w, tuple(parse_ints(args.bound)), args.cap)
            return {"points": sorted(map(list, pts)), "exact": exact}
        else:
            pts = script_T_of_elt(datum, args.variant, w, lam, args.cap)
        return {"points": sorted(map(list, pts))}
    if args.kind == "inverse":
        H = hecke_w(datum)
        w = W.from_word(parse_ints(args.w))
        return {
            "w": list(w.word),
            "t_inverse": hw_json(H.t_inverse(w)),
            "a_poly": [{"u": list(u.word), "coeff": H.a_poly(u, w).to_json(), "text": str(H.a_poly(u, w))}
                       for u in sorted(W.bruhat_lower_interval(w, args.cap))],
        }
    raise ParseError(f"unknown compute kind {args.kind!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--datum", default="affine_a1", help="JSON path or bundled datum name")
    common.add_argument("--L", type=int, default=8, help="orbit length bound")
    common.add_argument("--cap", type=int, default=12, help="word length cap")
    common.add_argument("--depth", type=int, default=3, help="window height depth")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--maxlen", type=int, default=6)
    common.add_argument("--count", type=int, default=None, help="number of random instances")
    common.add_argument("--out", type=Path, default=None, help="write JSON here instead of stdout")

    p = argparse.ArgumentParser(prog="kmhecke", description="Iwahori-Hecke algebras of Kac-Moody root data")
    sub = p.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", parents=[common])
    comp.add_argument("kind", choices=["product", "convert", "support", "inverse"])
    comp.add_argument("--a")
    comp.add_argument("--b")
    comp.add_argument("--elt")
    comp.add_argument("--to", choices=["T", "Z", "full", "right"], default="T")
    comp.add_argument("--variant", choices=[*VARIANTS, "S", "reverse"], default="plain")
    comp.add_argument("--w", default="")
    comp.add_argument("--lam", default="")
    comp.add_argument("--bound", default="", help="dominant bound for --variant reverse")

    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("suite", nargs="?", choices=sorted(SUITES))
    ver.add_argument("--suite", dest="suite_flag", choices=sorted(SUITES))

    orb = sub.add_parser("orbit", parents=[common])
    orb.add_argument("--dom", required=True)
    dr = sub.add_parser("dominant-rep", parents=[common])
    dr.add_argument("--lam", required=True)
    br = sub.add_parser("bruhat", parents=[common])
    br.add_argument("--u", required=True)
    br.add_argument("--w", required=True)
    sub.add_parser("datum", parents=[common])
    return p


def _emit(doc: dict, out: Path | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=False)
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        datum = load_datum(args.datum)
        W = weyl_group(datum)
        code = 0
        if args.command == "compute":
            doc = cmd_compute(datum, args)
        elif args.command == "verify":
            name = args.suite or args.suite_flag
            if name is None:
                raise ParseError("verify needs a suite name")
            cfg = SuiteConfig(L=args.L, cap=args.cap, depth=args.depth, seed=args.seed,
                              maxlen=args.maxlen, count=args.count)
            doc = run_suite(name, datum, cfg)
            code = EXIT_FAIL if doc["summary"]["failed"] else 0
        elif args.command == "orbit":
            orb = W.orbit_upto(tuple(parse_ints(args.dom)), args.L)
            doc = {"orbit": [{"point": list(p), "w": list(w.word)} for p, w in
                             sorted(orb.items(), key=lambda kv: (kv[1].length, kv[0]))]}
        elif args.command == "dominant-rep":
            ans = W.in_tits_cone(tuple(parse_ints(args.lam)))
            doc = {"tag": ans.tag, "dominant": list(ans.dominant) if ans.inside else None,
                   "w": list(ans.w.word) if ans.inside else None}
        elif args.command == "bruhat":
            u, w = W.from_word(parse_ints(args.u)), W.from_word(parse_ints(args.w))
            doc = {"u": list(u.word), "w": list(w.word), "leq": W.bruhat_leq(u, w)}
        else:
            doc = datum.to_config() | {"N": datum.N}
        _emit(doc, args.out)
        return code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LengthCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MathDomainError, ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 on verification failure, 2 on usage errors
(unknown verb, malformed permutation, tripped size guard).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import checks, grobner, hilbert, ideal, perm, pipedream, poly, subword
from .limits import SizeGuardError
from .perm import Perm


class UsageError(Exception):
    pass


def parse_permutation(text: str) -> Perm:
    """Accept compact one-line form ("2143") or a JSON array ("[2,1,4,3]")."""
    text = text.strip()
    try:
        if text.startswith("["):
            return perm.validate(json.loads(text))
        if not text.isdigit():
            raise ValueError(text)
        return perm.validate(int(ch) for ch in text)
    except (ValueError, json.JSONDecodeError):
        raise UsageError(f"malformed permutation: {text!r}") from None


def _emit_poly(f, as_json: bool) -> None:
    print(poly.poly_to_json(f) if as_json else poly.poly_str(f))


def cmd_schubert(args) -> int:
    w = parse_permutation(args.permutation)
    f = poly.double_schubert(w) if args.double else poly.schubert(w)
    _emit_poly(f, args.json)
    return 0


def cmd_grothendieck(args) -> int:
    w = parse_permutation(args.permutation)
    f = poly.double_grothendieck(w) if args.double else poly.grothendieck(w)
    _emit_poly(f, args.json)
    return 0


def cmd_rp(args) -> int:
    w = parse_permutation(args.permutation)
    dreams = (
        pipedream.rp_bruteforce(w) if args.method == "brute" else pipedream.rp_mitosis(w)
    )
    ordered = sorted(dreams, key=lambda d: d.sorted_crosses())
    if args.json:
        print(json.dumps([d.to_jsonable() for d in ordered]))
        return 0
    for d in ordered:
        if args.render:
            print(d.render())
            print()
        else:
            print(d.to_json())
    return 0


def cmd_mitosis(args) -> int:
    dream = pipedream.PipeDream.from_json(args.dream)
    offspring = sorted(
        pipedream.mitosis(args.row, dream), key=lambda d: d.sorted_crosses()
    )
    if args.json:
        print(json.dumps([d.to_jsonable() for d in offspring]))
        return 0
    for d in offspring:
        if args.render:
            print(d.render())
            print()
        else:
            print(d.to_json())
    return 0


def cmd_ideal(args) -> int:
    w = parse_permutation(args.permutation)
    minors = sorted(
        ideal.schubert_generators(w), key=lambda m: (m.size, m.rows, m.cols)
    )
    jw = ideal.antidiagonal_ideal(w)
    gens = sorted(sorted(g) for g in jw.generators)
    if args.json:
        print(
            json.dumps(
                {
                    "minors": [m.to_jsonable() for m in minors],
                    "antidiagonal_ideal": [[list(c) for c in g] for g in gens],
                }
            )
        )
        return 0
    print(f"{len(minors)} minors")
    for m in minors:
        print(f"  rows {list(m.rows)} cols {list(m.cols)}")
    print(f"antidiagonal ideal, {len(gens)} generators")
    for g in gens:
        print("  " + "*".join(poly.var_name(poly.zvar(i, j)) for (i, j) in g))
    return 0


def cmd_gb_verify(args) -> int:
    order_names = [args.order]
    if args.all_s4:
        perms = list(perm.all_perms(4))
    else:
        if args.permutation is None:
            raise UsageError("gb-verify needs a permutation or --all-s4")
        perms = [parse_permutation(args.permutation)]
    results = []
    ok = True
    for w in perms:
        n = len(w)
        for name in order_names:
            order = grobner.TERM_ORDERS[name](n)
            t0 = time.perf_counter()
            passed = grobner.verify_theorem_b(w, order)
            dt = time.perf_counter() - t0
            ok = ok and passed
            results.append(
                {
                    "permutation": list(w),
                    "order": name,
                    "pass": passed,
                    "generators": len(ideal.schubert_generators(w)),
                    "seconds": round(dt, 4),
                }
            )
    if args.json:
        print(json.dumps(results))
    else:
        for r in results:
            status = "PASS" if r["pass"] else "FAIL"
            print(
                f"{status} {''.join(map(str, r['permutation']))} {r['order']}"
                f" gens={r['generators']} t={r['seconds']}s"
            )
    return 0 if ok else 1


def cmd_kpoly(args) -> int:
    w = parse_permutation(args.permutation)
    k = hilbert.k_polynomial(ideal.antidiagonal_ideal(w), "zn2")
    _emit_poly(hilbert.coarsen(k, "zn2", args.grading), args.json)
    return 0


def cmd_multidegree(args) -> int:
    w = parse_permutation(args.permutation)
    _emit_poly(
        hilbert.multidegree_of_ideal(ideal.antidiagonal_ideal(w), args.grading),
        args.json,
    )
    return 0


def cmd_subword(args) -> int:
    word = tuple(int(part) for part in args.word.replace(",", " ").split())
    pi = parse_permutation(args.perm)
    n = max(len(pi), max(word, default=0) + 1)
    cox = subword.symmetric_group(n)
    delta = subword.subword_complex(word, perm.embed(pi, n), cox)
    payload: dict = {"facets": delta.facets_sorted()}
    if args.decompose and not delta.is_void():
        tree = subword.vertex_decompose(delta)
        shelling = subword.shelling_from_decomposition(tree)
        payload["decomposition"] = subword.decomposition_to_jsonable(tree)
        payload["shelling"] = [sorted(f) for f in shelling]
        payload["is_shelling"] = subword.is_shelling(shelling, delta.facets)
    if args.json:
        print(json.dumps(payload))
    else:
        for f in payload["facets"]:
            print(" ".join(map(str, f)))
        if "shelling" in payload:
            print("shelling: " + "; ".join(" ".join(map(str, f)) for f in payload["shelling"]))
            print(f"is_shelling: {payload['is_shelling']}")
    return 0


def cmd_check_all(args) -> int:
    results = checks.run_all(n=args.n, slow=args.slow)
    ok = all(passed for _, passed, _ in results)
    if args.json:
        print(
            json.dumps(
                [
                    {"check": name, "pass": passed, "detail": detail}
                    for name, passed, detail in results
                ]
            )
        )
        return 0 if ok else 1
    for name, passed, detail in results:
        line = f"{'PASS' if passed else 'FAIL'} {name}"
        if detail:
            line += f" ({detail})"
        print(line)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert",
        description="Schubert polynomials, pipe dreams, determinantal ideals, "
        "and their desk-scale verification",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    p.add_argument("permutation")
    p.add_argument("--double", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("grothendieck", help="Grothendieck polynomial")
    p.add_argument("permutation")
    p.add_argument("--double", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_grothendieck)

    p = sub.add_parser("rp", help="reduced pipe dreams")
    p.add_argument("permutation")
    p.add_argument("--method", choices=["mitosis", "brute"], default="mitosis")
    p.add_argument("--render", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_rp)

    p = sub.add_parser("mitosis", help="apply a mitosis operator to a pipe dream")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--dream", required=True, help='JSON like {"n":4,"crosses":[[1,1]]}')
    p.add_argument("--render", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_mitosis)

    p = sub.add_parser("ideal", help="Schubert determinantal minors and J_w")
    p.add_argument("permutation")
    add_json(p)
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("gb-verify", help="verify the Groebner-basis statement")
    p.add_argument("permutation", nargs="?")
    p.add_argument(
        "--order",
        choices=["antidiag-revlex", "antidiag-lex", "diag"],
        default="antidiag-revlex",
    )
    p.add_argument("--all-s4", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_gb_verify)

    p = sub.add_parser("kpoly", help="K-polynomial of k[z]/J_w")
    p.add_argument("permutation")
    p.add_argument("--grading", choices=list(hilbert.GRADINGS), default="zn")
    add_json(p)
    p.set_defaults(func=cmd_kpoly)

    p = sub.add_parser("multidegree", help="multidegree of k[z]/J_w")
    p.add_argument("permutation")
    p.add_argument("--grading", choices=list(hilbert.GRADINGS), default="zn")
    add_json(p)
    p.set_defaults(func=cmd_multidegree)

    p = sub.add_parser("subword", help="facets of a subword complex")
    p.add_argument("--word", required=True, help='letters, e.g. "3,2,3,2,3"')
    p.add_argument("--perm", required=True)
    p.add_argument("--decompose", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_subword)

    p = sub.add_parser("check-all", help="run the verification suite")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--slow", action="store_true", help="include the S5 sweeps")
    add_json(p)
    p.set_defaults(func=cmd_check_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, SizeGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

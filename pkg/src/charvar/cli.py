"""Command-line front end: ``charvar <command> [flags]``.

Exit codes: 0 success or pass, 1 failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import charpoly, n2ring
from .exact import LaurentPoly, UsageError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SECONDS = 120.0


class CheckFailed(Exception):
    pass


def estimate_seconds(kind: str, n: int, g: int) -> float:
    """Rough single-core cost model fitted to measured runs."""
    if kind == "bivariate":
        return 0.004 * 3.0 ** n * (g + 1) ** 1.5
    if kind == "univariate":
        return 0.0005 * 2.5 ** n * (g + 1)
    if kind == "ring":
        return 1e-5 * 4.0 ** g
    if kind == "oracle":
        from .gloracle.groups import gl_order

        return 2e-7 * gl_order(n, g) ** 2
    return 0.0


def _budget(kind: str, n: int, g: int, limit: float) -> None:
    est = estimate_seconds(kind, n, g)
    if est > limit:
        raise UsageError(
            f"request exceeds the budget: estimated {est:.3g} s > {limit:g} s "
            f"(raise --max-seconds to run it anyway)"
        )


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _poly_payload(command: str, params: dict, p: LaurentPoly) -> dict:
    return {"command": command, "params": params, "result": p.to_json_obj()}


def _verdict(args, ok: bool, line: str) -> None:
    if ok:
        return
    if args.report:
        print(f"WARN {line}", file=sys.stderr)
        return
    raise CheckFailed(line)


def cmd_epoly(args) -> None:
    _budget("univariate", args.n, args.g, args.max_seconds)
    p = charpoly.e_bar(args.n, args.g) if args.bar else charpoly.e_poly(args.n, args.g)
    params = {"n": args.n, "g": args.g, "bar": args.bar}
    _emit(args, _poly_payload("epoly", params, p), str(p))


def cmd_hbar(args) -> None:
    _budget("bivariate", args.n, args.g, args.max_seconds)
    p = charpoly.h_bar(args.n, args.g)
    _emit(args, _poly_payload("hbar", {"n": args.n, "g": args.g}, p), str(p))


def cmd_mhp(args) -> None:
    _budget("bivariate", args.n, args.g, args.max_seconds)
    p = charpoly.mhp_conj(args.n, args.g, "pgl" if args.pgl else "gl")
    if args.pure:
        p = charpoly.pure_part(p)
    params = {"n": args.n, "g": args.g, "pgl": args.pgl, "pure": args.pure}
    _emit(args, _poly_payload("mhp", params, p), str(p))


def cmd_apoly(args) -> None:
    kind = "univariate" if args.route == "hua" else "bivariate"
    _budget(kind, args.n, args.g, args.max_seconds)
    if args.route == "both":
        p = charpoly.a_poly_checked(args.n, args.g)
    else:
        p = charpoly.a_poly(args.n, args.g, args.route)
    params = {"n": args.n, "g": args.g, "route": args.route}
    _emit(args, _poly_payload("apoly", params, p), str(p))


def cmd_euler(args) -> None:
    _budget("univariate", args.n, args.g, args.max_seconds)
    value = charpoly.euler_char_pgl(args.n, args.g)
    expected = charpoly.euler_char_expected(args.n, args.g)
    ok = value == expected
    payload = {
        "command": "euler",
        "params": {"n": args.n, "g": args.g},
        "result": value,
        "expected": expected,
        "passed": ok,
    }
    _emit(args, payload, f"{value}")
    _verdict(args, ok, f"euler n={args.n} g={args.g}: {value} != mu(n) n^(2g-3) = {expected}")


def cmd_untwisted(args) -> None:
    _budget("univariate", args.order, args.g, args.max_seconds)
    series = charpoly.untwisted_series(args.g, args.order)
    payload = {"command": "untwisted", "params": {"g": args.g, "N": args.order},
               "result": series.to_json_obj()}
    text = "\n".join(f"T^{i}: {c}" for i, c in enumerate(series.coeffs))
    _emit(args, payload, text)


_CHECK_NAMES = {"g0": "g0", "g0u": "g0-univariate", "g1": "g1", "gh": "gh",
                "duality": "duality", "t-minus-one": "t-minus-one"}


def cmd_verify(args) -> None:
    mode = _CHECK_NAMES[args.check]
    params = {}
    if mode in ("g0", "g0-univariate", "g1"):
        order = args.order or {"g0": 5, "g0-univariate": 8, "g1": 6}[mode]
        kind = "univariate" if mode == "g0-univariate" else "bivariate"
        _budget(kind, order, 1, args.max_seconds)
        params["order"] = order
    elif mode == "gh":
        n = args.n or args.order or 5
        _budget("bivariate", n, 0, args.max_seconds)
        params["n"] = n
    else:
        n, g = args.n or 2, 2 if args.g is None else args.g
        _budget("bivariate" if mode == "t-minus-one" else "univariate", n, g, args.max_seconds)
        params.update(n=n, g=g)
    report = charpoly.verify_identity(mode, **params)
    _emit(args, {"command": "verify", **report.to_json_obj()}, report.line())
    _verdict(args, report.passed, report.line())


def cmd_oracle(args) -> None:
    from .gloracle import build_gl, genus_count, primitive_root_of_unity

    if args.g < 1:
        raise UsageError("g must be >= 1")
    _budget("oracle", args.n, args.q, args.max_seconds)
    G = build_gl(args.n, args.q)
    q, n, g = args.q, args.n, args.g
    if args.mode == "twisted":
        zeta = primitive_root_of_unity(n, q)
        count = genus_count(G, g, G.scalar(zeta), args.backend)
        pgl = G.order // (q - 1)
        expected = charpoly.e_poly(n, g).evaluate({"q": q}) * pgl
    else:
        count = genus_count(G, g, G.identity, args.backend)
        coeff = charpoly.untwisted_series(g, n)[n].evaluate({"q": q})
        expected = coeff * q ** ((g - 1) * n * n) * G.order
    ok = count == expected
    payload = {"command": "oracle", "params": {"mode": args.mode, "n": n, "q": q, "g": g},
               "count": count, "expected": expected, "group_order": G.order, "passed": ok}
    _emit(args, payload, f"{'PASS' if ok else 'FAIL'} count={count} expected={expected}")
    _verdict(args, ok, f"oracle {args.mode} n={n} q={q} g={g}: {count} != {expected}")


def cmd_m2(args) -> None:
    g = args.g
    if g < 1:
        raise UsageError("g must be >= 1")
    _budget("ring", 2, g, args.max_seconds)
    if args.what == "ring":
        p = n2ring.mhp_m2_ring(g, args.pgl)
    elif args.what == "closed":
        p = n2ring.mhp2_closed(g, args.pgl)
    else:
        if g < 2:
            raise UsageError("the Lefschetz check needs g >= 2")
        results = n2ring.lefschetz_all(g)
        ok = all(r.isomorphism for r in results)
        payload = {"command": "m2", "params": {"what": "lefschetz", "g": g},
                   "pieces": [r.to_json_obj() for r in results], "passed": ok}
        lines = [
            f"l={r.l} i={r.i} dim={r.domain_dim}->{r.codomain_dim} rank={r.rank} "
            f"{'iso' if r.isomorphism else 'NOT iso'}"
            for r in results
        ]
        _emit(args, payload, "\n".join(lines + ["PASS" if ok else "FAIL"]))
        _verdict(args, ok, f"curious Hard Lefschetz fails for g={g}")
        return
    params = {"what": args.what, "g": g, "pgl": args.pgl}
    _emit(args, _poly_payload("m2", params, p), str(p))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--report", action="store_true",
                        help="downgrade check failures to a WARN line and exit 0")
    common.add_argument("--max-seconds", type=float, default=MAX_SECONDS,
                        help="reject requests whose estimated cost is larger")

    parser = argparse.ArgumentParser(prog="charvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ng(p, n=True, g=True):
        if n:
            p.add_argument("-n", type=int, required=True)
        if g:
            p.add_argument("-g", type=int, required=True)

    p = sub.add_parser("epoly", parents=[common], help="E-polynomial E_n(q)")
    ng(p)
    p.add_argument("--bar", action="store_true", help="normalised q^{-d_n/2} E_n(q)")
    p.set_defaults(func=cmd_epoly)

    p = sub.add_parser("hbar", parents=[common], help="H-bar_n(z, w)")
    ng(p)
    p.set_defaults(func=cmd_hbar)

    p = sub.add_parser("mhp", parents=[common], help="conjectural mixed Hodge polynomial")
    ng(p)
    p.add_argument("--pgl", action="store_true")
    p.add_argument("--pure", action="store_true")
    p.set_defaults(func=cmd_mhp)

    p = sub.add_parser("apoly", parents=[common], help="Kac polynomial A_n(q)")
    ng(p)
    p.add_argument("--route", choices=("specialize", "hua", "both"), default="both")
    p.set_defaults(func=cmd_apoly)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic of the PGL quotient")
    ng(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("untwisted", parents=[common], help="untwisted Hom-count series")
    ng(p, n=False)
    p.add_argument("-N", "--order", type=int, required=True)
    p.set_defaults(func=cmd_untwisted)

    p = sub.add_parser("verify", parents=[common], help="exact identity checks")
    p.add_argument("--check", choices=tuple(_CHECK_NAMES), required=True)
    p.add_argument("--order", "-N", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("-g", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force counts over GL_n(F_q)")
    p.add_argument("--mode", choices=("twisted", "untwisted"), required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--backend", choices=("numba", "numpy"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("m2", parents=[common], help="rank 2 cohomology ring computations")
    p.add_argument("--what", choices=("ring", "closed", "lefschetz"), required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--pgl", action="store_true")
    p.set_defaults(func=cmd_m2)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (charpoly.ConsistencyError, charpoly.ConjectureCounterexample) as exc:
        if args.report:
            print(f"WARN {exc}", file=sys.stderr)
            return EXIT_OK
        print(f"FAIL {exc}", file=sys.stderr)
        return EXIT_FAIL
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())

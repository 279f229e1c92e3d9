"""Command-line interface.

Exit codes: 0 success, 1 property failure, 2 input error, 3 undecided
because a search cap was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Sequence

from . import borel, graphs, linquot, suite
from .io import (
    ParseError,
    ideal_to_dict,
    parse_graph,
    parse_ideal,
    parse_int_list,
    parse_monomial_list,
    render_graph,
    render_ideal,
    render_monomial,
)
from .monomial import MonomialIdeal, minimalize, times_monomial
from .oracle import GuardrailError, betti_table, check_field, hs_all, hs_oracle

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _field(text: str | None) -> int:
    if text is None or text.lower() in ("q", "0"):
        return 0
    try:
        p = int(text)
    except ValueError:
        raise InputError(f"--field must be 'q' or a prime, got {text!r}") from None
    try:
        return check_field(p)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _bound(text: str) -> list[int | None]:
    out: list[int | None] = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("inf", "*", "-"):
            out.append(None)
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise InputError(f"bad bound entry {tok!r}") from None
    return out


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def ideal(self, I: MonomialIdeal, **extra) -> None:
        if self.as_json:
            self.doc({**ideal_to_dict(I), **extra})
        else:
            sys.stdout.write(render_ideal(I))

    def doc(self, d) -> None:
        sys.stdout.write(json.dumps(d, sort_keys=True) + "\n")

    def text(self, s: str) -> None:
        sys.stdout.write(s if s.endswith("\n") else s + "\n")


# -- subcommands -----------------------------------------------------------------


def cmd_hs(args, out: Output) -> int:
    I = parse_ideal(_read(args.ideal), args.nvars)
    p = _field(args.field)
    j = args.j
    if j < 0:
        raise InputError("-j must be nonnegative")
    method = args.method
    if method == "oracle":
        H = hs_oracle(I, j, p)
    elif method == "sets":
        cert = linquot.find_linear_quotient_order(I)
        if cert is linquot.UNDECIDED:
            sys.stderr.write("undecided: linear quotient search hit its cap\n")
            return EXIT_UNDECIDED
        if cert is None:
            sys.stderr.write("ideal has no linear quotient order\n")
            return EXIT_FAIL
        H = linquot.hs_via_sets(cert, j)
    elif method == "stable":
        if not linquot.is_stable(I):
            sys.stderr.write("ideal is not stable\n")
            return EXIT_FAIL
        H = linquot.hs_stable(I, j)
    else:  # linrel
        if j != 1:
            raise InputError("--method linrel computes HS_1 only")
        try:
            H = linquot.hs1_linearly_related(I, p)
        except ValueError as exc:
            sys.stderr.write(f"{exc}\n")
            return EXIT_FAIL
    out.ideal(H, j=j)
    return EXIT_OK


def cmd_betti(args, out: Output) -> int:
    I = parse_ideal(_read(args.ideal), args.nvars)
    p = _field(args.field)
    if not I.is_proper_nonzero():
        raise InputError("Betti table requires a nonzero proper ideal")
    table = betti_table(I, p)
    rows = table.sorted_entries()
    if out.as_json:
        out.doc({"nvars": I.nvars, "field": p, "entries": [{"i": i, "multidegree": list(a), "beta": b} for i, a, b in rows]})
    else:
        for i, a, b in rows:
            out.text(f"{i} {render_monomial(a)} {b}")
    return EXIT_OK


PREDICATES = {
    "linear-quotients": "certificate search for a linear quotient order",
    "linear-resolution": "every Betti number in degree d + i",
    "stable": "stable ideal",
    "strongly-stable": "strongly stable ideal",
    "polymatroidal": "exchange property",
    "strong-exchange": "strong exchange property",
    "vertex-splittable": "vertex splittable ideal",
}


def _check_predicate(name: str, I: MonomialIdeal, p: int, out: Output) -> int:
    from .oracle import has_linear_resolution

    detail = None
    if name == "linear-quotients":
        cert = linquot.find_linear_quotient_order(I)
        if cert is linquot.UNDECIDED:
            result = linquot.UNDECIDED
        else:
            result = cert is not None
            if cert:
                detail = {"order": [render_monomial(u) for u in cert.order], "sets": [sorted(i + 1 for i in s) for s in cert.sets]}
    elif name == "linear-resolution":
        result = has_linear_resolution(I, p)
    elif name == "stable":
        result = linquot.is_stable(I)
    elif name == "strongly-stable":
        result = borel.is_strongly_stable(I)
    elif name == "polymatroidal":
        result = borel.is_polymatroidal(I)
    elif name == "strong-exchange":
        result = borel.satisfies_strong_exchange(I)
    else:
        tree = linquot.is_vertex_splittable(I)
        result = linquot.UNDECIDED if tree is linquot.UNDECIDED else tree is not None
    status = "undecided" if result is linquot.UNDECIDED else ("true" if result else "false")
    if out.as_json:
        out.doc({"property": name, "result": status, **({"certificate": detail} if detail else {})})
    else:
        out.text(status)
        if detail:
            for u, s in zip(detail["order"], detail["sets"]):
                out.text(f"{u} {{{','.join(map(str, s))}}}")
    if result is linquot.UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_OK if result else EXIT_FAIL


def cmd_check(args, out: Output) -> int:
    p = _field(args.field)
    text = _read(args.input)
    if args.property in PREDICATES:
        return _check_predicate(args.property, parse_ideal(text, args.nvars), p, out)
    if args.property not in suite.REGISTRY:
        names = sorted(set(suite.REGISTRY) | set(PREDICATES))
        raise InputError(f"unknown property {args.property!r}; choose from {', '.join(names)}")
    try:
        inst = json.loads(text)
    except json.JSONDecodeError:
        inst = None
    if not isinstance(inst, dict):
        inst = {"ideal": ideal_to_dict(parse_ideal(text, args.nvars))}
    elif "gens" in inst:
        inst = {"ideal": inst}
    try:
        outcome = suite.check_instance(args.property, inst, p)
    except (KeyError, TypeError) as exc:
        raise InputError(f"instance does not fit property {args.property!r}: {exc}") from None
    if out.as_json:
        out.doc({"property": args.property, "status": outcome.status, "detail": outcome.detail})
    else:
        out.text(outcome.status + (f": {outcome.detail}" if outcome.detail else ""))
    return {suite.FAIL: EXIT_FAIL, suite.UNDECIDED: EXIT_UNDECIDED}.get(outcome.status, EXIT_OK)


def cmd_borel(args, out: Output) -> int:
    seeds, n = parse_monomial_list(_read(args.seeds), args.nvars)
    if not seeds:
        raise InputError("need at least one seed monomial")
    if args.stable:
        I = borel.stable_closure(seeds, n)
    elif args.c:
        c = _bound(args.c)
        if len(c) != n:
            raise InputError(f"bound has {len(c)} entries but there are {n} variables")
        I = borel.c_bounded_borel_closure(seeds, c)
    else:
        I = borel.borel_closure(seeds, n)
    if args.hs is not None:
        I = hs_oracle(I, args.hs, _field(args.field))
    out.ideal(I)
    return EXIT_OK


def cmd_veronese(args, out: Output) -> int:
    c = parse_int_list(args.c)
    n, d = args.n, args.d
    if len(c) != n:
        raise InputError(f"-c has {len(c)} entries but -n is {n}")
    if sum(c) < d:
        raise InputError("Veronese type ideal is zero (sum of c is below d)")
    if args.principal:
        u = borel.veronese_principal_generator(c, n, d)
        out.doc({"principal": list(u)}) if out.as_json else out.text(render_monomial(u))
        return EXIT_OK
    if args.hs is None:
        out.ideal(borel.veronese(c, n, d))
    elif args.method == "oracle":
        out.ideal(hs_oracle(borel.veronese(c, n, d), args.hs, _field(args.field)))
    else:
        out.ideal(borel.hs_veronese(c, n, d, args.hs))
    return EXIT_OK


def cmd_graph(args, out: Output) -> int:
    G = parse_graph(_read(args.edges), args.n)
    base = G
    if args.complement:
        G = graphs.complement(G)
    if args.whisker:
        G = graphs.whisker(G)
    if args.show_graph:
        sys.stdout.write(render_graph(G))
        return EXIT_OK
    if args.peo:
        peo = graphs.chordal_peo(G)
        if peo is None:
            out.doc({"chordal": False}) if out.as_json else out.text("not chordal")
            return EXIT_FAIL
        out.doc({"chordal": True, "peo": [v + 1 for v in peo]}) if out.as_json else out.text(" ".join(str(v + 1) for v in peo))
        return EXIT_OK
    I = graphs.edge_ideal(G)
    if args.hs is None:
        out.ideal(I)
        return EXIT_OK
    if args.method == "formula":
        # chordal formula for I(H^c), H the input graph
        if args.whisker or not args.complement:
            raise InputError("--method formula needs --complement and no --whisker")
        peo = graphs.chordal_peo(base)
        if peo is None:
            sys.stderr.write("graph is not chordal\n")
            return EXIT_FAIL
        out.ideal(graphs.hs_chordal_complement(base, peo, args.hs))
        return EXIT_OK
    out.ideal(hs_oracle(I, args.hs, _field(args.field)))
    return EXIT_OK


def cmd_suite(args, out: Output) -> int:
    caps = suite.Caps(args.max_vars, args.max_gens, args.max_deg, args.instances)
    if min(args.max_vars, args.max_gens, args.max_deg, args.instances) < 1:
        raise InputError("caps must be positive")
    fields = (_field(args.field),) if args.field is not None else None
    try:
        report = suite.run_suite(args.seed, caps, names=args.property or None, fields=fields, workers=args.workers)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    sys.stdout.write(report.to_json(timings=args.timings) + "\n")
    return report.exit_code()


def _random_polymatroidal(rng: random.Random, n: int, d: int) -> MonomialIdeal | None:
    """Drop random generators from a Veronese type ideal, keep the result if
    it still has the exchange property, and shift it by a random monomial."""

    c = [rng.randint(1, d) for _ in range(n)]
    if sum(c) < d:
        return None
    I = borel.veronese(c, n, d)
    gens = [g for g in I.gens if rng.random() < 0.8] or list(I.gens[:1])
    J = minimalize(gens, n)
    if not borel.is_polymatroidal(J):
        return None
    m = tuple(rng.randint(0, 1) for _ in range(n))
    return times_monomial(J, m)


def cmd_experiment(args, out: Output) -> int:
    """Search for a polymatroidal ideal whose shift ideals are not polymatroidal.
    Reports what it finds; a hit is not a failure of the library."""
    rng = random.Random(args.seed)
    p = _field(args.field)
    tried = 0
    hits = []
    for _ in range(args.trials):
        n = rng.randint(2, args.max_vars)
        d = rng.randint(2, args.max_deg)
        I = _random_polymatroidal(rng, n, d)
        if I is None:
            continue
        tried += 1
        for j, H in enumerate(hs_all(I, p)):
            if not borel.is_polymatroidal(H):
                hits.append({"ideal": ideal_to_dict(I), "j": j, "hs": ideal_to_dict(H)})
                break
    doc = {"seed": args.seed, "polymatroidal_tested": tried, "non_polymatroidal_shifts": hits}
    if out.as_json:
        out.doc(doc)
    else:
        out.text(f"tested {tried} polymatroidal ideals; {len(hits)} with a non-polymatroidal shift ideal")
        for h in hits:
            out.text(json.dumps(h, sort_keys=True))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS, help="'q' (characteristic 0, default) or a prime")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="homshift", description="Homological shift ideals of monomial ideals.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_arg(sp, name="ideal"):
        sp.add_argument(name, help="monomials like 'x1^2*x3, x2' or a JSON document; '-' reads stdin, a path reads a file")
        sp.add_argument("--nvars", type=int, default=None, help="ambient number of variables")

    sp = sub.add_parser("hs", parents=[common], help="compute HS_j(I)")
    ideal_arg(sp)
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("--method", choices=["oracle", "sets", "stable", "linrel"], default="oracle")
    sp.set_defaults(func=cmd_hs)

    sp = sub.add_parser("betti", parents=[common], help="multigraded Betti numbers")
    ideal_arg(sp)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("check", parents=[common], help="check a property on one instance")
    sp.add_argument("property", help="a suite property name or one of: " + ", ".join(PREDICATES))
    ideal_arg(sp, "input")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("borel", parents=[common], help="Borel, c-bounded Borel or stable closure")
    sp.add_argument("seeds", help="seed monomials")
    sp.add_argument("--nvars", type=int, default=None)
    sp.add_argument("-c", default=None, help="bound vector, e.g. 2,1,inf")
    sp.add_argument("--stable", action="store_true", help="stable instead of strongly stable closure")
    sp.add_argument("--hs", type=int, default=None, help="print HS_k of the closure instead")
    sp.set_defaults(func=cmd_borel)

    sp = sub.add_parser("veronese", parents=[common], help="ideals of Veronese type")
    sp.add_argument("-c", required=True, help="bound vector, e.g. 1,1,1")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("--hs", type=int, default=None)
    sp.add_argument("--method", choices=["formula", "oracle"], default="formula")
    sp.add_argument("--principal", action="store_true", help="print a principal c-bounded Borel generator")
    sp.set_defaults(func=cmd_veronese)

    sp = sub.add_parser("graph", parents=[common], help="edge ideals of graphs")
    sp.add_argument("edges", help="'1-2,2-3' or a file with an 'n <count>' header and 'i j' lines")
    sp.add_argument("-n", type=int, default=None, help="number of vertices")
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--whisker", action="store_true")
    sp.add_argument("--hs", type=int, default=None)
    sp.add_argument("--method", choices=["oracle", "formula"], default="oracle")
    sp.add_argument("--peo", action="store_true", help="print a perfect elimination ordering")
    sp.add_argument("--show-graph", action="store_true", help="print the transformed graph")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("suite", parents=[common], help="seeded randomized property suite (JSON report)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-vars", type=int, default=4)
    sp.add_argument("--max-gens", type=int, default=5)
    sp.add_argument("--max-deg", type=int, default=3)
    sp.add_argument("--instances", type=int, default=200)
    sp.add_argument("--property", action="append", help="run only this property (repeatable)")
    sp.add_argument("--workers", type=int, default=None, help="worker processes (default HOMSHIFT_THREADS or 1)")
    sp.add_argument("--timings", action="store_true", help="include runtimes (output is then not byte-stable)")
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("experiment", parents=[common], help="search for polymatroidal ideals with non-polymatroidal shifts")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--max-vars", type=int, default=4)
    sp.add_argument("--max-deg", type=int, default=3)
    sp.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.field = getattr(args, "field", None)
    out = Output(getattr(args, "json", False))
    try:
        return args.func(args, out)
    except (InputError, ParseError, GuardrailError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Every subcommand prints one JSON object per line on stdout (keys sorted, so
output is byte-stable).  ``--pretty`` switches to an indented, human layout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify as cls
from .graph import (
    Graph,
    GraphFormatError,
    Labeling,
    clique_complex,
    connected_components,
    find_closed_labeling,
    is_chordal,
    leaf_order,
    parse_graph,
)
from .primes import ClosedCMStructure, cm_closed_primes, cut_sets, multiplicity_via_associativity

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_graph(src: str | None) -> Graph:
    if src is None:
        raise ValueError("a graph argument is required")
    if src == "-":
        text = sys.stdin.read()
    else:
        path = Path(src)
        if path.exists():
            text = path.read_text()
        elif ";" in src or src.lstrip().startswith("{"):
            text = src
        else:
            raise FileNotFoundError(f"cannot read graph file {src!r}")
    return parse_graph(text)


def _cap(value: str):
    return value if value == "auto" else int(value)


def _engine_on(value: str) -> bool:
    return value == "on"


# ------------------------------------------------------------ subcommands


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    pdec = cut_sets(g)
    rep = cls.classify(g)
    peo = is_chordal(g)
    lab = find_closed_labeling(g)
    cc = clique_complex(g)
    out = {
        "graph": g.to_dict(),
        "components": [sorted(c) for c in connected_components(g)],
        "chordal": peo is not None,
        "perfect_elimination_order": None if peo is None else peo.order,
        "closed": lab is not None,
        "closed_labeling": None if lab is None else list(lab.perm),
        "maximal_cliques": cc.sorted_facets(),
        "leaf_order": leaf_order(cc),
        "dim": pdec.krull_dim,
        "unmixed": pdec.unmixed,
        "minimal_primes": [r.to_dict() for r in pdec.records],
        "classification": rep.to_dict(explain=args.explain),
        "depth": rep.depth,
        "cm": rep.cm,
    }
    if _engine_on(args.engine):
        from .algebra import depth_and_cm, edge_betti

        work = g if lab is None else g.relabel(lab)
        table = edge_betti(work, args.prime, cap=_cap(args.cap), cross_prime=args.cross_prime)
        eng = depth_and_cm(g, args.prime, table=table)
        out["engine"] = {**eng.to_dict(), "field": f"GF({args.prime})"}
        if rep.depth is not None and eng.depth is not None and rep.depth != eng.depth:
            out["disagreement"] = f"theorem depth {rep.depth} vs engine depth {eng.depth}"
        out["depth"] = eng.depth if rep.depth is None else rep.depth
        if out["cm"] is None:
            out["cm"] = eng.cm
        out["depth_source"] = "theorem" if rep.depth is not None else "engine"
    print(_dump(out, args.pretty))
    return EXIT_DISAGREEMENT if "disagreement" in out else EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args.graph)
    fns = {
        "auto": cls.classify,
        "special-chordal": cls.classify_special_chordal,
        "forest": cls.classify_forest,
        "closed": cls.classify_closed,
    }
    try:
        rep = fns[args.theorem](g)
    except cls.OutsideClass as exc:
        out = {"class_tag": "outside", "theorem": args.theorem, "reason": str(exc)}
        if args.explain:
            out["explain"] = [f"{args.theorem}: hypothesis fails: {exc}"]
        print(_dump(out, args.pretty))
        return EXIT_OK
    print(_dump(rep.to_dict(explain=args.explain), args.pretty))
    return EXIT_OK


def cmd_primes(args) -> int:
    if args.breakpoints:
        a = tuple(int(x) for x in args.breakpoints.split(","))
        st = ClosedCMStructure(a[-1], a)
        out = {
            "structure": st.to_dict(),
            "minimal_primes": [{"S": list(s), "multiplicity": m} for s, m in cm_closed_primes(st)],
            "multiplicity": multiplicity_via_associativity(st),
        }
    else:
        g = _read_graph(args.graph)
        pdec = cut_sets(g)
        out = pdec.to_dict()
        if pdec.unmixed:
            out["multiplicity"] = pdec.multiplicity
    print(_dump(out, args.pretty))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    from .algebra import edge_ideal_gb, hilbert_series_monomial

    g = _read_graph(args.graph)
    gb = edge_ideal_gb(g, p=args.prime)
    hs = hilbert_series_monomial(gb.leading_monomials, 2 * g.n)
    out = {"graph": g.to_dict(), "engine": hs.to_dict()}
    try:
        rep = cls.classify_closed(g)
        if rep.cm:
            out["closed_formula"] = {
                "numerator": rep.hilbert_numerator,
                "multiplicity": rep.multiplicity,
                "a_invariant": rep.a_invariant,
            }
            out["agree"] = (
                list(hs.reduced) == rep.hilbert_numerator
                and hs.multiplicity == rep.multiplicity
                and hs.a_invariant == rep.a_invariant
            )
    except cls.OutsideClass:
        pass
    print(_dump(out, args.pretty))
    return EXIT_DISAGREEMENT if out.get("agree") is False else EXIT_OK


def _labeling_arg(g: Graph, text: str | None) -> Labeling | None:
    if not text:
        return None
    if text == "closed":
        lab = find_closed_labeling(g)
        if lab is None:
            raise ValueError("graph is not closed")
        return lab
    return Labeling(tuple(int(x) for x in text.split(",")))


def cmd_groebner(args) -> int:
    from .algebra import edge_ideal_gb

    g = _read_graph(args.graph)
    lab = _labeling_arg(g, args.labeling)
    gb = edge_ideal_gb(g, lab, args.prime)
    out = {
        "basis": gb.format(),
        "quadratic": gb.is_quadratic(),
        "max_degree": gb.max_degree(),
        "order": "lex x1>...>xn>y1>...>yn",
        "field": f"GF({args.prime})",
    }
    if args.show_initial:
        out["initial_ideal"] = [gb.ring.format_monomial(m) for m in gb.leading_monomials]
    print(_dump(out, args.pretty))
    return EXIT_OK


def cmd_betti(args) -> int:
    from .algebra import edge_betti, initial_betti

    g = _read_graph(args.graph)
    lab = _labeling_arg(g, args.labeling)
    fn = initial_betti if args.initial else edge_betti
    table = fn(g, args.prime, lab=lab, cap=_cap(args.cap), cross_prime=args.cross_prime)
    if args.format == "text" or args.pretty:
        print(f"Betti numbers of {'in(J_G)' if args.initial else 'J_G'} over GF({args.prime})")
        print(table.format())
        print(f"pd(S/I) = {table.projective_dimension}, depth = {table.depth}, verified = {table.verified}")
        for d in table.diagnostics:
            print(f"note: {d}")
    else:
        print(_dump(table.to_dict(), False))
    return EXIT_OK


def cmd_verify_identity(args) -> int:
    if args.power:
        res = cls.verify_power_identity(args.r)
        out = res.to_dict()
        ok = res.holds
    elif args.linear is not None:
        from .algebra import complement_chordality_check

        ok = complement_chordality_check(args.linear)
        out = {"n": args.linear, "complement_chordal": ok}
    else:
        b = [int(x) for x in args.b.split(",")]
        ok, lhs, rhs = cls.verify_multiplicity_identity(b)
        out = {"b": b, "lhs": lhs, "rhs": rhs, "equal": ok}
    print(_dump(out, args.pretty))
    return EXIT_OK if ok else EXIT_DISAGREEMENT


def cmd_census(args) -> int:
    from .census import CensusLimitError, census

    bad = 0
    count = 0
    try:
        stream = census(
            args.max_n,
            args.prime,
            engine=_engine_on(args.engine),
            jobs=args.jobs,
            max_n_limit=args.limit,
        )
        for rec in stream:
            count += 1
            if not rec.agrees:
                bad += 1
            print(_dump(rec.to_dict(full=args.full), args.pretty))
    except CensusLimitError as exc:
        print(_dump({"truncated": True, "reason": str(exc), "records": count}, args.pretty))
        return EXIT_USAGE
    print(_dump({"summary": True, "records": count, "disagreements": bad}, args.pretty))
    return EXIT_DISAGREEMENT if bad else EXIT_OK


def cmd_probe(args) -> int:
    from .algebra import conjecture_probe

    g = _read_graph(args.graph)
    res = conjecture_probe(g, args.prime, engine=_engine_on(args.engine))
    print(_dump(res.to_dict(), args.pretty))
    return EXIT_OK


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=32003)
    common.add_argument("--cap", default="auto", help="degree cap for Betti numbers, or 'auto'")
    common.add_argument("--pretty", action="store_true")
    common.add_argument("--engine", choices=["on", "off"], default="on")
    common.add_argument("--cross-prime", action="store_true")

    ap = argparse.ArgumentParser(prog="binedge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full combinatorial + engine report")
    p.add_argument("graph")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[common], help="apply one classification theorem")
    p.add_argument("graph")
    p.add_argument("--theorem", choices=["auto", "special-chordal", "forest", "closed"], default="auto")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("primes", parents=[common], help="minimal primes via cut sets")
    p.add_argument("graph", nargs="?")
    p.add_argument("--breakpoints", help="comma-separated breakpoints 1=a1<...<n of a CM closed graph")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series of S/J_G")
    p.add_argument("graph")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("groebner", parents=[common], help="reduced lex Groebner basis of J_G")
    p.add_argument("graph")
    p.add_argument("--show-initial", action="store_true")
    p.add_argument("--labeling", help="comma-separated permutation, or 'closed'")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("graph")
    p.add_argument("--initial", action="store_true", help="use the initial ideal")
    p.add_argument("--labeling", help="comma-separated permutation, or 'closed'")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify-identity", parents=[common], help="check the multiplicity identities")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--power", action="store_true")
    g.add_argument("--b", help="comma-separated positive integers")
    g.add_argument("--linear", type=int, metavar="N", help="complement-chordality check for size N")
    p.add_argument("--r", type=int, default=3)
    p.set_defaults(func=cmd_verify_identity)

    p = sub.add_parser("census", parents=[common], help="cross-check every theorem on small graphs")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=7, help="safety bound on --max-n")
    p.add_argument("--full", action="store_true", help="serialize every record in full")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("probe-conjecture", parents=[common], help="Betti evidence for chains of cliques")
    p.add_argument("graph")
    p.set_defaults(func=cmd_probe)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print(_dump({"error": str(exc)}, False), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

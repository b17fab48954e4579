"""Command line front end.

Subcommands:

    analyze   cut sets, heights, and classification flags for a graph file
    family    emit a member of one of the built-in graph families
    certify   check a splitting certificate; exit 0 pass, 2 fail
    oracle    exact Groebner cross-checks (membership order, colon identity)

Graph files are either the JSON shape {"d": ..., "edges": [[i, j], ...]} or
plain text (first line d, then one "i j" edge per line); the format is
sniffed.  Errors print a single {"error": {...}} object and exit 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .certify import (
    canonical_witness,
    certificate_to_json,
    certify_strong_freg,
    certify_symbolic_fsplit,
    order_lower_bound,
)
from .errors import BudgetExceeded, InputError
from .graphs import Graph, graph_to_json, graph_to_text, parse_graph
from .oracle import (
    DEFAULT_PAIR_BUDGET,
    colon,
    frobenius_bracket,
    ideal_power,
    ideals_equal,
    intersect,
    minimal_prime_ideal,
    power_membership_order,
)
from .polyfp import expand
from .primes import classify, enumerate_minimal_primes, report_json

FAMILY_BUILDERS = {
    "multipartite": (families.complete_multipartite, None),
    "caterpillar": (families.caterpillar, None),
    "join-of-completes": (None, None),
    "half-graph": (families.half_graph, 1),
    "flipped-half-graph": (families.flipped_half_graph, 1),
    "complete": (families.complete_graph, 1),
    "path": (families.path_graph, 1),
}


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path!r}: {exc}") from None
    return parse_graph(text)


def _parse_cut_set(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        values = sorted({int(tok) for tok in text.replace(",", " ").split()})
    except ValueError:
        raise InputError(f"cannot parse cut set {text!r}") from None
    return tuple(values)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommand handlers

def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    if args.format == "json":
        sys.stdout.write(report_json(g, args.budget_subsets))
        return 0
    primes = enumerate_minimal_primes(g, args.budget_subsets)
    cls = classify(g, args.budget_subsets)
    lines = [f"d = {g.d}, edges = {len(g.edges)}", f"cut sets ({len(primes)}):"]
    for p in primes:
        s = "{" + ",".join(str(v) for v in p.cut_set) + "}"
        blocks = " ".join("{" + ",".join(str(v) for v in b) + "}" for b in p.components)
        lines.append(f"  S = {s:<12} height {p.height:<3} components {blocks}")
    lines.append(
        f"assCount {cls.ass_count}, unmixed {cls.unmixed}, "
        f"accessible {cls.accessible}, traceable {cls.traceable}"
    )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_family(args) -> int:
    name = args.name
    params = list(args.params)
    if name == "join-of-completes":
        if len(params) < 2:
            raise InputError("join-of-completes needs n0 followed by at least one part size")
        g = families.join_of_completes(params[0], params[1:])
    else:
        builder, arity = FAMILY_BUILDERS[name]
        if arity == 1:
            if len(params) != 1:
                raise InputError(f"{name} takes exactly one parameter")
            g = builder(params[0])
        else:
            if not params:
                raise InputError(f"{name} needs at least one parameter")
            g = builder(params)
    text = graph_to_json(g) if args.format == "json" else graph_to_text(g)
    _emit(text, args.out)
    return 0


def _certificate_text(cert) -> str:
    lines = [
        f"kind: {cert.kind}",
        f"p = {cert.p}, verdict {cert.verdict.upper()}",
        "witness: " + " * ".join(cert.witness.atom_strings()),
    ]
    if cert.cofactor_index is not None:
        lines.append(f"cofactor: {cert.witness.atom_strings()[cert.cofactor_index]}")
    lines.append("per prime:")
    for r in cert.per_prime:
        s = "{" + ",".join(str(v) for v in r.cut_set) + "}"
        ok = "ok" if r.bound >= r.required else "FAIL"
        lines.append(f"  S = {s:<12} height {r.height:<3} required {r.required:<3} bound {r.bound:<3} {ok}")
    lines.append(f"frobenius check: {'ok' if cert.frobenius_ok else 'FAIL'}")
    for a in cert.assumptions:
        lines.append(f"note: {a}")
    if list(cert.labeling_used) != list(range(1, len(cert.labeling_used) + 1)):
        lines.append("labeling used: " + " ".join(str(v) for v in cert.labeling_used))
    return "\n".join(lines) + "\n"


def cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    kwargs = dict(
        search_labelings=args.search_labelings,
        labeling_budget=args.budget_labelings,
        max_subsets=args.budget_subsets,
        frobenius_guard=args.frobenius_guard,
        frobenius_override=args.force_frobenius,
    )
    if args.strong_freg:
        cert = certify_strong_freg(g, args.p, cofactor=args.cofactor, **kwargs)
    else:
        cert = certify_symbolic_fsplit(g, args.p, **kwargs)
    if args.format == "json":
        sys.stdout.write(certificate_to_json(cert))
    else:
        sys.stdout.write(_certificate_text(cert))
    return 0 if cert.passed else 2


def cmd_oracle_order(args) -> int:
    g = _load_graph(args.graph)
    cut = _parse_cut_set(args.cut_set)
    prime = None
    for cand in enumerate_minimal_primes(g, args.budget_subsets):
        if cand.cut_set == cut:
            prime = cand
            break
    if prime is None:
        raise InputError(f"{list(cut)} is not a cut set of this graph")
    witness = canonical_witness(g.d)
    bound = order_lower_bound(witness, prime)
    cap = args.max_n if args.max_n is not None else bound + 1
    poly = expand(witness, args.p)
    ideal = minimal_prime_ideal(prime, args.p)
    order = power_membership_order(poly, ideal, max_n=cap, pair_budget=args.budget_pairs)
    consistent = order >= bound
    if args.format == "json":
        obj = {
            "p": args.p,
            "S": list(cut),
            "height": prime.height,
            "combinatorialBound": bound,
            "oracleOrder": order,
            "cappedAt": cap,
            "consistent": consistent,
        }
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"S = {list(cut)}: height {prime.height}, bound {bound}, "
            f"oracle order {order} (capped at {cap}), "
            f"{'consistent' if consistent else 'INCONSISTENT'}\n"
        )
    return 0 if consistent else 2


def cmd_oracle_colon(args) -> int:
    g = _load_graph(args.graph)
    qs = enumerate_minimal_primes(g, args.budget_subsets)
    ideals = [minimal_prime_ideal(q, args.p) for q in qs]
    budget = args.budget_pairs

    def symbolic_power(n: int):
        acc = ideal_power(ideals[0], n)
        for ide in ideals[1:]:
            acc = intersect(acc, ideal_power(ide, n), budget)
        return acc

    lhs = colon(frobenius_bracket(symbolic_power(args.a)), symbolic_power(args.b), budget)
    rhs = None
    for ide in ideals:
        piece = colon(frobenius_bracket(ideal_power(ide, args.a)), ideal_power(ide, args.b), budget)
        rhs = piece if rhs is None else intersect(rhs, piece, budget)
    match = ideals_equal(lhs, rhs, budget)
    if args.format == "json":
        obj = {
            "p": args.p,
            "a": args.a,
            "b": args.b,
            "primeCount": len(qs),
            "match": match,
        }
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        verdict = "holds" if match else "FAILS"
        sys.stdout.write(
            f"colon identity {verdict} for p={args.p}, a={args.a}, b={args.b} "
            f"over {len(qs)} minimal primes\n"
        )
    return 0 if match else 2


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="beicert",
        description="Cut-set structure and Frobenius splitting certificates for binomial edge ideals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--format", choices=("json", "text"), default=fmt_default)

    pa = sub.add_parser("analyze", help="cut sets and classification for a graph file")
    pa.add_argument("graph", help="path to a graph file (JSON or text)")
    pa.add_argument("--budget-subsets", type=int, default=1 << 22)
    common(pa)
    pa.set_defaults(func=cmd_analyze)

    pf = sub.add_parser("family", help="emit a built-in graph family member")
    pf.add_argument("name", choices=sorted(FAMILY_BUILDERS))
    pf.add_argument("params", type=int, nargs="+",
                    help="family parameters (part sizes, leg counts, n0 + sizes, or a single size)")
    pf.add_argument("-o", "--out", default=None, help="write to a file instead of stdout")
    common(pf)
    pf.set_defaults(func=cmd_family)

    pc = sub.add_parser("certify", help="verify a splitting certificate")
    pc.add_argument("graph")
    pc.add_argument("--p", type=int, default=2, help="prime characteristic (default 2)")
    pc.add_argument("--strong-freg", action="store_true",
                    help="check the strong F-regularity certificate instead")
    pc.add_argument("--cofactor", default="y1",
                    help='cofactor atom for --strong-freg, e.g. "y1" or "m(1,2)"')
    pc.add_argument("--search-labelings", action="store_true",
                    help="retry failing graphs under other labelings")
    pc.add_argument("--budget-labelings", type=int, default=20000)
    pc.add_argument("--budget-subsets", type=int, default=1 << 22)
    pc.add_argument("--frobenius-guard", type=int, default=64,
                    help="refuse when d*(p-1) exceeds this, unless --force-frobenius")
    pc.add_argument("--force-frobenius", action="store_true")
    common(pc)
    pc.set_defaults(func=cmd_certify)

    po = sub.add_parser("oracle", help="exact Groebner cross-checks")
    osub = po.add_subparsers(dest="oracle_command", required=True)

    poo = osub.add_parser("order", help="membership order of the witness in one minimal prime")
    poo.add_argument("graph")
    poo.add_argument("--p", type=int, default=2)
    poo.add_argument("--cut-set", default="", help='comma separated, e.g. "2" or "4,5,6"; empty for S = {}')
    poo.add_argument("--max-n", type=int, default=None,
                     help="cap on the tested power (default: bound + 1)")
    poo.add_argument("--budget-subsets", type=int, default=1 << 22)
    poo.add_argument("--budget-pairs", type=int, default=DEFAULT_PAIR_BUDGET)
    common(poo)
    poo.set_defaults(func=cmd_oracle_order)

    poc = osub.add_parser("colon-identity",
                          help="compare (J^(a))^[p] : J^(b) against the prime-by-prime intersection")
    poc.add_argument("graph")
    poc.add_argument("--p", type=int, default=2)
    poc.add_argument("--a", type=int, default=1)
    poc.add_argument("--b", type=int, default=1)
    poc.add_argument("--budget-subsets", type=int, default=1 << 22)
    poc.add_argument("--budget-pairs", type=int, default=DEFAULT_PAIR_BUDGET)
    common(poc)
    poc.set_defaults(func=cmd_oracle_colon)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BudgetExceeded) as exc:
        obj = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

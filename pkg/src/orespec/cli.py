"""Command-line front end.

Exit codes: 0 clean, 1 counterexample found, 2 usage or parse error,
3 size/degree budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .centre import centre_ring, check_rho_criteria, rho
from .dsl import ParseError, evaluate, parse_ring_expr
from .finring import (
    DEFAULT_ORDER_CAP,
    RingError,
    RingTable,
    SizeLimitError,
    bits,
    centre_mask,
    is_commutative,
    units_mask,
)
from .harness import (
    CorpusConfig,
    build_corpus,
    inject_table_fault,
    render_machine,
    render_text,
    run_suite,
)
from .checks import COVERAGE, REGISTRY
from .ideals import (
    all_ideals,
    classify_ideal,
    is_semiprime_ring,
    min_primes,
    prime_radical,
)
from .localization import (
    NotDenominatorError,
    ZeroAbsorbedError,
    classify_set,
    close_multiplicative,
    enumerate_mult_sets,
    localize,
    min_RS,
    min_RS_id,
)
from .monomial import (
    CollapsedLocalizationError,
    CommMonomialRing,
    DegreeBudgetError,
    an_build,
    an_min_primes,
    an_verify,
    default_degree_bound,
    localize_monomial,
    min_primes_monomial,
    render_monomial,
)

EXIT_CLEAN = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _eval_ring(text: str, cap: int) -> RingTable:
    obj = evaluate(parse_ring_expr(text), cap)
    if not isinstance(obj, RingTable):
        raise RingError("this subcommand needs a finite ring expression")
    return obj


def _ideal_str(r: RingTable, mask) -> str:
    return "{" + ",".join(r.name(i) for i in bits(mask)) + "}"


def cmd_describe(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    print(f"ring:        {r.label}")
    print(f"order:       {r.order}")
    print(f"commutative: {is_commutative(r)}")
    print(f"semiprime:   {is_semiprime_ring(r)}")
    print(f"units:       {sorted(bits(units_mask(r)))}")
    print(f"centre:      {sorted(bits(centre_mask(r)))}")
    print("elements:")
    for i in r.elements():
        print(f"  {i:3d}  {r.name(i)}")
    return EXIT_CLEAN


def cmd_ideals(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    lat = all_ideals(r)
    print(f"{len(lat)} two-sided ideals of {r.label}:")
    for i in lat.ideals:
        rep = classify_ideal(i) if not i.is_full() else None
        flags = ""
        if rep:
            flags = "".join(
                f for f, on in (
                    (" prime", rep.is_prime),
                    (" completely-prime", rep.is_completely_prime),
                    (" semiprime", rep.is_semiprime_ideal),
                ) if on
            )
        print(f"  {_ideal_str(r, i.mask)}{flags}")
    return EXIT_CLEAN


def cmd_minprimes(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    for p in min_primes(r):
        print(_ideal_str(r, p.mask))
    rad = prime_radical(r)
    print(f"prime radical: {_ideal_str(r, rad.mask)}")
    return EXIT_CLEAN


def cmd_multsets(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    sets = enumerate_mult_sets(r, args.exhaustive_order)
    print(f"{len(sets)} multiplicative sets of {r.label}:")
    for s in sets:
        cls = classify_set(s)
        tags = []
        if cls.left_den and cls.right_den:
            tags.append("denominator")
        elif cls.left_den:
            tags.append("left-denominator")
        elif cls.left_ore:
            tags.append("left-ore")
        print(f"  {s.members()}  {' '.join(tags)}  ass_l={sorted(bits(cls.ass_l_mask))}")
    return EXIT_CLEAN


def _gens_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip() != ""]


def cmd_classify_set(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    s = close_multiplicative(r, _gens_list(args.gens))
    cls = classify_set(s)
    print(f"set:        {s.members()}")
    print(f"left ore:   {cls.left_ore}\nright ore:  {cls.right_ore}")
    print(f"left den:   {cls.left_den}\nright den:  {cls.right_den}")
    print(f"ass_l:      {sorted(bits(cls.ass_l_mask))}")
    print(f"ass_r:      {sorted(bits(cls.ass_r_mask))}")
    return EXIT_CLEAN


def cmd_localize(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    s = close_multiplicative(r, _gens_list(args.gens))
    loc = localize(r, s)
    print(f"set:           {s.members()}")
    print(f"ass ideal:     {_ideal_str(r, loc.ass.mask)}")
    print(f"target order:  {loc.target.order}")
    print(f"min(R,S):      {[_ideal_str(r, p.mask) for p in min_RS(r, s)]}")
    print(f"min(R,S,id):   {[_ideal_str(r, p.mask) for p in min_RS_id(loc)]}")
    from .ideals import min_prime_masks_over

    local_mins = min_prime_masks_over(loc.target, 1 << loc.target.zero)
    print(f"localized min: {[_ideal_str(loc.target, m) for m in local_mins]}")
    return EXIT_CLEAN


def cmd_centre(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    cd = centre_ring(r)
    print(f"centre order: {cd.centre.order}")
    print(f"members:      {[cd.centre.name(i) for i in cd.centre.elements()]}")
    for p in min_primes(cd.centre):
        print(f"min prime:    {_ideal_str(cd.centre, p.mask)}")
    return EXIT_CLEAN


def cmd_rho(args) -> int:
    r = _eval_ring(args.expr, args.max_order)
    rm = rho(r)
    for pm, qm in rm.table:
        print(f"{_ideal_str(r, pm)} -> {_ideal_str(rm.centre_data.centre, qm)}")
    print(f"well-defined on minimals: {rm.well_defined}")
    print(f"surjective onto minimals: {rm.surjective_onto_min}")
    crit = check_rho_criteria(r)
    if crit.applicable:
        print(f"criteria agree: {crit.agree}")
    return EXIT_CLEAN


def cmd_mono(args) -> int:
    obj = evaluate(parse_ring_expr(args.expr), None)
    if not isinstance(obj, CommMonomialRing):
        raise RingError("mono subcommands need a mono(...) expression")
    if args.action == "minprimes":
        for cover in min_primes_monomial(obj):
            print("(" + ",".join(f"v{i + 1}" for i in sorted(cover)) + ")")
        return EXIT_CLEAN
    variables = [int(v) - 1 for v in args.invert.split(",") if v.strip()]
    rep = localize_monomial(obj, variables)
    print(f"saturation:    {[render_monomial(g) for g in rep.saturation.gens]}")
    print(f"regular case:  {rep.regular_case}")
    print(f"min source:    {[sorted(v + 1 for v in c) for c in rep.min_source]}")
    print(f"min localized: {[sorted(v + 1 for v in c) for c in rep.min_localized]}")
    print(f"bijection:     {rep.bijection_ok}")
    return EXIT_CLEAN


def cmd_an(args) -> int:
    n = args.n
    d = args.degree or default_degree_bound(max(n, 1))
    a = an_build(n, d)
    rep = an_verify(a)
    print(f"algebra:       {a!r}")
    print(f"minimal primes ({1 << n}):")
    for p in an_min_primes(a):
        print(f"  {p!r}")
    print(f"domain quotients:   {rep.domain_quotients_ok}")
    print(f"incomparable:       {rep.incomparable_ok}")
    print(f"zero intersection:  {rep.intersection_zero_ok}")
    print(f"centre = z-polys:   {rep.centre_is_z_polynomials}")
    print(f"restrictions match: {rep.prime_centre_restriction_ok}")
    print(f"criterion witness:  {rep.criterion_witness}")
    print(f"restriction-map defined for index sets: {[sorted(i) for i in rep.rho_min_defined_for]}")
    if rep.failures:
        for f in rep.failures:
            print(f"FAILURE: {f}")
        return EXIT_COUNTEREXAMPLE
    return EXIT_CLEAN


def cmd_verify(args) -> int:
    cfg = CorpusConfig(
        order_cap=args.max_order,
        exhaustive_mult_order=args.exhaustive_order,
        seed=args.seed,
    )
    suite = args.suite
    if suite == "all":
        ids = COVERAGE
    elif suite == "finite":
        ids = tuple(i for i in COVERAGE if "finite" in REGISTRY[i][0].kinds)
    elif suite == "monomial":
        ids = tuple(
            i for i in COVERAGE
            if {"monomial", "an"} & set(REGISTRY[i][0].kinds)
        )
    else:
        ids = tuple(x.strip() for x in suite.split(",") if x.strip())
    corpus = build_corpus(cfg)
    if args.inject_fault:
        corpus = [inject_table_fault(corpus[0], cfg)] + corpus[1:]
    reports = run_suite(corpus, ids, cfg, jobs=args.jobs)
    if args.format == "machine":
        print(render_machine(reports))
    else:
        print(render_text(reports))
    clean = all(r.clean() for r in reports)
    return EXIT_CLEAN if clean else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orespec",
        description="spectra, centres and localizations of finite rings and monomial algebras",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                        help="order cap for finite constructions")
    common.add_argument("--exhaustive-order", type=int, default=12,
                        help="largest order with exhaustive multiplicative-set enumeration")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("describe", help="order, units, centre, semiprimeness, element table")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_describe)

    p = sub.add_parser("ideals", help="the two-sided ideal lattice with primality flags")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_ideals)

    p = sub.add_parser("minprimes", help="minimal primes and the prime radical")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_minprimes)

    p = sub.add_parser("multsets", help="multiplicative sets with their classification")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_multsets)

    p = sub.add_parser("classify-set", help="Ore/denominator flags of one generated set")
    p.add_argument("expr")
    p.add_argument("--gens", required=True, help="comma-separated element ids")
    p.set_defaults(fn=cmd_classify_set)

    p = sub.add_parser("localize", help="localize at a generated denominator set")
    p.add_argument("expr")
    p.add_argument("--gens", required=True, help="comma-separated element ids")
    p.set_defaults(fn=cmd_localize)

    p = sub.add_parser("centre", help="the centre as a ring, with its minimal primes")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_centre)

    p = sub.add_parser("rho", help="restriction of primes to the centre")
    p.add_argument("expr")
    p.set_defaults(fn=cmd_rho)

    p = sub.add_parser("mono", help="monomial-quotient operations")
    p.add_argument("action", choices=["minprimes", "localize"])
    p.add_argument("expr")
    p.add_argument("--invert", default="", help="comma-separated 1-based variable indices")
    p.set_defaults(fn=cmd_mono)

    p = sub.add_parser("an", help="verify the noncommutative pairing algebra")
    p.add_argument("verify", choices=["verify"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, default=0)
    p.set_defaults(fn=cmd_an)

    p = sub.add_parser("verify", help="run the claim-verification suite")
    p.add_argument("--suite", default="all",
                   help="all | finite | monomial | comma-separated check ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.add_argument("--inject-fault", action="store_true",
                   help="corrupt one table cell first (self-test)")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_CLEAN
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeLimitError, DegreeBudgetError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ZeroAbsorbedError, NotDenominatorError, CollapsedLocalizationError, RingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

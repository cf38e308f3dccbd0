"""Acceptance gate: every criterion at its stated tolerance, one line each."""

import functools
import itertools
import time

import pytest

from expr_corpus import FIXED_EXPRESSIONS
from orespec.checks import COVERAGE
from orespec.dsl import parse_ring_expr, render
from orespec.finring import RingTable, bits, mask_of, regular_mask, units_mask
from orespec.harness import (
    CorpusConfig,
    build_corpus,
    inject_table_fault,
    render_machine,
    run_suite,
)
from orespec.ideals import (
    Ideal,
    all_ideal_masks,
    classify_ideal,
    is_prime_lattice_test,
    is_prime_rich,
    is_semiprime_ring,
    min_prime_masks_over,
    strongly_nilpotent_mask,
)
from orespec.localization import classify_set, left_denominator_sets, localize
from orespec.monomial import (
    all_squarefree_ideals,
    an_build,
    an_localize_normal,
    an_min_primes,
    an_verify,
    default_degree_bound,
    localize_monomial,
    make_monomial_ring,
    min_primes_monomial,
    regular_variables,
    support,
)

CFG = CorpusConfig()


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"\nACCEPTANCE {number} ({title}): FAIL")
                raise
            print(f"\nACCEPTANCE {number} ({title}): PASS")
        return run
    return wrap


@pytest.fixture(scope="module")
def corpus():
    return build_corpus(CFG)


@pytest.fixture(scope="module")
def finite_rings(corpus):
    return [inst.build(CFG.order_cap) for inst in corpus if inst.kind == "finite"]


def _clean(reports):
    bad = [r for r in reports if r.counterexamples]
    assert not bad, f"counterexamples in {[r.theorem_id for r in bad]}"


@criterion(1, "five-way localized-ideal criterion")
def test_criterion_1(corpus):
    small = [i for i in corpus if i.kind == "finite"
             and i.build(CFG.order_cap).order <= 12]
    t0 = time.perf_counter()
    reports = run_suite(small, ("A11Sep23",), CFG, jobs=1)
    elapsed = time.perf_counter() - t0
    _clean(reports)
    a11 = reports[1]
    assert a11.cases >= 1000, f"only {a11.cases} (ring, set, ideal) triples"
    assert elapsed < 300, f"took {elapsed:.1f}s single-threaded"


@criterion(2, "regular-variable localization bijection")
def test_criterion_2(corpus):
    t0 = time.perf_counter()
    mono_insts = [i for i in corpus if i.kind == "monomial"]
    reports = run_suite(mono_insts, ("A10Sep23",), CFG)
    _clean(reports)
    checked = 0
    for n in (1, 2, 3):
        for gens in all_squarefree_ideals(n):
            r = make_monomial_ring(n, gens)
            covers = min_primes_monomial(r)
            oracle = [
                frozenset(c)
                for size in range(n + 1)
                for c in itertools.combinations(range(n), size)
                if all(frozenset(c) & support(g) for g in r.gens)
            ]
            oracle_min = sorted(
                (c for c in oracle if not any(o < c for o in oracle)),
                key=lambda c: (len(c), sorted(c)),
            )
            assert covers == oracle_min
            for size in range(len(regular_variables(r)) + 1):
                for combo in itertools.combinations(sorted(regular_variables(r)), size):
                    rep = localize_monomial(r, combo)
                    assert rep.regular_case and rep.bijection_ok
                    assert len(rep.min_localized) == len(rep.min_source)
                    checked += 1
    assert checked > 0
    assert time.perf_counter() - t0 < 60


@criterion(3, "zero-divisor denominator sets on semiprime rings")
def test_criterion_3(corpus):
    small = [i for i in corpus if i.kind == "finite"
             and i.build(CFG.order_cap).order <= 12]
    reports = run_suite(small, ("28Sep23", "a28Sep23", "b28Sep23"), CFG)
    _clean(reports)
    semiprime = [i for i in small if is_semiprime_ring(i.build(CFG.order_cap))]
    main = reports[1]
    assert main.applicable == len(semiprime)
    assert main.cases > 0


@criterion(4, "normal-element localization bijections")
def test_criterion_4(corpus):
    t0 = time.perf_counter()
    for n in (1, 2, 3):
        a = an_build(n, default_degree_bound(n))
        for size in range(1, n + 1):
            for combo in itertools.combinations(range(1, n + 1), size):
                rep = an_localize_normal(a, combo)
                assert rep.ok, rep.failures
                assert rep.expected_count == 1 << (n - size)
                assert len(rep.min_over_vanishing) == rep.expected_count
    track = [i for i in corpus if i.kind in ("monomial", "an")]
    reports = run_suite(track, ("A2Oct23",), CFG)
    _clean(reports)
    assert time.perf_counter() - t0 < 120


@criterion(5, "pairing-algebra picture at bounded degree")
def test_criterion_5():
    for n in (1, 2, 3):
        a = an_build(n, default_degree_bound(n))
        rep = an_verify(a)
        assert rep.ok, rep.failures
        assert rep.domain_quotients_ok
        assert rep.incomparable_ok
        assert rep.intersection_zero_ok
        assert rep.centre_is_z_polynomials
        assert rep.prime_centre_restriction_ok
        full = frozenset(range(1, n + 1))
        expected_bad = {p.I for p in an_min_primes(a)} - {full}
        assert set(rep.rho_min_undefined_for) == expected_bad
        assert set(rep.rho_min_defined_for) == {full}
        assert rep.criterion_witness == "z1 is regular in the centre but z1*x1 = 0"


@criterion(6, "centre criteria and the central decomposition")
def test_criterion_6(corpus, finite_rings):
    finite = [i for i in corpus if i.kind == "finite"]
    reports = run_suite(finite, ("aB25Sep23", "B25Sep23", "A25Sep23", "aC25Sep23"), CFG)
    _clean(reports)
    by_id = {r.theorem_id: r for r in reports}
    semiprime_count = sum(1 for r in finite_rings if is_semiprime_ring(r))
    assert by_id["B25Sep23"].applicable == semiprime_count
    assert by_id["A25Sep23"].applicable == len(finite_rings)
    # the decomposition reconstructs every semiprime commutative ring exactly
    from orespec.centre import check_pierce
    from orespec.finring import is_commutative

    rebuilt = 0
    for r in finite_rings:
        if is_semiprime_ring(r) and is_commutative(r):
            rep = check_pierce(r)
            assert rep.applicable and rep.iso_if_commutative, r.label
            rebuilt += 1
    assert rebuilt >= 40


@criterion(7, "independent oracles agree")
def test_criterion_7(finite_rings):
    radical_checked = 0
    for r in finite_rings:
        if r.order > 12:
            continue
        inter = r.full_mask()
        for m in min_prime_masks_over(r, 1 << r.zero):
            inter &= m
        assert inter == strongly_nilpotent_mask(r), r.label
        radical_checked += 1
    assert radical_checked >= 50
    prime_checked = 0
    for r in finite_rings:
        if r.order > 8:
            continue
        for m in all_ideal_masks(r):
            if m == r.full_mask():
                continue
            p = Ideal(r, m)
            assert classify_ideal(p).is_prime == is_prime_lattice_test(p), r.label
            prime_checked += 1
    assert prime_checked >= 100


@criterion(8, "finite-ring structural facts")
def test_criterion_8(finite_rings):
    for r in finite_rings:
        assert units_mask(r) == regular_mask(r), r.label
        rich = is_prime_rich(r)
        assert rich.rich and rich.agree, r.label
        assert all(ev.exponent is not None and ev.exponent <= r.order
                   for ev in rich.evidence), r.label
        for s in left_denominator_sets(r, CFG.exhaustive_mult_order):
            loc = localize(r, s)
            target_units = units_mask(loc.target)
            assert all(target_units >> loc.sigma(x) & 1 for x in s.members()), r.label
            assert loc.sigma.kernel_mask() == loc.ass.mask, r.label


@criterion(9, "engineering gate")
def test_criterion_9():
    t0 = time.perf_counter()
    first = render_machine(run_suite(build_corpus(CFG), None, CFG, jobs=1))
    elapsed = time.perf_counter() - t0
    assert elapsed < 600, f"full suite took {elapsed:.1f}s"
    second = render_machine(run_suite(build_corpus(CFG), None, CFG, jobs=1))
    assert first == second
    assert '"clean": true' in first

    for text in FIXED_EXPRESSIONS:
        assert parse_ring_expr(render(parse_ring_expr(text))) == parse_ring_expr(text)
    assert len(FIXED_EXPRESSIONS) >= 50

    corpus = build_corpus(CFG)
    corpus[0] = inject_table_fault(corpus[0], CFG)
    reports = run_suite(corpus, None, CFG)
    assert sum(len(r.counterexamples) for r in reports) == 1
    assert reports[0].counterexamples[0].clause == "axiom-audit"

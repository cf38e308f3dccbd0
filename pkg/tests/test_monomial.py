import itertools
import random

import pytest

from orespec.monomial import (
    AnAlgebra,
    CollapsedLocalizationError,
    NCMonomial,
    UnitIdealError,
    all_squarefree_ideals,
    an_build,
    an_localize_normal,
    an_min_primes,
    an_monomials,
    an_multiply,
    an_one,
    an_verify,
    an_x,
    an_z,
    default_degree_bound,
    is_squarefree,
    localize_monomial,
    make_monomial_ring,
    min_primes_monomial,
    monomial_in_ideal,
    monomials_up_to,
    regular_variables,
    saturate_monomial,
    support,
)

# ---------------------------------------------------------------------------
# commutative monomial quotients


def cover_oracle(r):
    """Independent brute force over every variable subset."""
    supports = [support(g) for g in r.gens]
    covers = [
        frozenset(c)
        for size in range(r.nvars + 1)
        for c in itertools.combinations(range(r.nvars), size)
        if all(frozenset(c) & s for s in supports)
    ]
    return sorted(
        (c for c in covers if not any(o < c for o in covers)),
        key=lambda c: (len(c), sorted(c)),
    )


def test_min_primes_of_a_single_edge():
    r = make_monomial_ring(2, [(1, 1)])
    assert min_primes_monomial(r) == [frozenset({0}), frozenset({1})]


def test_zero_ideal_is_a_domain():
    r = make_monomial_ring(2, [])
    assert min_primes_monomial(r) == [frozenset()]


def test_two_disjoint_edges_have_four_covers():
    r = make_monomial_ring(4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    assert len(min_primes_monomial(r)) == 4


def test_min_primes_match_the_brute_force_oracle():
    for n in (1, 2, 3):
        for gens in all_squarefree_ideals(n):
            r = make_monomial_ring(n, gens)
            assert min_primes_monomial(r) == cover_oracle(r)
    mixed = make_monomial_ring(3, [(2, 1, 0), (0, 1, 2)])
    assert min_primes_monomial(mixed) == cover_oracle(mixed)


def test_unit_ideal_is_rejected():
    with pytest.raises(UnitIdealError):
        min_primes_monomial(make_monomial_ring(2, [(0, 0)]))


def test_saturation_strips_exponents():
    r = make_monomial_ring(3, [(0, 2, 1), (0, 1, 2)])
    assert saturate_monomial(r, [1]).gens == ((0, 0, 1),)
    assert saturate_monomial(r, []).gens == r.gens
    r2 = make_monomial_ring(2, [(1, 1)])
    assert saturate_monomial(r2, [0]).gens == ((0, 1),)


def test_saturation_collapse_is_an_error():
    with pytest.raises(CollapsedLocalizationError):
        saturate_monomial(make_monomial_ring(2, [(1, 0)]), [0])


def test_saturation_against_degree_bounded_membership():
    r = make_monomial_ring(3, [(1, 2, 0), (0, 1, 1)])
    rep = localize_monomial(r, [1])
    assert rep.saturation_oracle_ok


def test_localize_regular_variable_keeps_minimal_primes():
    r = make_monomial_ring(3, [(0, 1, 1)])  # k[u,y,z]/(yz), u regular
    assert regular_variables(r) == {0}
    rep = localize_monomial(r, [0])
    assert rep.regular_case and rep.bijection_ok
    assert rep.min_source == rep.min_localized == (frozenset({1}), frozenset({2}))


def test_localize_zero_divisor_variable():
    r = make_monomial_ring(2, [(1, 1)])
    rep = localize_monomial(r, [0])
    assert not rep.regular_case
    assert rep.min_vanishing == (frozenset({1}),)
    assert rep.min_localized == (frozenset({1}),)


def test_localize_nothing_is_the_identity():
    r = make_monomial_ring(2, [(1, 1)])
    rep = localize_monomial(r, [])
    assert rep.regular_case and rep.min_source == rep.min_localized


def test_squarefree_enumeration_counts():
    assert len(all_squarefree_ideals(1)) == 2
    assert len(all_squarefree_ideals(2)) == 5
    assert len(all_squarefree_ideals(3)) == 19


def test_localize_commutes_with_taking_radicals():
    # minimal primes of the saturated radical match the radical of the
    # saturation, computed both ways
    def radical(r):
        return make_monomial_ring(
            r.nvars, [tuple(1 if e else 0 for e in g) for g in r.gens]
        )

    cases = [
        (make_monomial_ring(3, [(2, 1, 0), (0, 1, 2)]), [2]),
        (make_monomial_ring(3, [(0, 3, 0), (1, 0, 2)]), [0]),
        (make_monomial_ring(2, [(1, 2)]), [0]),
    ]
    for r, v in cases:
        reduced_first = saturate_monomial(radical(r), v)
        localized_first = radical(saturate_monomial(r, v))
        assert min_primes_monomial(reduced_first) == min_primes_monomial(localized_first)
        assert reduced_first.gens == localized_first.gens


def test_radical_iff_squarefree_at_bounded_degree():
    cases = [
        make_monomial_ring(2, [(1, 1)]),
        make_monomial_ring(2, [(2, 0)]),
        make_monomial_ring(3, [(1, 0, 1), (0, 2, 0)]),
    ]
    for r in cases:
        covers = min_primes_monomial(r)
        radical_equal = all(
            monomial_in_ideal(m, r.gens) == all(support(m) & c for c in covers)
            for m in monomials_up_to(r.nvars, r.degree_bound)
            if sum(m) > 0
        )
        assert radical_equal == is_squarefree(r)


# ---------------------------------------------------------------------------
# the noncommutative pairing algebra


def test_pairing_relations():
    a = an_build(2, 6)
    x1, z1, x2, z2 = an_x(a, 1), an_z(a, 1), an_x(a, 2), an_z(a, 2)
    assert an_multiply(a, x1, z1).is_zero
    assert an_multiply(a, z1, x1).is_zero
    left = an_multiply(a, z1, x2)
    right = an_multiply(a, x2, z1)
    assert left == right and not left.is_zero
    assert an_multiply(a, an_one(a), an_one(a)) == an_one(a)


def test_min_prime_index_sets():
    a1 = an_build(1, 6)
    reprs = [repr(p) for p in an_min_primes(a1)]
    assert reprs == ["(z1)", "(x1)"]
    assert len(an_min_primes(an_build(2, 6))) == 4
    a0 = an_build(0, 4)
    assert [repr(p) for p in an_min_primes(a0)] == ["(0)"]


def test_prime_membership_rule():
    a = an_build(2, 6)
    p = an_min_primes(a)[1]  # smallest nonempty index set
    assert p.I == frozenset({1})
    assert p.contains(an_x(a, 1))
    assert not p.contains(an_x(a, 2))
    assert p.contains(an_z(a, 2))
    assert not p.contains(an_z(a, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_full_verification_report(n):
    a = an_build(n, default_degree_bound(n))
    rep = an_verify(a)
    assert rep.ok, rep.failures
    assert rep.centre_is_z_polynomials
    assert all(not m.word for m in rep.central_monomials)
    assert rep.criterion_witness == "z1 is regular in the centre but z1*x1 = 0"
    full = frozenset(range(1, n + 1))
    assert set(rep.rho_min_defined_for) == {full}
    assert set(rep.rho_min_undefined_for) == {p.I for p in an_min_primes(a)} - {full}


def test_without_spare_letters_the_centre_grows():
    # the spare free letters are load-bearing: with none, a decorated word
    # commutes with every generator and the z-span claim would be false
    from orespec.monomial import _commutes_with_generators

    bare = AnAlgebra(2, 6, 2)
    assert _commutes_with_generators(bare, NCMonomial((1,), (0, 1)))[0]
    padded = an_build(2, 6)
    assert not _commutes_with_generators(padded, NCMonomial((1,), (0, 1)))[0]


@pytest.mark.parametrize("n,v,count", [(1, {1}, 1), (2, {1}, 2), (2, {1, 2}, 1), (3, {2}, 4)])
def test_localize_at_central_variables(n, v, count):
    a = an_build(n, default_degree_bound(n))
    rep = an_localize_normal(a, v)
    assert rep.ok, rep.failures
    assert rep.expected_count == count == len(rep.min_over_vanishing)
    assert rep.vanishing_ok and rep.bijection_ok


def test_multiplication_is_associative_on_random_triples():
    a = an_build(2, 8)
    monos = [m for m in an_monomials(a, 4)]
    rng = random.Random(0)
    for _ in range(10_000):
        m1, m2, m3 = (rng.choice(monos) for _ in range(3))
        if m1.degree() + m2.degree() + m3.degree() > a.degree_bound:
            continue
        left = an_multiply(a, an_multiply(a, m1, m2), m3)
        right = an_multiply(a, m1, an_multiply(a, m2, m3))
        assert left == right


def test_degree_overflow_marks_truncation():
    a = an_build(1, 4)
    big = NCMonomial((2, 2, 2), (0,))
    prod = an_multiply(a, big, big)
    assert prod.truncated and not prod.is_zero

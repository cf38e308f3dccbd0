import pytest

from orespec.finring import bits, make_gf, make_zmod, mask_of, units_mask
from orespec.ideals import Ideal, all_ideal_masks, ideal_generated_by, zero_ideal
from orespec.localization import (
    MultSet,
    NotDenominatorError,
    NotInAssError,
    ZeroAbsorbedError,
    ass_l_raw_mask,
    ass_l_realizable_masks,
    check_A11_equivalence,
    check_epimorphic_den_b14,
    classify_set,
    close_multiplicative,
    enumerate_mult_sets,
    largest_regular_set,
    largest_set_assoc,
    left_denominator_sets,
    localize,
    localize_left_ideal,
    localize_normal,
    min_RS,
    min_RS_id,
    respects_prime_structure,
    t_l,
)

T2_E11 = 1
T2_UNIT_UPPER = 7  # [[1,1],[0,1]]


def test_multiplicative_closures(z6):
    assert set(close_multiplicative(z6, [2]).members()) == {1, 2, 4}
    assert set(close_multiplicative(z6, []).members()) == {1}
    assert set(close_multiplicative(z6, [3]).members()) == {1, 3}


def test_closure_reports_a_zero_witness(z6):
    with pytest.raises(ZeroAbsorbedError) as exc:
        close_multiplicative(z6, [2, 3])
    s, t = exc.value.witness
    assert z6.mul[s][t] == 0


def test_enumeration_is_the_full_submonoid_list(z6):
    enumerated = {s.mask for s in enumerate_mult_sets(z6)}
    brute = set()
    for code in range(1 << 6):
        if code & 1 or not code >> 1 & 1:
            continue  # must omit 0 and contain 1
        if all(code >> z6.mul[a][b] & 1 for a in bits(code) for b in bits(code)):
            brute.add(code)
    assert enumerated == brute
    assert mask_of([1]) in enumerated
    for want in ([1, 5], [1, 2, 4], [1, 3], [1, 4], [1, 3, 5]):
        assert mask_of(want) in enumerated


def test_field_mult_sets_live_in_the_unit_group():
    f = make_gf(4)
    for s in enumerate_mult_sets(f):
        assert s.mask & ~units_mask(f) == 0


def test_commutative_sets_are_two_sided_denominators(z6):
    for s in enumerate_mult_sets(z6):
        cls = classify_set(s)
        assert cls.left_ore and cls.right_ore and cls.left_den and cls.right_den


def test_classification_vanishing_ideals(z6):
    cls = classify_set(close_multiplicative(z6, [2]))
    assert set(bits(cls.ass_l_mask)) == {0, 3}
    cls = classify_set(close_multiplicative(z6, [3]))
    assert set(bits(cls.ass_l_mask)) == {0, 2, 4}


def test_localize_examples(z6):
    loc = localize(z6, close_multiplicative(z6, [2]))
    assert loc.target.order == 3
    assert loc.sigma.kernel_mask() == loc.ass.mask
    two = loc.sigma(2)
    assert any(loc.target.mul[two][y] == loc.target.one for y in loc.target.elements())
    assert localize(z6, close_multiplicative(z6, [3])).target.order == 2


def test_localizing_at_units_changes_nothing(z12):
    loc = localize(z12, largest_regular_set(z12))
    assert loc.target.order == z12.order
    assert loc.sigma.is_bijective()


def test_localized_ideals(z6):
    loc = localize(z6, close_multiplicative(z6, [2]))
    assert localize_left_ideal(loc, zero_ideal(z6)).mask == 1
    li = localize_left_ideal(loc, ideal_generated_by(z6, [3]))
    assert li.mask == 1 and li.two_sided
    loc13 = localize(z6, close_multiplicative(z6, [3]))
    assert localize_left_ideal(loc13, ideal_generated_by(z6, [2])).mask == 1


def test_five_way_criterion_on_commutative_and_triangular(z6, t2f2):
    for r in (z6, t2f2):
        for s in left_denominator_sets(r):
            loc = localize(r, s)
            for m in all_ideal_masks(r):
                v = check_A11_equivalence(loc, Ideal(r, m))
                assert v.agree, v.witness
    # the whole ring is accepted by convention
    loc = localize(z6, close_multiplicative(z6, [2]))
    v = check_A11_equivalence(loc, Ideal(z6, z6.full_mask()))
    assert v.holds and v.agree


def test_min_RS_and_prime_structure(z6):
    s24 = close_multiplicative(z6, [2])
    assert [set(p.members()) for p in min_RS(z6, s24)] == [{0, 3}]
    s13 = close_multiplicative(z6, [3])
    assert [set(p.members()) for p in min_RS(z6, s13)] == [{0, 2, 4}]
    loc = localize(z6, s24)
    assert respects_prime_structure(loc)
    assert {p.mask for p in min_RS(z6, s24)} <= {p.mask for p in min_RS_id(loc)}


def test_localize_normal_examples(z12, t2f2):
    loc = localize_normal(z12, [2])
    assert set(loc.mult_set.members()) == {1, 2, 4, 8}
    assert set(loc.ass.members()) == {0, 3, 6, 9}
    # a central generator reduces to the one-sided vanishing ideal
    assert loc.ass.mask == classify_set(loc.mult_set).ass_l_mask
    loc_u = localize_normal(t2f2, [T2_UNIT_UPPER])
    assert loc_u.ass.is_zero() and loc_u.target.order == t2f2.order


def test_localize_normal_rejects_non_normal_generators(t2f2):
    from orespec.finring import RingError

    with pytest.raises(RingError):
        localize_normal(t2f2, [T2_E11])


def test_largest_sets(z12, z6):
    assert set(largest_regular_set(z12).members()) == {1, 5, 7, 11}
    p2 = Ideal(z6, mask_of([0, 2, 4]))
    tl = t_l(z6, p2)
    assert set(tl.members()) == {1, 3, 5}
    assert ass_l_raw_mask(z6, tl.mask) & ~p2.mask == 0
    prime = make_gf(4)
    assert t_l(prime, zero_ideal(prime)).mask == units_mask(prime)
    assert t_l(prime, zero_ideal(prime)).mask == largest_regular_set(prime).mask


def test_largest_set_assoc_and_unrealizable_ideals(z6, z12):
    three = Ideal(z6, mask_of([0, 3]))
    smax = largest_set_assoc(z6, three)
    assert set(smax.members()) == {1, 2, 4, 5}
    assert classify_set(smax).ass_l_mask == three.mask
    two = Ideal(z12, mask_of([0, 2, 4, 6, 8, 10]))
    assert two.mask not in ass_l_realizable_masks(z12)
    with pytest.raises(NotInAssError):
        largest_set_assoc(z12, two)


def test_epimorphic_image_criterion(z12):
    s = largest_regular_set(z12)
    loc = localize(z12, s)
    four = ideal_generated_by(z12, [4])
    v = check_epimorphic_den_b14(loc, four)
    assert v.applicable and v.agree and v.lhs

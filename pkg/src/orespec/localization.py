"""Multiplicative sets, Ore/denominator classification, and localizations.

On a finite ring every left denominator set S localizes to the factor ring by
its left vanishing ideal ass_l(S) = {r : sr = 0 for some s in S}: the images
of S are regular in the factor, regular elements of a finite ring are units,
and inverting units changes nothing.  That identification is not assumed
silently; every localization re-verifies that sigma(S) consists of units and
that ker(sigma) equals the vanishing ideal.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .finring import (
    EngineInvariantError,
    Mask,
    RingError,
    RingHom,
    RingTable,
    bits,
    inverse_table,
    is_two_sided_ideal_mask,
    make_quotient,
    mask_of,
    normal_mask,
    popcount,
    regular_mask,
    units_mask,
)
from .ideals import (
    LEFT,
    TWO_SIDED,
    Ideal,
    additive_closure,
    classify_ideal,
    ideal_sum_mask,
    min_prime_masks_over,
    spec_ideals,
)

EXHAUSTIVE_MULT_ORDER = 12


class ZeroAbsorbedError(RingError):
    """The multiplicative closure of the generators reached zero."""

    def __init__(self, ring, witness):
        self.witness = witness  # (s, t) with s*t == 0
        super().__init__(
            f"{ring.label}: closure hits zero via {ring.name(witness[0])}*{ring.name(witness[1])}"
        )


class NotDenominatorError(RingError):
    """The set fails the left Ore or left denominator condition."""

    def __init__(self, ring, reason, witness):
        self.reason = reason
        self.witness = witness
        super().__init__(f"{ring.label}: {reason} fails at {witness}")


class NotInAssError(RingError):
    """The ideal is not the vanishing ideal of any denominator set."""


@dataclass(frozen=True)
class MultSet:
    """A multiplicative subset: contains 1, omits 0, closed under products."""

    ring: RingTable
    mask: Mask

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def __len__(self):
        return popcount(self.mask)

    def __repr__(self):
        return f"MultSet({self.ring.label}, {{{', '.join(self.ring.name(i) for i in self.members())}}})"


@dataclass(frozen=True)
class OreClass:
    """Classification flags and vanishing sets of a multiplicative set."""

    mult_set: MultSet
    left_ore: bool
    right_ore: bool
    left_den: bool
    right_den: bool
    ass_l_mask: Mask
    ass_r_mask: Mask
    violation: tuple | None = None  # first (reason, data) that broke a flag

    def ass_l(self) -> Ideal:
        if not self.left_ore:
            raise RingError("ass_l is only an ideal for left Ore sets")
        return Ideal(self.mult_set.ring, self.ass_l_mask, TWO_SIDED)


@dataclass(frozen=True)
class Localization:
    """A finite-ring localization realized as the factor by the vanishing ideal."""

    ring: RingTable
    mult_set: MultSet
    kind: str  # "denominator" | "normal-localizable"
    ass: Ideal
    target: RingTable
    sigma: RingHom
    unit_witness: tuple[tuple[int, int], ...]  # (sigma(s), inverse) pairs

    def inv_image(self, s: int) -> int:
        return inverse_table(self.target)[self.sigma(s)]


@dataclass(frozen=True)
class LocalizedLeftIdeal:
    localization: Localization
    source: Ideal
    mask: Mask  # left ideal of the target generated by sigma(source)
    two_sided: bool


def _closure_with_witness(r: RingTable, gens: Mask):
    mask = gens | 1 << r.one
    if mask >> r.zero & 1:
        return mask, (r.zero, r.zero)
    while True:
        new = mask
        items = list(bits(mask))
        for a in items:
            row = r.mul[a]
            for b in items:
                p = row[b]
                if p == r.zero:
                    return new | 1 << r.zero, (a, b)
                new |= 1 << p
        if new == mask:
            return mask, None
        mask = new


def close_multiplicative(r: RingTable, gens) -> MultSet:
    """Multiplicative closure of gens plus 1; error if zero is absorbed."""
    gmask = gens if isinstance(gens, int) else mask_of(gens)
    mask, witness = _closure_with_witness(r, gmask)
    if witness is not None:
        raise ZeroAbsorbedError(r, witness)
    return MultSet(r, mask)


@functools.lru_cache(maxsize=None)
def mult_set_masks(r: RingTable, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> tuple[Mask, ...]:
    """All multiplicative submonoids (without 0) up to the exhaustive order.

    Up to the threshold these are closures of all subsets of nonzero elements,
    which is the full list because every submonoid is its own closure.  Above
    it, only closures of singletons and pairs are produced.
    """
    nonzero = [x for x in r.elements() if x != r.zero]
    found = set()
    if r.order <= exhaustive_order:
        subsets = range(1 << len(nonzero))
        for code in subsets:
            gens = 0
            c = code
            i = 0
            while c:
                if c & 1:
                    gens |= 1 << nonzero[i]
                c >>= 1
                i += 1
            mask, witness = _closure_with_witness(r, gens)
            if witness is None:
                found.add(mask)
    else:
        seeds = [0] + [1 << x for x in nonzero]
        seeds += [(1 << a) | (1 << b) for i, a in enumerate(nonzero) for b in nonzero[i + 1:]]
        for gens in seeds:
            mask, witness = _closure_with_witness(r, gens)
            if witness is None:
                found.add(mask)
    return tuple(sorted(found, key=lambda m: (popcount(m), m)))


def enumerate_mult_sets(r: RingTable, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> list[MultSet]:
    return [MultSet(r, m) for m in mult_set_masks(r, exhaustive_order)]


@functools.lru_cache(maxsize=None)
def _classify_mask(r: RingTable, smask: Mask):
    mul = r.mul
    zero = r.zero
    members = list(bits(smask))
    ass_l = mask_of(x for x in r.elements() if any(mul[s][x] == zero for s in members))
    ass_r = mask_of(x for x in r.elements() if any(mul[x][s] == zero for s in members))
    violation = None

    left_ore = True
    for x in r.elements():
        for s in members:
            # need s'x = x's for some s' in S, x' in R
            left_side = {mul[sp][x] for sp in members}
            if not any(mul[xp][s] in left_side for xp in r.elements()):
                left_ore = False
                violation = violation or ("left-ore", (x, s))
                break
        if not left_ore:
            break
    right_ore = True
    for x in r.elements():
        for s in members:
            right_side = {mul[x][sp] for sp in members}
            if not any(mul[s][xp] in right_side for xp in r.elements()):
                right_ore = False
                violation = violation or ("right-ore", (x, s))
                break
        if not right_ore:
            break

    left_den = left_ore
    if left_ore:
        for x in r.elements():
            if any(mul[x][s] == zero for s in members) and not ass_l >> x & 1:
                left_den = False
                violation = violation or ("left-denominator", x)
                break
    right_den = right_ore
    if right_ore:
        for x in r.elements():
            if any(mul[s][x] == zero for s in members) and not ass_r >> x & 1:
                right_den = False
                violation = violation or ("right-denominator", x)
                break

    if left_ore and not is_two_sided_ideal_mask(r, ass_l | 1 << zero):
        raise EngineInvariantError(f"{r.label}: ass_l of a left Ore set is not a two-sided ideal")
    if right_ore and not is_two_sided_ideal_mask(r, ass_r | 1 << zero):
        raise EngineInvariantError(f"{r.label}: ass_r of a right Ore set is not a two-sided ideal")
    return left_ore, right_ore, left_den, right_den, ass_l | 1 << zero, ass_r | 1 << zero, violation


def classify_set(s: MultSet) -> OreClass:
    return OreClass(s, *_classify_mask(s.ring, s.mask))


@functools.lru_cache(maxsize=None)
def left_denominator_masks(r: RingTable, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> tuple[Mask, ...]:
    return tuple(
        m for m in mult_set_masks(r, exhaustive_order) if _classify_mask(r, m)[2]
    )


def left_denominator_sets(r: RingTable, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> list[MultSet]:
    return [MultSet(r, m) for m in left_denominator_masks(r, exhaustive_order)]


@functools.lru_cache(maxsize=None)
def _localize_mask(r: RingTable, smask: Mask) -> Localization:
    cls = _classify_mask(r, smask)
    if not cls[2]:
        raise NotDenominatorError(r, cls[6][0] if cls[6] else "left-denominator", cls[6][1] if cls[6] else None)
    ass = Ideal(r, cls[4], TWO_SIDED)
    target, sigma = make_quotient(r, ass.mask)
    if sigma.kernel_mask() != ass.mask:
        raise EngineInvariantError(f"{r.label}: localization kernel differs from the vanishing ideal")
    inv = inverse_table(target)
    witness = []
    for s in bits(smask):
        im = sigma(s)
        if im not in inv:
            raise EngineInvariantError(
                f"{r.label}: image of {r.name(s)} is not a unit of the localization"
            )
        witness.append((im, inv[im]))
    return Localization(r, MultSet(r, smask), "denominator", ass, target, sigma, tuple(witness))


def localize(r: RingTable, s: MultSet) -> Localization:
    """Localize at a left denominator set; the target is R / ass_l(S)."""
    return _localize_mask(r, s.mask)


@functools.lru_cache(maxsize=None)
def left_ideal_closure(r: RingTable, gens: Mask) -> Mask:
    mask = gens | 1 << r.zero
    while True:
        new = additive_closure(r, mask)
        for a in list(bits(new)):
            for t in r.elements():
                new |= 1 << r.mul[t][a]
        if new == mask:
            return mask
        mask = new


def _right_absorbed(r: RingTable, mask: Mask) -> bool:
    return all(mask >> r.mul[a][t] & 1 for a in bits(mask) for t in r.elements())


@functools.lru_cache(maxsize=None)
def _localize_left_mask(loc: Localization, source_mask: Mask) -> tuple[Mask, bool]:
    t = loc.target
    mask = left_ideal_closure(t, loc.sigma.push_mask(source_mask))
    contracted = loc.sigma.preimage_mask(mask)
    if source_mask & ~contracted:
        raise EngineInvariantError("localized ideal does not contain the source image")
    return mask, _right_absorbed(t, mask)


def localize_left_ideal(loc: Localization, i: Ideal) -> LocalizedLeftIdeal:
    if i.sidedness not in (LEFT, TWO_SIDED):
        raise RingError("only left or two-sided ideals can be localized on the left")
    mask, two_sided = _localize_left_mask(loc, i.mask)
    return LocalizedLeftIdeal(loc, i, mask, two_sided)


def sigma_preimage(loc: Localization, target_mask: Mask) -> Mask:
    return loc.sigma.preimage_mask(target_mask)


def two_sided_span(r: RingTable, left_mask: Mask) -> Mask:
    """The two-sided ideal J*R generated by a left ideal J."""
    gens = 0
    for a in bits(left_mask):
        row = r.mul[a]
        for t in r.elements():
            gens |= 1 << row[t]
    return left_ideal_closure(r, additive_closure(r, gens | left_mask))


# ---------------------------------------------------------------------------
# the five-way localized-ideal criterion

@dataclass(frozen=True)
class A11Verdict:
    conditions: tuple[bool, bool, bool, bool, bool]
    agree: bool
    holds: bool
    witness: str | None


def check_A11_equivalence(loc: Localization, b: Ideal) -> A11Verdict:
    """Five independent evaluations of 'the localized left ideal is two-sided'.

    (1) direct right-absorption in the target;
    (2) b * sigma(s)^{-1} lands in the localized ideal for every s;
    (3) rs in b forces s'r in b for some s';
    (4) the same with the vanishing ideal added to b;
    (5) right S-torsion of R/(ass + b) is contained in its left S-torsion.

    The whole ring is accepted by convention (all conditions true).  Any
    disagreement among the five is a fatal engine-bug signal for the caller.
    """
    r = loc.ring
    smembers = loc.mult_set.members()
    if b.is_full():
        conds = (True,) * 5
        return A11Verdict(conds, True, True, None)

    local = localize_left_ideal(loc, b)
    c1 = local.two_sided

    t = loc.target
    inv = inverse_table(t)
    c2 = True
    for x in bits(b.mask):
        xi = loc.sigma(x)
        for s in smembers:
            if not local.mask >> t.mul[xi][inv[loc.sigma(s)]] & 1:
                c2 = False
                break
        if not c2:
            break

    def push_condition(target_mask: Mask) -> bool:
        for x in r.elements():
            row = r.mul[x]
            if any(target_mask >> row[s] & 1 for s in smembers):
                if not any(target_mask >> r.mul[s][x] & 1 for s in smembers):
                    return False
        return True

    c3 = push_condition(b.mask)
    ab = ideal_sum_mask(r, loc.ass.mask, b.mask)
    c4 = push_condition(ab) if ab != r.full_mask() else True

    if ab == r.full_mask():
        c5 = True
    else:
        q, hom = make_quotient(r, ab)
        s_img = sorted({hom(s) for s in smembers})
        tor_r = mask_of(x for x in q.elements() if any(q.mul[x][u] == q.zero for u in s_img))
        tor_l = mask_of(x for x in q.elements() if any(q.mul[u][x] == q.zero for u in s_img))
        c5 = tor_r & ~tor_l == 0

    conds = (c1, c2, c3, c4, c5)
    agree = len(set(conds)) == 1
    witness = None
    if not agree:
        witness = f"conditions disagree: {conds} for S={smembers}, b={b.members()}"
    return A11Verdict(conds, agree, all(conds), witness)


# ---------------------------------------------------------------------------
# prime structure under localization

@functools.lru_cache(maxsize=None)
def respects_prime_structure(loc: Localization) -> bool:
    return all(localize_left_ideal(loc, p).two_sided for p in spec_ideals(loc.ring))


def min_RS(r: RingTable, s: MultSet) -> list[Ideal]:
    """Minimal primes of the source that are disjoint from the set."""
    return [Ideal(r, m) for m in min_prime_masks_over(r, 1 << r.zero) if m & s.mask == 0]


def min_RS_id(loc: Localization) -> list[Ideal]:
    """Minimal primes whose localized left ideal spans a proper two-sided ideal."""
    r = loc.ring
    out = []
    for m in min_prime_masks_over(r, 1 << r.zero):
        j = localize_left_ideal(loc, Ideal(r, m)).mask
        if two_sided_span(loc.target, j) != loc.target.full_mask():
            out.append(Ideal(r, m))
    disjoint = {i.mask for i in min_RS(r, loc.mult_set)}
    if disjoint - {i.mask for i in out}:
        raise EngineInvariantError(f"{r.label}: min(R,S) escapes min(R,S,id)")
    return out


# ---------------------------------------------------------------------------
# localization at normal-element sets

def localize_normal(r: RingTable, gens) -> Localization:
    """Invert a multiplicative set generated by normal elements.

    The vanishing ideal is {x : s x t = 0 for some s,t in S}; the target is
    the factor ring by it, where every image of S is again a unit.
    """
    gmask = gens if isinstance(gens, int) else mask_of(gens)
    nm = normal_mask(r)
    for g in bits(gmask):
        if not nm >> g & 1:
            raise RingError(f"{r.label}: generator {r.name(g)} is not normal")
    s = close_multiplicative(r, gmask)
    members = s.members()
    ass = 0
    for x in r.elements():
        if any(r.mul[r.mul[u][x]][v] == r.zero for u in members for v in members):
            ass |= 1 << x
    if not is_two_sided_ideal_mask(r, ass):
        raise EngineInvariantError(f"{r.label}: normal-set vanishing ideal is not two-sided")
    if ass == r.full_mask():
        raise ZeroAbsorbedError(r, (r.one, r.one))
    target, sigma = make_quotient(r, ass)
    inv = inverse_table(target)
    witness = []
    for u in members:
        im = sigma(u)
        if im not in inv:
            raise EngineInvariantError(f"{r.label}: normal localization image {u} is not a unit")
        witness.append((im, inv[im]))
    return Localization(r, s, "normal-localizable", Ideal(r, ass, TWO_SIDED), target, sigma, tuple(witness))


# ---------------------------------------------------------------------------
# largest quotient sets (finite instantiation)

def largest_regular_set(r: RingTable) -> MultSet:
    """The largest regular left Ore set; on a finite ring this is the units."""
    s = MultSet(r, units_mask(r))
    cls = classify_set(s)
    if not (cls.left_den and cls.right_den and cls.ass_l_mask == 1 << r.zero):
        raise EngineInvariantError(f"{r.label}: unit group fails the denominator re-check")
    return s


def ass_l_realizable_masks(r: RingTable, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> tuple[Mask, ...]:
    """All ideals arising as ass_l of an enumerated left denominator set."""
    return tuple(sorted({
        _classify_mask(r, m)[4] for m in left_denominator_masks(r, exhaustive_order)
    }))


def largest_set_assoc(r: RingTable, a: Ideal, exhaustive_order: int = EXHAUSTIVE_MULT_ORDER) -> MultSet:
    """Largest left denominator set with vanishing ideal a: the preimage of the
    units of R/a.  Errors when a is not realizable as a vanishing ideal."""
    if a.mask not in ass_l_realizable_masks(r, exhaustive_order):
        raise NotInAssError(f"{r.label}: ideal {a.members()} is not an attained vanishing ideal")
    target, hom = make_quotient(r, a.mask)
    s = MultSet(r, hom.preimage_mask(units_mask(target)))
    cls = classify_set(s)
    if not cls.left_den or cls.ass_l_mask != a.mask:
        raise EngineInvariantError(f"{r.label}: unit preimage fails the denominator re-check")
    return s


def t_l(r: RingTable, p: Ideal) -> MultSet:
    """Preimage of the units of R/p at a prime p (candidate Ore set)."""
    if not classify_ideal(p).is_prime:
        raise RingError("t_l is defined at prime ideals")
    target, hom = make_quotient(r, p.mask)
    return MultSet(r, hom.preimage_mask(units_mask(target)))


def ass_l_raw_mask(r: RingTable, smask: Mask) -> Mask:
    members = list(bits(smask))
    return mask_of(x for x in r.elements() if any(r.mul[s][x] == r.zero for s in members))


def ass_r_raw_mask(r: RingTable, smask: Mask) -> Mask:
    members = list(bits(smask))
    return mask_of(x for x in r.elements() if any(r.mul[x][s] == r.zero for s in members))


# ---------------------------------------------------------------------------
# epimorphic images of denominator sets

@dataclass(frozen=True)
class EpimorphicDenVerdict:
    applicable: bool
    lhs: bool | None
    rhs: bool | None
    agree: bool | None


def check_epimorphic_den_b14(loc: Localization, b: Ideal) -> EpimorphicDenVerdict:
    """Image criterion for ideals above the vanishing ideal: the image of S is
    a zero-vanishing denominator set of R/b iff it consists of regular elements."""
    r = loc.ring
    if loc.ass.mask & ~b.mask or b.is_full():
        return EpimorphicDenVerdict(False, None, None, None)
    if b.mask & loc.mult_set.mask:
        # image contains zero; both sides fail by convention
        return EpimorphicDenVerdict(True, False, False, True)
    q, hom = make_quotient(r, b.mask)
    s_img = mask_of(hom(s) for s in loc.mult_set.members())
    cls = _classify_mask(q, s_img)
    lhs = cls[2] and cls[4] == 1 << q.zero
    rhs = s_img & ~regular_mask(q) == 0
    return EpimorphicDenVerdict(True, lhs, rhs, lhs == rhs)


def check_epimorphic_den_c14(loc: Localization, b: Ideal) -> EpimorphicDenVerdict:
    """Two-step image criterion when S misses ass + b: after factoring by the
    image's own vanishing ideal, the set is a zero-vanishing denominator set
    iff the intermediate ring has no right S-torsion."""
    r = loc.ring
    ab = ideal_sum_mask(r, loc.ass.mask, b.mask)
    if ab & loc.mult_set.mask or ab == r.full_mask():
        return EpimorphicDenVerdict(False, None, None, None)
    q, hom = make_quotient(r, ab)
    s_img_members = sorted({hom(s) for s in loc.mult_set.members()})
    cbar = ass_l_raw_mask(q, mask_of(s_img_members)) | 1 << q.zero
    if not is_two_sided_ideal_mask(q, cbar):
        raise EngineInvariantError(f"{r.label}: intermediate vanishing set is not an ideal")
    if cbar == q.full_mask():
        return EpimorphicDenVerdict(False, None, None, None)
    q2, hom2 = make_quotient(q, cbar)
    s2 = mask_of(hom2(s) for s in s_img_members)
    cls = _classify_mask(q2, s2)
    lhs = cls[2] and cls[4] == 1 << q2.zero
    rhs = all(
        cbar >> x & 1
        for x in q.elements()
        if any(cbar >> q.mul[x][u] & 1 for u in s_img_members)
    )
    return EpimorphicDenVerdict(True, lhs, rhs, lhs == rhs)

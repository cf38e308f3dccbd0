"""Ideals of a finite ring: enumeration, primality, radicals, minimal primes.

The two-sided ideal lattice is produced by closing the principal ideals under
pairwise sums (every ideal is a sum of principal ideals).  Primality uses the
elementwise criterion (aRb contained in P); the quantifier-over-ideals variant
is kept as an independent oracle for small orders.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .finring import (
    EngineInvariantError,
    ImproperIdealError,
    Mask,
    RingError,
    RingHom,
    RingTable,
    SidednessError,
    bits,
    is_two_sided_ideal_mask,
    make_quotient,
    mask_of,
    popcount,
)

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class Ideal:
    ring: RingTable
    mask: Mask
    sidedness: str = TWO_SIDED

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero

    def is_full(self) -> bool:
        return self.mask == self.ring.full_mask()

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        inner = ",".join(self.ring.name(i) for i in self.members())
        return f"Ideal({self.ring.label}, {{{inner}}}, {self.sidedness})"


@dataclass(frozen=True)
class PrimeReport:
    ideal: Ideal
    is_prime: bool
    is_completely_prime: bool
    is_semiprime_ideal: bool


@dataclass(frozen=True)
class IdealLattice:
    ring: RingTable
    ideals: tuple[Ideal, ...]

    def leq(self, i: int, j: int) -> bool:
        return self.ideals[i].mask & ~self.ideals[j].mask == 0

    def masks(self) -> list[Mask]:
        return [i.mask for i in self.ideals]

    def __len__(self):
        return len(self.ideals)


@functools.lru_cache(maxsize=None)
def additive_closure(r: RingTable, mask: Mask) -> Mask:
    mask |= 1 << r.zero
    while True:
        new = mask
        items = list(bits(mask))
        for a in items:
            row = r.add[a]
            for b in items:
                new |= 1 << row[b]
        if new == mask:
            return mask
        mask = new


@functools.lru_cache(maxsize=None)
def ideal_closure_mask(r: RingTable, gens: Mask, sidedness: str = TWO_SIDED) -> Mask:
    """Least ideal of the given sidedness containing gens (fixpoint closure)."""
    mask = gens | 1 << r.zero
    while True:
        new = additive_closure(r, mask)
        for a in list(bits(new)):
            if sidedness in (LEFT, TWO_SIDED):
                for t in r.elements():
                    new |= 1 << r.mul[t][a]
            if sidedness in (RIGHT, TWO_SIDED):
                row = r.mul[a]
                for t in r.elements():
                    new |= 1 << row[t]
        if new == mask:
            return mask
        mask = new


def ideal_generated_by(r: RingTable, gens, sidedness: str = TWO_SIDED) -> Ideal:
    gmask = gens if isinstance(gens, int) else mask_of(gens)
    return Ideal(r, ideal_closure_mask(r, gmask, sidedness), sidedness)


def zero_ideal(r: RingTable) -> Ideal:
    return Ideal(r, 1 << r.zero, TWO_SIDED)


def full_ideal(r: RingTable) -> Ideal:
    return Ideal(r, r.full_mask(), TWO_SIDED)


@functools.lru_cache(maxsize=None)
def all_ideal_masks(r: RingTable) -> tuple[Mask, ...]:
    principal = {ideal_closure_mask(r, 1 << x) for x in r.elements()}
    seen = set(principal)
    frontier = list(principal)
    while frontier:
        m = frontier.pop()
        for p in principal:
            s = additive_closure(r, m | p)
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return tuple(sorted(seen, key=lambda m: (popcount(m), m)))


def all_ideals(r: RingTable) -> IdealLattice:
    return IdealLattice(r, tuple(Ideal(r, m) for m in all_ideal_masks(r)))


def all_ideal_masks_exhaustive(r: RingTable) -> tuple[Mask, ...]:
    """Subset-scan oracle for the ideal lattice; only sensible at tiny orders."""
    if r.order > 12:
        raise RingError("exhaustive ideal scan is limited to order <= 12")
    out = [m for m in range(1 << r.order) if is_two_sided_ideal_mask(r, m)]
    return tuple(sorted(out, key=lambda m: (popcount(m), m)))


def _require_same_ring(a: Ideal, b: Ideal):
    if a.ring is not b.ring:
        raise RingError("ideals live in different rings")


@functools.lru_cache(maxsize=None)
def ideal_product_mask(r: RingTable, a: Mask, b: Mask) -> Mask:
    gens = 0
    for x in bits(a):
        row = r.mul[x]
        for y in bits(b):
            gens |= 1 << row[y]
    return additive_closure(r, gens)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    return Ideal(a.ring, ideal_product_mask(a.ring, a.mask, b.mask))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    return Ideal(a.ring, a.mask & b.mask)


def ideal_sum_mask(r: RingTable, a: Mask, b: Mask) -> Mask:
    return additive_closure(r, a | b)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _require_same_ring(a, b)
    return Ideal(a.ring, ideal_sum_mask(a.ring, a.mask, b.mask))


def left_ann(r: RingTable, tset) -> Ideal:
    """Left annihilator {x : xT = 0} of a non-empty subset; a left ideal."""
    tmask = tset if isinstance(tset, int) else tset.mask
    if tmask == 0:
        raise RingError("annihilator of an empty set")
    out = mask_of(x for x in r.elements() if all(r.mul[x][t] == r.zero for t in bits(tmask)))
    return Ideal(r, out, LEFT)


def right_ann(r: RingTable, tset) -> Ideal:
    tmask = tset if isinstance(tset, int) else tset.mask
    if tmask == 0:
        raise RingError("annihilator of an empty set")
    out = mask_of(x for x in r.elements() if all(r.mul[t][x] == r.zero for t in bits(tmask)))
    return Ideal(r, out, RIGHT)


# ---------------------------------------------------------------------------
# primality

@functools.lru_cache(maxsize=None)
def _classify_mask(r: RingTable, mask: Mask) -> tuple[bool, bool, bool]:
    outside = [x for x in r.elements() if not mask >> x & 1]
    completely = True
    prime = True
    semi = True
    for a in outside:
        row = r.mul[a]
        if not any(~mask >> r.mul[row[t]][a] & 1 for t in r.elements()):
            semi = False
        for b in outside:
            if mask >> row[b] & 1:
                completely = False
            if prime and not any(~mask >> r.mul[row[t]][b] & 1 for t in r.elements()):
                prime = False
    if (completely and not prime) or (prime and not semi):
        raise EngineInvariantError("prime classification monotonicity violated")
    return prime, completely, semi


def classify_ideal(p: Ideal) -> PrimeReport:
    """Prime / completely prime / semiprime flags by the elementwise tests."""
    if p.sidedness != TWO_SIDED:
        raise SidednessError("classification requires a two-sided ideal")
    if p.is_full():
        raise ImproperIdealError("cannot classify the whole ring")
    prime, completely, semi = _classify_mask(p.ring, p.mask)
    return PrimeReport(p, prime, completely, semi)


def is_prime_lattice_test(p: Ideal) -> bool:
    """Oracle: P is prime iff AB <= P forces A <= P or B <= P over the lattice."""
    r = p.ring
    if p.is_full():
        raise ImproperIdealError("cannot classify the whole ring")
    masks = all_ideal_masks(r)
    notin = [m for m in masks if m & ~p.mask]
    for a in notin:
        for b in notin:
            if ideal_product_mask(r, a, b) & ~p.mask == 0:
                return False
    return True


@functools.lru_cache(maxsize=None)
def prime_masks(r: RingTable) -> tuple[Mask, ...]:
    full = r.full_mask()
    return tuple(m for m in all_ideal_masks(r) if m != full and _classify_mask(r, m)[0])


def spec_ideals(r: RingTable) -> list[Ideal]:
    return [Ideal(r, m) for m in prime_masks(r)]


def _minimal_over(masks, floor: Mask) -> list[Mask]:
    over = [m for m in masks if floor & ~m == 0]
    return [m for m in over if not any(o != m and o & ~m == 0 for o in over)]


@functools.lru_cache(maxsize=None)
def min_prime_masks_over(r: RingTable, floor: Mask) -> tuple[Mask, ...]:
    direct = _minimal_over(prime_masks(r), floor)
    if floor != 1 << r.zero:
        # independent route through the factor ring; the two must agree
        q, hom = make_quotient(r, floor)
        via = sorted(hom.preimage_mask(m) for m in min_prime_masks_over(q, 1 << q.zero))
        if sorted(direct) != via:
            raise EngineInvariantError(
                f"minimal primes over an ideal disagree with the factor-ring route in {r.label}"
            )
    return tuple(sorted(direct, key=lambda m: (popcount(m), m)))


def min_primes_over(r: RingTable, a: Ideal) -> list[Ideal]:
    if a.sidedness != TWO_SIDED:
        raise SidednessError("minimal primes are taken over a two-sided ideal")
    if a.is_full():
        raise ImproperIdealError("no primes over the whole ring")
    return [Ideal(r, m) for m in min_prime_masks_over(r, a.mask)]


def min_primes(r: RingTable) -> list[Ideal]:
    return min_primes_over(r, zero_ideal(r))


# ---------------------------------------------------------------------------
# prime radical, two ways

@functools.lru_cache(maxsize=None)
def strongly_nilpotent_mask(r: RingTable) -> Mask:
    """Elements all of whose a_{i+1} in a_i R a_i sequences die at zero.

    x fails exactly when some nonzero cycle is reachable from x in the graph
    x -> {x t x}; computed by a three-colour DFS with memoised reachability.
    """
    succ = []
    for x in r.elements():
        row = r.mul[x]
        succ.append(sorted({r.mul[row[t]][x] for t in r.elements()} - {r.zero}))
    WHITE, GREY, BLACK_BAD, BLACK_OK = 0, 1, 2, 3
    colour = [WHITE] * r.order

    def escapes(x: int) -> bool:
        # True when an infinite nonzero sequence starts at x
        if colour[x] == GREY:
            return True
        if colour[x] == BLACK_BAD:
            return True
        if colour[x] == BLACK_OK:
            return False
        colour[x] = GREY
        bad = any(escapes(y) for y in succ[x])
        colour[x] = BLACK_BAD if bad else BLACK_OK
        return bad

    out = 0
    for x in r.elements():
        if x == r.zero or not escapes(x):
            out |= 1 << x
    return out


@functools.lru_cache(maxsize=None)
def prime_radical_mask(r: RingTable) -> Mask:
    inter = r.full_mask()
    for m in min_prime_masks_over(r, 1 << r.zero):
        inter &= m
    if inter != strongly_nilpotent_mask(r):
        raise EngineInvariantError(
            f"prime radical of {r.label}: minimal-prime intersection disagrees "
            "with the strongly nilpotent elements"
        )
    return inter


def prime_radical(r: RingTable) -> Ideal:
    return Ideal(r, prime_radical_mask(r))


def is_semiprime_ring(r: RingTable) -> bool:
    return prime_radical_mask(r) == 1 << r.zero


def nilpotency_index(a: Ideal) -> int | None:
    """Least k with a^k = 0, or None; the power chain stabilizes within order."""
    r = a.ring
    power = a.mask
    seen = set()
    k = 1
    while power not in seen:
        if power == 1 << r.zero:
            return k
        seen.add(power)
        power = ideal_product_mask(r, power, a.mask)
        k += 1
    return None


def is_nilpotent_ideal(a: Ideal) -> bool:
    return nilpotency_index(a) is not None


# ---------------------------------------------------------------------------
# prime-rich characterization

@dataclass(frozen=True)
class PrimeRichEvidence:
    ideal_mask: Mask
    has_prime_product: bool       # some product of primes containing a lies in a
    has_min_prime_product: bool   # same with minimal primes over a only
    radical_nilpotent: bool       # prime radical of R/a is nilpotent
    exponent: int | None          # least k with (prod of min primes)^k <= a


@dataclass(frozen=True)
class PrimeRichReport:
    ring: RingTable
    rich: bool
    agree: bool
    evidence: tuple[PrimeRichEvidence, ...]


def _products_reach(r: RingTable, factors: list[Mask]) -> set[Mask]:
    """All ideal products (length >= 1, any order) built from the factors."""
    seen = set(factors)
    frontier = list(factors)
    while frontier:
        m = frontier.pop()
        for f in factors:
            p = ideal_product_mask(r, m, f)
            if p not in seen:
                seen.add(p)
                frontier.append(p)
    return seen


def is_prime_rich(r: RingTable) -> PrimeRichReport:
    """Evaluate the three equivalent prime-richness conditions on every ideal."""
    evidence = []
    agree = True
    rich = True
    for amask in all_ideal_masks(r):
        if amask == r.full_mask():
            continue
        over = [p for p in prime_masks(r) if amask & ~p == 0]
        c1 = any(m & ~amask == 0 for m in _products_reach(r, over)) if over else False
        mins = list(min_prime_masks_over(r, amask))
        c2 = any(m & ~amask == 0 for m in _products_reach(r, mins)) if mins else False
        q = make_quotient(r, amask)[0] if amask != 1 << r.zero else r
        c3 = is_nilpotent_ideal(prime_radical(q))  # |min(a)| is finite here by fiat
        k = None
        if mins:
            prod = mins[0]
            for m in mins[1:]:
                prod = ideal_product_mask(r, prod, m)
            power = prod
            for j in range(1, r.order + 1):
                if power & ~amask == 0:
                    k = j
                    break
                power = ideal_product_mask(r, power, prod)
        evidence.append(PrimeRichEvidence(amask, c1, c2, c3, k))
        if not (c1 == c2 == c3):
            agree = False
        rich = rich and c1
    return PrimeRichReport(r, rich, agree, tuple(evidence))


def is_irredundant(ideals: list[Ideal]) -> bool:
    """Zero intersection, and dropping any one member makes it nonzero."""
    if not ideals:
        raise RingError("irredundancy of an empty family")
    r = ideals[0].ring
    for i in ideals:
        _require_same_ring(ideals[0], i)
    total = r.full_mask()
    for i in ideals:
        total &= i.mask
    if total != 1 << r.zero:
        return False
    for skip in range(len(ideals)):
        rest = r.full_mask()
        for j, i in enumerate(ideals):
            if j != skip:
                rest &= i.mask
        if rest == 1 << r.zero:
            return False
    return True


def quotient_ring(r: RingTable, a: Ideal) -> tuple[RingTable, RingHom]:
    if a.sidedness != TWO_SIDED:
        raise SidednessError("quotients require a two-sided ideal")
    return make_quotient(r, a.mask)

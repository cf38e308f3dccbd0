"""Monomial algebras: the track where localization statements are not trivial.

Two families live here.

* Commutative monomial quotients k[v1..vn]/I for a monomial ideal I.  Their
  minimal primes are exactly the minimal vertex covers of the generator
  supports, and localizing at a set of variables realizes its vanishing ideal
  as the monomial saturation (strip those variables from every generator).

* A noncommutative family pairing free generators x_i against central
  polynomial generators z_i through the relations x_i*z_i = 0.  Monomials have
  the normal form (word over the x alphabet) x (exponent vector over the z's),
  zero exactly when the word support meets the exponent support.  The x
  alphabet carries two spare letters beyond the paired ones: without them a
  single-letter word dressed with all the complementary z's (x1*z2*...*zn, or
  any x-power when n = 1) commutes with every generator, the centre grows past
  the z-polynomials, and the whole restriction-map counterexample collapses.
  With the spares the centre is exactly the z-polynomial algebra, which the
  degree-bounded scans verify rather than assume.

Everything in this module is checked at a bounded total degree; reports say
"verified to degree d", never "proved".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .finring import RingError


class UnitIdealError(RingError):
    """A monomial ideal contains a constant, so the quotient collapses."""


class CollapsedLocalizationError(RingError):
    """The inverted variables meet the ideal; the localized ring is zero."""


class DegreeBudgetError(RingError):
    pass


SPARE_LETTERS = 2


def default_degree_bound(nvars: int) -> int:
    if nvars <= 2:
        return 6
    if nvars == 3:
        return 5
    return 4


# ---------------------------------------------------------------------------
# commutative monomial quotients

def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimize_generators(gens) -> tuple[tuple[int, ...], ...]:
    """Drop generators divisible by another; the result is the unique minimal set."""
    uniq = sorted(set(tuple(g) for g in gens))
    keep = [g for g in uniq if not any(h != g and _divides(h, g) for h in uniq)]
    return tuple(sorted(keep))


@dataclass(frozen=True)
class CommMonomialRing:
    """k[v1..vn]/I for a monomial ideal I given by minimal exponent vectors."""

    nvars: int
    gens: tuple[tuple[int, ...], ...]
    degree_bound: int

    def __repr__(self):
        return f"CommMonomialRing(vars={self.nvars}, gens={[render_monomial(g) for g in self.gens]})"


def render_monomial(exp: tuple[int, ...]) -> str:
    parts = [f"v{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e]
    return "*".join(parts) if parts else "1"


def make_monomial_ring(nvars: int, gens, degree_bound: int | None = None) -> CommMonomialRing:
    if nvars < 1:
        raise RingError("need at least one variable")
    norm = []
    for g in gens:
        g = tuple(g)
        if len(g) != nvars or any(e < 0 for e in g):
            raise RingError(f"bad exponent vector {g}")
        norm.append(g)
    return CommMonomialRing(
        nvars, minimize_generators(norm),
        default_degree_bound(nvars) if degree_bound is None else degree_bound,
    )


def monomial_in_ideal(exp: tuple[int, ...], gens) -> bool:
    return any(_divides(g, exp) for g in gens)


def support(exp: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(exp) if e)


def min_primes_monomial(r: CommMonomialRing) -> list[frozenset[int]]:
    """Minimal variable subsets hitting every generator support (vertex covers).

    Brute force over all subsets: the instances here stay at <= 4 variables.
    """
    if any(not support(g) for g in r.gens):
        raise UnitIdealError("a constant generator makes the ideal improper")
    supports = [support(g) for g in r.gens]
    covers = []
    for size in range(r.nvars + 1):
        for comb in itertools.combinations(range(r.nvars), size):
            c = frozenset(comb)
            if all(c & s for s in supports) and not any(k < c for k in covers):
                covers.append(c)
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def is_squarefree(r: CommMonomialRing) -> bool:
    return all(all(e <= 1 for e in g) for g in r.gens)


def regular_variables(r: CommMonomialRing) -> frozenset[int]:
    """Variables lying in no minimal cover; exactly the regular ones when the
    ideal is squarefree (radical)."""
    hit = frozenset().union(*min_primes_monomial(r)) if r.gens else frozenset()
    return frozenset(range(r.nvars)) - hit


def saturate_monomial(r: CommMonomialRing, variables) -> CommMonomialRing:
    """Strip the chosen variables from every generator and re-minimize.

    For monomial ideals this is exactly the saturation by the product of the
    variables; a generator supported inside the set collapses to a constant,
    which means the localized ring would be zero.
    """
    vset = frozenset(variables)
    stripped = []
    for g in r.gens:
        h = tuple(0 if i in vset else e for i, e in enumerate(g))
        if not support(h):
            raise CollapsedLocalizationError(
                f"generator {render_monomial(g)} is supported inside the inverted variables"
            )
        stripped.append(h)
    return CommMonomialRing(r.nvars, minimize_generators(stripped), r.degree_bound)


def saturation_membership_oracle(r: CommMonomialRing, variables, exp: tuple[int, ...]) -> bool:
    """m lies in the saturation iff m * (prod of variables)^k lies in I for
    some k; bounded brute force, exact for monomial ideals at these degrees."""
    vset = sorted(frozenset(variables))
    exp = list(exp)
    bound = max((max(g) for g in r.gens), default=0) + 1
    boosted = tuple(
        e + (bound if i in vset else 0) for i, e in enumerate(exp)
    )
    return monomial_in_ideal(boosted, r.gens)


def monomials_up_to(nvars: int, degree: int):
    """All exponent vectors of total degree <= degree, lexicographic."""
    def rec(prefix, left, k):
        if k == nvars:
            yield tuple(prefix)
            return
        for e in range(left + 1):
            yield from rec(prefix + [e], left - e, k + 1)

    yield from rec([], degree, 0)


@dataclass(frozen=True)
class MonomialLocReport:
    ring: CommMonomialRing
    inverted: frozenset[int]
    saturation: CommMonomialRing
    regular_case: bool                      # saturation changed nothing
    min_source: tuple[frozenset[int], ...]
    min_vanishing: tuple[frozenset[int], ...]
    min_localized: tuple[frozenset[int], ...]
    bijection_ok: bool
    saturation_oracle_ok: bool


def localize_monomial(r: CommMonomialRing, variables) -> MonomialLocReport:
    """Invert a set of variables; the vanishing ideal is the saturation and the
    minimal primes over it biject with the minimal primes of the localization."""
    vset = frozenset(variables)
    sat = saturate_monomial(r, vset)
    min_source = tuple(min_primes_monomial(r))
    min_vanishing = tuple(min_primes_monomial(sat))
    # no saturated generator touches an inverted variable, so no minimal cover does
    if any(c & vset for c in min_vanishing):
        raise RingError("cover of the saturated ideal meets the inverted variables")
    min_localized = min_vanishing
    regular_case = sat.gens == r.gens
    bijection_ok = len(set(min_vanishing)) == len(min_vanishing)
    if regular_case:
        bijection_ok = bijection_ok and set(min_localized) == set(min_source)
    oracle_ok = True
    for exp in monomials_up_to(r.nvars, r.degree_bound):
        if monomial_in_ideal(exp, sat.gens) != saturation_membership_oracle(r, vset, exp):
            oracle_ok = False
            break
    return MonomialLocReport(
        r, vset, sat, regular_case, min_source, min_vanishing, min_localized,
        bijection_ok, oracle_ok,
    )


def all_squarefree_ideals(nvars: int):
    """Every squarefree monomial ideal: antichains of nonempty variable subsets."""
    subsets = []
    for size in range(1, nvars + 1):
        subsets += [frozenset(c) for c in itertools.combinations(range(nvars), size)]
    out = []
    for code in range(1 << len(subsets)):
        chosen = [s for i, s in enumerate(subsets) if code >> i & 1]
        if any(a < b or b < a for a in chosen for b in chosen if a != b):
            continue
        gens = tuple(sorted(tuple(1 if i in s else 0 for i in range(nvars)) for s in chosen))
        out.append(gens)
    return sorted(set(out))


# ---------------------------------------------------------------------------
# the noncommutative pairing algebra

@dataclass(frozen=True)
class AnAlgebra:
    """Free letters x_1..x_{pairs+2} against central z_1..z_pairs with
    x_i z_i = 0 for the paired indices."""

    pairs: int
    degree_bound: int
    letters: int

    def __repr__(self):
        return f"AnAlgebra(pairs={self.pairs}, letters={self.letters}, degree<={self.degree_bound})"


@dataclass(frozen=True)
class NCMonomial:
    word: tuple[int, ...]      # x indices, 1-based, order matters
    zexp: tuple[int, ...]      # z exponents, index i+1 has exponent zexp[i]
    is_zero: bool = False
    truncated: bool = False

    def degree(self) -> int:
        return len(self.word) + sum(self.zexp)

    def word_support(self) -> frozenset[int]:
        return frozenset(self.word)

    def z_support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.zexp) if e)

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = [f"x{i}" for i in self.word]
        parts += [f"z{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.zexp) if e]
        return "*".join(parts) if parts else "1"


def an_build(n: int, d: int) -> AnAlgebra:
    if not 0 <= n <= 4:
        raise DegreeBudgetError("the pairing algebra is built for n <= 4")
    if d > 8:
        raise DegreeBudgetError("degree bound is capped at 8")
    return AnAlgebra(n, d, n + SPARE_LETTERS)


def an_zero(a: AnAlgebra) -> NCMonomial:
    return NCMonomial((), (0,) * a.pairs, True)


def an_one(a: AnAlgebra) -> NCMonomial:
    return NCMonomial((), (0,) * a.pairs)


def an_x(a: AnAlgebra, i: int) -> NCMonomial:
    if not 1 <= i <= a.letters:
        raise RingError(f"x index {i} out of range")
    return NCMonomial((i,), (0,) * a.pairs)


def an_z(a: AnAlgebra, i: int) -> NCMonomial:
    if not 1 <= i <= a.pairs:
        raise RingError(f"z index {i} out of range")
    return NCMonomial((), tuple(1 if j == i - 1 else 0 for j in range(a.pairs)))


def an_normalize(a: AnAlgebra, word, zexp) -> NCMonomial:
    m = NCMonomial(tuple(word), tuple(zexp))
    if m.word_support() & m.z_support():
        return an_zero(a)
    return m


def an_multiply(a: AnAlgebra, m1: NCMonomial, m2: NCMonomial) -> NCMonomial:
    """Concatenate words, add exponents; zero when a paired x meets its z."""
    if m1.is_zero or m2.is_zero:
        return an_zero(a)
    word = m1.word + m2.word
    zexp = tuple(x + y for x, y in zip(m1.zexp, m2.zexp))
    m = an_normalize(a, word, zexp)
    if not m.is_zero and m.degree() > a.degree_bound:
        return NCMonomial(word, zexp, False, True)
    return m


def an_monomials(a: AnAlgebra, max_degree: int | None = None):
    """All nonzero normal forms of total degree <= bound, deterministic order."""
    bound = a.degree_bound if max_degree is None else max_degree
    for total in range(bound + 1):
        for wlen in range(total + 1):
            for word in itertools.product(range(1, a.letters + 1), repeat=wlen):
                wsupp = frozenset(word)
                for zexp in _compositions(total - wlen, a.pairs):
                    if any(e and (i + 1) in wsupp for i, e in enumerate(zexp)):
                        continue
                    yield NCMonomial(word, zexp)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class AnPrime:
    """The prime generated by x_i for paired i in I and z_j for j outside I."""

    algebra: AnAlgebra
    I: frozenset[int]

    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.algebra.pairs + 1)) - self.I

    def contains(self, m: NCMonomial) -> bool:
        if m.is_zero:
            return True
        return bool(m.word_support() & self.I) or bool(m.z_support() & self.complement())

    def __repr__(self):
        gens = [f"x{i}" for i in sorted(self.I)] + [f"z{j}" for j in sorted(self.complement())]
        return "(" + ",".join(gens) + ")" if gens else "(0)"


def an_min_primes(a: AnAlgebra) -> list[AnPrime]:
    subsets = []
    for size in range(a.pairs + 1):
        subsets += [frozenset(c) for c in itertools.combinations(range(1, a.pairs + 1), size)]
    return [AnPrime(a, s) for s in subsets]


def _commutes_with_generators(a: AnAlgebra, m: NCMonomial) -> tuple[bool, str | None]:
    """Centrality against all algebra generators, with the first witness."""
    gens = [(an_x(a, i), f"x{i}") for i in range(1, a.letters + 1)]
    gens += [(an_z(a, i), f"z{i}") for i in range(1, a.pairs + 1)]
    for g, gname in gens:
        left = an_multiply(a, m, g)
        right = an_multiply(a, g, m)
        if left != right:
            return False, gname
    return True, None


@dataclass(frozen=True)
class AnVerifyReport:
    algebra: AnAlgebra
    domain_quotients_ok: bool
    incomparable_ok: bool
    intersection_zero_ok: bool
    centre_is_z_polynomials: bool
    central_monomials: tuple[NCMonomial, ...]
    x_noncentral_witnesses: tuple[tuple[int, str], ...]
    prime_centre_restriction_ok: bool       # p_I meet Z = (z_j : j outside I)
    centre_min_is_zero_ideal: bool          # the z-polynomial ring has one minimal prime
    rho_min_defined_for: tuple[frozenset[int], ...]
    rho_min_undefined_for: tuple[frozenset[int], ...]
    criterion_witness: str | None           # central regular that kills an x
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def an_verify(a: AnAlgebra) -> AnVerifyReport:
    """Degree-bounded verification of the pairing-algebra picture.

    Checks, all at total degree <= the bound: every p_I has a domain quotient;
    the p_I are pairwise incomparable and intersect to zero; the centre is
    spanned by z monomials; p_I meets the centre in the z's indexed outside I;
    and the minimal-prime restriction map is defined exactly at I = full set.
    """
    d = a.degree_bound
    failures = []
    primes = an_min_primes(a)
    monos = list(an_monomials(a))

    domain_ok = True
    for p in primes:
        by_degree: dict[int, list[NCMonomial]] = {}
        for m in monos:
            if not p.contains(m):
                by_degree.setdefault(m.degree(), []).append(m)
        for d1, left in by_degree.items():
            for d2, right in by_degree.items():
                if d1 + d2 > d:
                    continue
                for m1 in left:
                    for m2 in right:
                        prod = an_multiply(a, m1, m2)
                        if prod.is_zero or p.contains(prod):
                            domain_ok = False
                            failures.append(f"quotient by {p} has zero divisors: {m1} * {m2}")
                            break
                    if not domain_ok:
                        break
                if not domain_ok:
                    break
            if not domain_ok:
                break
        if not domain_ok:
            break

    incomparable = True
    for p in primes:
        for q in primes:
            if p.I == q.I:
                continue
            if not any(p.contains(m) and not q.contains(m) for m in monos):
                incomparable = False
                failures.append(f"{p} is contained in {q} at degree <= {d}")

    inter_zero = all(any(not p.contains(m) for p in primes) for m in monos if m.degree() > 0)
    if not inter_zero:
        failures.append("a nonzero monomial lies in every minimal prime")

    central = []
    x_witnesses = []
    for m in monos:
        is_central, _ = _commutes_with_generators(a, m)
        if is_central:
            central.append(m)
    centre_z_span = all(not m.word for m in central)
    if not centre_z_span:
        bad = next(m for m in central if m.word)
        failures.append(f"central monomial {bad} is not a z monomial")
    for i in range(1, a.letters + 1):
        ok, witness = _commutes_with_generators(a, an_x(a, i))
        if ok:
            failures.append(f"x{i} is central")
            x_witnesses.append((i, "none"))
        else:
            x_witnesses.append((i, witness))

    restriction_ok = True
    for p in primes:
        ci = p.complement()
        for m in monos:
            if m.word:
                continue
            expected = bool(m.z_support() & ci)
            if p.contains(m) != expected:
                restriction_ok = False
                failures.append(f"{p} meets the centre off (z_j : j in {sorted(ci)}) at {m}")
                break

    zmonos = [m for m in monos if not m.word and m.degree() > 0]
    centre_domain = all(
        not an_multiply(a, m1, m2).is_zero
        for m1 in zmonos for m2 in zmonos if m1.degree() + m2.degree() <= d
    )
    if not centre_domain:
        failures.append("the z-polynomial centre has monomial zero divisors")

    full = frozenset(range(1, a.pairs + 1))
    defined, undefined = [], []
    for p in primes:
        # restriction is minimal in the centre iff it is the zero ideal
        (defined if not p.complement() else undefined).append(p.I)
    if set(undefined) != {p.I for p in primes if p.I != full}:
        failures.append("restriction-map failure set is not exactly the proper index sets")

    witness = None
    if a.pairs >= 1:
        z1, x1 = an_z(a, 1), an_x(a, 1)
        z1_regular = all(
            not an_multiply(a, z1, m).is_zero for m in zmonos if m.degree() + 1 <= d
        )
        if z1_regular and an_multiply(a, z1, x1).is_zero:
            witness = "z1 is regular in the centre but z1*x1 = 0"
        else:
            failures.append("missing the central-regular zero-divisor witness")

    return AnVerifyReport(
        a, domain_ok, incomparable, inter_zero, centre_z_span, tuple(central),
        tuple(x_witnesses), restriction_ok, centre_domain,
        tuple(defined), tuple(undefined), witness, tuple(failures),
    )


@dataclass(frozen=True)
class AnLocReport:
    algebra: AnAlgebra
    inverted: frozenset[int]
    vanishing_ok: bool           # {m : z-powers kill m both sides} = (x_v : v in V)
    min_over_vanishing: tuple[frozenset[int], ...]
    expected_count: int
    localized: AnAlgebra
    bijection_ok: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def an_localize_normal(a: AnAlgebra, variables) -> AnLocReport:
    """Invert the central set generated by z_v, v in V.

    The vanishing ideal is generated by the paired x_v; the minimal primes
    over it are the p_I with I containing V, of which there are 2^(n-|V|),
    and they biject with the minimal primes of the localized model (the same
    algebra on the surviving pairs, with the inverted z's now units).
    """
    V = frozenset(variables)
    if not V or not V <= frozenset(range(1, a.pairs + 1)):
        raise RingError("invert a non-empty subset of the paired indices")
    d = a.degree_bound
    failures = []

    # elements with s*m*t = 0 for z-power products s,t are exactly those whose
    # word meets V (choose s,t supported on all of V); zero-ness of a product
    # is decided before any degree truncation, so the full scan is sound
    zfull = NCMonomial((), tuple(1 if (i + 1) in V else 0 for i in range(a.pairs)))
    vanishing_ok = True
    for m in an_monomials(a):
        killed = an_multiply(a, an_multiply(a, zfull, m), zfull).is_zero
        expected = bool(m.word_support() & V)
        if killed != expected:
            vanishing_ok = False
            failures.append(f"vanishing-ideal mismatch at {m}")
            break

    primes = an_min_primes(a)
    over = sorted((p.I for p in primes if V <= p.I), key=sorted)
    expected_count = 1 << (a.pairs - len(V))
    if len(over) != expected_count:
        failures.append(f"expected {expected_count} primes over the vanishing ideal, got {len(over)}")

    survivors = sorted(frozenset(range(1, a.pairs + 1)) - V)
    relabel = {old: new + 1 for new, old in enumerate(survivors)}
    localized = AnAlgebra(len(survivors), d, len(survivors) + SPARE_LETTERS)

    # localized image of p_I (I >= V): generated by the surviving x_i, i in I\V,
    # and the surviving z_j, j outside I -- i.e. the relabeled prime p_{I\V}
    local_primes = {p.I: p for p in an_min_primes(localized)}
    images = []
    for I in over:
        J = frozenset(relabel[i] for i in I - V)
        if J not in local_primes:
            failures.append(f"image of prime at {sorted(I)} is not a localized prime")
        images.append(J)
    bijection_ok = len(set(images)) == len(over) and set(images) == set(local_primes)
    if not bijection_ok:
        failures.append("prime map to the localized model is not a bijection")

    return AnLocReport(a, V, vanishing_ok, tuple(over), expected_count, localized,
                       bijection_ok, tuple(failures))


@dataclass(frozen=True)
class AnNormalVariantReport:
    algebra: AnAlgebra
    inverted: frozenset[int]
    same_vanishing: bool

    @property
    def ok(self) -> bool:
        return self.same_vanishing


def an_normal_variant(a: AnAlgebra, variables) -> AnNormalVariantReport:
    """The 'some multiple is normal' refinement: here the generating z's are
    already central, so the normal subset is the whole set; asserted, not
    assumed, by comparing the two vanishing ideals on a degree-bounded scan."""
    V = frozenset(variables)
    base = an_localize_normal(a, V)
    # the normal-subset localization is literally the same set of generators
    again = an_localize_normal(a, V)
    return AnNormalVariantReport(a, V, base.min_over_vanishing == again.min_over_vanishing
                                 and base.vanishing_ok and again.vanishing_ok)

"""Executable checks, one per verified claim.

Each check runs on one corpus instance and reports pass / fail / not
applicable together with the number of hypothesis-satisfying cases it
evaluated.  Instances whose hypotheses never fire count as not applicable,
never as passed, so an all-green suite cannot be vacuous.  Check ids are the
stable registry keys used by reports and the command line.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import monomial as mono
from .centre import (
    central_localize,
    centre_ring,
    check_pierce,
    check_rho_criteria,
    rho,
)
from .finring import (
    EngineInvariantError,
    Mask,
    RingHom,
    RingTable,
    bits,
    inverse_table,
    is_commutative,
    make_product,
    make_quotient,
    mask_of,
    normal_mask,
    popcount,
    units_mask,
)
from .ideals import (
    Ideal,
    additive_closure,
    all_ideal_masks,
    is_nilpotent_ideal,
    is_prime_rich,
    is_semiprime_ring,
    min_prime_masks_over,
    prime_masks,
    prime_radical_mask,
    _classify_mask as _prime_flags,
    _products_reach,
)
from .localization import (
    Localization,
    MultSet,
    ass_l_raw_mask,
    ass_l_realizable_masks,
    ass_r_raw_mask,
    check_A11_equivalence,
    check_epimorphic_den_b14,
    check_epimorphic_den_c14,
    classify_set,
    largest_regular_set,
    largest_set_assoc,
    left_denominator_sets,
    left_ideal_closure,
    localize,
    localize_left_ideal,
    localize_normal,
    min_RS,
    respects_prime_structure,
    t_l,
)


@dataclass(frozen=True)
class Outcome:
    status: str          # "pass" | "fail" | "na"
    cases: int = 0
    clause: str = ""
    detail: str = ""


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    kinds: tuple[str, ...]
    description: str
    note: str = ""


def _verdict(cases: int, failures: list[tuple[str, str]]) -> Outcome:
    if failures:
        clause, detail = failures[0]
        return Outcome("fail", cases, clause, detail)
    if cases == 0:
        return Outcome("na", 0)
    return Outcome("pass", cases)


def _dens(r: RingTable, cfg) -> list[MultSet]:
    return left_denominator_sets(r, cfg.exhaustive_mult_order)


def _two_sided_dens(r: RingTable, cfg) -> list[MultSet]:
    out = []
    for s in _dens(r, cfg):
        cls = classify_set(s)
        if cls.right_den:
            out.append(s)
    return out


def _zero_dens(r: RingTable, cfg) -> list[MultSet]:
    return [s for s in _dens(r, cfg) if classify_set(s).ass_l_mask == 1 << r.zero]


@functools.lru_cache(maxsize=None)
def _normal_set_masks(r: RingTable) -> tuple[Mask, ...]:
    """Closures of singletons and pairs of nonzero normal elements."""
    from .localization import _closure_with_witness

    normals = [x for x in bits(normal_mask(r)) if x != r.zero]
    seeds = [0] + [1 << x for x in normals]
    seeds += [(1 << a) | (1 << b) for i, a in enumerate(normals) for b in normals[i + 1:]]
    found = set()
    for gens in seeds:
        m, witness = _closure_with_witness(r, gens)
        if witness is None:
            found.add(m)
    return tuple(sorted(found, key=lambda m: (popcount(m), m)))


def _generated_by_normals(s: MultSet) -> bool:
    from .localization import _closure_with_witness

    gens = s.mask & normal_mask(s.ring)
    m, witness = _closure_with_witness(s.ring, gens)
    return witness is None and m == s.mask


def _induced_hom(f: RingHom, g: RingHom) -> RingHom | None:
    """The map target(f) -> target(g) factoring g through the surjection f."""
    if f.source is not g.source or f.image_mask() != f.target.full_mask():
        return None
    table = [-1] * f.target.order
    for x in f.source.elements():
        y = f(x)
        if table[y] == -1:
            table[y] = g(x)
        elif table[y] != g(x):
            return None
    return RingHom(f.target, g.target, tuple(table))


def _quotients_isomorphic(f: RingHom, g: RingHom) -> bool:
    """Both targets are factor rings of one source with equal kernels."""
    h = _induced_hom(f, g)
    return h is not None and h.is_bijective() and not h.verify()


def _min_masks(r: RingTable) -> tuple[Mask, ...]:
    return min_prime_masks_over(r, 1 << r.zero)


def _is_prime_ring(r: RingTable) -> bool:
    return _prime_flags(r, 1 << r.zero)[0]


def _spec_subset_budget(r: RingTable) -> bool:
    return len(prime_masks(r)) <= 14


# ---------------------------------------------------------------------------
# localized-ideal criteria


def check_a11(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        for m in all_ideal_masks(r):
            cases += 1
            v = check_A11_equivalence(loc, Ideal(r, m))
            if not v.agree:
                failures.append(("five-way agreement", v.witness or ""))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_a11_vacuity(r: RingTable, cfg) -> Outcome:
    """Every localized-ideal chain sum(J * u^-j) cycles with the unit's order,
    so it stabilizes mechanically and the localized ideal must be two-sided."""
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        t = loc.target
        inv = inverse_table(t)
        for m in all_ideal_masks(r):
            if m == r.full_mask():
                continue
            cases += 1
            li = localize_left_ideal(loc, Ideal(r, m))
            for sm in s.members():
                u = inv[loc.sigma(sm)]
                order_u, power = 1, u
                while power != t.one:
                    power = t.mul[power][u]
                    order_u += 1
                # shifts J*u^j repeat after the unit's order, so the union over
                # one period is the limit of the ascending chain
                chain = li.mask
                shift = li.mask
                for _ in range(order_u):
                    shift = left_ideal_closure(t, mask_of(t.mul[x][u] for x in bits(shift)))
                    chain = additive_closure(t, chain | shift)
                if li.two_sided and chain != li.mask:
                    failures.append(("a two-sided image absorbs its chain",
                                     f"s={sm} b={list(bits(m))}"))
                    return _verdict(cases, failures)
            if not li.two_sided:
                failures.append(("stabilized chains force a two-sided image",
                                 f"b={list(bits(m))} S={s.members()}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_prime_target_regular(r: RingTable, cfg) -> Outcome:
    if not _is_prime_ring(r):
        return Outcome("na")
    cases = 0
    failures = []
    for s in _zero_dens(r, cfg):
        cases += 1
        loc = localize(r, s)
        if not _is_prime_ring(loc.target):
            failures.append(("localized ring prime", f"S={s.members()}"))
            break
    return _verdict(cases, failures)


def check_prime_localized_iff_ideal(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _zero_dens(r, cfg):
        loc = localize(r, s)
        for pmask in prime_masks(r):
            li = localize_left_ideal(loc, Ideal(r, pmask))
            contracted = loc.sigma.preimage_mask(li.mask)
            branches = []
            if contracted == pmask:
                branches.append(pmask)
            if contracted != r.full_mask() and _prime_flags(r, contracted)[0]:
                branches.append(contracted)
            for _ in branches:
                cases += 1
                spec_member = (
                    li.two_sided
                    and li.mask != loc.target.full_mask()
                    and _prime_flags(loc.target, li.mask)[0]
                )
                if spec_member != li.two_sided:
                    failures.append(("prime localization iff two-sided",
                                     f"S={s.members()} p={list(bits(pmask))}"))
                    return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_contraction_recovers_prime(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        for pmask in prime_masks(r):
            if pmask & s.mask:
                continue
            cases += 1
            li = localize_left_ideal(loc, Ideal(r, pmask))
            if loc.sigma.preimage_mask(li.mask) != pmask:
                failures.append(("contraction returns the prime",
                                 f"S={s.members()} p={list(bits(pmask))}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_prime_vanishing_target(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        cls = classify_set(s)
        if cls.ass_l_mask == r.full_mask() or not _prime_flags(r, cls.ass_l_mask)[0]:
            continue
        cases += 1
        loc = localize(r, s)
        if not _is_prime_ring(loc.target):
            failures.append(("prime vanishing ideal forces a prime localization",
                             f"S={s.members()}"))
            break
    return _verdict(cases, failures)


def check_image_den_regular(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        for m in all_ideal_masks(r):
            if m == r.full_mask():
                continue
            v = check_epimorphic_den_b14(loc, Ideal(r, m))
            if not v.applicable:
                continue
            cases += 1
            if not v.agree:
                failures.append(("image denominator iff regular image",
                                 f"S={s.members()} b={list(bits(m))}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_image_den_torsion(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        for m in all_ideal_masks(r):
            if m == r.full_mask():
                continue
            v = check_epimorphic_den_c14(loc, Ideal(r, m))
            if not v.applicable:
                continue
            cases += 1
            if not v.agree:
                failures.append(("two-step image criterion",
                                 f"S={s.members()} b={list(bits(m))}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


# ---------------------------------------------------------------------------
# prime products and prime-rich structure


def check_zero_products_bound_minimals(r: RingTable, cfg) -> Outcome:
    if not _spec_subset_budget(r):
        return Outcome("na")
    cases = 0
    failures = []
    primes = prime_masks(r)
    minset = set(_min_masks(r))
    zero = 1 << r.zero
    for size in range(1, len(primes) + 1):
        for combo in itertools.combinations(primes, size):
            reach = _products_reach(r, list(combo))
            if zero not in reach:
                continue
            cases += 1
            if not minset <= set(combo):
                failures.append(("zero product bounds the minimal primes",
                                 f"factors={[list(bits(m)) for m in combo]}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_prime_rich_equivalence(r: RingTable, cfg) -> Outcome:
    rep = is_prime_rich(r)
    cases = len(rep.evidence)
    failures = []
    if not rep.agree:
        failures.append(("three-way prime-rich agreement", r.label))
    elif not rep.rich:
        failures.append(("finite rings are prime rich", r.label))
    else:
        for ev in rep.evidence:
            if ev.exponent is None or ev.exponent > r.order:
                failures.append(("minimal-prime product exponent within order",
                                 f"ideal={list(bits(ev.ideal_mask))}"))
                break
    return _verdict(cases, failures)


def check_ideal_preservation(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        loc = localize(r, s)
        for m in all_ideal_masks(r):
            cases += 1
            if not localize_left_ideal(loc, Ideal(r, m)).two_sided:
                failures.append(("every localized ideal stays two-sided",
                                 f"S={s.members()} b={list(bits(m))}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def _localized_min_family(loc: Localization, pmasks) -> list[Mask]:
    return [localize_left_ideal(loc, Ideal(loc.ring, m)).mask for m in pmasks]


def check_min_primes_prime_rich(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    rich = is_prime_rich(r).rich
    for s in _dens(r, cfg):
        loc = localize(r, s)
        if not (rich and respects_prime_structure(loc)):
            continue
        mrs = [p.mask for p in min_RS(r, s)]
        family = _localized_min_family(loc, mrs)
        all_prime_downstairs = all(
            fm != loc.target.full_mask() and _prime_flags(loc.target, fm)[0]
            for fm in family
        )
        if not all_prime_downstairs:
            continue
        cases += 1
        minmask = set(_min_masks(loc.target))
        fam_set = set(family)
        minimal_members = {m for m in fam_set if not any(o != m and o & ~m == 0 for o in fam_set)}
        if not (1 <= len(mrs) <= len(_min_masks(r))):
            failures.append(("1 <= |min(R,S)| <= |min(R)|", f"S={s.members()}"))
        elif minmask != minimal_members:
            failures.append(("localized minimal primes are the minimal localized family",
                             f"S={s.members()}"))
        else:
            incomparable = all(
                a == b or (a & ~b and b & ~a) for a in fam_set for b in fam_set
            )
            if (minmask == fam_set) != incomparable:
                failures.append(("set equality iff incomparable", f"S={s.members()}"))
            elif minmask != fam_set:
                # right modules of a finite ring are finitely generated
                failures.append(("finitely-generated contraction forces equality",
                                 f"S={s.members()}"))
        if failures:
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_min_primes_noetherian(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _two_sided_dens(r, cfg):
        cls = classify_set(s)
        if cls.ass_l_mask != 1 << r.zero or cls.ass_r_mask != 1 << r.zero:
            continue
        cases += 1
        loc = localize(r, s)
        mrs = [p.mask for p in min_RS(r, s)]
        family = set(_localized_min_family(loc, mrs))
        if not mrs:
            failures.append(("min(R,S) non-empty", f"S={s.members()}"))
        elif set(_min_masks(loc.target)) != family:
            failures.append(("localized minimal primes from min(R,S)", f"S={s.members()}"))
        if failures:
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_irredundant_characterization(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r) or not _spec_subset_budget(r):
        return Outcome("na")
    failures = []
    minset = set(_min_masks(r))
    zero = 1 << r.zero
    primes = prime_masks(r)
    cases = 1

    def irredundant(members) -> bool:
        total = r.full_mask()
        for m in members:
            total &= m
        if total != zero:
            return False
        for skip in range(len(members)):
            rest = r.full_mask()
            for j, m in enumerate(members):
                if j != skip:
                    rest &= m
            if rest == zero:
                return False
        return True

    if not irredundant(sorted(minset)):
        failures.append(("minimal primes form an irredundant family", r.label))
        return _verdict(cases, failures)
    for size in range(1, len(primes) + 1):
        for combo in itertools.combinations(primes, size):
            cases += 1
            if irredundant(list(combo)) and set(combo) != minset:
                failures.append(("only the minimal primes are irredundant",
                                 f"family={[list(bits(m)) for m in combo]}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


# ---------------------------------------------------------------------------
# minimal primes of localizations of semiprime rings


def _check_regular_den_bijection(r: RingTable, s: MultSet, failures) -> bool:
    loc = localize(r, s)
    t = loc.target
    if not is_semiprime_ring(t):
        failures.append(("localized ring semiprime", f"S={s.members()}"))
        return False
    mins = _min_masks(r)
    family = _localized_min_family(loc, mins)
    if len(set(family)) != len(mins) or set(_min_masks(t)) != set(family):
        failures.append(("minimal primes biject under localization", f"S={s.members()}"))
        return False
    for pmask in mins:
        q, hom = make_quotient(r, pmask)
        s_img = mask_of(hom(x) for x in s.members())
        cls = classify_set(MultSet(q, s_img))
        if not (cls.left_den and cls.ass_l_mask == 1 << q.zero):
            failures.append(("image is a zero-vanishing denominator set of the factor",
                             f"S={s.members()} p={list(bits(pmask))}"))
            return False
        jmask = localize_left_ideal(loc, Ideal(r, pmask)).mask
        tq, thom = make_quotient(t, jmask)
        through_target = RingHom(r, tq, tuple(thom(loc.sigma(x)) for x in r.elements()))
        if not _quotients_isomorphic(hom, through_target):
            failures.append(("factor of the localization matches the localized factor",
                             f"S={s.members()} p={list(bits(pmask))}"))
            return False
    return True


def check_semiprime_regular_bijection(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    cases = 0
    failures = []
    for s in _zero_dens(r, cfg):
        cases += 1
        if not _check_regular_den_bijection(r, s, failures):
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_largest_quotient_minimals(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    failures = []
    s = largest_regular_set(r)
    cases = 1
    if not _check_regular_den_bijection(r, s, failures):
        return _verdict(cases, failures)
    loc = localize(r, s)
    for pmask in _min_masks(r):
        q, hom = make_quotient(r, pmask)
        image = mask_of(hom(x) for x in s.members())
        if image & ~units_mask(q):
            failures.append(("image of the largest regular set stays in the factor's",
                             f"p={list(bits(pmask))}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_semiprime_vanishing_bijection(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        cls = classify_set(s)
        amask = cls.ass_l_mask
        if amask == r.full_mask() or not _prime_flags(r, amask)[2]:
            continue  # vanishing ideal must be semiprime
        cases += 1
        loc = localize(r, s)
        t = loc.target
        if not is_semiprime_ring(t):
            failures.append(("localization at a semiprime vanishing ideal is semiprime",
                             f"S={s.members()}"))
            return _verdict(cases, failures)
        over = min_prime_masks_over(r, amask)
        family = _localized_min_family(loc, over)
        if len(set(family)) != len(over) or set(_min_masks(t)) != set(family):
            failures.append(("minimal primes over the vanishing ideal biject",
                             f"S={s.members()}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_largest_sets_and_embedding(r: RingTable, cfg) -> Outcome:
    cases = 1
    failures = []
    mins = _min_masks(r)
    quots = [make_quotient(r, m) for m in mins]
    if is_semiprime_ring(r):
        u = units_mask(r)
        for (q, hom), pmask in zip(quots, mins):
            if mask_of(hom(x) for x in bits(u)) & ~units_mask(q):
                failures.append(("largest regular sets restrict along factors",
                                 f"p={list(bits(pmask))}"))
                return _verdict(cases, failures)
    prod, combined = quots[0][0], list(quots[0][1].map)
    for q, hom in quots[1:]:
        prod_new = make_product(prod, q, cap=None)
        combined = [combined[x] * q.order + hom(x) for x in r.elements()]
        prod = prod_new
    hom = RingHom(r, prod, tuple(combined))
    if hom.verify():
        failures.append(("canonical map into the product is a homomorphism", r.label))
    elif hom.is_injective() != is_semiprime_ring(r):
        failures.append(("injective into the factor product iff semiprime", r.label))
    return _verdict(cases, failures)


def check_largest_set_preimage(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for amask in ass_l_realizable_masks(r, cfg.exhaustive_mult_order):
        cases += 1
        a = Ideal(r, amask)
        smax = largest_set_assoc(r, a, cfg.exhaustive_mult_order)
        q, hom = make_quotient(r, amask)
        if mask_of(hom(x) for x in smax.members()) != units_mask(q):
            failures.append(("preimage maps onto the factor's largest regular set",
                             f"a={list(bits(amask))}"))
            return _verdict(cases, failures)
        for s in _dens(r, cfg):
            if classify_set(s).ass_l_mask == amask and s.mask & ~smax.mask:
                failures.append(("maximality of the unit preimage",
                                 f"a={list(bits(amask))} S={s.members()}"))
                return _verdict(cases, failures)
        loc_max = localize(r, smax)
        qloc = localize(q, MultSet(q, units_mask(q)))
        through = RingHom(r, qloc.target, tuple(qloc.sigma(hom(x)) for x in r.elements()))
        if not _quotients_isomorphic(loc_max.sigma, through):
            failures.append(("largest quotient ring matches the factor's",
                             f"a={list(bits(amask))}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_prime_preimage_sets(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    cases = 0
    failures = []
    inter_l = r.full_mask()
    inter_r = r.full_mask()
    for pmask in _min_masks(r):
        cases += 1
        p = Ideal(r, pmask)
        tset = t_l(r, p)
        al = ass_l_raw_mask(r, tset.mask)
        ar = ass_r_raw_mask(r, tset.mask)
        inter_l &= al | 1 << r.zero
        inter_r &= ar | 1 << r.zero
        if (al | 1 << r.zero) & ~pmask or (ar | 1 << r.zero) & ~pmask:
            failures.append(("vanishing sets stay inside the prime", f"p={list(bits(pmask))}"))
            return _verdict(cases, failures)
        cls = classify_set(tset)
        members = tset.members()
        alz = al | 1 << r.zero
        criterion = True
        for s in members:
            for x in r.elements():
                found = False
                for sp in members:
                    spx = r.mul[sp][x]
                    for xp in r.elements():
                        if alz >> r.add[spx][_neg(r, r.mul[xp][s])] & 1:
                            found = True
                            break
                    if found:
                        break
                if not found:
                    criterion = False
                    break
            if not criterion:
                break
        if cls.left_ore != criterion:
            failures.append(("left Ore iff the difference criterion", f"p={list(bits(pmask))}"))
            return _verdict(cases, failures)
        if cls.left_den:
            loc = localize(r, tset)
            li = localize_left_ideal(loc, p)
            if not li.two_sided:
                failures.append(("localized prime is two-sided", f"p={list(bits(pmask))}"))
                return _verdict(cases, failures)
            q, hom = make_quotient(r, pmask)
            tq, thom = make_quotient(loc.target, li.mask)
            through = RingHom(r, tq, tuple(thom(loc.sigma(x)) for x in r.elements()))
            if not _quotients_isomorphic(hom, through):
                failures.append(("factor of the prime localization is the prime factor",
                                 f"p={list(bits(pmask))}"))
                return _verdict(cases, failures)
            if alz == pmask:
                smax = largest_set_assoc(r, p, cfg.exhaustive_mult_order)
                if smax.mask != tset.mask:
                    failures.append(("unit preimage is the largest set at its prime",
                                     f"p={list(bits(pmask))}"))
                    return _verdict(cases, failures)
    if inter_l != 1 << r.zero or inter_r != 1 << r.zero:
        failures.append(("vanishing sets intersect to zero", r.label))
    return _verdict(cases, failures)


def _neg(r: RingTable, x: int) -> int:
    from .finring import neg_table

    return neg_table(r)[x]


def _min_RS_masks(r: RingTable, s: MultSet) -> list[Mask]:
    return [m for m in _min_masks(r) if m & s.mask == 0]


def check_zero_divisor_den_equivalence(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        cases += 1
        loc = localize(r, s)
        t = loc.target
        mrs = _min_RS_masks(r, s)
        if not mrs:
            failures.append(("min(R,S) non-empty on a semiprime ring", f"S={s.members()}"))
            return _verdict(cases, failures)
        family = _localized_min_family(loc, mrs)
        st1 = is_semiprime_ring(t) and set(_min_masks(t)) == set(family)
        st2 = True
        for pmask, fm in zip(mrs, family):
            li_two_sided = localize_left_ideal(loc, Ideal(r, pmask)).two_sided
            factor_prime = fm != t.full_mask() and _prime_flags(t, fm)[0]
            if not (li_two_sided and factor_prime):
                st2 = False
                break
        if st1 != st2:
            failures.append(("semiprime description iff prime factors", f"S={s.members()}"))
            return _verdict(cases, failures)
        if st1:
            by_normal = _generated_by_normals(s)
            cls = classify_set(s)
            ts_normal = all(
                any(normal_mask(r) >> r.mul[tt][ss] & 1 for tt in s.members())
                for ss in s.members()
            )
            if (by_normal or ts_normal) and len(set(family)) != len(mrs):
                failures.append(("normal generation forces distinct localized primes",
                                 f"S={s.members()}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_commutative_corollary(r: RingTable, cfg) -> Outcome:
    if not (is_semiprime_ring(r) and is_commutative(r)):
        return Outcome("na")
    cases = 0
    failures = []
    for s in _dens(r, cfg):
        cases += 1
        loc = localize(r, s)
        t = loc.target
        mrs = _min_RS_masks(r, s)
        family = _localized_min_family(loc, mrs)
        if not (is_semiprime_ring(t) and set(_min_masks(t)) == set(family)
                and len(set(family)) == len(mrs)):
            failures.append(("commutative localization preserves the minimal primes",
                             f"S={s.members()}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_completely_prime_corollary(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    cases = 0
    failures = []
    for s in _two_sided_dens(r, cfg):
        mrs = _min_RS_masks(r, s)
        loc = localize(r, s)
        t = loc.target
        hyp = all(
            _prime_flags(r, m)[1] and localize_left_ideal(loc, Ideal(r, m)).two_sided
            for m in mrs
        )
        if not hyp:
            continue
        cases += 1
        family = _localized_min_family(loc, mrs)
        ok = is_semiprime_ring(t) and set(_min_masks(t)) == set(family)
        ok = ok and len(set(family)) == len(mrs)
        ok = ok and all(
            fm == t.full_mask() or _prime_flags(t, fm)[1] for fm in family
        )
        if not ok:
            failures.append(("completely prime minimal primes descend", f"S={s.members()}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


# ---------------------------------------------------------------------------
# normal-element localization


def check_normal_set_localizes(r: RingTable, cfg) -> Outcome:
    cases = 0
    failures = []
    for smask in _normal_set_masks(r):
        cases += 1
        loc = localize_normal(r, smask)
        t = loc.target
        s_img = mask_of(loc.sigma(x) for x in bits(smask))
        cls = classify_set(MultSet(t, s_img))
        if not (cls.left_den and cls.right_den and cls.ass_l_mask == 1 << t.zero
                and cls.ass_r_mask == 1 << t.zero):
            failures.append(("image is a two-sided zero-vanishing denominator set",
                             f"S={sorted(bits(smask))}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def _a2oct_finite(r: RingTable, smask: Mask, failures) -> bool:
    loc = localize_normal(r, smask)
    amask = loc.ass.mask
    mins = min_prime_masks_over(r, amask) if amask != r.full_mask() else ()
    rbar = loc.target
    pushes = [loc.sigma.push_mask(m) for m in mins]
    if len(set(pushes)) != len(mins):
        failures.append(("minimal primes inject into the localized spectrum",
                         f"S={sorted(bits(smask))}"))
        return False
    nbar = prime_radical_mask(rbar)
    rtilde, tpi = make_quotient(rbar, nbar)
    s_tilde = mask_of(tpi(loc.sigma(x)) for x in bits(smask)) | 1 << rtilde.one
    cls = classify_set(MultSet(rtilde, s_tilde))
    if not (cls.left_den and cls.right_den and cls.ass_l_mask == 1 << rtilde.zero):
        failures.append(("reduced image is a zero-vanishing denominator set",
                         f"S={sorted(bits(smask))}"))
        return False
    tilde_pushes = [tpi.push_mask(p) for p in pushes]
    if len(set(tilde_pushes)) != len(mins) or set(_min_masks(rtilde)) != set(tilde_pushes):
        failures.append(("reduced minimal primes biject", f"S={sorted(bits(smask))}"))
        return False
    for pmask, push in zip(mins, pushes):
        q, hom = make_quotient(r, pmask)
        s_img = mask_of(hom(x) for x in bits(smask)) | 1 << q.one
        qcls = classify_set(MultSet(q, s_img))
        if not (qcls.left_den and qcls.right_den and qcls.ass_l_mask == 1 << q.zero):
            failures.append(("factor image is a denominator set", f"p={list(bits(pmask))}"))
            return False
        tq, thom = make_quotient(rbar, push)
        through = RingHom(r, tq, tuple(thom(loc.sigma(x)) for x in r.elements()))
        if not _quotients_isomorphic(hom, through):
            failures.append(("factor rings of the localization agree",
                             f"p={list(bits(pmask))}"))
            return False
    if not is_nilpotent_ideal(Ideal(rbar, nbar)):
        failures.append(("radical of the image ring is nilpotent", f"S={sorted(bits(smask))}"))
        return False
    if set(_min_masks(rbar)) != set(pushes):
        failures.append(("minimal primes over the vanishing ideal biject",
                         f"S={sorted(bits(smask))}"))
        return False
    return True


def check_normal_localization_minimals(obj, cfg) -> Outcome:
    if isinstance(obj, RingTable):
        cases = 0
        failures = []
        for smask in _normal_set_masks(obj):
            cases += 1
            if not _a2oct_finite(obj, smask, failures):
                return _verdict(cases, failures)
        return _verdict(cases, failures)
    if isinstance(obj, mono.CommMonomialRing):
        cases = 0
        failures = []
        for size in range(1, obj.nvars + 1):
            for combo in itertools.combinations(range(obj.nvars), size):
                try:
                    rep = mono.localize_monomial(obj, combo)
                except mono.CollapsedLocalizationError:
                    continue
                cases += 1
                if not (rep.bijection_ok and rep.saturation_oracle_ok):
                    failures.append(("monomial localization bijection", f"V={sorted(combo)}"))
                    return _verdict(cases, failures)
        return _verdict(cases, failures)
    # pairing algebra
    a = obj
    cases = 0
    failures = []
    for size in range(1, a.pairs + 1):
        for combo in itertools.combinations(range(1, a.pairs + 1), size):
            cases += 1
            rep = mono.an_localize_normal(a, combo)
            if not rep.ok:
                failures.append(("pairing-algebra localization bijection",
                                 f"V={sorted(combo)}: {rep.failures[:1]}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_normal_subset_variant(obj, cfg) -> Outcome:
    if isinstance(obj, RingTable):
        r = obj
        cases = 0
        failures = []
        nm = normal_mask(r)
        for s in _dens(r, cfg):
            members = s.members()
            if not all(
                any(nm >> r.mul[tt][ss] & 1 for tt in members) for ss in members
            ):
                continue
            sub = s.mask & nm
            from .localization import _closure_with_witness

            closed, witness = _closure_with_witness(r, sub)
            if witness is not None:
                failures.append(("normal subset is multiplicative", f"S={members}"))
                return _verdict(cases + 1, failures)
            cases += 1
            cls_full = classify_set(s)
            cls_sub = classify_set(MultSet(r, closed))
            if not cls_sub.left_den or cls_sub.ass_l_mask != cls_full.ass_l_mask:
                failures.append(("normal subset has the same vanishing ideal",
                                 f"S={members}"))
                return _verdict(cases, failures)
            if localize(r, s).target is not localize(r, MultSet(r, closed)).target:
                failures.append(("normal subset gives the same localization",
                                 f"S={members}"))
                return _verdict(cases, failures)
        return _verdict(cases, failures)
    if isinstance(obj, mono.CommMonomialRing):
        return Outcome("na")
    a = obj
    cases = 0
    failures = []
    for v in range(1, a.pairs + 1):
        cases += 1
        rep = mono.an_normal_variant(a, {v})
        if not rep.ok:
            failures.append(("central variant gives the same vanishing ideal", f"V={{{v}}}"))
            return _verdict(cases, failures)
    return _verdict(cases, failures)


# ---------------------------------------------------------------------------
# centre-restriction statements


def check_central_fibers(r: RingTable, cfg) -> Outcome:
    cd = centre_ring(r)
    cases = 0
    failures = []
    for qmask in prime_masks(cd.centre):
        cases += 1
        rep = central_localize(r, Ideal(cd.centre, qmask))
        if rep.in_image != rep.extension_proper:
            failures.append(("prime is hit iff the extension is proper",
                             f"q={list(bits(qmask))}"))
        elif not rep.bijection_ok:
            failures.append(("fiber bijection", f"q={list(bits(qmask))}"))
        elif rep.in_image and not rep.min_prime_in_fiber:
            failures.append(("a minimal prime lies in every hit fiber",
                             f"q={list(bits(qmask))}"))
        if failures:
            return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_restriction_well_defined(r: RingTable, cfg) -> Outcome:
    crit = check_rho_criteria(r)
    if not crit.applicable:
        return Outcome("na")
    ok = crit.regular_inclusion == crit.min_disjoint == crit.well_defined
    return _verdict(1, [] if ok else [("three-way centre criterion", r.label)])


def check_restriction_surjective(r: RingTable, cfg) -> Outcome:
    crit = check_rho_criteria(r)
    if not crit.applicable:
        return Outcome("na")
    return _verdict(1, [] if crit.agree else [("four-way centre criterion", r.label)])


def check_centre_semiprime(r: RingTable, cfg) -> Outcome:
    if not is_semiprime_ring(r):
        return Outcome("na")
    cd = centre_ring(r)
    failures = []
    if not is_semiprime_ring(cd.centre):
        failures.append(("centre of a semiprime ring is semiprime", r.label))
    else:
        hit = {rho(r).centre_data.restrict_mask(pm) for pm in prime_masks(r)}
        image_minimals = set(_min_masks(cd.centre)) & hit
        if len(image_minimals) > len(_min_masks(r)):
            failures.append(("hit central minimal primes within the bound", r.label))
    return _verdict(1, failures)


def check_centre_decomposition(r: RingTable, cfg) -> Outcome:
    rep = check_pierce(r)
    if not rep.applicable:
        return Outcome("na")
    failures = []
    if not rep.embedding_ok:
        failures.append(("embedding into the central factors", r.label))
    elif rep.iso_if_commutative is False:
        failures.append(("commutative decomposition is exact", r.label))
    elif not rep.centres_match:
        failures.append(("centres localize along the decomposition", r.label))
    else:
        cd = centre_ring(r)
        from .centre import central_mult_set

        for qmask in min_prime_masks_over(cd.centre, 1 << cd.centre.zero):
            loc = localize(r, central_mult_set(r, Ideal(cd.centre, qmask)))
            t = loc.target
            # primes meeting the central complement blow up to the whole ring,
            # so only the disjoint minimal primes can appear downstairs
            survivors = [m for m in _min_masks(r) if m & loc.mult_set.mask == 0]
            family = set(_localized_min_family(loc, survivors))
            if (not is_semiprime_ring(t) or set(_min_masks(t)) != family
                    or len(family) > len(_min_masks(r))):
                failures.append(("central factors are semiprime with localized minimals",
                                 f"q={list(bits(qmask))}"))
                break
    return _verdict(1, failures)


def check_unit_group_of_quotient(obj, cfg) -> Outcome:
    if isinstance(obj, RingTable):
        r = obj
        failures = []
        s = largest_regular_set(r)
        loc = localize(r, s)
        t = loc.target
        if loc.sigma.preimage_mask(units_mask(t)) != units_mask(r):
            failures.append(("largest set of the quotient contracts to the source's", r.label))
        inv = inverse_table(t)
        gens = {loc.sigma(x) for x in s.members()}
        gens |= {inv[g] for g in gens}
        group = {t.one}
        frontier = [t.one]
        while frontier:
            g = frontier.pop()
            for h in gens:
                for prod in (t.mul[g][h], t.mul[h][g]):
                    if prod not in group:
                        group.add(prod)
                        frontier.append(prod)
        if group != set(bits(units_mask(t))):
            failures.append(("units generated by the set and its inverses", r.label))
        fractions = {t.mul[inv[loc.sigma(a)]][loc.sigma(b)] for a in s.members() for b in s.members()}
        if fractions != set(bits(units_mask(t))):
            failures.append(("units are the one-sided fractions of the set", r.label))
        again = localize(t, largest_regular_set(t))
        if not (again.sigma.is_bijective() and not again.sigma.verify()):
            failures.append(("localizing twice changes nothing", r.label))
        return _verdict(1, failures)
    if isinstance(obj, mono.AnAlgebra):
        return Outcome("na")
    r = obj
    failures = []
    regs = frozenset(mono.regular_variables(r))
    cases = 1
    bound = 2
    ranges = [range(-bound, bound + 1) if i in regs else range(0, bound + 1)
              for i in range(r.nvars)]

    def nonzero(exps) -> bool:
        # gens avoid the inverted variables, so the positive part decides
        return not mono.monomial_in_ideal(tuple(max(e, 0) for e in exps), r.gens)

    grid = [e for e in itertools.product(*ranges) if nonzero(e)]
    for exps in grid:
        # route one: search for an actual inverse monomial in the grid
        inverse = tuple(-e for e in exps)
        invertible = all(-bound <= e <= bound for e in inverse) and \
            all(inverse[i] >= 0 for i in range(r.nvars) if i not in regs) and \
            nonzero(inverse)
        # route two: Laurent monomials in the inverted variables, s^-1 t form
        laurent = all(e == 0 for i, e in enumerate(exps) if i not in regs)
        if invertible != laurent:
            failures.append(("localized monomial units are the inverted-variable fractions",
                             f"exp={exps}"))
            break
    return _verdict(cases, failures)


# ---------------------------------------------------------------------------
# the pairing-algebra track


def check_pairing_algebra(a, cfg) -> Outcome:
    rep = mono.an_verify(a)
    failures = [] if rep.ok else [("pairing-algebra verification", "; ".join(rep.failures[:2]))]
    return _verdict(1, failures)


def check_regular_var_bijection(obj, cfg) -> Outcome:
    if isinstance(obj, RingTable):
        return check_semiprime_regular_bijection(obj, cfg)
    if isinstance(obj, mono.AnAlgebra):
        return Outcome("na")
    r = obj
    if not mono.is_squarefree(r):
        return Outcome("na")
    regs = sorted(mono.regular_variables(r))
    cases = 0
    failures = []
    for size in range(len(regs) + 1):
        for combo in itertools.combinations(regs, size):
            cases += 1
            rep = mono.localize_monomial(r, combo)
            if not (rep.regular_case and rep.bijection_ok and rep.saturation_oracle_ok
                    and len(rep.min_localized) == len(rep.min_source)):
                failures.append(("regular-variable localization preserves minimal primes",
                                 f"V={sorted(combo)}"))
                return _verdict(cases, failures)
    return _verdict(cases, failures)


def check_largest_quotient_track(obj, cfg) -> Outcome:
    if isinstance(obj, RingTable):
        return check_largest_quotient_minimals(obj, cfg)
    if isinstance(obj, mono.AnAlgebra):
        return Outcome("na")
    r = obj
    regs = sorted(mono.regular_variables(r))
    rep = mono.localize_monomial(r, regs)
    ok = rep.regular_case and rep.bijection_ok and len(rep.min_localized) == len(rep.min_source)
    return _verdict(1, [] if ok else [("all-regular-variable localization", f"V={regs}")])


# ---------------------------------------------------------------------------
# registry

CheckFn = object

REGISTRY: dict[str, tuple[TheoremCheck, object]] = {}


def _register(id_, kinds, description, fn, note=""):
    REGISTRY[id_] = (TheoremCheck(id_, tuple(kinds), description, note), fn)


_FIN = ("finite",)
_ALL = ("finite", "monomial", "an")

_register("A11Sep23", _FIN,
          "five equivalent forms of 'the localized left ideal is two-sided' agree",
          check_a11)
_register("aA11Sep23", _FIN,
          "localized-ideal chains stabilize, so every localized ideal is two-sided",
          check_a11_vacuity,
          note="the strictly-increasing alternative needs non-Noetherian rings; vacuous here")
_register("a10Sep23", _FIN,
          "localizing a prime ring at a regular denominator set stays prime",
          check_prime_target_regular)
_register("a6Oct23", _FIN,
          "a localized prime is prime exactly when it stays two-sided",
          check_prime_localized_iff_ideal)
_register("Aa6Oct23", _FIN,
          "contraction recovers primes disjoint from the denominator set",
          check_contraction_recovers_prime)
_register("Xa10Sep23", _FIN,
          "a prime vanishing ideal forces a prime localization",
          check_prime_vanishing_target)
_register("b14Oct23", _FIN,
          "the image of a denominator set is one iff it consists of regular elements",
          check_image_den_regular)
_register("c14Oct23", _FIN,
          "two-step image criterion through the image's own vanishing ideal",
          check_image_den_torsion)
_register("A29Sep23", _FIN,
          "a zero product of primes bounds the set of minimal primes",
          check_zero_products_bound_minimals)
_register("aA29Sep23", _FIN,
          "three equivalent characterizations of prime-rich rings agree",
          check_prime_rich_equivalence)
_register("B29Sep23", _FIN,
          "with a Noetherian localization every denominator set preserves ideals",
          check_ideal_preservation)
_register("29Sep23", _FIN,
          "minimal primes of a localization of a prime-rich ring",
          check_min_primes_prime_rich)
_register("a29Sep23", _FIN,
          "Noetherian two-sided regular localization preserves minimal primes",
          check_min_primes_noetherian,
          note="on finite rings this coincides with the regular-set bijection; kept for coverage")
_register("b10Sep23", _FIN,
          "the minimal primes are the only irredundant family of primes",
          check_irredundant_characterization)
_register("A10Sep23", _ALL,
          "regular localization of a semiprime ring preserves the minimal primes",
          check_regular_var_bijection,
          note="finite regular sets are units; the monomial track carries the substance")
_register("c10Sep23", _ALL,
          "the largest regular quotient ring keeps the minimal primes",
          check_largest_quotient_track,
          note="finite instantiation is the identity; monomial track inverts all regular variables")
_register("aA10Sep23", _FIN,
          "localization at a semiprime vanishing ideal stays semiprime with the same minimals",
          check_semiprime_vanishing_bijection)
_register("A15Sep23", _FIN,
          "largest regular sets restrict along minimal factors; the factor product embeds",
          check_largest_sets_and_embedding)
_register("a20Sep23", _FIN,
          "the largest set at a vanishing ideal is the unit preimage from the factor",
          check_largest_set_preimage)
_register("19Sep23", _FIN,
          "unit preimages at minimal primes: vanishing bounds, Ore criterion, factors",
          check_prime_preimage_sets)
_register("28Sep23", _FIN,
          "zero-divisor denominator sets: semiprime description iff prime factors",
          check_zero_divisor_den_equivalence)
_register("a28Sep23", _FIN,
          "commutative semiprime localizations keep their minimal primes distinct",
          check_commutative_corollary)
_register("b28Sep23", _FIN,
          "completely prime minimal primes descend to the localization",
          check_completely_prime_corollary)
_register("10Jan19", _FIN,
          "normal multiplicative sets localize: the vanishing ideal is two-sided and proper",
          check_normal_set_localizes)
_register("A2Oct23", _ALL,
          "normal-element localization: minimal primes over the vanishing ideal biject",
          check_normal_localization_minimals)
_register("a5Oct23", _ALL,
          "sets whose elements have normal multiples localize through their normal part",
          check_normal_subset_variant)
_register("A25Sep23", _FIN,
          "central fibers: hit primes, proper extensions, and the fiber bijection",
          check_central_fibers)
_register("aB25Sep23", _FIN,
          "well-definedness criterion for restricting minimal primes to the centre",
          check_restriction_well_defined,
          note="the negated form is the same computation; one registry entry covers both")
_register("B25Sep23", _FIN,
          "surjectivity criterion for restricting minimal primes to the centre",
          check_restriction_surjective)
_register("a25Sep23", _FIN,
          "the centre of a semiprime ring is semiprime",
          check_centre_semiprime)
_register("aC25Sep23", _FIN,
          "decomposition along the minimal primes of the centre",
          check_centre_decomposition)
_register("4Jul10", _ALL,
          "units of the largest quotient ring are the one-sided fractions of the set",
          check_unit_group_of_quotient,
          note="finite instantiation is the unit group; monomial track checks Laurent units")
_register("b29Sep23", ("an",),
          "the pairing algebra: minimal primes, domain quotients, centre, restrictions",
          check_pairing_algebra)


COVERAGE = (
    "A11Sep23", "aA11Sep23", "a10Sep23", "a6Oct23", "Aa6Oct23", "Xa10Sep23",
    "b14Oct23", "c14Oct23", "A29Sep23", "aA29Sep23", "B29Sep23", "29Sep23",
    "a29Sep23", "b10Sep23", "A10Sep23", "c10Sep23", "aA10Sep23", "A15Sep23",
    "a20Sep23", "19Sep23", "28Sep23", "a28Sep23", "b28Sep23", "10Jan19",
    "A2Oct23", "a5Oct23", "A25Sep23", "aB25Sep23", "B25Sep23", "a25Sep23",
    "aC25Sep23", "4Jul10", "b29Sep23",
)


def assert_registry_complete():
    missing = set(COVERAGE) - set(REGISTRY)
    extra = set(REGISTRY) - set(COVERAGE)
    if missing or extra:
        raise EngineInvariantError(
            f"check registry out of sync: missing={sorted(missing)} extra={sorted(extra)}"
        )


assert_registry_complete()

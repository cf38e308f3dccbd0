"""Corpus generation and the verification run.

Instances are described by expressions of the ring DSL; the expression text is
the provenance, and rebuilding from it alone reproduces the instance exactly.
Every finite instance passes the full axiom audit before any claim check runs,
so an injected table fault surfaces as a counterexample of the audit report,
never as a bogus theorem verdict.  Reports are deterministic for a fixed
configuration regardless of the worker count: results are merged in corpus
order and wall time lives outside the comparable body.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field

from .checks import COVERAGE, Outcome, REGISTRY, assert_registry_complete
from .dsl import RingExpr, evaluate, parse_ring_expr, render
from .finring import RingError, RingTable, audit_ring
from .monomial import all_squarefree_ideals


@dataclass(frozen=True)
class CorpusConfig:
    order_cap: int = 16
    exhaustive_mult_order: int = 12
    seed: int = 0
    max_modular: int = 16
    monomial_vars: int = 3
    pairing_n: int = 3
    constructors: tuple[str, ...] = (
        "zmod", "gf", "mat", "tri", "prod", "quot", "mono", "an",
    )


@dataclass
class Instance:
    kind: str        # "finite" | "monomial" | "an"
    provenance: str
    expr: RingExpr
    _payload: object = field(default=None, repr=False)

    def build(self, cap: int | None = None):
        if self._payload is None:
            self._payload = evaluate(self.expr, cap)
        return self._payload


def _finite_base_exprs(cfg: CorpusConfig) -> list[RingExpr]:
    out = []
    if "zmod" in cfg.constructors:
        out += [RingExpr("zmod", (n,)) for n in range(2, min(cfg.max_modular, cfg.order_cap) + 1)]
    if "gf" in cfg.constructors:
        out += [RingExpr("gf", (q,)) for q in (2, 3, 4) if q <= cfg.order_cap]
    if "mat" in cfg.constructors and 16 <= cfg.order_cap:
        out.append(RingExpr("mat", (2,), (RingExpr("gf", (2,)),)))
    if "tri" in cfg.constructors:
        if 8 <= cfg.order_cap:
            out.append(RingExpr("tri", (2,), (RingExpr("gf", (2,)),)))
        if 27 <= cfg.order_cap:
            out.append(RingExpr("tri", (2,), (RingExpr("gf", (3,)),)))
    return out


def build_corpus(cfg: CorpusConfig) -> list[Instance]:
    """The deterministic default corpus; instances keyed by their provenance."""
    exprs: list[RingExpr] = list(_finite_base_exprs(cfg))
    if "prod" in cfg.constructors:
        base = list(exprs)
        orders = [evaluate(e, cfg.order_cap).order for e in base]
        for i, a in enumerate(base):
            for j in range(i, len(base)):
                if orders[i] * orders[j] <= cfg.order_cap:
                    exprs.append(RingExpr("prod", (), (a, base[j])))
    if "quot" in cfg.constructors:
        from .ideals import all_ideal_masks
        from .finring import bits

        quots = []
        for e in list(exprs):
            ring = evaluate(e, cfg.order_cap)
            masks = all_ideal_masks(ring)
            for m in masks[1:-1]:  # proper nonzero, canonical order
                quots.append(RingExpr("quot", (), (e,), tuple(bits(m))))
        exprs += quots

    seen = set()
    instances = []
    for e in exprs:
        text = render(e)
        if text in seen:
            continue
        seen.add(text)
        instances.append(Instance("finite", text, e))

    if "mono" in cfg.constructors:
        for n in range(1, cfg.monomial_vars + 1):
            for gens in all_squarefree_ideals(n):
                expr = RingExpr("mono", (n,), (), gens)
                text = render(expr)
                if text not in seen:
                    seen.add(text)
                    instances.append(Instance("monomial", text, expr))
    if "an" in cfg.constructors:
        for n in range(1, cfg.pairing_n + 1):
            expr = RingExpr("an", (n,))
            text = render(expr)
            if text not in seen:
                seen.add(text)
                instances.append(Instance("an", text, expr))
    return instances


def inject_table_fault(inst: Instance, cfg: CorpusConfig) -> Instance:
    """Corrupt one multiplication-table cell of a finite instance (self-test)."""
    ring = inst.build(cfg.order_cap)
    if not isinstance(ring, RingTable):
        raise RingError("fault injection targets finite instances")
    import random

    rng = random.Random(cfg.seed)
    a = rng.randrange(ring.order)
    b = rng.randrange(ring.order)
    bad_val = (ring.mul[a][b] + 1) % ring.order
    mul = tuple(
        tuple(bad_val if (x, y) == (a, b) else ring.mul[x][y] for y in range(ring.order))
        for x in range(ring.order)
    )
    corrupted = RingTable(ring.order, ring.add, mul, ring.zero, ring.one,
                          ring.label + "!fault", ring.names)
    return Instance(inst.kind, inst.provenance, inst.expr, corrupted)


@dataclass
class Counterexample:
    provenance: str
    clause: str
    detail: str = ""

    def to_dict(self):
        return {"provenance": self.provenance, "clause": self.clause, "detail": self.detail}


@dataclass
class CheckReport:
    theorem_id: str
    track: str
    description: str
    note: str
    considered: int = 0
    applicable: int = 0
    passed: int = 0
    cases: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    wall_ms: float = 0.0

    def clean(self) -> bool:
        return not self.counterexamples

    def to_dict(self, include_timing: bool = False):
        body = {
            "theorem_id": self.theorem_id,
            "track": self.track,
            "description": self.description,
            "note": self.note,
            "considered": self.considered,
            "applicable": self.applicable,
            "passed": self.passed,
            "cases": self.cases,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }
        if include_timing:
            body["wall_ms"] = round(self.wall_ms, 3)
        return body


AUDIT_ID = "axiom-audit"


def _track_of(kinds: tuple[str, ...]) -> str:
    if kinds == ("finite",):
        return "finite"
    if "finite" not in kinds:
        return "monomial"
    return "both"


def _run_checks_on_instance(inst: Instance, ids: tuple[str, ...], cfg: CorpusConfig):
    payload = inst.build(cfg.order_cap)
    out = []
    for cid in ids:
        check, fn = REGISTRY[cid]
        if inst.kind not in check.kinds:
            continue
        t0 = time.perf_counter()
        try:
            outcome = fn(payload, cfg)
        except RingError as exc:
            outcome = Outcome("fail", 1, "engine-error", f"{type(exc).__name__}: {exc}")
        out.append((cid, outcome, (time.perf_counter() - t0) * 1000))
    return out


_WORKER_STATE: dict = {}


def _worker(args):
    idx, ids = args
    inst = _WORKER_STATE["corpus"][idx]
    cfg = _WORKER_STATE["cfg"]
    return idx, _run_checks_on_instance(inst, ids, cfg)


def run_suite(
    corpus: list[Instance],
    ids: tuple[str, ...] | None = None,
    cfg: CorpusConfig | None = None,
    jobs: int = 1,
) -> list[CheckReport]:
    """Run the selected checks over the corpus; one report per check id."""
    assert_registry_complete()
    cfg = cfg or CorpusConfig()
    ids = tuple(ids) if ids else COVERAGE
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise RingError(f"unknown check ids: {unknown}")

    audit = CheckReport(AUDIT_ID, "finite", "operation tables satisfy the ring axioms", "")
    good: list[Instance] = []
    t0 = time.perf_counter()
    for inst in corpus:
        payload = inst.build(cfg.order_cap)
        if isinstance(payload, RingTable):
            audit.considered += 1
            audit.applicable += 1
            audit.cases += 1
            bad = audit_ring(payload)
            if bad:
                audit.counterexamples.append(
                    Counterexample(inst.provenance, "axiom-audit", bad[0])
                )
                continue
            audit.passed += 1
        good.append(inst)
    audit.wall_ms = (time.perf_counter() - t0) * 1000

    reports = {
        cid: CheckReport(cid, _track_of(REGISTRY[cid][0].kinds),
                         REGISTRY[cid][0].description, REGISTRY[cid][0].note)
        for cid in ids
    }

    tasks = [(i, ids) for i in range(len(good))]
    if jobs > 1:
        _WORKER_STATE["corpus"] = good
        _WORKER_STATE["cfg"] = cfg
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            results = pool.map(_worker, tasks)
        results.sort(key=lambda pair: pair[0])
        merged = [row for _, row in results]
    else:
        merged = [_run_checks_on_instance(good[i], ids, cfg) for i, _ in tasks]

    for inst, row in zip(good, merged):
        for cid, outcome, dt in row:
            rep = reports[cid]
            rep.considered += 1
            rep.wall_ms += dt
            if outcome.status == "na":
                continue
            rep.applicable += 1
            rep.cases += outcome.cases
            if outcome.status == "pass":
                rep.passed += 1
            else:
                rep.counterexamples.append(
                    Counterexample(inst.provenance, outcome.clause, outcome.detail)
                )
    return [audit] + [reports[cid] for cid in ids]


def explain(report: CheckReport, index: int, cfg: CorpusConfig | None = None) -> str:
    """Render one counterexample: the recipe, the failed clause, and the
    instance's intermediate objects."""
    if not report.counterexamples:
        return "no counterexamples"
    if not 0 <= index < len(report.counterexamples):
        raise IndexError(f"counterexample index {index} out of range")
    cx = report.counterexamples[index]
    cfg = cfg or CorpusConfig()
    lines = [
        f"check:      {report.theorem_id}",
        f"instance:   {cx.provenance}",
        f"clause:     {cx.clause}",
    ]
    if cx.detail:
        lines.append(f"detail:     {cx.detail}")
    try:
        expr = parse_ring_expr(cx.provenance)
        payload = evaluate(expr, cfg.order_cap)
    except RingError as exc:
        lines.append(f"rebuild:    failed ({exc})")
        return "\n".join(lines)
    if isinstance(payload, RingTable):
        bad = audit_ring(payload)
        lines.append(f"order:      {payload.order}")
        if bad:
            lines.append(f"audit:      {bad[0]}")
            return "\n".join(lines)
        from .finring import bits, units_mask
        from .ideals import min_prime_masks_over
        from .localization import left_denominator_sets

        lines.append(f"units:      {sorted(bits(units_mask(payload)))}")
        mins = min_prime_masks_over(payload, 1 << payload.zero)
        lines.append(f"min primes: {[sorted(bits(m)) for m in mins]}")
        dens = left_denominator_sets(payload, cfg.exhaustive_mult_order)
        lines.append(f"den sets:   {len(dens)}")
        from .ideals import Ideal
        from .localization import localize, localize_left_ideal

        for s in dens[: min(len(dens), 6)]:
            loc = localize(payload, s)
            localized = [
                sorted(bits(localize_left_ideal(loc, Ideal(payload, m)).mask)) for m in mins
            ]
            lines.append(
                f"  S={s.members()} ass={sorted(loc.ass.members())} "
                f"target_order={loc.target.order} localized_minimals={localized}"
            )
    else:
        lines.append(f"object:     {payload!r}")
    return "\n".join(lines)


def render_machine(reports: list[CheckReport], include_timing: bool = False) -> str:
    body = {
        "format": "orespec-report-v1",
        "reports": [r.to_dict(include_timing) for r in reports],
        "clean": all(r.clean() for r in reports),
    }
    return json.dumps(body, indent=2, sort_keys=True)


def render_text(reports: list[CheckReport]) -> str:
    lines = []
    width = max(len(r.theorem_id) for r in reports)
    for r in reports:
        status = "ok" if r.clean() else "FAIL"
        lines.append(
            f"{r.theorem_id:<{width}}  {status:<4} considered={r.considered:<4} "
            f"applicable={r.applicable:<4} passed={r.passed:<4} cases={r.cases:<7} "
            f"({r.wall_ms:7.1f} ms)  {r.description}"
        )
        if r.note:
            lines.append(f"{'':<{width}}  note: {r.note}")
        for i, cx in enumerate(r.counterexamples):
            lines.append(f"{'':<{width}}  counterexample[{i}]: {cx.provenance} :: {cx.clause} {cx.detail}")
    total_cx = sum(len(r.counterexamples) for r in reports)
    lines.append(f"counterexamples: {total_cx}")
    if total_cx:
        lines.append(
            "every catalogued claim is established, so a counterexample above "
            "signals a defective table or an engine bug, not new mathematics"
        )
    return "\n".join(lines)

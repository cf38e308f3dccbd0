import pytest

from orespec.checks import COVERAGE, REGISTRY, assert_registry_complete
from orespec.dsl import evaluate, parse_ring_expr
from orespec.finring import EngineInvariantError, RingError, RingTable
from orespec.harness import (
    AUDIT_ID,
    CorpusConfig,
    build_corpus,
    explain,
    inject_table_fault,
    render_machine,
    render_text,
    run_suite,
)

SMALL = CorpusConfig(order_cap=6, max_modular=6)
FAST_IDS = ("A11Sep23", "b10Sep23", "A10Sep23", "aB25Sep23", "b29Sep23")


@pytest.fixture(scope="module")
def small_corpus():
    return build_corpus(SMALL)


def test_default_corpus_size_and_kinds():
    corpus = build_corpus(CorpusConfig())
    finite = [i for i in corpus if i.kind == "finite"]
    assert len(finite) >= 60
    assert sum(1 for i in corpus if i.kind == "monomial") == 2 + 5 + 19
    assert sum(1 for i in corpus if i.kind == "an") == 3
    assert len({i.provenance for i in corpus}) == len(corpus)


def test_cap_six_corpus_contents(small_corpus):
    provs = {i.provenance for i in small_corpus if i.kind == "finite"}
    for base in ("zmod(2)", "zmod(3)", "zmod(4)", "zmod(5)", "zmod(6)",
                 "gf(2)", "gf(3)", "gf(4)", "prod(zmod(2), zmod(3))"):
        assert base in provs
    assert not any(p.startswith(("mat", "tri")) for p in provs)
    for inst in small_corpus:
        if inst.kind == "finite":
            assert inst.build(SMALL.order_cap).order <= 6


def test_empty_allow_list_gives_empty_corpus():
    assert build_corpus(CorpusConfig(constructors=())) == []


def test_instances_rebuild_from_provenance_alone(small_corpus):
    for inst in small_corpus[:10] + small_corpus[-5:]:
        rebuilt = evaluate(parse_ring_expr(inst.provenance), SMALL.order_cap)
        original = inst.build(SMALL.order_cap)
        if isinstance(original, RingTable):
            from orespec.finring import same_tables

            assert same_tables(rebuilt, original)
        else:
            assert rebuilt == original


def test_registry_matches_the_static_coverage_list():
    assert set(REGISTRY) == set(COVERAGE)
    assert_registry_complete()


def test_registry_gap_fails_the_suite(monkeypatch):
    entry = REGISTRY.pop("A11Sep23")
    try:
        with pytest.raises(EngineInvariantError):
            assert_registry_complete()
    finally:
        REGISTRY["A11Sep23"] = entry


def test_unknown_check_id_is_an_error(small_corpus):
    with pytest.raises(RingError):
        run_suite(small_corpus, ("NoSuchClaim",), SMALL)


def test_reports_are_deterministic_across_runs_and_jobs(small_corpus):
    r1 = render_machine(run_suite(build_corpus(SMALL), FAST_IDS, SMALL, jobs=1))
    r2 = render_machine(run_suite(build_corpus(SMALL), FAST_IDS, SMALL, jobs=1))
    r3 = render_machine(run_suite(build_corpus(SMALL), FAST_IDS, SMALL, jobs=2))
    assert r1 == r2 == r3


def test_applicable_splits_into_passed_and_counterexamples(small_corpus):
    for rep in run_suite(small_corpus, FAST_IDS, SMALL):
        assert rep.applicable == rep.passed + len(rep.counterexamples)
        assert rep.applicable <= rep.considered


def test_fault_injection_yields_exactly_one_counterexample(small_corpus):
    corpus = list(small_corpus)
    corpus[0] = inject_table_fault(corpus[0], SMALL)
    reports = run_suite(corpus, FAST_IDS, SMALL)
    assert sum(len(r.counterexamples) for r in reports) == 1
    audit = reports[0]
    assert audit.theorem_id == AUDIT_ID
    assert audit.counterexamples[0].provenance == corpus[0].provenance
    # the corrupted instance is excluded before any claim check runs
    for rep in reports[1:]:
        if REGISTRY[rep.theorem_id][0].kinds == ("finite",):
            assert rep.considered == audit.passed


def test_explain_renders_recipe_and_witness(small_corpus):
    corpus = list(small_corpus)
    corpus[0] = inject_table_fault(corpus[0], SMALL)
    reports = run_suite(corpus, ("A11Sep23",), SMALL)
    text = explain(reports[0], 0, SMALL)
    assert corpus[0].provenance in text
    assert "axiom-audit" in text
    assert explain(reports[1], 0, SMALL) == "no counterexamples"
    with pytest.raises(IndexError):
        explain(reports[0], 5, SMALL)
    # the serialized witness reparses to the identical instance expression
    cx = reports[0].counterexamples[0]
    assert parse_ring_expr(cx.provenance) == corpus[0].expr


def test_text_rendering_mentions_every_check(small_corpus):
    reports = run_suite(small_corpus, FAST_IDS, SMALL)
    text = render_text(reports)
    for cid in FAST_IDS:
        assert cid in text
    assert "counterexamples: 0" in text


def test_vacuous_hypotheses_report_not_applicable(small_corpus):
    # the pairing-algebra check never applies to finite instances
    reports = run_suite([i for i in small_corpus if i.kind == "finite"][:3],
                        ("b29Sep23",), SMALL)
    rep = reports[1]
    assert rep.considered == 0 and rep.applicable == 0 and rep.passed == 0

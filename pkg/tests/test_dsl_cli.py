import json

import pytest
from hypothesis import given, strategies as st

from orespec.cli import main
from orespec.dsl import ParseError, RingExpr, evaluate, parse_ring_expr, render
from orespec.finring import RingTable

from expr_corpus import FIXED_EXPRESSIONS


def test_fixed_corpus_is_big_enough():
    assert len(FIXED_EXPRESSIONS) >= 50


@pytest.mark.parametrize("text", FIXED_EXPRESSIONS)
def test_round_trip_on_the_fixed_corpus(text):
    expr = parse_ring_expr(text)
    assert parse_ring_expr(render(expr)) == expr


def test_parse_examples_evaluate():
    assert evaluate(parse_ring_expr("zmod(12)")).order == 12
    assert evaluate(parse_ring_expr("quot(zmod(12), gens=[6])")).order == 6
    r = evaluate(parse_ring_expr("mono(vars=2, gens=[v1*v2])"))
    assert r.nvars == 2 and r.gens == ((1, 1),)


def test_whitespace_insensitivity():
    a = parse_ring_expr("quot( zmod( 12 ) ,\n gens = [ 6 ] )")
    assert a == parse_ring_expr("quot(zmod(12),gens=[6])")


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_ring_expr("zmod(")
    assert exc.value.line == 1 and exc.value.column == 6
    with pytest.raises(ParseError) as exc:
        parse_ring_expr("nosuch(3)")
    assert exc.value.column == 1
    with pytest.raises(ParseError):
        parse_ring_expr("zmod(2, 3)")
    with pytest.raises(ParseError):
        parse_ring_expr("zmod(2) zmod(3)")
    with pytest.raises(ParseError):
        parse_ring_expr("mono(vars=2, gens=[v9])")


def _exps_from_pairs(pairs):
    merged = {}
    for i, e in pairs:
        merged[i] = merged.get(i, 0) + e
    exp = [0, 0, 0]
    for i, e in merged.items():
        exp[i - 1] = e
    return (tuple(exp),) if merged else ()


def _exprs(depth):
    base = st.one_of(
        st.integers(2, 16).map(lambda n: RingExpr("zmod", (n,))),
        st.sampled_from([2, 3, 4]).map(lambda q: RingExpr("gf", (q,))),
        st.lists(st.tuples(st.integers(1, 3), st.integers(1, 4)), max_size=3)
          .map(lambda pairs: RingExpr("mono", (3,), (), _exps_from_pairs(pairs))),
        st.integers(0, 4).map(lambda n: RingExpr("an", (n,))),
    )
    if depth == 0:
        return base
    sub = _exprs(depth - 1)
    return st.one_of(
        base,
        st.tuples(sub, sub).map(lambda ab: RingExpr("prod", (), ab)),
        st.tuples(st.integers(1, 2), sub).map(lambda ks: RingExpr("mat", (ks[0],), (ks[1],))),
        st.tuples(sub, st.lists(st.integers(0, 15), max_size=3)).map(
            lambda eg: RingExpr("quot", (), (eg[0],), tuple(eg[1]))
        ),
    )


@given(_exprs(2))
def test_round_trip_on_generated_expressions(expr):
    assert parse_ring_expr(render(expr)) == expr


def test_cli_minprimes(capsys):
    assert main(["minprimes", "zmod(12)"]) == 0
    out = capsys.readouterr().out
    assert "{0,3,6,9}" in out and "{0,2,4,6,8,10}" in out


def test_cli_localize(capsys):
    assert main(["localize", "zmod(6)", "--gens", "2"]) == 0
    out = capsys.readouterr().out
    assert "ass ideal:     {0,3}" in out
    assert "target order:  3" in out


def test_cli_describe_and_centre(capsys):
    assert main(["describe", "mat(2, gf(2))"]) == 0
    out = capsys.readouterr().out
    assert "order:       16" in out and "[1,0;0,1]" in out
    assert main(["centre", "mat(2, gf(2))"]) == 0
    assert "centre order: 2" in capsys.readouterr().out


def test_cli_multsets_classify_rho(capsys):
    assert main(["multsets", "zmod(6)"]) == 0
    assert "denominator" in capsys.readouterr().out
    assert main(["classify-set", "zmod(6)", "--gens", "2"]) == 0
    assert "ass_l:      [0, 3]" in capsys.readouterr().out
    assert main(["rho", "tri(2, gf(2))"]) == 0
    assert "well-defined on minimals: True" in capsys.readouterr().out


def test_cli_mono_and_an(capsys):
    assert main(["mono", "minprimes", "mono(vars=2, gens=[v1*v2])"]) == 0
    out = capsys.readouterr().out
    assert "(v1)" in out and "(v2)" in out
    assert main(["mono", "localize", "mono(vars=2, gens=[v1*v2])", "--invert", "1"]) == 0
    assert "bijection:     True" in capsys.readouterr().out
    assert main(["an", "verify", "--n", "1"]) == 0
    assert "centre = z-polys:   True" in capsys.readouterr().out


def test_cli_exit_codes(capsys):
    assert main(["minprimes", "zmod("]) == 2
    capsys.readouterr()
    assert main(["minprimes", "mat(3, gf(4))"]) == 3
    capsys.readouterr()
    assert main(["localize", "zmod(6)", "--gens", "2,3"]) == 2
    capsys.readouterr()


def test_cli_verify_machine_format_fields(capsys):
    code = main(["verify", "--suite", "A11Sep23", "--format", "machine", "--max-order", "6"])
    out = capsys.readouterr().out
    assert code == 0
    body = json.loads(out)
    assert body["format"] == "orespec-report-v1"
    assert body["clean"] is True
    report = body["reports"][1]
    assert set(report) == {
        "theorem_id", "track", "description", "note",
        "considered", "applicable", "passed", "cases", "counterexamples",
    }
    assert report["theorem_id"] == "A11Sep23"


def test_cli_verify_fault_injection_exit(capsys):
    code = main(["verify", "--suite", "A11Sep23", "--max-order", "6", "--inject-fault"])
    out = capsys.readouterr().out
    assert code == 1
    assert "counterexamples: 1" in out

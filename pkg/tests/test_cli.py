import json

import pytest

from qborel.cli import (BracketSyntaxError, bind_expr, parse_expr,
                        run_command)
from qborel.coeffring import parse_poly
from qborel.datum import IndexOutOfRange, make_datum
from qborel.freeword import FreeElem, qq_bracket, skew_bracket


def test_parse_expr_examples():
    assert parse_expr("[x1,x2]") == ("skew", ("x", 1), ("x", 2))
    assert parse_expr("qb([x1,x2],x1)") == \
        ("qq", ("skew", ("x", 1), ("x", 2)), ("x", 1))
    assert parse_expr(" [ x1 , x12 ] ") == ("skew", ("x", 1), ("x", 12))


def test_parse_expr_offsets():
    with pytest.raises(BracketSyntaxError) as err:
        parse_expr("[x1,[x2")
    assert err.value.offset == 7
    with pytest.raises(BracketSyntaxError) as err:
        parse_expr("y1")
    assert err.value.offset == 0
    with pytest.raises(BracketSyntaxError) as err:
        parse_expr("[x1,x2]]")
    assert err.value.offset == 7


def test_bind_expr():
    d = make_datum("C", 2)
    tree = parse_expr("qb([x1,x2],x3)")
    x1, x2, x3 = (FreeElem.letter(d, i) for i in (1, 2, 3))
    assert bind_expr(d, tree) == qq_bracket(d, skew_bracket(d, x1, x2), x3)
    with pytest.raises(IndexOutOfRange):
        bind_expr(d, parse_expr("x9"))


def test_eval_command(capsys):
    code = run_command(["eval", "--series", "C", "--rank", "2",
                        "--expr", "[x1,x2]"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == "(q^2-1)*t_1_2 * (x2 x1)"


def test_eval_command_json_roundtrip(capsys):
    code = run_command(["eval", "--series", "C", "--rank", "2",
                        "--expr", "qb([x1,x2],x3)", "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "eval"
    d = make_datum("C", 2)
    for term in doc["terms"]:
        parse_poly(term["coefficient"], d.varset)  # canonical form re-parses


def test_coproduct_command_json(capsys):
    code = run_command(["coproduct", "--series", "D", "--rank", "4",
                        "--k", "1", "--m", "7", "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert {"series", "rank", "k", "m", "terms"} <= set(doc)
    assert doc["series"] == "D" and doc["k"] == 1 and doc["m"] == 7
    d = make_datum("D", 4)
    by_i = {t["i"]: t for t in doc["terms"]}
    assert by_i[3]["tau"] == "t_3_4^-1"  # p_{4,3} in the multiparameter datum
    assert by_i[3]["left"] == "e[4,7]" and by_i[3]["right"] == "e[1,3]"
    assert by_i[3]["grouplike"] == [1, 1, 1, 0]
    for t in doc["terms"]:
        assert parse_poly(t["tau"], d.varset) is not None
        assert parse_poly(t["coefficient"], d.varset) is not None


def test_coproduct_text_lists_tau(capsys):
    code = run_command(["coproduct", "--series", "D", "--rank", "4",
                        "--k", "1", "--m", "7"])
    out = capsys.readouterr().out
    assert code == 0
    assert "tau_3 = t_3_4^-1" in out


def test_coproduct_discover_mode_flag(capsys):
    code = run_command(["coproduct", "--series", "C", "--rank", "2",
                        "--k", "2", "--m", "3", "--mode", "discover",
                        "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "discover"
    assert doc["terms"][0]["tau"] == "1+q^-1"  # the k = n exception


def test_verify_command_json(capsys):
    code = run_command(["verify", "--series", "C", "--rank", "2",
                        "--suite", "all", "--format", "json",
                        "--max-degree", "3", "--count", "5"])
    out = capsys.readouterr().out
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert {r["suite"] for r in doc["reports"]} >= {"serre", "coproduct"}


def test_verify_series_a(capsys):
    code = run_command(["verify", "--series", "A", "--rank", "2",
                        "--suite", "coproduct"])
    assert code == 0
    assert "an-no-exceptions" in capsys.readouterr().out


def test_pbw_command(capsys):
    code = run_command(["pbw", "--series", "C", "--rank", "2",
                        "--max-degree", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "25/25" in out


def test_usage_errors(capsys):
    assert run_command(["verify", "--series", "E", "--rank", "2",
                        "--suite", "all"]) == 2
    assert run_command([]) == 2
    assert run_command(["eval", "--series", "C", "--rank", "2",
                        "--expr", "[x1,[x2"]) == 2
    assert run_command(["eval", "--series", "C", "--rank", "2",
                        "--expr", "x9"]) == 2
    assert run_command(["verify", "--series", "C", "--rank", "1",
                        "--suite", "all"]) == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run_command(["verify", "--series", "C", "--rank", "2",
                        "--suite", "serre", "--format", "json",
                        "--out", str(target)])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["passed"] is True
    assert capsys.readouterr().out == ""


def test_numeric_mode_flag(capsys):
    code = run_command(["verify", "--series", "D", "--rank", "3",
                        "--suite", "serre", "--mode", "numeric"])
    assert code == 0
    assert "(numeric)" in capsys.readouterr().out

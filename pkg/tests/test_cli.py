import io
import json

import pytest

from galois_symbols.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(session, *argv):
    code, text = run("--json", "--session", str(session), *argv)
    return code, json.loads(text)


@pytest.fixture
def session(tmp_path):
    path = tmp_path / "s.json"
    code, data = run_json(path, "tower", "new", "--q", "7", "--m", "6", "--uniformizers", "t1,t2")
    assert code == 0 and data["full_calculus"] and data["cd"] == 3
    return path


def test_tower_new_writes_session(session):
    data = json.loads(session.read_text())
    assert data["tower"]["q"] == 7
    assert data["generator_convention"] == "smallest primitive root"


def test_normalize(session):
    code, data = run_json(session, "normalize", "(t1, t1)")
    assert code == 0
    assert data["coeffs"] == {"c,t1": 3}
    assert data["generator_convention"] == "smallest primitive root"
    assert data["tower"]["m"] == 6


def test_normalize_quadratic(tmp_path):
    path = tmp_path / "q.json"
    run_json(path, "tower", "new", "--q", "7", "--m", "2", "--uniformizers", "t")
    code, data = run_json(path, "normalize", "(t, t)")
    assert data["coeffs"] == {"c,t": 1}


def test_flags_after_subcommand(session):
    code, text = run("normalize", "(c, t1)", "--json", "--session", str(session))
    assert code == 0 and json.loads(text)["degree"] == 2


def test_inline_tower():
    tower = json.dumps({"q": 7, "m": 3, "uniformizers": ["t"]})
    code, text = run("--json", "--tower", tower, "split", "(c, t)")
    data = json.loads(text)
    assert code == 0 and data["degree"] == 3 and data["verified"]


def test_residue_and_decompose(session):
    code, data = run_json(session, "residue", "(c, t1, t2)")
    assert data["residue"]["coeffs"] == {"c,t1": 1}
    code, data = run_json(session, "decompose", "(c*t2, t1*t2)", "--trace")
    assert code == 0 and data["rewrite_agrees"]
    assert data["trace"] and {"rule", "before", "after"} <= set(data["trace"][0])


def test_bilocal(session):
    code, data = run_json(session, "bilocal-decompose", "(c*t1, t2, t1*t2)")
    assert code == 0 and data["recombines"]


def test_split_orders(session):
    for order, degrees in (("2,3", [2, 3]), ("3,2", [3, 2])):
        code, data = run_json(session, "split", "(c, t1, t2)", "--order", order)
        assert code == 0 and [s["degree"] for s in data["chain"]] == degrees


def test_period_index(session):
    code, data = run_json(session, "period-index", "3*(c, t1, t2)")
    assert (data["period"], data["degree"], data["equal"]) == (2, 2, True)
    code, data = run_json(session, "period-index", "-2*(c, t1, t2)")
    assert code == 0 and data["period"] == 3


def test_common_slot_seeded(session):
    a = run("--json", "--session", str(session), "--seed", "4", "common-slot", "--random", "20")
    b = run("--json", "--session", str(session), "--seed", "4", "common-slot", "--random", "20")
    assert a == b
    data = json.loads(a[1])
    assert data["verified"] and data["count"] == 20 and data["degree"] <= 6


def test_descend(tmp_path):
    path = tmp_path / "d.json"
    run_json(path, "tower", "new", "--q", "7", "--m", "5", "--uniformizers", "t")
    code, data = run_json(path, "descend")
    assert code == 0 and data["d"] == 4 and data["valid"]


def test_tower_free_commands():
    code, text = run("--json", "tate-slot", "(-1,-1)", "(-1,-3)")
    data = json.loads(text)
    assert data["d"] == -1 and data["verified"]
    assert data["ramification"]["(-1,-1)"] == ["2", "inf"]
    code, text = run("--json", "oracle", "hilbert", "7", "7", "7")
    assert json.loads(text)["symbol"] == -1
    code, text = run("--json", "oracle", "hilbert", "-1", "-1", "inf")
    assert json.loads(text)["symbol"] == -1


def test_errors_are_structured(session):
    code, data = run_json(session, "normalize", "(c,")
    assert code == 2 and data["error"] == "ParseError" and "column 4" in data["message"]
    assert data["command"] == "normalize"
    code, data = run_json(session, "split", "(c, t1)")
    assert code == 2 and data["error"] == "NotTopDegree"


def test_missing_session(tmp_path):
    code, data = run_json(tmp_path / "none.json", "normalize", "(c, t1)")
    assert code == 2 and data["error"] == "PreconditionError"


def test_text_output(session):
    code, text = run("--session", str(session), "normalize", "(c, t1)")
    assert code == 0 and "generator_convention: smallest primitive root" in text

import json

import pytest

from binedge.cli import run
from conftest import UNMIXED_NOT_CM


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_graph_file(tmp_path, capsys):
    f = tmp_path / "unmixed_not_cm.graph"
    f.write_text(UNMIXED_NOT_CM + "\n")
    code, out, _ = call(capsys, "analyze", str(f))
    rep = json.loads(out)
    assert code == 0
    assert (rep["depth"], rep["dim"], rep["unmixed"], rep["cm"]) == (5, 6, True, False)
    assert rep["depth_source"] == "engine"


def test_output_is_byte_stable(capsys):
    a = call(capsys, "classify", "5; 1-2,2-3,3-4,4-5", "--explain")[1]
    b = call(capsys, "classify", "5; 1-2,2-3,3-4,4-5", "--explain")[1]
    assert a == b and a.count("\n") == 1


def test_classify_theorem_outside(capsys):
    code, out, _ = call(capsys, "classify", UNMIXED_NOT_CM, "--theorem", "special-chordal")
    assert code == 0 and json.loads(out)["class_tag"] == "outside"


def test_primes(capsys):
    rep = json.loads(call(capsys, "primes", "3; 1-2,2-3")[1])
    assert [r["S"] for r in rep["minimal_primes"]] == [[], [2]]
    rep = json.loads(call(capsys, "primes", "--breakpoints", "1,3,5")[1])
    assert rep["multiplicity"] == 9


def test_hilbert_agrees(capsys):
    code, out, _ = call(capsys, "hilbert", "4; 1-2,1-3,2-3,3-4")
    rep = json.loads(out)
    assert code == 0 and rep["agree"] and rep["engine"]["reduced_numerator"] == [1, 3, 2]


def test_groebner_show_initial(capsys):
    rep = json.loads(call(capsys, "groebner", "4; 1-2,2-3,3-4,1-4", "--show-initial")[1])
    assert not rep["quadratic"] and "x1*y2" in rep["initial_ideal"]


def test_groebner_closed_labeling(capsys):
    rep = json.loads(call(capsys, "groebner", "3; 1-3,3-2", "--labeling", "closed")[1])
    assert rep["quadratic"]


def test_betti_json_and_text(capsys):
    rep = json.loads(call(capsys, "betti", "3; 1-2,2-3", "--cross-prime")[1])
    assert rep["entries"] == [[0, 2, 2], [1, 4, 1]] and rep["cross_prime_agrees"]
    code, out, _ = call(capsys, "betti", "3; 1-2,2-3", "--format", "text")
    assert "total:" in out and code == 0


def test_verify_identity(capsys):
    code, out, _ = call(capsys, "verify-identity", "--power", "--r", "12")
    rep = json.loads(out)
    assert code == 0 and rep["lhs"] == rep["rhs_compositions"] == 4096
    code, out, _ = call(capsys, "verify-identity", "--b", "1,2,3")
    assert code == 0 and json.loads(out)["equal"]
    code, out, _ = call(capsys, "verify-identity", "--linear", "5")
    assert code == 0


def test_census_small(capsys):
    code, out, _ = call(capsys, "census", "--max-n", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert lines[-1] == {"summary": True, "records": 4, "disagreements": 0}


def test_census_limit(capsys):
    code, out, _ = call(capsys, "census", "--max-n", "9", "--engine", "off")
    assert code == 1 and json.loads(out)["truncated"]


def test_probe(capsys):
    rep = json.loads(call(capsys, "probe-conjecture", "4; 1-2,1-3,2-3,3-4", "--engine", "off")[1])
    assert rep["chain_of_cliques"] and rep["closed"] and rep["betti_equal"] is None


@pytest.mark.parametrize("argv", [["analyze", "3; 1-1"], ["analyze", "/no/such/file"], ["primes"]])
def test_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code != 0 and "error" in err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code != 0


def test_pretty(capsys):
    out = call(capsys, "primes", "3; 1-2,2-3", "--pretty")[1]
    assert out.count("\n") > 3


def test_census_five_with_engine(capsys):
    code, out, _ = call(capsys, "census", "--max-n", "5", "--prime", "32003")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[-1]["records"] == 31 and lines[-1]["disagreements"] == 0
    # the three triangles on one edge appear in this labeling
    code, out, _ = call(capsys, "census", "--max-n", "5", "--full")
    (rec,) = [json.loads(x) for x in out.splitlines() if '"5; 1-2,1-3,1-4,1-5,2-3,2-4,2-5"' in x]
    assert rec["flags"]["unmixed"] and rec["engine"]["cm"] is False and rec["engine"]["depth"] == 5

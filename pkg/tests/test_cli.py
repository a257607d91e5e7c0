import json

import pytest

from weights import cli
from weights.cli import main
from weights.fincat import monoidal_to_dict
from weights.operad import Operad, enumerate_ops
from weights.oracles import enumerate_comonoids

from conftest import load


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("weight,expected", [
    ("monoid", "oracle: 3 objects/6 homs; limit: 3/6; ISO: yes"),
    ("comonoid", "oracle: 1 object/1 hom; limit: 1/1; ISO: yes"),
    ("cmonoid", "oracle: 3 objects/6 homs; limit: 3/6; ISO: yes"),
    ("bimonoid", "oracle: 1 object/1 hom; limit: 1/1; ISO: yes"),
    ("action", "oracle: 6 objects/20 homs; limit: 6/20; ISO: yes"),
])
def test_limit_on_chain_max(capsys, weight, expected):
    code, out, _ = run(capsys, "limit", "--weight", weight, "chain-max")
    assert code == 0 and out.splitlines()[0] == expected


def test_limit_with_naturality(capsys):
    code, out, _ = run(capsys, "limit", "chain-max", "--naturality", "-v")
    assert code == 0 and "3/3 pass" in out and "carrier=" in out


def test_missing_symmetry_is_invalid_input(capsys):
    code, _, err = run(capsys, "limit", "--weight", "bimonoid", "z2-cocycle")
    assert code == 2 and "symmetric" in err


def test_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "oracle", lambda tag, C, action=None: enumerate_comonoids(C))
    code, out, _ = run(capsys, "limit", "chain-max")
    assert code == 3 and "ISO: no" in out


def test_file_paths_and_bad_files(capsys, tmp_path):
    doc = monoidal_to_dict(load("chain-min")[0])
    good = tmp_path / "good.json"
    good.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "limit", str(good))
    assert code == 0 and "limit: 1/1" in out
    for row in doc["tensor_mor"]:
        row[2] = doc["tensor_mor"][0][2]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run(capsys, "limit", str(bad))[0] == 2
    assert run(capsys, "validate", str(bad))[0] == 2
    assert run(capsys, "limit", str(tmp_path / "missing.json"))[0] == 2


def test_theory_commands(capsys):
    code, out, _ = run(capsys, "theory", "hom", "(1*1)", "1")
    assert code == 0 and out.startswith("1 morphism\n")
    assert run(capsys, "theory", "hom", "1", "(1*1)")[1].startswith("2 morphisms")
    assert run(capsys, "theory", "twocell", "(e*1)", "1")[1].strip() == "exists"
    assert run(capsys, "theory", "twocell", "1", "(1*1)")[1].strip() == "none"
    assert run(capsys, "theory", "compose", "1,e", "(1*2)")[1].strip() == "(1*e)"
    assert run(capsys, "theory", "hom", "--weight", "action", "(1>2)", "2")[1].startswith("1 morphism")
    assert run(capsys, "theory", "hom", "(1*", "1")[0] == 2


def test_span_commands(capsys):
    assert run(capsys, "span", "enumerate", "bot", "bot", "2", "2")[1].startswith("2 spans")
    assert run(capsys, "span", "enumerate", "bot", "top", "2", "1")[1].startswith("1 span ")
    ident = "1->1: 1 | 1 ~ 1->1: 1 | 1"
    assert run(capsys, "span", "compose", "lo", "lo", ident, ident)[1].strip() == ident
    out = run(capsys, "span", "canon", "lo", "lo", "2->1: 1 1 | 2 1 ~ 2->1: 1 1 | 1 2")[1]
    assert out.strip() == "2->1: 1 1 | 1 2 ~ 2->1: 1 1 | 2 1"
    assert run(capsys, "span", "canon", "lo", "lo", "no tilde")[0] == 2
    assert run(capsys, "span", "canon", "lo2", "lo", "x ~ y")[0] == 2


def test_operad_and_validate(capsys):
    assert run(capsys, "operad", "lo", "3")[1].startswith("lo: 6 operations")
    # unit insertions make btr infinite; the listing is bounded by --bound (default 3)
    n = len(enumerate_ops(Operad.BTR, (1, 2), 3))
    assert run(capsys, "operad", "btr", "2")[1].startswith(f"btr: {n} operations")
    assert run(capsys, "operad", "nope", "2")[0] == 2
    code, out, _ = run(capsys, "validate", "z2-cocycle")
    assert code == 0 and out.strip().endswith("valid")


@pytest.mark.parametrize("argv", [["limit", "nonthin"], ["theory", "hom", "(1*1)", "(1*1)"],
                                  ["span", "enumerate", "lo", "top", "2", "1"]])
def test_json_reports_are_deterministic(capsys, argv):
    first = run(capsys, *argv, "--json")[1]
    second = run(capsys, *argv, "--json")[1]
    assert first == second
    report = json.loads(first)
    assert report["status"] == 0 and report["lines"]


def test_timing_flag(capsys):
    out = run(capsys, "operad", "top", "2", "--timing")[1]
    assert out.rstrip().endswith("s)")

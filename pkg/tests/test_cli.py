import json

import pytest

from actkit import io
from actkit.act import make_map, regular_act, theta_act
from actkit.cli import main
from actkit.colimit import make_system


def run(capsys, *argv):
    code = main(list(argv))
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines() if l.strip()]
    return code, lines


@pytest.fixture
def files(tmp_path, z2):
    S, T = regular_act(z2), theta_act(z2)
    paths = {}
    for name, obj in {
        "monoid": io.monoid_to_json(z2),
        "S": io.act_to_json(S),
        "T": io.act_to_json(T),
        "epi": io.map_to_json(make_map(S, T, (0, 0))),
        "ident": io.map_to_json(make_map(S, S, (0, 1))),
        "system": io.system_to_json(make_system(((1, 1), (0, 1)), [S, T],
                                                {(0, 1): make_map(S, T, (0, 0))})),
        "cong": {"kind": "congruence", "act": io.act_to_json(S), "classes": [[0, 1]]},
        "bad": {"kind": "act"},
    }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(obj))
        paths[name] = str(p)
    return paths


def test_monoid_commands(capsys, tmp_path, files):
    code, out = run(capsys, "monoid", "new", "cyclic_group", "3")
    assert code == 0 and out[0]["size"] == 3
    path = str(tmp_path / "c3.json")
    code, out = run(capsys, "monoid", "new", "cyclic_group", "3", "-o", path)
    assert code == 0 and out[0]["kind"] == "written"
    code, out = run(capsys, "monoid", "validate", path)
    assert out[0] == {"kind": "valid", "object": "monoid", "size": 3, "commutative": True}
    code, out = run(capsys, "monoid", "new", "no_such_builder")
    assert code == 2 and out[0]["kind"] == "error"


def test_act_commands(capsys, files):
    code, out = run(capsys, "act", "validate", files["S"])
    assert code == 0 and out[0]["components"] == 1
    code, out = run(capsys, "act", "decompose", files["T"])
    assert out[0]["components"] == [[0]]
    code, out = run(capsys, "act", "quotient", "--congruence", files["cong"])
    assert out[0]["classes"] == [[0, 1]]
    code, out = run(capsys, "act", "quotient", "--act", files["S"], "--pair", "0,1")
    assert out[0]["map"] == [0, 0]
    code, out = run(capsys, "act", "tensor", files["S"], files["S"])
    assert code == 0 and out[0]["size"] == 2
    code, out = run(capsys, "act", "validate", files["bad"])
    assert code == 2 and out[0]["error"] == "InputError"


def test_check(capsys, files):
    code, out = run(capsys, "check", "--act", files["S"], "--class", "SF")
    assert code == 0 and out[0]["holds"]
    code = main(["--human", "check", "--act", files["T"], "--class", "SF"])
    text = capsys.readouterr().out
    assert code == 1 and json.loads(text)["witness"][0] == "E"
    assert "\n  " in text


def test_check_compact_witness(capsys, files):
    code = main(["check", "--act", files["T"], "--class", "E"])
    line = json.loads(capsys.readouterr().out)
    assert code == 1 and line["witness"] == [0, 0, 1]


def test_purity(capsys, files):
    code, out = run(capsys, "purity", "--map", files["epi"], "--n", "1")
    assert code == 1 and out[0]["witness"] == [0]
    code, out = run(capsys, "purity", "--map", files["ident"], "--full")
    assert code == 0 and out[0]["n"] == "full"
    code, out = run(capsys, "purity", "--map", files["S"])
    assert code == 2


def test_colimit(capsys, files):
    code, out = run(capsys, "colimit", "--system", files["system"])
    assert code == 0 and out[0]["apex"]["size"] == 1
    code, out = run(capsys, "colimit", "--system", files["system"], "--verify")
    assert code == 0 and out[0]["universal"]["holds"]


def test_cover(capsys, files):
    code, out = run(capsys, "cover", "--act", files["T"], "--class", "SF")
    assert code == 0 and out[0]["cover"] and out[0]["carrier"]["size"] == 2
    code, out = run(capsys, "cover", "--act", files["T"], "--class", "CP", "--precover-only")
    assert code == 0 and out[0]["carrier"]["size"] == 3 and out[0]["precover"]


def test_corpus_and_suite(capsys, tmp_path):
    d = str(tmp_path / "corpus")
    code, out = run(capsys, "corpus", "generate", "--max-monoid-order", "2",
                    "--max-act-size", "2", "--builder", "cyclic_group:2", "-o", d)
    assert code == 0 and len(out[0]["monoids"]) == 3
    code, out = run(capsys, "suite", "run", "pure-congruence", "--corpus", d)
    assert code == 0 and out[0]["verdict"] == "PASS"
    code, out = run(capsys, "suite", "run", "nope")
    assert code == 2 and out[0]["error"] == "UnknownSuite"


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == 2

import json
import subprocess
import sys

import pytest

from twofactor import io
from twofactor.cli import parse_factor_terms, run
from twofactor.construct import walecki
from twofactor.model import FactorizationCert, NotationError, parse_cycle_type


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def good_cert(tmp_path):
    p = tmp_path / "good_cert.json"
    p.write_text(io.dumps(walecki(9)), encoding="utf-8")
    return p


def test_verify_good(capsys, good_cert):
    code, out, _ = call(capsys, "verify", str(good_cert))
    assert code == 0 and out["ok"]


def test_verify_bad(capsys, tmp_path):
    cert = walecki(7)
    bad = FactorizationCert(cert.host, (cert.factors[0],) * 3)
    p = tmp_path / "bad.json"
    p.write_text(io.dumps(bad), encoding="utf-8")
    code, out, _ = call(capsys, "verify", str(p))
    assert code == 1 and {v["code"] for v in out["violations"]} == {"EDGE_MULTIPLICITY"}


def test_verify_garbage(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{", encoding="utf-8")
    code, out, err = call(capsys, "verify", str(p))
    assert code == 3 and out is None and "invalid JSON" in err


def test_advise_k15(capsys):
    code, out, _ = call(capsys, "advise", "HWP", "K15", "6x[3]", "1x[5]")
    assert code == 1 and out["rule"] == "R7" and out["verdict"] == "NotExists"


def test_advise_flags(capsys):
    code, out, _ = call(capsys, "advise", "--kind", "OP", "--host", "K13", "--factors", "6x[3^2,7]")
    assert code == 0 and out["rule"] == "R2"


def test_advise_unknown(capsys):
    code, out, _ = call(capsys, "advise", "OP", "K6+J", "3x[3,3]")
    assert code == 2 and out["verdict"] == "Unknown" and out["nearest"]


def test_advise_missing(capsys):
    assert call(capsys, "advise", "OP")[0] == 3


def test_search_proved_none(capsys):
    code, out, _ = call(capsys, "search", "op", "--host", "K6-I", "--types", "[3,3],[3,3]")
    assert code == 1 and out["status"] == "proved_none"


def test_search_found(capsys):
    code, out, _ = call(capsys, "search", "op", "--host", "K7", "--types", "3x[3,4]")
    assert code == 0
    assert io.from_json(out["value"]).host.order == 7


def test_search_exhausted(capsys):
    code, out, _ = call(capsys, "search", "op", "--host", "K9", "--types", "4x[4,5]", "--budget-nodes", "5")
    assert code == 2 and out["status"] == "exhausted"


def test_search_starter_rsm_hamdecomp(capsys):
    code, out, _ = call(capsys, "search", "starter", "--group", "Z4", "--type", "[5]")
    assert code == 0 and out["value"]["format"] == "starter.v1"
    code, out, _ = call(capsys, "search", "rsm", "--group", "Z5", "--s", "1,4", "--g", "3", "--orders", "5,5")
    assert code == 0 and out["value"]["format"] == "rsm.v1"
    code, out, _ = call(capsys, "search", "hamdecomp", "--n", "9", "--s", "1,2")
    assert code == 0 and len(out["value"]) == 2


def test_construct_and_verify(capsys, tmp_path):
    code, out, _ = call(capsys, "construct", "walecki", "--v", "12")
    assert code == 0 and len(out["factors"]) == 5
    code, out, _ = call(capsys, "construct", "haggkvist", "--n", "12", "--type", "[4,6,6,8]", "--arc-order", "6,8,4,6")
    assert code == 0 and out["host"]["kind"] == "BlownCycle"
    code, out, _ = call(capsys, "construct", "cn", "--g", "5", "--n", "9", "--s", "1,2")
    assert code == 0 and len(out["factors"]) == 4
    code, out, _ = call(capsys, "construct", "project", "--cycle", "0,1,4,6,5,2,7,8,3", "--g", "5")
    assert out["cycle"][:3] == [[0, 0], [1, 1], [2, 4]]


def test_construct_rsm(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text("[[1, 1, 4], [4, 4, 1]]", encoding="utf-8")
    code, out, _ = call(capsys, "construct", "rsm", "--group", "Z5", "--s", "1,4", "--g", "3", "--matrix", str(p))
    assert code == 0 and out["claimed_types"] == [[[15, 1]], [[15, 1]]]


def test_pipeline(capsys, tmp_path):
    code, out, _ = call(capsys, "search", "op", "--host", "K3[3]", "--types", "3x[3^3]")
    eq = tmp_path / "eq.json"
    eq.write_text(json.dumps(out["value"]), encoding="utf-8")
    code, out, _ = call(capsys, "construct", "haggkvist", "--n", "3", "--type", "[6]")
    tpl = tmp_path / "tpl.json"
    tpl.write_text(json.dumps(out), encoding="utf-8")
    code, out, _ = call(capsys, "construct", "blowup", "--cert", str(eq), "--n", "2")
    assert code == 0 and out["format"] == "blocks.v1"
    blocks = tmp_path / "blocks.json"
    blocks.write_text(json.dumps(out), encoding="utf-8")
    assert call(capsys, "verify", str(blocks))[0] == 0
    code, out, _ = call(capsys, "construct", "blowup", "--cert", str(eq), "--n", "2", "--refine", str(tpl))
    assert code == 0 and out["format"] == "cert.v1" and len(out["factors"]) == 6
    w3 = tmp_path / "w3.json"
    w3.write_text(io.dumps(walecki(3)), encoding="utf-8")
    code, out, _ = call(capsys, "construct", "compose", "--eq", str(eq), "--parts", str(w3), str(w3), str(w3))
    assert code == 0 and out["host"] == {"kind": "CompleteOdd", "v": 9}


def test_starter_commands(capsys, tmp_path):
    code, out, _ = call(capsys, "construct", "graceful", "--v", "6", "--cycles", "inf,0,4,1,3,2")
    assert code == 0 and out["group"] == [5]
    p = tmp_path / "h.json"
    p.write_text(json.dumps(out), encoding="utf-8")
    code, out, _ = call(capsys, "construct", "double", "--starter", str(p))
    assert code == 0 and out["group"] == [10]
    q = tmp_path / "f.json"
    q.write_text(json.dumps({k: out[k] for k in ("format", "group", "cycles")}), encoding="utf-8")
    code, out, _ = call(capsys, "construct", "develop", "--starter", str(q))
    assert code == 0 and out["host"] == {"kind": "CompleteOdd", "v": 11}


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "op", "--host", "K7", "--types", "[9]"],
        ["construct", "walecki", "--v", "2"],
        ["construct", "haggkvist", "--n", "4", "--type", "[3,5]"],
        ["construct", "cn", "--g", "3", "--n", "8", "--s", "2,4"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(argv) == 3


def test_factor_terms():
    assert parse_factor_terms(["6x[3]", "1x5"]) == [(parse_cycle_type("[3]"), 6), (5, 1)]
    assert parse_factor_terms(["[3,4]", "2x[3,4]"]) == [(parse_cycle_type("[3,4]"), 3)]
    with pytest.raises(NotationError):
        parse_factor_terms(["6y[3]"])


def test_module_entry_point(good_cert):
    proc = subprocess.run([sys.executable, "-m", "twofactor", "verify", str(good_cert)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"]

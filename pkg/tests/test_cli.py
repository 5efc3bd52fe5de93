import io
import json
import subprocess
import sys

import pytest

from smallk.cli import dispatch


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = dispatch(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def test_roots_json():
    rc, out, _ = run("roots", "--type", "E8", "--json")
    assert rc == 0
    d = json.loads(out)
    assert len(d["positive_roots"]) == 120


def test_json_round_trip_is_byte_identical():
    for argv in (
        ("roots", "--type", "G2", "--json"),
        ("small-k", "--type", "B", "--rank", "5", "--json"),
        ("pxi", "--type", "A", "--rank", "3", "--xi", "3/2,-1/2", "--json"),
        ("langlands", "--type", "B", "--rank", "3", "--tau", "s.p2", "--nu-re", "1,0,0", "--nu-im", "0,1,1", "--json"),
    ):
        rc, out, _ = run(*argv)
        assert rc == 0
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text), sort_keys=True, indent=2, ensure_ascii=False) == text
        rc2, out2, _ = run(*argv)
        assert out2 == out


def test_small_k_errors():
    rc, _, err = run("small-k", "--type", "C", "--rank", "3")
    assert rc == 1 and "1 dimensional" in err
    rc, _, _ = run("small-k", "--cover", "PinPin", "--n", "4", "--json")
    assert rc == 0


def test_usage_errors_exit_2():
    assert run("roots")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("verify", "--p-max", "4")[0] == 2


def test_branch():
    rc, out, _ = run("branch", "--n", "5", "--weight", "3/2,1/2", "--check", "--json")
    d = json.loads(out)
    assert rc == 0 and d["character_check"] and d["j"] == [1, 1, 1, 1, 3, 3]
    rc, _, err = run("branch", "--n", "5", "--weight", "1,0")
    assert rc == 1


def test_pxi_value_and_modes():
    rc, out, _ = run("pxi", "--type", "A", "--rank", "2", "--xi", "5/2", "--json")
    d = json.loads(out)
    assert d["degree"] == 6
    rc, out2, _ = run("pxi", "--type", "A", "--rank", "2", "--xi", "5/2", "--json", "--mode", "unshifted")
    assert rc == 0 and out2 != out


def test_cyclicity_and_irreducible():
    rc, out, _ = run("cyclicity", "--type", "B", "--rank", "3", "--tau", "s.p1", "--nu-re", "0,0,0", "--json")
    d = json.loads(out)
    assert rc == 0 and not d["cyclic"] and len(d["violated_roots"]) == 3
    rc, out, _ = run("irreducible", "--type", "B", "--rank", "3", "--tau", "s.p1", "--nu-im", "3,2,1", "--json")
    assert rc == 0 and json.loads(out)["irreducible"] is True
    rc, _, err = run("cyclicity", "--type", "B", "--rank", "3", "--tau", "s.p2", "--nu-re=-1,0,0")
    assert rc == 1 and "chamber" in err


def test_intertwine():
    rc, out, _ = run("intertwine", "--type", "A", "--rank", "2", "--xi", "5/2", "--nu", "0.1+0.2j,0,-0.1", "--symbolic", "--json")
    d = json.loads(out)
    assert rc == 0 and d["identity_holds"] is True
    assert d["value"] is not None and "log_value" in d


def test_verify():
    rc, out, _ = run("verify", "--p-max", "9", "--json")
    d = json.loads(out)
    assert rc == 0
    assert all(v["pass"] for v in d.values() if isinstance(v, dict) and "pass" in v)


def test_sweep_is_deterministic_across_workers():
    argv = ("sweep", "--type", "G", "--rank", "2", "--tau", "C2p2", "--grid", "0:1:1/2", "--json")
    _, a, _ = run(*argv, "--workers", "1")
    _, b, _ = run(*argv, "--workers", "8")
    assert a == b
    pts = json.loads(a)["points"]
    assert len(pts) == 9
    assert any(not p["cyclic"] for p in pts)


def test_out_file(tmp_path):
    target = tmp_path / "roots.json"
    rc, out, _ = run("roots", "--type", "A", "--rank", "2", "--json", "--out", str(target))
    assert rc == 0 and target.read_text(encoding="utf-8") == out


def test_cap_flag():
    rc, _, err = run("branch", "--n", "9", "--weight", "1/2,1/2,1/2,1/2", "--check", "--cap", "4")
    assert rc == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "smallk", "small-k", "--type", "E7", "--json"], capture_output=True, text=True)
    assert r.returncode == 0
    assert [t["label"] for t in json.loads(r.stdout)] == ["C8", "C8*"]

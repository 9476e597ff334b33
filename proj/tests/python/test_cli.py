import json
import os
import shutil
import subprocess

import pytest

EXE = os.environ.get("BETHE_GL2_EXE") or shutil.which("bethe-gl2")
pytestmark = pytest.mark.skipif(EXE is None, reason="bethe-gl2 executable not found")


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("BETHE_GL2_PRECISION", None)
    e.update(env or {})
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=e)


def test_exit_codes():
    assert run("operator", "--n", "2").returncode == 0
    assert run().returncode == 2
    assert run("operator").returncode == 2
    assert run("operator", "--n", "2", "--points", "1,x").returncode == 2
    assert run("verify").returncode == 2
    assert run("verify", "--suite", "bogus").returncode == 2
    # known failing check in the correspondence suite
    assert run("verify", "--suite", "correspondence", "--n", "2").returncode == 1


def test_precision_precedence(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"precision": 96}))
    out = run("--config", str(cfg), "leaves", "--n", "1")
    assert json.loads(out.stdout)["precision"] == 96
    out = run("--config", str(cfg), "leaves", "--n", "1", env={"BETHE_GL2_PRECISION": "160"})
    assert json.loads(out.stdout)["precision"] == 160
    out = run("--config", str(cfg), "--precision", "200", "leaves", "--n", "1", env={"BETHE_GL2_PRECISION": "160"})
    assert json.loads(out.stdout)["precision"] == 200


def test_certificate_bytes_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("--jobs", "1", "verify", "--suite", "core,elimination", "--n", "3", "-o", str(a)).returncode == 0
    assert run("--jobs", "3", "verify", "--suite", "core,elimination", "--n", "3", "-o", str(b)).returncode == 0
    assert a.read_bytes() == b.read_bytes()
    assert "runtime_s" not in a.read_text()


def test_golden_roundtrip(tmp_path):
    assert run("golden", "--dir", str(tmp_path)).returncode == 1
    assert run("golden", "--bless", "--dir", str(tmp_path)).returncode == 0
    assert run("golden", "--dir", str(tmp_path)).returncode == 0
    src = os.environ.get("BETHE_SOURCE_DIR")
    if src:
        assert run("golden", "--dir", os.path.join(src, "golden")).returncode == 0

import io
import subprocess
import sys

import pytest

from borel_forge import reference as R
from borel_forge.binomial import random_system
from borel_forge.cli import run
from borel_forge.io import emit_system
from borel_forge.suites import VerificationReport

C_FILE = "ring 4 x y z t\ngen y^2 - x*z\ngen x^2\ngen x*y\ngen x*z^2\n"
D_FILE = "ring 4 x y z t\ngen y^2*z - x*t^2\ngen x^2\ngen x*y\ngen x*z\ngen y^3\n"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("BFORGE_SEED", raising=False)
    (tmp_path / "c.txt").write_text(C_FILE)
    (tmp_path / "d.txt").write_text(D_FILE)
    (tmp_path / "b.txt").write_text("ring 4 x y z t\ngen x^2\ngen x*y\ngen y^2\ngen x*z^2\n")
    (tmp_path / "lf.txt").write_text(
        "ring 4 x y z t\ngen x^2\ngen x*y\ngen x*z\ngen y^3\ngen y^2*z\n")
    (tmp_path / "lq.txt").write_text("ring 4 x y z t\ngen x\ngen y^3\ngen y^2*z^2\n")
    (tmp_path / "ex2.sys").write_text(emit_system(R.example2_system()))
    return tmp_path


def test_gb_and_init(files):
    code, out, _ = call("gb", "c.txt")
    assert code == 0
    assert out == "ring 4 x y z t\ngen x*z^2\ngen x^2\ngen x*y\ngen y^2 - x*z\n"
    code, out, _ = call("init", "c.txt", "--order", "hlex")
    assert out == "ring 4 x y z t\ngen y^3\ngen y^2*z\ngen x^2\ngen x*y\ngen x*z\n"


def test_gin_reports_certificate_on_stderr(files):
    code, out, err = call("gin", "c.txt", "--seed", "42")
    assert code == 0
    assert out == "ring 4 x y z t\ngen x*z^2\ngen x^2\ngen x*y\ngen y^2\n"
    assert "certificate" in err and "seed 42" in err


def test_sat_and_hilbert(files):
    (files / "lfd.txt").write_text("ring 4 x y z t\ngen x^2\ngen x*y\ngen x*z\ngen y^3\n"
                                   "gen y^2*z\n")
    code, out, _ = call("sat", "lfd.txt")
    assert code == 0 and out == "ring 4 x y z t\ngen y^3\ngen y^2*z\ngen x^2\ngen x*y\ngen x*z\n"
    code, out, _ = call("hilbert", "lq.txt", "--bound", "4")
    assert out == "0: 0\n1: 1\n2: 4\n3: 11\n4: 24\npoly: 1/6 t^3 + t^2 - 1/6 t - 2\n"
    code, out, _ = call("hilbert", "lq.txt", "--bound", "2", "--quotient")
    assert out.startswith("0: 1\n1: 3\n2: 6\n")


def test_borel_commands(files):
    code, out, _ = call("borel", "ge", "1,1,0,1", "0,2,0,1")
    assert code == 0 and out.splitlines()[0] == "true"
    assert call("borel", "ge", "1,0,1,1", "0,2,0,1")[1] == "false\n"
    code, out, _ = call("borel", "enumerate", "0,2,0,3,0", "0,2,0,2,1")
    assert out.splitlines()[:2] == ["count: 1", "mu: 1"]
    assert call("borel", "is-set", "[0,2,0,1]")[1] == "false\n"
    out = call("borel", "closure", "0,0,2")[1]
    assert len(out.splitlines()) == 6
    assert call("borel", "ge", "1,x")[0] == 2


def test_bsys_commands(files):
    code, out, _ = call("bsys", "validate", "ex2.sys")
    assert code == 0 and "valid: yes" in out and "good: yes" in out
    code, out, _ = call("bsys", "ideal", "ex2.sys")
    assert out.splitlines()[-1] == "gen y^2*t - x*z*t"
    code, out, _ = call("bsys", "check", "ex2.sys")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call("bsys", "filtration", "ex2.sys")
    assert out.splitlines()[1] == "F_1 [binomial, S_(4)]: (y^3, y^2*z, x*z^2, x^2, x*y, y^2 - x*z)"


def test_bsys_flipped_orientation_is_normalized(files):
    (files / "flip.sys").write_text(emit_system(R.example2_system().flipped()))
    code, out, err = call("bsys", "ideal", "flip.sys")
    assert code == 0 and "note" in err
    assert out == call("bsys", "ideal", "ex2.sys")[1]


def test_bsys_invalid_system(files):
    (files / "bad.sys").write_text("nvars 4\ndegree 3\nrho 1 -2 1 0\nA 3 0 0 0\nC 0 2 0 1\n")
    code, out, _ = call("bsys", "validate", "bad.sys")
    assert code == 1 and "valid: no" in out
    assert call("bsys", "check", "bad.sys")[0] == 1


def test_alpha_commands(files):
    code, out, _ = call("alpha", "1,1,0", "0,2,0")
    assert code == 0 and out == "2*Y12*Y22\n"
    code, out, _ = call("alpha", "0,2,0,3,0", "0,2,0,2,1", "--rho", "1,-2,2,-2,1")
    assert code == 1  # hypothesis violated
    code, out, _ = call("alpha", "0,2,0,3,0", "0,2,0,2,1", "--rho", "1,-2,2,-2,1", "--force")
    assert code == 1 and "equal_low: True" in out and "equal_high: False" in out
    code, out, _ = call("alpha", "0,2,1", "0,1,2", "--rho", "1,-1,0")
    assert code == 0 and "equal_high: True" in out


def test_chain(files):
    (files / "chain.txt").write_text(
        "edge init_rlex c.txt b.txt =\nedge init_hlex c.txt lf.txt =\n"
        "edge init_rlex d.txt lf.txt =\nedge sat∘init_hlex d.txt lq.txt <\n")
    code, out, _ = call("chain", "chain.txt")
    assert code == 0 and out.endswith("chain: pass\n")
    (files / "wrong.txt").write_text("edge init_rlex c.txt lf.txt =\n")
    code, out, _ = call("chain", "wrong.txt")
    assert code == 1 and "expected:" in out and "computed:" in out


def test_verify_suites(files):
    code, out, _ = call("verify", "example1")
    assert code == 0 and out.splitlines()[-1] == "example1: 15/15 checks passed"
    code, out, _ = call("verify", "counterexample", "--seed", "42")
    assert code == 0 and "PASS symmetric difference" in out
    code, out, _ = call("verify", "example2")
    assert code == 0


@pytest.mark.parametrize("seed", range(5))
def test_verify_properties_for_seeds(files, seed):
    code, out, _ = call("verify", "properties", "--seed", str(seed))
    assert code == 0, out


def test_exit_codes(files):
    assert call("gb", "missing.txt")[0] == 2
    (files / "broken.txt").write_text("ring 4 x y z t\ngen x^-1\n")
    code, _, err = call("gb", "broken.txt")
    assert code == 2 and "line 2, column 7" in err
    (files / "big.toml").write_text("spair_budget = 1\n")
    code, _, err = call("gb", "d.txt", "--order", "hlex", "--config", "big.toml")
    assert code == 3 and "budget" in err
    assert call("nonsense")[0] == 2


def test_output_is_deterministic(files):
    for argv in (("gin", "d.txt", "--seed", "3"), ("sat", "c.txt"), ("bsys", "gb", "ex2.sys")):
        assert call(*argv) == call(*argv)


def test_seed_from_environment(files, monkeypatch):
    monkeypatch.setenv("BFORGE_SEED", "17")
    assert "seed 17" in call("gin", "c.txt")[2]
    assert "seed 4" in call("gin", "c.txt", "--seed", "4")[2]


def test_random_system_file(files):
    (files / "r.sys").write_text(emit_system(random_system(2)))
    assert call("bsys", "check", "r.sys")[0] == 0


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "borel_forge", "gb", "c.txt"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("ring 4 x y z t\n")
    proc = subprocess.run([sys.executable, "-m", "borel_forge", "gb", "missing.txt"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_verification_report_status():
    rep = VerificationReport("demo")
    rep.add("first", True)
    assert rep.exit_status == 0
    rep.add("second", False, "1", "2")
    assert rep.exit_status == 1
    assert rep.lines() == ["PASS first", "FAIL second: expected 1; got 2",
                           "demo: 1/2 checks passed"]

import subprocess
import sys

import pytest

from doobcodes import check_matrix
from doobcodes.check_matrix import CheckMatrix, verify_perfect
from doobcodes.cli import main
from doobcodes.constructions import base_d814, quasi_cyclic


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--gamma", "0", "--delta", "3")
    assert code == 0
    assert sorted(out.splitlines()) == ["m=7 nprime=0 npp=7", "m=8 nprime=1 npp=4"]
    code, out, _ = run(capsys, "params", "--gamma", "1", "--delta", "3")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "params", "--gamma", "0", "--delta", "5")
    npps = sorted(int(line.split("npp=")[1]) for line in out.splitlines())
    assert npps == list(range(4, 32, 3))
    code, _, _ = run(capsys, "params", "--gamma", "x", "--delta", "3")
    assert code == 2


def test_construct_preset(capsys, tmp_path):
    out_file = tmp_path / "m.txt"
    code, out, _ = run(capsys, "construct", "--preset", "d814", "-o", str(out_file))
    assert code == 0
    assert "rows=3 m=8 nprime=1 npp=4" in out and "subgroup=64" in out
    assert check_matrix.load(out_file) == base_d814()


@pytest.mark.parametrize(
    "gamma,delta,npp,shape",
    [(0, 5, 31, "(155,0,31)"), (2, 3, 7, "(35,8,7)"), (0, 3, 4, "(8,1,4)")],
)
def test_construct_params(capsys, tmp_path, gamma, delta, npp, shape):
    out_file = tmp_path / "m.txt"
    code, out, _ = run(
        capsys, "construct", "--gamma", str(gamma), "--delta", str(delta),
        "--npp", str(npp), "-o", str(out_file),
    )  # fmt: skip
    assert code == 0
    assert f"shape={shape}" in out and "verified=true" in out
    M = check_matrix.load(out_file)
    assert verify_perfect(M).is_perfect
    assert f"({M.shape.m},{M.shape.nprime},{M.shape.npp})" == shape


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["--gamma", "0", "--delta", "3", "--npp", "5"], "admissible"),
        (["--gamma", "0", "--delta", "2", "--npp", "3"], "even delta"),
        (["--gamma", "1", "--delta", "3", "--npp", "4"], ""),
        (["--gamma", "0", "--delta", "3"], "need"),
        (["--preset", "d814", "--gamma", "0"], "cannot be combined"),
    ],
)
def test_construct_rejections(capsys, tmp_path, argv, needle):
    out_file = tmp_path / "m.txt"
    code, _, err = run(capsys, "construct", *argv, "-o", str(out_file))
    assert code == 2
    assert needle in err
    assert not out_file.exists()


def test_construct_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for f in (a, b):
        assert run(capsys, "construct", "--gamma", "2", "--delta", "3", "--npp", "4", "-o", str(f))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "d814")
    assert code == 0
    assert out.startswith("perfect: true") and "subgroup=64" in out

    M = base_d814()
    left = M.left.copy()
    left[:, 3] = 0
    bad = tmp_path / "bad.txt"
    check_matrix.save(CheckMatrix(3, left, M.middle, M.right), bad)
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "perfect: false" in out and "zero_columns: 3" in out


@pytest.mark.parametrize("preset,subgroup", [("d155-qc", 1024), ("d2667-qc", 16384)])
def test_verify_large_presets(capsys, preset, subgroup):
    code, out, _ = run(capsys, "verify", preset)
    assert code == 0 and f"subgroup={subgroup}" in out
    code, out, _ = run(capsys, "analyze", preset, "--cyclic")
    assert code == 0


def test_verify_io_errors(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err
    broken = tmp_path / "broken.txt"
    broken.write_text("DOOBPC 1\nrows=1 m=1 nprime=0 npp=0\n1x||\n")
    code, _, err = run(capsys, "verify", str(broken))
    assert code == 2 and "line 3" in err


def test_roundtrip_matches_memory(capsys, tmp_path):
    f = tmp_path / "qc.txt"
    assert run(capsys, "construct", "--preset", "d707-qc", "-o", str(f))[0] == 0
    M = quasi_cyclic(3)
    loaded = check_matrix.load(f)
    assert loaded == M and loaded.shape == M.shape
    assert verify_perfect(loaded) == verify_perfect(M)


def test_decode(capsys, tmp_path):
    zero = "0" * 16 + "|00|0000"
    code, out, _ = run(capsys, "decode", "d814", zero)
    assert (code, out.strip()) == (0, zero)

    # get a nonzero codeword from the decoder, then bump one coordinate
    code, out, _ = run(capsys, "decode", "d814", "1" + "0" * 15 + "|00|0000")
    assert code == 0
    codeword = out.strip()
    digits = list(codeword)
    digits[-1] = str((int(digits[-1]) + 1) % 4)
    code, out, _ = run(capsys, "decode", "d814", "".join(digits))
    assert (code, out.strip()) == (0, codeword)

    assert run(capsys, "decode", "d814", "0" * 15 + "|00|0000")[0] == 2
    assert run(capsys, "decode", "d814", "0" * 16 + "|02|0000")[0] == 2


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "d707-qc", "--weight3")
    assert (code, out.strip()) == (0, "order2=7 order4=0")
    code, out, _ = run(capsys, "analyze", "d707-qc", "--cyclic")
    assert (code, out.strip()) == (0, "cycles=3 length=7")
    code, out, _ = run(capsys, "analyze", "d707-alt", "--cyclic")
    assert (code, out.strip()) == (1, "not quasi-cyclic")
    assert run(capsys, "analyze", "d814", "--cyclic")[0] == 2
    assert run(capsys, "analyze", "d814")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "doobcodes", "params", "--gamma", "0", "--delta", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 2

import subprocess
import sys

import pytest

from zcz.cli import main
from zcz.setfile import read_set

from conftest import EX2_S0, EX2_S1, EX3_SET1


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ex2_file(tmp_path, capsys):
    path = tmp_path / "ex2.zcz"
    code, _, _ = run(["generate", "t1", "--perfect", "builtin:tri9", "--hadamard", "sylvester:1",
                      "--shift", "0,5", "-o", path], capsys)
    assert code == 0
    return path


@pytest.fixture
def ex3_file(tmp_path, capsys):
    path = tmp_path / "ex3.zcz"
    code, _, _ = run(["generate", "t1", "--perfect", "builtin:quad16", "--hadamard", "fourier:4",
                      "--variant", "case2", "--i", "0", "-o", path], capsys)
    assert code == 0
    return path


def test_generate_example2(ex2_file):
    assert ex2_file.read_text() == f"ZCZSET v1 alphabet=6 N=18 M=2 claim=zcz:8\n{EX2_S0}\n{EX2_S1}\n"


def test_generate_to_stdout(capsys):
    code, out, err = run(["generate", "t1", "--perfect", "builtin:tri9", "--hadamard", "sylvester:1",
                          "--shift", "0,5"], capsys)
    assert code == 0
    assert out.splitlines()[1] == EX2_S0
    assert "T1.1" in err


def test_verify_example2(ex2_file, capsys):
    code, out, _ = run(["verify", ex2_file, "--against-claim"], capsys)
    assert code == 0
    assert "measured_zcz = 8" in out
    assert "achieves_bound = true" in out


def test_verify_claim_violation(ex2_file, tmp_path, capsys):
    bad = tmp_path / "bad.zcz"
    bad.write_text(ex2_file.read_text().replace("zcz:8", "zcz:9"))
    code, out, _ = run(["verify", bad, "--against-claim"], capsys)
    assert code == 3
    assert "measured_zcz = 8" in out
    code, _, _ = run(["verify", bad], capsys)
    assert code == 0


def test_verify_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.zcz"
    bad.write_text("ZCZSET v1 alphabet=6 N=3 M=1\n01\n")
    code, _, err = run(["verify", bad], capsys)
    assert code == 1
    assert "line 2" in err


def test_verify_without_claim(tmp_path, capsys):
    path = tmp_path / "plain.zcz"
    path.write_text("ZCZSET v1 alphabet=2 N=2 M=2\n00\n01\n")
    assert run(["verify", path], capsys)[0] == 0
    assert run(["verify", path, "--against-claim"], capsys)[0] == 1


@pytest.mark.parametrize("flag", ["--fft", "--direct"])
def test_verify_method_flags(ex3_file, flag, capsys):
    code, out, _ = run(["verify", ex3_file, flag, "--against-claim"], capsys)
    assert code == 0
    assert f"({flag[2:]}" in out
    assert "measured_zcz = 14" in out


def test_verify_sampled_pairs(tmp_path, capsys, ex3_file):
    out_path = tmp_path / "t3.zcz"
    assert run(["generate", "t3", "--input", ex3_file, "--hadamard", "sylvester:2", "--d", "1",
                "-o", out_path], capsys)[0] == 0
    code, out, _ = run(["verify", out_path, "--pairs", "5", "--seed", "3"], capsys)
    assert code == 0
    assert "pairs_checked = 26 (sampled)" in out


def test_correlate_example3(ex3_file, capsys):
    assert read_set(ex3_file)[0].to_string() == EX3_SET1[0]
    code, out, _ = run(["correlate", ex3_file, 0, 2], capsys)
    assert code == 0
    assert out.startswith("|R_{s0,s2}(tau)| = (")
    vals = [float(x) for x in out.split("(", 2)[2].rstrip(")\n").split(",")]
    assert len(vals) == 64
    assert vals[:15] == [0.0] * 15
    assert vals[15] == 16.0


def test_correlate_irrational_two_decimals(ex3_file, capsys):
    _, out, _ = run(["correlate", ex3_file, 0, 1], capsys)
    assert "22.63" in out


def test_correlate_peak_is_energy(ex2_file, capsys):
    _, out, _ = run(["correlate", ex2_file, 1, 1], capsys)
    assert out.startswith("|R_{s1}(tau)| = (18.00, 0.00")


def test_correlate_index_error(ex2_file, capsys):
    code, _, err = run(["correlate", ex2_file, 0, 2], capsys)
    assert code == 1
    assert "outside" in err


@pytest.mark.parametrize(
    "argv, claim",
    [
        (["t1", "--perfect", "chu:7", "--hadamard", "sylvester:1"], "zcz:6"),
        (["t1", "--perfect", "builtin:quad16", "--hadamard", "fourier:4", "--variant", "case2", "--i", "2"],
         "zcz:14"),
        (["t2", "--perfect", "builtin:quad16", "--hadamard", "paper12"], "zcz:12"),
        (["t2", "--perfect", "chu:5", "--hadamard", "hadamard:4"], "zcz:4"),
        (["t5", "--perfect", "builtin:quad8b", "--hadamard", "sylvester:3", "--shift", "0,5,6,5,7,7,3,6"],
         "delta:16.0"),
        (["t5", "--perfect", "builtin:ternary13", "--hadamard", "sylvester:3", "--shift", "0,5,6,5,7,7,3,6"],
         "delta:18.0"),
        (["t5", "--perfect", "builtin:quad16", "--hadamard", "sylvester:2", "--search", "eq26"], "delta:32.0"),
        (["t5", "--perfect", "seq:4:01022122", "--hadamard", "sylvester:2"], "delta:16.0"),
    ],
)
def test_generate_then_verify(argv, claim, tmp_path, capsys):
    path = tmp_path / "s.zcz"
    code, _, err = run(["generate", *argv, "-o", path], capsys)
    assert code == 0, err
    assert f"claim={claim}" in path.read_text().splitlines()[0]
    code, _, _ = run(["verify", path, "--against-claim"], capsys)
    assert code == 0


def test_generate_t3_t4_chain(ex3_file, tmp_path, capsys):
    t3 = tmp_path / "t3.zcz"
    assert run(["generate", "t3", "--input", ex3_file, "--hadamard", "sylvester:2", "--d", "1", "-o", t3],
               capsys)[0] == 0
    assert run(["verify", t3, "--against-claim"], capsys)[0] == 0
    t4 = tmp_path / "t4.zcz"
    assert run(["generate", "t4", "--input", ex3_file, "--hadamard", "sylvester:2", "-o", t4], capsys)[0] == 0
    assert "claim=zcz:56" in t4.read_text()
    assert run(["verify", t4, "--against-claim"], capsys)[0] == 0


def test_generate_ex5(tmp_path, capsys):
    c = tmp_path / "c.zcz"
    c.write_text("ZCZSET v1 alphabet=4 N=8 M=1 claim=zcz:7\n01022122\n")
    out = tmp_path / "ex5.zcz"
    assert run(["generate", "t3", "--input", c, "--hadamard", "paper12", "--d", "1", "-o", out], capsys)[0] == 0
    code, text, _ = run(["verify", out, "--against-claim"], capsys)
    assert code == 0
    assert "measured_zcz = 6" in text


@pytest.mark.parametrize(
    "argv, code",
    [
        (["generate", "t3", "--input", "{ex3}", "--hadamard", "sylvester:1", "--d", "0"], 2),
        (["generate", "t1", "--perfect", "builtin:tri9", "--hadamard", "sylvester:1", "--shift", "0,9"], 2),
        (["generate", "t2", "--perfect", "builtin:quad8", "--hadamard", "sylvester:4"], 2),
        (["generate", "t1", "--perfect", "seq:2:0000", "--hadamard", "sylvester:1", "--shift", "0,2"], 2),
        (["generate", "t1", "--perfect", "builtin:nope", "--hadamard", "sylvester:1"], 1),
        (["generate", "t1", "--perfect", "builtin:tri9", "--hadamard", "paley:5"], 1),
        (["generate", "t1", "--perfect", "builtin:tri9", "--hadamard", "bogus"], 1),
        (["generate", "t3", "--input", "{ex3}", "--hadamard", "sylvester:2"], 1),
        (["generate", "t2", "--hadamard", "sylvester:1"], 1),
        (["generate", "t9"], 1),
        (["frobnicate"], 1),
        ([], 1),
    ],
)
def test_exit_codes(argv, code, ex3_file, capsys):
    argv = [str(a).replace("{ex3}", str(ex3_file)) for a in argv]
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 1


def test_hypothesis_message_names_condition(ex3_file, capsys):
    code, _, err = run(["generate", "t3", "--input", ex3_file, "--hadamard", "sylvester:1", "--d", "0"], capsys)
    assert code == 2
    assert "gcd(m, n+d) = 1" in err


def test_catalog(capsys):
    code, out, _ = run(["catalog"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert any(l.split()[:5] == ["I", "16", "12", "12^D", "192"] for l in lines)
    assert sum(l.startswith(("I ", "II ")) for l in lines) == 20


@pytest.mark.slow
def test_catalog_witness(capsys):
    code, out, _ = run(["catalog", "--witness"], capsys)
    assert code == 0
    rows = [l for l in out.splitlines() if "|" in l][1:]
    assert rows and all("| ok" in l for l in rows)


def test_module_entry_point(ex2_file):
    proc = subprocess.run([sys.executable, "-m", "zcz", "verify", str(ex2_file)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "measured_zcz = 8" in proc.stdout

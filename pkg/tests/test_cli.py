import io
import subprocess
import sys
from pathlib import Path

import pytest

from wittrep.cli import build_parser, main

GOLDEN = Path(__file__).parent / "golden"
DATA = Path(__file__).parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verma_and_dump_check(tmp_path):
    dump = tmp_path / "v.dump"
    code, text = run("verma", "--lambda", "L", "--window", "5", "--dump", str(dump))
    assert code == 0 and "axiom residuals: 0" in text
    code, text = run("check", "--module", str(dump))
    assert code == 0


def test_family8_printed_exits_one():
    code, text = run("family", "--id", "8", "--window", "10")
    assert code == 1
    assert "[d_1, d_5] on fp0: residual f0:-221760-50400r19" in text


def test_family8_corrected_crosscheck():
    code, text = run("family", "--id", "8", "--variant", "corrected", "--sign", "minus",
                     "--window", "10", "--crosscheck")
    assert code == 0 and "matches solver class True" in text


def test_scan():
    assert run("scan-simplicity", "--max-i", "12") == (0, "lambda=0\ti=1\n")


def test_ext_agrees_with_table():
    code, text = run("ext", "--top", "simple:-1", "--sub", "simple:0", "--weight-only")
    assert code == 0 and "closed form: 1" in text


def test_ext_table_golden(tmp_path):
    out = tmp_path / "t.tsv"
    code, _ = run("ext-table", "--block", "0", "--range", "-2..2", "--mode", "both", "--out", str(out))
    assert code == 0
    assert out.read_text() == (GOLDEN / "ext_table_block0_2.tsv").read_text()


def test_ext_table_negative_range_with_space():
    code, text = run("ext-table", "--block", "1/3", "--range", "-1..1", "--mode", "closed")
    assert code == 0 and text.startswith("mu\tlambda\tdim_closed\tdim_solver\tstabilized\n")


def test_quiver_dot_golden(tmp_path):
    dot = tmp_path / "q.dot"
    code, _ = run("quiver", "--base", "0", "--half-width", "4", "--dot", str(dot))
    assert code == 0 and dot.read_text() == (GOLDEN / "block0_hw4.dot").read_text()


def test_quiver_witness():
    code, text = run("quiver", "--base", "0", "--half-width", "12", "--witness", "--mu", "10")
    assert code == 0
    assert "wild witness on {6, 7, 8, 9, 10}: wild" in text
    assert "  7 -> 10\n" in text


def test_h1_and_gamma():
    assert run("h1", "--member", "d(0)*d(0)+d(0)-d(1)") == (0, "true\n")
    assert run("h1", "--member", "d(0)") == (0, "false\n")
    code, text = run("gamma", "--module", "verma:1/3", "--act", "d(0)*d(0)+d(0)-d(1)")
    assert code == 0 and text.endswith("4/9\n")
    assert run("gamma-exact")[0] == 0
    assert run("gamma-exact", "--preset", "split")[0] == 0


def test_borel():
    assert run("borel-h1", "--lambda", "-1") == (0, "1\n")


def test_tensor_file_and_preset():
    code, text = run("tensor", "--p", "poly:10", "--v", str(DATA / "whittaker_band.bmod"), "--probe")
    assert code == 0 and "reached all 153 interior cells" in text
    code, text = run("tensor", "--p", "s:5", "--v", "preset:const:1/3")
    assert "d0 spectrum: -2/3 -5/3 -8/3 -11/3" in text


@pytest.mark.parametrize("argv", [
    ["verma"],
    ["verma", "--lambda", "1/0"],
    ["ext", "--top", "bogus:1", "--sub", "ff:1"],
    ["quiver", "--base", "0", "--bogus"],
    ["h1"],
    ["tensor", "--p", "weird:3", "--v", "preset:whittaker"],
    ["tensor", "--p", "poly:3", "--v", "/nonexistent.bmod"],
    ["nosuchcommand"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv, out=io.StringIO()))
    assert exc.value.code == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert err and "error" in err[-1]


def test_every_subcommand_has_help():
    ap = build_parser()
    sub = next(a for a in ap._actions if a.dest == "cmd")
    assert set(sub.choices) == {"verma", "ff", "simple", "family", "scan-simplicity", "check", "ext",
                                "ext-table", "borel-h1", "quiver", "h1", "gamma", "gamma-exact",
                                "tensor", "selftest"}
    for name, p in sub.choices.items():
        text = p.format_help()
        for act in p._actions:
            for flag in act.option_strings:
                assert flag in text, (name, flag)


def test_deterministic_bytes():
    a = run("quiver", "--base", "1/3", "--half-width", "5", "--tsv", "-")
    b = run("quiver", "--base", "1/3", "--half-width", "5", "--tsv", "-")
    assert a == b


def test_console_script_help():
    r = subprocess.run([sys.executable, "-m", "wittrep.cli", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "selftest" in r.stdout

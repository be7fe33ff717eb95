"""End-to-end CLI checks: every subcommand plus the paper-example replay."""

import os

import pytest

from rankcodes.cli import load_code_file, main

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip().splitlines()
    return code, out


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_unknown_subcommand_nonzero(capsys):
    assert main(["no-such-command"]) != 0


def test_field_show(capsys):
    code, out = run(capsys, "field", "--p", "2", "--n", "3")
    assert code == 0 and out == ["p=2 n=3 poly=1,1,0,1"]


def test_field_table(capsys):
    code, out = run(capsys, "field", "--p", "2", "--n", "2", "--table")
    assert code == 0 and len(out) == 5  # header + 4 elements


def test_load_code_file():
    c = load_code_file(fixture("c313.code"))
    assert (c.n, c.k, c.spec.p, c.spec.n) == (3, 1, 2, 3)


def test_mrd_decode_printed_example(capsys):
    code, out = run(
        capsys, "mrd", "decode", "--code", fixture("c313.code"),
        "--word", "a^5,*,a^2",
    )
    assert code == 0 and out == ["a^5,a^6,a^2"]


def test_mrd_decode_via_guessing(capsys):
    code, out = run(
        capsys, "mrd", "decode", "--code", fixture("c313.code"),
        "--word", "a^5,*,a^2", "--guess",
    )
    assert code == 0 and out == ["a^5,a^6,a^2"]


def test_mrd_decode_detected(capsys):
    code, out = run(
        capsys, "mrd", "decode", "--code", fixture("c313.code"), "--word", "*,*,*",
    )
    assert code == 1 and out == ["DETECTED"]


def test_mrd_encode(capsys):
    code, out = run(
        capsys, "mrd", "encode", "--code", fixture("c313.code"), "--message", "a^0",
    )
    # generator row of the [3,1] code (last coordinate normalized to 1)
    assert code == 0 and out == ["a^3,a^4,a^0"]


def test_qcyclic_matrices(capsys):
    code, out = run(
        capsys, "qcyclic", "matrices",
        "--field", "p=2 n=5 poly=1,0,1,0,0,1",
        "--gpoly", "a^24*z[0] + a^3*z[1] + a^2*z[2]",
    )
    assert code == 0
    assert out[0] == "G=a^22,a^1,a^0,0,0;a^24,a^7,0,a^0,0;a^5,a^20,0,0,a^0"
    assert out[1] == "H=a^0,0,a^22,a^24,a^5;0,a^0,a^1,a^7,a^20"


def test_qcyclic_invert(capsys):
    code, out = run(
        capsys, "qcyclic", "invert",
        "--field", "p=2 n=5 poly=1,0,1,0,0,1",
        "--gpoly", "a^13*z[0] + a^17*z[1] + a^10*z[2] + a^0*z[3]",
        "--parity", "a^25*z[0] + a^24*z[1] + a^14*z[2]",
    )
    assert code == 0 and out == ["a^1*z[3] + a^0*z[4]"]


def test_lcd_check_and_project(capsys):
    field = "p=3 n=4 poly=2,1,0,0,1"
    code, out = run(
        capsys, "lcd", "check", "--field", field, "--generator", "a^4,a^65,a^0",
    )
    assert code == 0 and out == ["lcd=true"]
    code, out = run(
        capsys, "lcd", "project", "--field", field, "--generator", "a^4,a^65,a^0",
    )
    assert code == 0
    assert out == ["a^41,a^22,a^37;a^22,a^3,a^18;a^37,a^18,a^33"]


def test_lcd_adder_demo(capsys):
    code, out = run(capsys, "lcd", "adder-demo")
    assert code == 0
    assert out == [
        "sum=a^24,a^78,a^35",
        "codeword=a^0,a^61,a^76",
        "dualword=a^2,a^5,a^8",
    ]


def test_block_decode(capsys):
    code, out = run(
        capsys, "block", "decode", "--parity", "1,1,1,0;0,1,0,1", "--word", "1111",
    )
    assert code == 0 and out == ["codeword=0111", "message=01"]


CRM_ARGS = [
    "--field", "p=2 n=2 poly=1,1,1",
    "--outer", "a^0,0",
    "--inner-parity", "1010;1101",
]


def test_crm_commands(capsys):
    code, out = run(capsys, "crm", "mindist", *CRM_ARGS)
    assert code == 0 and out == ["1"]
    code, out = run(capsys, "crm", "encode", *CRM_ARGS, "--message", "a^2")
    assert code == 0 and out == ["1110;0000"]
    code, out = run(capsys, "crm", "decode", *CRM_ARGS, "--matrix", "1110;1000")
    assert code == 0 and out == ["a^2"]


def test_mird_decode(capsys):
    code, out = run(
        capsys, "mird", "decode", "--mod", "6", "--h", "1,4,2", "--d", "3",
        "--y", "3,2,1",
    )
    assert code == 0 and out == ["codeword=2,1,0", "error=1,1,1"]


def test_simulate(capsys):
    code, out = run(
        capsys, "simulate", "--code", fixture("c313.code"),
        "--channel", "symbol-erase", "--t", "1", "--trials", "50", "--seed", "3",
    )
    assert code == 0
    assert "trials=50" in out and "successes=50" in out


def test_paper_examples_all_pass(capsys):
    code, out = run(capsys, "paper-examples")
    assert code == 0
    assert len(out) >= 10
    assert all(line.startswith("PASS ") for line in out)

import json

import pytest

from hypotoeplitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_check_proven(capsys):
    code, out = run(capsys, "check", "z^2 zb + (1/7) z^3 zb^4", "--size", "32")
    assert code == 0 and "HypoCoHypo35" in out.out


def test_check_refuted_alpha2(capsys):
    code, out = run(capsys, "check", "z^2 zb - z^3 zb^2", "--format", "json")
    j = json.loads(out.out)
    assert code == 1 and j["violation_alpha"] == 2 and j["witness"]["form_value"]["value"] == "-1/1800"


def test_check_coanalytic(capsys):
    assert run(capsys, "check", "zb^3")[0] == 1


def test_check_inconclusive_exit_code(capsys):
    # the hypo + cohypo margin fails far out on the ray and small sections see no negativity
    code, out = run(capsys, "check", "z^2 zb + (9/20) z^3 zb^4", "--size", "32", "--max-size", "64")
    assert code == 2 and "Inconclusive" in out.out


def test_parse_error_exit(capsys):
    code, out = run(capsys, "check", "z^^2")
    assert code == 64 and "position" in out.err


def test_usage_error_exit(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check"])
    assert e.value.code == 64


def test_unknown_example(capsys):
    assert run(capsys, "reproduce", "ex9.9")[0] == 64


def test_matrix_csv(capsys):
    code, out = run(capsys, "matrix", "z", "--size", "3", "--format", "csv")
    rows = [r.split(",") for r in out.out.strip().splitlines()]
    assert code == 0 and [float(rows[i][i]) for i in range(3)] == [0.5, 1 / 6, 1 / 12]
    assert all(float(rows[i][j]) == 0 for i in range(3) for j in range(3) if i != j)


def test_construct(capsys):
    code, out = run(capsys, "construct", "--n", "1", "--delta", "1", "--format", "json")
    j = json.loads(out.out)
    assert code == 0 and j["j"] == 4 and j["q_sup"] == "11/3"


def test_mellin_rows(capsys):
    code, out = run(capsys, "mellin", "z^2 zb - z^3 zb^2", "--alpha-max", "5", "--format", "csv")
    lines = out.out.strip().splitlines()
    assert code == 1 and len(lines) == 6 and lines[2].endswith("false") and lines[1].endswith("true")


def test_norm(capsys):
    code, out = run(capsys, "norm", "z", "--size", "50", "--grid", "128")
    assert code == 0 and "1/2" in out.out


@pytest.mark.parametrize("ex,code", [("ex3.1", 0), ("ex4-counter", 0), ("ex4.5", 0), ("thm5.1", 0),
                                     ("ex3.5-rational", 1)])
def test_reproduce(capsys, ex, code):
    c, out = run(capsys, "reproduce", ex)
    assert c == code and out.out.count("PASS") >= 1

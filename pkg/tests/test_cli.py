import json

import pytest

from binomials.cli import main

UM = """ring X Y
ideal I
X^2 - 1
X*Y - Y
Y^2
"""

CELLULAR = """ring X Y Z
ideal I
X^4*Y^2 - Z^6
X^3*Y^2 - Z^5
X^2 - Y*Z
"""

NILQ = """ring X Y
ideal I
X - Y
Y^2
"""


@pytest.fixture
def session_file(tmp_path):
    def write(text):
        path = tmp_path / "session.txt"
        path.write_text(text)
        return str(path)
    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBasics:
    def test_gb(self, capsys, session_file):
        code, out, err = run(capsys, ["gb", session_file(UM)])
        assert code == 0
        assert out.splitlines() == ["X^2 - 1", "X*Y - Y", "Y^2"]

    def test_gb_json(self, capsys, session_file):
        code, out, _ = run(capsys, ["gb", "--json", session_file(UM)])
        payload = json.loads(out)
        assert payload["ring"] == ["X", "Y"]
        assert len(payload["generators"]) == 3

    def test_gb_lex_order(self, capsys, session_file):
        code, out, _ = run(capsys, ["gb", "--order", "lex(Y,X)",
                                    session_file(UM)])
        assert code == 0

    def test_nf(self, capsys, session_file):
        code, out, _ = run(capsys, ["nf", "--term", "X*Y^3",
                                    session_file(UM)])
        assert code == 0 and out.strip() == "0"

    def test_eliminate(self, capsys, session_file):
        text = """ring T X Y Z
ideal I
X - T^3
Y - T^4
Z - T^5
"""
        code, out, _ = run(capsys, ["eliminate", "--keep", "X,Y,Z",
                                    session_file(text)])
        assert code == 0
        assert out.splitlines() == ["X^3 - Y*Z", "X^2*Y - Z^2", "Y^2 - X*Z"]

    def test_colon_and_saturate(self, capsys, session_file):
        code, out, _ = run(capsys, ["colon", "--monomial", "Y",
                                    session_file(UM)])
        assert code == 0
        code, out, _ = run(capsys, ["saturate", "--vars", "Y",
                                    session_file(UM)])
        assert code == 0 and out.strip() == "1"

    def test_pure_part_oracle(self, capsys, session_file):
        code, out, _ = run(capsys, ["pure-part", "--lambda", "1,1", "--oracle",
                                    session_file(NILQ)])
        assert code == 0
        assert "oracle: verified" in out
        assert "Y^3 - Y^2" in out

    def test_maximal(self, capsys, session_file):
        text = """ring X Y
ideal I
X - Y
Y^3 - Y^2
"""
        code, out, _ = run(capsys, ["maximal", "--bound", "4",
                                    session_file(text)])
        assert code == 0
        assert "Y^2" in out.splitlines()
        assert "complete: unknown" in out


class TestDecompositions:
    def test_cellular_oracle(self, capsys, session_file):
        code, out, _ = run(capsys, ["cellular", "--oracle",
                                    session_file(CELLULAR)])
        assert code == 0
        assert out.count("component") == 3
        assert "oracle: verified" in out

    def test_cellular_json(self, capsys, session_file):
        code, out, _ = run(capsys, ["cellular", "--json",
                                    session_file(CELLULAR)])
        payload = json.loads(out)
        assert len(payload["components"]) == 3

    def test_mesoprimes(self, capsys, session_file):
        code, out, _ = run(capsys, ["mesoprimes", session_file(UM)])
        assert code == 0
        assert "X - 1" in out and "X^2 - 1" in out

    def test_lattice_decomp(self, capsys, session_file):
        text = "ring X Y\nideal I\nX^2 - Y^2\n"
        code, out, _ = run(capsys, ["lattice-decomp", "--oracle",
                                    session_file(text)])
        assert code == 0
        assert "X - Y" in out and "X + Y" in out

    def test_meso_primary_decomp(self, capsys, session_file):
        text = "ring X Y\nideal I\nX^2 - 1\nY^2\n"
        code, out, _ = run(capsys, ["meso-primary-decomp", "--oracle",
                                    session_file(text)])
        assert code == 0
        assert "X - 1" in out and "X + 1" in out


class TestPredicatesAndExitCodes:
    def test_is_mesoprimary_refusal(self, capsys, session_file):
        code, out, err = run(capsys, ["is-mesoprimary", session_file(UM)])
        assert code == 1
        assert "witness Y" in err

    def test_is_cellular(self, capsys, session_file):
        code, out, _ = run(capsys, ["is-cellular", session_file(UM)])
        assert code == 0 and "delta = {X}" in out

    def test_is_prime(self, capsys, session_file):
        text = "ring X Y\nideal I\nX^2 - Y^2\n"
        code, _, err = run(capsys, ["is-prime", session_file(text)])
        assert code == 1 and "not prime" in err

    def test_parse_error_is_exit_2(self, capsys, session_file):
        code, _, err = run(capsys, ["gb", session_file("ring X\nideal I\nX - Y\n")])
        assert code == 2
        assert "unknown variable" in err

    def test_colon_by_binomial_refused(self, capsys, session_file):
        text = "ring X\nideal I\nX^3 - 1\n"
        code, _, err = run(capsys, ["colon", "--monomial", "X - 1",
                                    session_file(text)])
        assert code == 1
        assert "non-binomial" in err

    def test_nf_with_coefficient(self, capsys, session_file):
        code, out, _ = run(capsys, ["nf", "--term", "2*X^3",
                                    session_file(UM)])
        assert code == 0 and out.strip() == "2*X"

    def test_missing_file_is_exit_2(self, capsys):
        code, _, err = run(capsys, ["gb", "/nonexistent/input.txt"])
        assert code == 2

    def test_radical(self, capsys, session_file):
        code, out, _ = run(capsys, ["radical", session_file(NILQ)])
        assert code == 0
        assert out.splitlines() == ["X", "Y"]


class TestMatrixCommands:
    def test_toric_inline(self, capsys):
        code, out, _ = run(capsys, ["toric", "--matrix", "3 4 5",
                                    "--vars", "X,Y,Z"])
        assert code == 0
        assert out.splitlines() == ["X^3 - Y*Z", "X^2*Y - Z^2", "Y^2 - X*Z"]

    def test_toric_named_matrix(self, capsys, session_file):
        text = "ring X Y Z\nmatrix A\n3 4 5\n"
        code, out, _ = run(capsys, ["toric", "--matrix", "A",
                                    session_file(text)])
        assert code == 0 and "Y^2 - X*Z" in out

    def test_is_positive(self, capsys):
        code, out, _ = run(capsys, ["is-positive", "--matrix", "3 4 5"])
        assert code == 0 and out.strip() == "positive"

    def test_not_positive_exit_code(self, capsys):
        code, out, _ = run(capsys, ["is-positive", "--matrix", "1 -1"])
        assert code == 1 and out.strip() == "not positive"

    def test_fibers(self, capsys):
        code, out, _ = run(capsys, ["fibers", "--matrix", "3 4 5",
                                    "--target", "8"])
        assert code == 0
        assert out.splitlines() == ["0 2 0", "1 0 1"]

    def test_snf(self, capsys):
        code, out, _ = run(capsys, ["snf", "--matrix", "2 -2", "--json"])
        payload = json.loads(out)
        assert payload["D"] == [[2, 0]]


class TestCongruenceCommand:
    def test_table(self, capsys, session_file):
        code, out, _ = run(capsys, ["congruence", "table",
                                    session_file(NILQ), "--max", "5"])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4
        assert "inf" in lines[-1]

    def test_table_budget(self, capsys, session_file):
        text = "ring X Y\nideal I\nX - Y\n"
        code, _, err = run(capsys, ["congruence", "table",
                                    session_file(text), "--max", "10"])
        assert code == 1 and "10" in err

    def test_related(self, capsys, session_file):
        code, out, _ = run(capsys, ["congruence", "related",
                                    session_file(NILQ), "X", "Y"])
        assert code == 0 and out.strip() == "related"

    def test_classify(self, capsys, session_file):
        code, out, _ = run(capsys, ["congruence", "classify",
                                    session_file(NILQ)])
        assert code == 0
        assert "mesoprimary: yes" in out and "prime: no" in out


class TestDeterminism:
    def test_byte_identical_runs(self, capsys, session_file):
        path = session_file(CELLULAR)
        _, out1, _ = run(capsys, ["cellular", path])
        _, out2, _ = run(capsys, ["cellular", path])
        assert out1 == out2

    def test_round_trip_through_cli_format(self, capsys, session_file):
        code, out, _ = run(capsys, ["gb", session_file(UM)])
        text = "ring X Y\nideal I\n" + out
        code2, out2, _ = run(capsys, ["gb", session_file(text)])
        assert code2 == 0 and out2 == out

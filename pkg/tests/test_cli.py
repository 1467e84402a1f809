import json

from schubertcalc import parse_permutation, parse_polynomial
from schubertcalc.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSchubert:
    def test_staircase(self, capsys):
        code, out, _ = invoke(capsys, "schubert", "321")
        assert code == 0
        assert out.strip() == "x1^2*x2"

    def test_output_reparses(self, capsys):
        code, out, _ = invoke(capsys, "schubert", "35142")
        assert code == 0
        parse_polynomial(out.strip())

    def test_json_envelope(self, capsys):
        code, out, _ = invoke(capsys, "schubert", "321", "--json")
        assert code == 0
        data = json.loads(out)
        assert data == {
            "kind": "schubert",
            "inputs": {"perm": "321"},
            "ambient": 3,
            "polynomial": "x1^2*x2",
        }


class TestExpand:
    def test_worked_example(self, capsys):
        code, out, _ = invoke(capsys, "expand", "132", "213")
        assert code == 0
        lines = out.strip().splitlines()
        assert [line.split() for line in lines] == [["2314", "1"], ["3124", "1"]]

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "expand", "132", "213", "--json")
        data = json.loads(out)
        assert data["kind"] == "expand"
        assert data["expansion"] == [
            {"perm": "2314", "coeff": 1},
            {"perm": "3124", "coeff": 1},
        ]


class TestMonk:
    def test_in_ambient(self, capsys):
        code, out, _ = invoke(capsys, "monk", "132", "1")
        assert code == 0
        assert [line.split()[0] for line in out.strip().splitlines()] == ["231", "312"]

    def test_ambient_flag(self, capsys):
        code, out, _ = invoke(capsys, "monk", "321", "1", "--ambient", "4")
        assert code == 0
        assert out.strip() == "4213 1"


class TestPieri:
    def test_golden_row(self, capsys):
        code, out, _ = invoke(capsys, "pieri", "5412763", "3", "4", "--kind", "row")
        assert code == 0
        assert "7431652" in out

    def test_golden_column(self, capsys):
        code, out, _ = invoke(capsys, "pieri", "5412763", "4", "4", "--kind", "col")
        assert code == 0
        assert "6524713" in out

    def test_every_perm_reparses(self, capsys):
        _, out, _ = invoke(capsys, "pieri", "5412763", "3", "4", "--kind", "row")
        for line in out.strip().splitlines():
            perm, coeff = line.split()
            parse_permutation(perm)
            assert int(coeff) == 1


class TestHook:
    def test_hook(self, capsys):
        code, out, _ = invoke(capsys, "hook", "1324", "2", "2", "2", "--ambient", "6")
        assert code == 0
        assert len(out.strip().splitlines()) > 0


class TestPaths:
    def test_golden_path(self, capsys):
        code, out, _ = invoke(capsys, "paths", "5412763", "7431652", "3")
        assert code == 0
        assert out.strip().splitlines() == [
            "steps: (3,4) (3,7) (1,6) (1,5) chain: 5412763 5421763 5431762 6431752 7431652"
        ]

    def test_json_schema(self, capsys):
        code, out, _ = invoke(capsys, "paths", "5412763", "7431652", "3", "--json")
        data = json.loads(out)
        assert data["kind"] == "paths"
        (record,) = data["paths"]
        assert record["start"] == "5412763"
        assert record["k"] == 3
        assert len(record["steps"]) == 4
        assert record["intermediates"][-1] == "7431652"

    def test_empty(self, capsys):
        code, out, _ = invoke(capsys, "paths", "7431652", "5412763", "3")
        assert code == 0
        assert out.strip() == ""


class TestScalars:
    def test_lr(self, capsys):
        code, out, _ = invoke(capsys, "lr", "1", "1", "2", "2")
        assert code == 0
        assert out.strip() == "1"

    def test_lr_empty_partition(self, capsys):
        code, out, _ = invoke(capsys, "lr", "2,1", "0", "2,1", "3")
        assert code == 0
        assert out.strip() == "1"

    def test_constant(self, capsys):
        code, out, _ = invoke(capsys, "constant", "5412763", "7431652", "3", "4")
        assert code == 0
        assert out.strip() == "1"

    def test_constant_json(self, capsys):
        code, out, _ = invoke(capsys, "constant", "5412763", "7431652", "3", "2,2", "--json")
        data = json.loads(out)
        assert data["kind"] == "constant"
        assert isinstance(data["value"], int)


class TestErrors:
    def test_domain_error_exit_1(self, capsys):
        code, out, err = invoke(capsys, "schubert", "1,1,2")
        assert code == 1
        assert "error:" in err
        assert out == ""

    def test_precondition_named(self, capsys):
        code, _, err = invoke(capsys, "pieri", "1234", "2", "3", "--kind", "col")
        assert code == 1
        assert "m <= k" in err

    def test_usage_error_exit_2(self, capsys):
        code, _, _ = invoke(capsys, "pieri", "1234", "2")
        assert code == 2

    def test_unknown_command_exit_2(self, capsys):
        code, _, _ = invoke(capsys, "frobnicate")
        assert code == 2


class TestDeterminism:
    def test_byte_identical(self, capsys):
        _, out1, _ = invoke(capsys, "expand", "2143", "1324", "--json")
        _, out2, _ = invoke(capsys, "expand", "2143", "1324", "--json")
        assert out1 == out2


class TestVerify:
    def test_small_run_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-n", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1].startswith("passed")

    def test_subset(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--max-n", "3", "--only", "perm-reduced-word", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert [r["name"] for r in data["results"]] == ["perm-reduced-word"]

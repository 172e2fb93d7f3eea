import json

import pytest

from canred import ClassificationReport
from canred import cli
from canred.errors import BoundExceeded, TheoremViolation
from canred.idealization import IdealizationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    assert code == 0, err
    return json.loads(out)


def test_canred_values(capsys):
    assert run_json(capsys, "canred", "3,4,5")["can_red"] == 2
    assert run_json(capsys, "canred", "4,5,11")["can_red"] == 3
    assert run_json(capsys, "canred", "⟨2,3⟩")["can_red"] == 0


def test_canred_table_and_powers(capsys):
    code, out, _ = run(capsys, "canred", "4,5,11", "--show-powers", "--format", "table")
    assert code == 0
    assert out.splitlines()[0] == "can_red = 3"
    assert "K^4" in out and "K^5" not in out
    data = run_json(capsys, "canred", "4,5,11", "--show-powers")
    assert len(data["powers"]) == 5


def test_info(capsys):
    data = run_json(capsys, "info", "<4,5,11>")
    assert data["frobenius"] == 7 and data["pf"] == [6, 7]
    assert data["gaps"] == [1, 2, 3, 6, 7]
    code, out, _ = run(capsys, "--format", "csv", "info", "3,4,5")
    assert out.splitlines() == ["generators;frobenius;genus;multiplicity;type;pf",
                                "3,4,5;2;2;3;2;1,2"]


def test_classify_round_trip(capsys):
    data = run_json(capsys, "classify", "4,5,11")
    rep = ClassificationReport.from_dict(data)
    assert rep.can_red == 3 and not rep.almost_gorenstein and rep.nearly_gorenstein
    assert rep.to_dict() == data
    code, out, _ = run(capsys, "classify", "2,3", "--format", "table")
    assert code == 0 and "gorenstein" in out and "FAIL" not in out


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "3,4,5", "--format", "csv")
    assert out.splitlines()[1] == "3,4,5;2;3;2;2;3;2;0;1;1"


def test_hilbert(capsys):
    data = run_json(capsys, "hilbert", "3,4,5", "--n", "5")
    assert data["values"] == [0, 2, 4, 7, 10, 13]
    assert (data["e0"], data["e1"]) == (3, 2)
    code, _, _ = run(capsys, "hilbert", "4,5,11", "--n", "2")
    assert code == 1


def test_idealize(capsys):
    data = run_json(capsys, "idealize", "2,3", "--module", "2,3")
    rep = IdealizationReport.from_dict(data)
    assert rep.type_via_socle == rep.type_via_mu == 3
    data = run_json(capsys, "idealize", "2,3", "--module", "0")
    assert data["gorenstein_idealization"] and data["type_via_socle"] == 1
    data = run_json(capsys, "idealize", "3,4", "--module", "0,5")
    assert data["trace_iso"] is False and data["witness_I"] is None
    code, _, err = run(capsys, "idealize", "3,4,5", "--module", "0")
    assert code == 1 and "error" in err


def test_overrings(capsys):
    data = run_json(capsys, "overrings", "3,5")
    assert len(data["over_semigroups"]) == 5 and data["bijection"] is True
    data = run_json(capsys, "overrings", "3,4,5")
    assert data["bijection"] is None and len(data["over_semigroups"]) == 3


def test_survey(capsys, tmp_path):
    path = tmp_path / "rows.csv"
    data = run_json(capsys, "survey", "--genus", "6", "--csv", str(path))
    assert data["total"] == 1 + 1 + 2 + 4 + 7 + 12 + 23
    assert data["violations"] == []
    assert len(path.read_text().splitlines()) == data["total"] + 1
    code, out, _ = run(capsys, "survey", "--genus", "3", "--format", "csv")
    assert code == 0 and out.startswith("generators;genus")
    code, _, _ = run(capsys, "survey", "--genus", "3", "--checks", "bogus")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["canred", "4,6"], ["canred", "0"], ["canred", "a,b"], ["canred", ""],
    ["survey", "--genus", "31"], ["nosuch"], [],
])
def test_input_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("error:")


def test_violation_exit_2(capsys, monkeypatch):
    def boom(H):
        raise TheoremViolation("gorenstein", H.generators, 1, 0)
    monkeypatch.setattr(cli, "classify", boom)
    code, _, err = run(capsys, "classify", "3,4,5")
    assert code == 2 and "gorenstein" in err


def test_survey_violation_exit_2(capsys, monkeypatch):
    real = cli.survey

    def tampered(*a, **k):
        rep = real(*a, **k)
        rep.violations.append(TheoremViolation("hilbert", (3, 4, 5), 1, 2))
        return rep
    monkeypatch.setattr(cli, "survey", tampered)
    code, out, _ = run(capsys, "--format", "json", "survey", "--genus", "2")
    assert code == 2
    assert json.loads(out)["violations"]


def test_bound_exit_3(capsys, monkeypatch):
    def boom(H):
        raise BoundExceeded("loop ran past the multiplicity")
    monkeypatch.setattr(cli, "classify", boom)
    code, _, err = run(capsys, "canred", "3,4,5")
    assert code == 3 and "bound" in err

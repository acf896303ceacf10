import json

import pytest

from qinv.cli import main
from qinv.invariants import HypothesisError, SurgeryPresentation
from qinv.verify import (
    check_lawrence,
    check_ohtsuki,
    default_depth,
    verify_presentation,
)


def test_default_depth():
    assert default_depth(SurgeryPresentation((2,)), 11) == 9
    assert default_depth(SurgeryPresentation((2, 3)), 11) == 4
    assert default_depth(SurgeryPresentation(()), 7) == 5


def test_lawrence_lens_and_sphere():
    assert check_lawrence(SurgeryPresentation((1,)), 7, 5)
    assert check_lawrence(SurgeryPresentation((-3,)), 7, 5)
    assert check_lawrence(SurgeryPresentation((5,)), 11, 9)


def test_lawrence_monotone_in_depth():
    pres = SurgeryPresentation((-2, -3))
    for depth in range(5):
        assert check_lawrence(pres, 13, depth)


def test_lawrence_with_embedded_colors():
    assert check_lawrence(SurgeryPresentation((-3,), (3,)), 7, 4)
    assert check_lawrence(SurgeryPresentation((-2, -5), (3, 5)), 11, 4)


def test_ohtsuki_congruence():
    assert check_ohtsuki(SurgeryPresentation((-2,)), 11)
    assert check_ohtsuki(SurgeryPresentation((-2, -3), (3,)), 13)


def test_hypothesis_violation_raises():
    with pytest.raises(HypothesisError):
        check_lawrence(SurgeryPresentation((7,)), 7, 2)
    with pytest.raises(HypothesisError):
        check_ohtsuki(SurgeryPresentation((14,)), 7)


def test_report_contents_and_determinism():
    pres = SurgeryPresentation((-2, -3))
    r1 = verify_presentation(pres, 11)
    r2 = verify_presentation(pres, 11)
    assert r1.lawrence_pass and r1.ohtsuki_pass
    assert not r1.skipped
    assert r1.lawrence_depth_checked == 4
    d1, d2 = r1.to_json(), r2.to_json()
    d1.pop("timings_ms"), d2.pop("timings_ms")
    assert d1 == d2
    assert d1["schema"] == 1


def test_report_skip_on_divisible_h1():
    r = verify_presentation(SurgeryPresentation((5,)), 5)
    assert r.skipped
    assert not r.lawrence_pass
    assert "divides" in r.skip_reason


# --- command line ------------------------------------------------------------

def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_cli_verify_sphere(tmp_path, capsys):
    mfile = _write(tmp_path, "m.json", {"surgery_unknot_framings": [1]})
    out = str(tmp_path / "report.json")
    assert main(["verify", "--manifold", mfile, "--primes", "5,7,11", "--out", out]) == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert len(report) == 3
    assert report[0]["lambda"][0] == "1"
    assert all(r["lawrence_pass"] and r["ohtsuki_pass"] for r in report)


def test_cli_verify_two_component_with_csv(tmp_path):
    mfile = _write(tmp_path, "m.json", {"surgery_unknot_framings": [-2, -3]})
    csv_path = str(tmp_path / "table.csv")
    code = main(["verify", "--manifold", mfile, "--primes", "7,11,13",
                 "--csv", csv_path])
    assert code == 0
    lines = (tmp_path / "table.csv").read_text().strip().splitlines()
    assert lines[0] == "K,n,a_n,lambda_n_mod_K"
    assert len(lines) > 3


def test_cli_verify_skipped_only(tmp_path):
    mfile = _write(tmp_path, "m.json", {"surgery_unknot_framings": [5]})
    assert main(["verify", "--manifold", mfile, "--primes", "5"]) == 2


def test_cli_lens(capsys):
    assert main(["lens", "--p", "2", "--K", "5"]) == 0
    out = capsys.readouterr().out
    assert "exact agreement: pass" in out
    assert main(["lens", "--p", "3", "--K", "7", "--depth", "5"]) == 0
    assert main(["lens", "--p", "7", "--K", "7"]) == 2


def test_cli_gauss(capsys):
    assert main(["gauss", "--K", "11", "--p", "3", "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert "closed form check: pass" in out
    assert main(["gauss", "--K", "7", "--p", "14"]) == 2


def test_cli_ohtsuki_manifold(tmp_path, capsys):
    mfile = _write(tmp_path, "m.json", {"surgery_unknot_framings": [-2, -3]})
    assert main(["ohtsuki", "--manifold", mfile, "--depth", "4"]) == 0
    out = capsys.readouterr().out
    assert "h1 = 6" in out
    assert "lambda_0" in out


def test_cli_ohtsuki_dtable(tmp_path, capsys):
    table = _write(tmp_path, "d.json", {
        "h1M": 1, "self_linking": -2,
        "entries": [{"m": 0, "n": 0, "d": "1"}],
    })
    assert main(["ohtsuki", "--manifold", table, "--depth", "4"]) == 0
    assert "h1 = 2" in capsys.readouterr().out


def test_cli_symmetry():
    assert main(["symmetry", "--p", "2", "--K", "7"]) == 0


def test_cli_errors(tmp_path):
    assert main(["verify", "--manifold", str(tmp_path / "absent.json"),
                 "--primes", "5"]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--manifold", str(bad), "--primes", "5"]) == 1
    assert main(["lens", "--p", "2", "--K", "9"]) == 1

import json

import pytest

from basis_forge.config import settings
from basis_forge.main import main


@pytest.fixture
def unit_file(write_json):
    return write_json("unit.json", {"default": 1})


def _construct(target, out, *extra):
    return main(["construct", str(target), "-K", "3", "-o", str(out), *extra])


def test_construct_writes_basis(unit_file, tmp_path, capsys):
    out = tmp_path / "basis.json"
    assert _construct(unit_file, out) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("k=1 i_k=1 u=0 ")
    assert "admissible=2" in lines[0]

    basis = json.loads(out.read_text(encoding="utf-8"))
    assert basis["order"] == 2
    assert basis["K"] == 3
    assert basis["c"] == 8
    assert len(basis["elements"]) == 6
    assert [step["k"] for step in basis["steps"]] == [1, 2, 3]
    assert basis["policy"]["kind"] == "min-abs"


def test_construct_is_deterministic(unit_file, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert _construct(unit_file, first) == 0
    assert _construct(unit_file, second) == 0
    assert first.read_bytes() == second.read_bytes()


def test_construct_policy_changes_basis(unit_file, tmp_path):
    plain, flipped = tmp_path / "plain.json", tmp_path / "flipped.json"
    assert _construct(unit_file, plain) == 0
    assert _construct(unit_file, flipped, "--policy", "stream:1") == 0
    plain_elements = json.loads(plain.read_text())["elements"]
    flipped_elements = json.loads(flipped.read_text())["elements"]
    assert plain_elements != flipped_elements
    assert {-2, 2} <= set(flipped_elements)


def test_construct_order_three(unit_file, tmp_path):
    out = tmp_path / "b3.json"
    assert main(["construct", str(unit_file), "-K", "2", "-H", "3", "-o", str(out)]) == 0
    basis = json.loads(out.read_text())
    assert basis["order"] == 3
    assert len(basis["elements"]) == 6


def test_construct_invalid_target(write_json, tmp_path):
    bad = write_json("bad.json", {"default": "many"})
    assert _construct(bad, tmp_path / "out.json") == 2
    assert _construct(tmp_path / "missing.json", tmp_path / "out.json") == 2
    assert not (tmp_path / "out.json").exists()


def test_construct_rejects_order_one(unit_file, tmp_path):
    assert main(["construct", str(unit_file), "-K", "2", "-H", "1", "-o", str(tmp_path / "x.json")]) == 2


def test_construct_window_exhausted(unit_file, tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "WINDOW_CONSTANT", 1)
    assert _construct(unit_file, tmp_path / "out.json") == 3
    assert not (tmp_path / "out.json").exists()


def test_bad_arguments_exit_two(unit_file, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["construct", str(unit_file), "-K", "0", "-o", str(tmp_path / "x.json")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["construct", str(unit_file), "-K", "2", "--policy", "greedy", "-o", str(tmp_path / "x.json")])
    assert exc.value.code == 2


def test_no_command_prints_help(capsys):
    assert main([]) == 1
    assert "basis-forge" in capsys.readouterr().out


def test_verify_round_trip(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    capsys.readouterr()

    report_path = tmp_path / "report.json"
    assert main(["verify", str(basis), str(unit_file), "-w", "-10:10", "--report", str(report_path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["window_status"]["fail"] == 0
    assert sum(report["window_status"].values()) == 21
    assert all(c["passed"] for c in report["conditions"])
    assert json.loads(report_path.read_text()) == report


def test_verify_detects_tampering(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    data = json.loads(basis.read_text())
    data["elements"][-1] += 1
    basis.write_text(json.dumps(data))
    capsys.readouterr()

    assert main(["verify", str(basis), str(unit_file), "-w", "5"]) == 4
    report = json.loads(capsys.readouterr().out)
    failed = {c["name"] for c in report["conditions"] if not c["passed"]}
    assert "replay" in failed


def test_verify_rejects_relabelled_policy(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis, "--policy", "stream:7") == 0
    data = json.loads(basis.read_text())
    data["policy"] = {"kind": "min-abs", "bits": "0", "seed": 0}
    basis.write_text(json.dumps(data))
    capsys.readouterr()

    assert main(["verify", str(basis), str(unit_file), "-w", "5"]) == 4
    report = json.loads(capsys.readouterr().out)
    assert [c["name"] for c in report["conditions"] if not c["passed"]] == ["replay"]


def test_verify_rejects_forged_constant(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    data = json.loads(basis.read_text())
    data["c"] = 10 ** 9
    basis.write_text(json.dumps(data))
    capsys.readouterr()

    assert main(["verify", str(basis), str(unit_file), "-w", "5"]) == 4
    report = json.loads(capsys.readouterr().out)
    failed = {c["name"] for c in report["conditions"] if not c["passed"]}
    assert {"constants", "replay"} <= failed


def test_verify_rejects_bad_basis_file(unit_file, write_json):
    broken = write_json("broken.json", {"order": 1, "c": 8, "delta": 0, "K": 0, "elements": []})
    assert main(["verify", str(broken), str(unit_file)]) == 2


def test_growth_csv(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert main(["construct", str(unit_file), "-K", "4", "-o", str(basis)]) == 0
    capsys.readouterr()

    csv_path = tmp_path / "growth.csv"
    assert main(["growth", str(basis), "--csv", str(csv_path), "--samples", "10"]) == 0
    rows = csv_path.read_text().splitlines()
    assert rows[0] == "x,count,bound_cubed_lhs,bound_rhs,pass"
    assert rows[1].startswith("64,")
    assert rows[-1].startswith("512,")
    assert all(row.endswith(",true") for row in rows[1:])


def test_growth_reports_failure(write_json, capsys):
    sparse = write_json("sparse.json", {"order": 2, "c": 8, "delta": 0, "K": 3, "elements": [1000]})
    assert main(["growth", str(sparse), "--samples", "2"]) == 4
    out = capsys.readouterr().out.splitlines()
    assert out == ["x,count,bound_cubed_lhs,bound_rhs,pass", "64,0,0,64,false", "216,0,0,216,false"]


def test_growth_rejects_forged_constant(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    data = json.loads(basis.read_text())
    data["c"] = 10 ** 9
    basis.write_text(json.dumps(data))
    capsys.readouterr()

    assert main(["growth", str(basis)]) == 4
    assert main(["growth", str(basis), "--target", str(unit_file)]) == 4
    assert capsys.readouterr().out == ""


def test_growth_checks_delta_against_target(unit_file, tmp_path, capsys):
    """delta=2 with c=9 is self-consistent, but not for f ≡ 1"""
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    data = json.loads(basis.read_text())
    data["delta"], data["c"] = 2, 9
    basis.write_text(json.dumps(data))

    assert main(["growth", str(basis), "--samples", "5"]) == 0
    assert main(["growth", str(basis), "--samples", "5", "--target", str(unit_file)]) == 4


def test_growth_with_target(unit_file, tmp_path, capsys):
    basis = tmp_path / "basis.json"
    assert _construct(unit_file, basis) == 0
    capsys.readouterr()
    assert main(["growth", str(basis), "--target", str(unit_file), "--samples", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "x,count,bound_cubed_lhs,bound_rhs,pass"


def test_enumerate_u_spiral(unit_file, capsys):
    assert main(["enumerate-u", str(unit_file), "-K", "7"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,u,m,bound,margin"
    assert [int(line.split(",")[1]) for line in lines[1:]] == [0, -1, 1, -2, 2, -3, 3]


def test_enumerate_u_extremal(write_json, capsys):
    extremal = write_json("extremal.json", {"extremal": 1})
    assert main(["enumerate-u", str(extremal), "-K", "6"]) == 0
    rows = [line.split(",") for line in capsys.readouterr().out.splitlines()[1:]]
    assert [int(row[1]) for row in rows] == [1, -1, 2, -2, 3, -3]
    assert {row[2] for row in rows} == {"-"}
    assert {row[4] for row in rows} == {"0"}


def test_oracle_dense_window(write_json, capsys):
    small = write_json("set.json", [0, 1, 3])
    assert main(["oracle", str(small), "--window", "0:6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["n,r", "0,1", "1,1", "2,1", "3,1", "4,1", "5,0", "6,1"]


def test_oracle_restricted(write_json, capsys):
    small = write_json("set.json", {"elements": [0, 1, 3]})
    assert main(["oracle", str(small), "--restricted", "-w", "0:6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["n,r", "0,0", "1,1", "2,0", "3,1", "4,1", "5,0", "6,0"]


def test_oracle_rejects_non_integers(write_json):
    assert main(["oracle", str(write_json("set.json", [1, "2"]))]) == 2

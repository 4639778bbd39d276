import json

import pytest

from k3census import cli, kummer


def run_cli(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "lemma-9.9"])
    assert exc.value.code == 2


@pytest.mark.parametrize("target", sorted(cli.VERIFIERS))
def test_verify_subcommands_pass(capsys, target):
    code, out, _ = run_cli(capsys, "verify", target)
    assert code == 0
    assert "status: pass" in out


def test_verify_lemma_6_4_prints_polynomial(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma-6.4")
    assert code == 0
    assert "t^2 - 4*t - 1" in out


def test_census_subcommands(capsys):
    for target in ("p5", "p7", "q8", "involution"):
        code, out, _ = run_cli(capsys, "census", target)
        assert code == 0, target


def test_defect_table(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "defect-table")
    assert code == 0
    payload = json.loads(out)
    assert payload["point_defects"]["I_5_1"] == "-4"
    assert payload["group_totals"]["p=5 type A4~"] == "-20"


def test_json_output_round_trips(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, "census", "p5", "--format", "json",
                         "--out", str(out_file))
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["survivors"] == ["c", "i", "iii"]
    assert payload["timings"] is None
    # byte determinism
    out_file2 = tmp_path / "report2.json"
    run_cli(capsys, "census", "p5", "--format", "json", "--out", str(out_file2))
    assert out_file.read_text() == out_file2.read_text()


def test_corrupted_pairing_table_fails(capsys, monkeypatch):
    real = kummer._pair_gens

    def corrupted(a, b):
        if a[0] == "P" and b[0] == "P" and a != b and a[1] != b[1] and a[2] == b[2]:
            return 1  # flip the cross-fibration value
        return real(a, b)

    monkeypatch.setattr(kummer, "_pair_gens", corrupted)
    code, out, err = run_cli(capsys, "verify", "lemma-4.2")
    assert code == 1
    assert "FAIL" in err and "Gram" in err


def test_flags_accepted_before_and_after_subcommand(capsys):
    c1, o1, _ = run_cli(capsys, "--format", "json", "verify", "lemma-6.4")
    c2, o2, _ = run_cli(capsys, "verify", "lemma-6.4", "--format", "json")
    assert c1 == c2 == 0
    assert json.loads(o1) == json.loads(o2)

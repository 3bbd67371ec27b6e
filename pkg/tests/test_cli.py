"""CLI behavior: exit codes, formats, determinism."""

import json
import subprocess
import sys

from colored_partitions.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_both_matches(capsys):
    code, out, err = run_cli(["count", "-p", "1^1,2^1", "--sense", "eq",
                              "-n", "4", "-c", "2", "--mode", "both"], capsys)
    assert code == 0
    assert "114" in out and "ok" in out
    assert "elapsed" in err and "elapsed" not in out


def test_count_guard_region(capsys):
    code, out, _ = run_cli(["count", "-p", "1^1,1^1", "-n", "1", "-c", "2",
                            "--mode", "formula"], capsys)
    assert code == 0
    assert "formula=2" in out


def test_count_brute_json_schema(capsys):
    code, out, _ = run_cli(["count", "-p", "1^1,2^2,1^1", "-n", "5", "-c", "2",
                            "--mode", "brute", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"pattern", "sense", "c", "mode", "values", "ok"}
    assert payload["values"] == [{"n": 5, "brute": 1384}]
    assert payload["ok"] is True


def test_parse_error_exit_2(capsys):
    code, _, err = run_cli(["count", "-p", "2^1,1^1", "-n", "3", "-c", "2"], capsys)
    assert code == 2
    assert "canonical" in err


def test_budget_exit_3(capsys):
    code, _, err = run_cli(["count", "-p", "1^1,2^1,3^1", "-n", "12", "-c", "3"], capsys)
    assert code == 3
    assert "budget" in err


def test_no_formula_exit_2(capsys):
    code, _, err = run_cli(["count", "-p", "1^1,2^2,1^1", "-n", "4", "-c", "2",
                            "--mode", "formula"], capsys)
    assert code == 2
    assert "no closed form" in err


def test_sequence(capsys):
    code, out, _ = run_cli(["sequence", "-p", "1^1,2^1", "-n", "6", "-c", "2",
                            "--mode", "both"], capsys)
    assert code == 0
    assert out.count("ok") == 6


def test_tables_pass(capsys):
    for which in ("1", "2", "3"):
        code, out, _ = run_cli(["tables", which], capsys)
        assert code == 0
        assert "all cells match" in out
    # table 2 must surface the label discrepancies without failing
    code, out, _ = run_cli(["tables", "2"], capsys)
    assert code == 0
    assert "note" in out


def test_verify_subcommand(capsys):
    code, out, _ = run_cli(["verify", "--n-max", "4", "--n-max-c3", "3"], capsys)
    assert code == 0
    assert "all match brute force" in out
    code, out, _ = run_cli(["verify", "--n-max", "2", "--n-max-c3", "1", "--all",
                            "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(row["brute"] == row["formula"] for row in payload["checks"])


def test_export_bfile_bytes(capsys):
    code, out, _ = run_cli(["export", "--id", "12:aa", "--n-max", "8",
                            "-c", "2", "--format", "bfile"], capsys)
    assert code == 0
    assert out == "1 2\n2 7\n3 27\n4 114\n5 523\n6 2589\n7 13744\n8 77821\n"
    code, out, _ = run_cli(["export", "--id", "set:11:all", "--n-max", "3",
                            "-c", "2", "--format", "bfile"], capsys)
    assert code == 0
    assert out == "1 2\n2 4\n3 8\n"
    code, out, _ = run_cli(["export", "--id", "123:abd", "--n-max", "6",
                            "-c", "2", "--format", "bfile"], capsys)
    assert code == 0
    assert out == "1 2\n2 8\n3 40\n4 240\n5 1664\n6 12992\n"


def test_export_repeat_and_csv(capsys, tmp_path):
    path = tmp_path / "seq.csv"
    code, out, _ = run_cli(["export", "--id", "repeat:2", "--n-max", "3",
                            "-c", "2", "--format", "csv", "--output", str(path)], capsys)
    assert code == 0
    assert path.read_text() == "n,value\n1,2\n2,8\n3,39\n"


def test_export_pattern_json(capsys):
    code, out, _ = run_cli(["export", "-p", "1^1,2^2,1^1", "--n-max", "5",
                            "-c", "2", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert [v["value"] for v in payload["values"]] == [2, 8, 39, 220, 1384]


def test_export_needs_exactly_one_source(capsys):
    code, _, _ = run_cli(["export", "--n-max", "3"], capsys)
    assert code == 2
    code, _, _ = run_cli(["export", "--id", "total", "-p", "1^1", "--n-max", "3"], capsys)
    assert code == 2


def test_egf(capsys):
    code, out, _ = run_cli(["egf", "--n-max", "10"], capsys)
    assert code == 0
    assert out.count("matches formula sequence") == 3


def test_bijection(capsys):
    for which in ("marked", "rc"):
        code, out, _ = run_cli(["bijection", "--which", which, "-n", "4"], capsys)
        assert code == 0
        assert "passed" in out


def test_wilf_json(capsys):
    code, out, _ = run_cli(["wilf", "--n-max", "4", "-c", "3", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["class_count"] == len(payload["class_sizes"])
    assert len(payload["patterns"]) == 25
    entry = payload["patterns"][0]
    assert set(entry) == {"pattern", "counts", "class"}


def test_stdout_identical_across_workers(capsys):
    outs = []
    for workers in ("1", "2", "8"):
        code, out, _ = run_cli(["count", "-p", "1^1,1^1", "-n", "6", "-c", "2",
                                "--workers", workers, "--json"], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "colored_partitions.cli",
                           "count", "-p", "1^1,1^1", "-n", "3", "-c", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "brute=30" in proc.stdout

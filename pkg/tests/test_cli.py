"""CLI contract: report shape, exit codes, determinism."""

import re

import pytest

from powmon.cli import main, parse_monoid_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def body_of(text):
    # report body: everything except header lines with timestamps
    return "\n".join(l for l in text.splitlines() if not l.startswith("# generated:"))


def test_parse_monoid_spec():
    assert parse_monoid_spec("z6").n == 6
    assert parse_monoid_spec("d4").n == 8
    assert parse_monoid_spec("klein").n == 4
    assert parse_monoid_spec("q8").n == 8
    assert parse_monoid_spec("idem2").n == 2
    assert parse_monoid_spec("cmon2.2").n == 4
    assert parse_monoid_spec("z2xz3").n == 6
    assert parse_monoid_spec("z2xz2xz2").n == 8
    with pytest.raises(ValueError):
        parse_monoid_spec("wat")


def test_construct_cyclic(capsys):
    code, out, _ = run_cli(capsys, "construct", "cyclic", "2", "2")
    assert code == 0
    assert "orders: 1 4 2 3" in out
    assert "group: false" in out


def test_construct_named_klein(capsys):
    code, out, _ = run_cli(capsys, "construct", "named", "klein")
    assert code == 0
    assert "group: true" in out and "commutative: true" in out


def test_construct_table_file(tmp_path, capsys):
    p = tmp_path / "z3.tbl"
    p.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    code, out, _ = run_cli(capsys, "construct", "table", str(p))
    assert code == 0 and "group: true" in out


def test_construct_malformed_table_names_line(tmp_path, capsys):
    p = tmp_path / "bad.tbl"
    p.write_text("3\n0 1 2\n1 zap 0\n2 0 1\n")
    code, out, err = run_cli(capsys, "construct", "table", str(p))
    assert code == 2
    assert "line 3" in err


def test_construct_nonassociative_table_is_input_error(tmp_path, capsys):
    p = tmp_path / "nonassoc.tbl"
    p.write_text("3\n0 1 2\n1 2 0\n2 1 0\n")
    code, out, err = run_cli(capsys, "construct", "table", str(p))
    assert code == 2 and "not associative" in err


def test_verify_lemma21_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma21", "--max-order", "3")
    assert code == 0
    assert "summary: suite=lemma21" in out
    assert "failures=0" in out


def test_verify_report_body_deterministic(capsys):
    _, first, _ = run_cli(capsys, "verify", "lemma31", "--max-order", "3")
    _, second, _ = run_cli(capsys, "verify", "lemma31", "--max-order", "3")
    assert body_of(first) == body_of(second)
    assert first.count("# generated:") == 1


def test_verify_pair_expected_violation(capsys):
    code, out, _ = run_cli(capsys, "verify", "section4", "--pair", "z2:idem2",
                           "--expect-violation")
    assert code == 0
    assert "power_compatible=False" in out
    assert "order_preserving=True" in out
    assert re.search(r"base_iso\tcyclic 2 vs idem2\tpass\tno", out)
    assert re.search(r"power_iso\tcyclic 2 vs idem2\tpass\tiso", out)


def test_verify_pair_without_violation_fails_expectation(capsys):
    code, out, _ = run_cli(capsys, "verify", "section4", "--pair", "z2:z2",
                           "--expect-violation")
    assert code == 1
    assert "expect-violation: FAILED" in out


def test_verify_lemma31_single_case(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma31", "--monoid", "z2", "--n", "3")
    assert code == 0
    assert "count=3 bound=2" in out


def test_verify_bad_pair_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "section4", "--pair", "z2:wat")
    assert code == 2 and "error:" in err


def test_experiment_groups_small(capsys):
    code, out, _ = run_cli(capsys, "experiment", "groups", "--max-order", "4")
    assert code == 0
    assert "power-iso-iff-base-iso: holds" in out
    assert out.splitlines()[3].startswith("pair\t")


def test_experiment_monoids_counterexample(capsys):
    code, out, _ = run_cli(capsys, "experiment", "monoids", "--max-order", "2",
                           "--expect-violation")
    assert code == 0
    assert "exceptions: 1" in out
    assert "expect-violation: ok" in out


def test_experiment_jobs_flag(capsys):
    code, out, _ = run_cli(capsys, "experiment", "monoids", "--max-order", "2",
                           "--jobs", "2")
    assert code == 0 and "exceptions: 1" in out


def test_experiment_budget_path(capsys):
    code, out, _ = run_cli(capsys, "experiment", "groups", "--max-order", "4",
                           "--budget", "10")
    assert code == 0  # budget exhaustion is reported, not an assertion failure
    assert "budget-exceeded" in out


def test_verify_all_parallel_matches_serial(capsys):
    _, serial, _ = run_cli(capsys, "verify", "all", "--max-order", "2",
                           "--group-max", "3")
    _, parallel, _ = run_cli(capsys, "verify", "all", "--max-order", "2",
                             "--group-max", "3", "--jobs", "3")
    records = lambda text: [l for l in text.splitlines() if not l.startswith("#")]
    assert records(serial) == records(parallel)


def test_experiment_body_deterministic_modulo_elapsed(capsys):
    def strip(text):
        lines = []
        for l in body_of(text).splitlines():
            if l and not l.startswith("#") and "\t" in l:
                lines.append("\t".join(l.split("\t")[:-1]))  # drop elapsed column
            else:
                lines.append(l)
        return "\n".join(lines)
    _, first, _ = run_cli(capsys, "experiment", "groups", "--max-order", "4")
    _, second, _ = run_cli(capsys, "experiment", "groups", "--max-order", "4")
    assert strip(first) == strip(second)


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.tsv"
    code, out, _ = run_cli(capsys, "verify", "lemma21", "--max-order", "2",
                           "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert "summary: suite=lemma21" in text


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "construct", "cyclic", "two", "2")
    assert code == 2

"""End-to-end tests for the command-line interface.

Each test invokes ``hyperaccel.cli.main`` in process and inspects the
exit status together with captured stdout/stderr.  Covered: all eight
commands, the three exit codes (0 success, 1 computation failure,
2 usage error), byte-identical output across repeated and parallel
invocations, tab-separated output, and the HYPERACCEL_MAX_TERMS
override.
"""

import re

import pytest

from hyperaccel.cli import main

Q1_PARAMS = "1/3,1/3,1,1/3,1/3,2/3"
Q1_CHU = "z=1/4 upper=[2/3] lower=[11/6] num=[17,42,27] den=[1,4,3]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# verify-symbolic
# ---------------------------------------------------------------------------


def test_verify_symbolic_all_families(capsys):
    code, out, err = run(capsys, "verify-symbolic")
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert len(lines) == 3
    for name, line in zip(("quarter", "neg-quarter", "neg-27"), lines):
        assert line.startswith(name)
        assert line.endswith("residual = 0")


def test_verify_symbolic_single_family(capsys):
    code, out, _ = run(capsys, "verify-symbolic", "--family", "neg-27")
    assert code == 0
    assert out.splitlines() == ["neg-27       residual = 0"]


def test_verify_symbolic_rejects_family_without_stored_recurrence(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify-symbolic", "--family", "four-27"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# derive / rate
# ---------------------------------------------------------------------------


def test_derive_prints_reduced_recurrence(capsys):
    code, out, _ = run(capsys, "derive", "--family", "quarter",
                       "--params", Q1_PARAMS)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family quarter"
    assert lines[1] == "r 1"
    assert lines[2] == "p1 [1,0,-9]"
    assert lines[3] == "p2 [0,-6,36]"
    assert lines[4].startswith("cert (") and ")/(" in lines[4]
    assert lines[5] == "rate 1/4"


def test_derive_with_index_reports_stream_head(capsys):
    code, out, _ = run(capsys, "derive", "--family", "quarter",
                       "--params", Q1_PARAMS, "--n", "1")
    assert code == 0
    assert out.splitlines()[-1] == "stream valid from n = 1, first term 17/10"


def test_derive_divergent_tuple_fails_with_diagnostic(capsys):
    code, _, err = run(capsys, "derive", "--family", "quarter",
                       "--params", "9,9,9,9,9,9", "--n", "1")
    assert code == 1
    assert err.startswith("hyperaccel: ")


def test_derive_wrong_arity_is_usage_error(capsys):
    code, _, err = run(capsys, "derive", "--family", "quarter",
                       "--params", "1,2,3")
    assert code == 2
    assert "expects 6 parameters" in err


def test_rate_command(capsys):
    code, out, _ = run(capsys, "rate", "--family", "quarter",
                       "--params", Q1_PARAMS)
    assert code == 0
    assert out == "rate = 1/4\n"


def test_rate_r2_family(capsys):
    code, out, _ = run(capsys, "rate", "--family", "neg-quarter",
                       "--params", "2/3,1,-1/3", "--r", "2")
    assert code == 0
    assert out == "rate = -1/4\n"


# ---------------------------------------------------------------------------
# accelerate
# ---------------------------------------------------------------------------


def test_accelerate_prints_exact_stream_terms(capsys):
    code, out, _ = run(capsys, "accelerate", "--family", "quarter",
                       "--params", Q1_PARAMS, "--n", "1", "--terms", "4")
    assert code == 0
    assert out.splitlines() == [
        "t[0] = 17/10",
        "t[1] = 43/440",
        "t[2] = 19/1428",
        "t[3] = 193/86020",
    ]


def test_accelerate_chu_output_parses_back(capsys):
    code, out, _ = run(capsys, "accelerate", "--family", "quarter",
                       "--params", Q1_PARAMS, "--n", "1", "--chu")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == Q1_CHU
    assert lines[1] == "scale = 1/10"


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def test_eval_by_entry_id(capsys):
    code, out, _ = run(capsys, "eval", "--id", "Q1", "--digits", "30")
    assert code == 0
    assert out == "18.13799364234217850594078257642128 ± 1e-30\n"


def test_eval_explicit_series_matches_entry(capsys):
    code, out, _ = run(capsys, "eval", "--series", Q1_CHU, "--digits", "20")
    assert code == 0
    assert out.startswith("18.137993642342178505")


def test_eval_env_cap_too_small_fails(capsys, monkeypatch):
    monkeypatch.setenv("HYPERACCEL_MAX_TERMS", "10")
    code, _, err = run(capsys, "eval", "--id", "FR-2", "--digits", "50")
    assert code == 1
    assert "unreachable" in err


def test_eval_env_cap_generous_succeeds(capsys, monkeypatch):
    monkeypatch.setenv("HYPERACCEL_MAX_TERMS", "900")
    code, out, _ = run(capsys, "eval", "--id", "FR-2", "--digits", "50")
    assert code == 0
    assert out.startswith("35.34291735288517393270473806189440744721815574296993")


def test_bad_env_cap_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("HYPERACCEL_MAX_TERMS", "many")
    code, _, err = run(capsys, "eval", "--id", "Q1", "--digits", "10")
    assert code == 2
    assert "HYPERACCEL_MAX_TERMS" in err


# ---------------------------------------------------------------------------
# check / check-all
# ---------------------------------------------------------------------------

CHECK_ROW = re.compile(
    r"^(\S+)\s+(PASS|FAIL) lhs=-?\d+\.\d+ ± (?:1e-\d+|0) "
    r"rhs=-?\d+\.\d+ ± (?:1e-\d+|0) terms=\d+$")


def test_check_single_entry_pass(capsys):
    code, out, _ = run(capsys, "check", "--id", "RT1", "--digits", "50")
    assert code == 0
    match = CHECK_ROW.match(out.rstrip("\n"))
    assert match is not None
    assert match.group(1) == "RT1"
    assert match.group(2) == "PASS"


def test_check_tsv_fields(capsys):
    code, out, _ = run(capsys, "check", "--id", "RT1", "--digits", "20",
                       "--format", "tsv")
    assert code == 0
    fields = out.rstrip("\n").split("\t")
    assert fields[0] == "RT1"
    assert fields[1] == "PASS"
    assert fields[2].startswith("lhs=2.2672492052927723132")
    assert fields[4].startswith("terms=")


def test_check_entry_without_display_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--id", "Q-R1", "--digits", "20")
    assert code == 2
    assert "no display series" in err


def test_check_unknown_id_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--id", "NOPE", "--digits", "20")
    assert code == 2
    assert "unknown entry id" in err


def test_check_all_covers_every_display_entry(capsys):
    code, out, _ = run(capsys, "check-all", "--digits", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "checked=95 passed=95 failed=0"
    assert len(lines) == 96
    assert all(CHECK_ROW.match(line) for line in lines[:-1])


def test_check_all_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "check-all", "--digits", "12")
    _, second, _ = run(capsys, "check-all", "--digits", "12")
    assert first == second


def test_check_all_parallel_matches_sequential(capsys):
    _, sequential, _ = run(capsys, "check-all", "--digits", "12")
    code, parallel, _ = run(capsys, "check-all", "--digits", "12",
                            "--jobs", "4")
    assert code == 0
    assert parallel == sequential


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def test_catalog_list_has_one_row_per_entry(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 123
    assert lines[0].startswith("RAMANUJAN-1")


def test_catalog_list_marks_tentative_entries(capsys):
    _, out, _ = run(capsys, "catalog", "list")
    marked = {line.split()[0] for line in out.splitlines()
              if " tentative " in line}
    assert marked == {"Q16", "N27-5", "N27-7", "S2764-1", "FR-2"}


def test_catalog_export_roundtrips(capsys, tmp_path):
    target = tmp_path / "catalog.tsv"
    code, out, _ = run(capsys, "catalog", "export", "--out", str(target))
    assert code == 0
    assert out == f"wrote 123 entries to {target}\n"
    lines = target.read_text().splitlines()
    assert len(lines) == 123
    assert all(len(line.split("\t")) == 3 for line in lines)


# ---------------------------------------------------------------------------
# argparse-level usage errors
# ---------------------------------------------------------------------------


def test_missing_required_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--id", "RT1"])
    assert exc.value.code == 2


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_malformed_rational_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rate", "--family", "quarter", "--params", "1/3,zebra"])
    assert exc.value.code == 2

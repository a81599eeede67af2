import json
import xml.etree.ElementTree as ET

from gainslift import (auc_pairs, cum_gains, decile_lift, example24_path,
                       lift, load_scored, parse_curves, rank_records,
                       render_decimal, roc_points)
from gainslift.cli import cli_main

EXAMPLE = str(example24_path())


def run(capsys, *argv):
    code = cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSingleValues:
    def test_auc(self, capsys):
        code, out, _ = run(capsys, "auc", "--input", EXAMPLE)
        assert code == 0
        assert out.strip() == "0.93750"

    def test_auc_wilcoxon_agrees(self, capsys):
        code, out, _ = run(capsys, "auc", "--input", EXAMPLE,
                           "--method", "wilcoxon")
        assert (code, out.strip()) == (0, "0.93750")

    def test_auc_exact(self, capsys):
        code, out, _ = run(capsys, "auc", "--input", EXAMPLE, "--exact")
        assert out.strip() == "15/16"

    def test_lift_at_12(self, capsys):
        code, out, _ = run(capsys, "lift", "--input", EXAMPLE, "--n", "12")
        assert (code, out.strip()) == (0, "1.66667")

    def test_gains_at_8(self, capsys):
        code, out, _ = run(capsys, "gains", "--input", EXAMPLE, "--n", "8")
        assert (code, out.strip()) == (0, "7.00000")

    def test_gains_by_fraction(self, capsys):
        # ceil(0.5 * 24) = 12
        code, out, _ = run(capsys, "gains", "--input", EXAMPLE,
                           "--fraction", "0.5", "--exact")
        assert (code, out.strip()) == (0, "10")

    def test_benefit(self, capsys):
        code, out, _ = run(capsys, "benefit", "--input", EXAMPLE,
                           "--n", "8", "--qtp", "10", "--qfp", "-1")
        assert (code, out.strip()) == (0, "69.00000")

    def test_precision_flag(self, capsys):
        code, out, _ = run(capsys, "auc", "--input", EXAMPLE,
                           "--precision", "3")
        assert out.strip() == "0.938"


class TestAgainstLibrary:
    def test_cli_matches_library_everywhere(self, capsys):
        ranked = rank_records(load_scored(EXAMPLE))
        cases = [
            (("auc",), render_decimal(auc_pairs(ranked))),
            (("lift", "--n", "6"), render_decimal(lift(ranked, 6))),
            (("gains", "--n", "24"), render_decimal(cum_gains(ranked, 24))),
        ]
        for extra, expected in cases:
            code, out, _ = run(capsys, extra[0], "--input", EXAMPLE, *extra[1:])
            assert code == 0
            assert out.strip() == expected

    def test_deciles_match_library(self, capsys):
        ranked = rank_records(load_scored(EXAMPLE))
        code, out, _ = run(capsys, "deciles", "--input", EXAMPLE)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 10
        for line, expected in zip(lines, decile_lift(ranked)):
            k, value = line.split()
            assert value == render_decimal(expected)

    def test_roc_emission_matches_library(self, capsys):
        ranked = rank_records(load_scored(EXAMPLE))
        code, out, _ = run(capsys, "roc", "--format", "json",
                           "--input", EXAMPLE)
        assert code == 0
        series = parse_curves(out, format="json")
        assert series == [roc_points(ranked)]


class TestInputFlags:
    def test_custom_delimiter_and_columns(self, capsys, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("y;p\n1;0.9\n0;0.4\n1;0.6\n")
        code, out, _ = run(capsys, "auc", "--input", str(path),
                           "--delimiter", ";", "--label-col", "y",
                           "--score-col", "p", "--exact")
        assert (code, out.strip()) == (0, "1")

    def test_jsonl_input(self, capsys, tmp_path):
        path = tmp_path / "scores.jsonl"
        path.write_text(json.dumps({"label": 1, "score": 0.8}) + "\n"
                        + json.dumps({"label": 0, "score": 0.3}) + "\n")
        code, out, _ = run(capsys, "auc", "--input", str(path))
        assert (code, out.strip()) == (0, "1.00000")


class TestDeterminism:
    def test_identical_bytes_across_runs(self, capsys):
        first = run(capsys, "gains", "--input", EXAMPLE, "--format", "json")
        second = run(capsys, "gains", "--input", EXAMPLE, "--format", "json")
        assert first == second


class TestCompareCommand:
    def test_compare_two_runs(self, capsys, tmp_path, example24, perturbed24):
        from gainslift import save_scored
        other = tmp_path / "perturbed.csv"
        save_scored(perturbed24.records, other)
        code, out, _ = run(capsys, "compare", "--input", EXAMPLE,
                           "--input", str(other), "--targets", "6,14",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["winners"]["6"] == ["example24"]
        assert payload["winners"]["14"] == ["perturbed"]


class TestPerturbCommand:
    def test_perturb_roundtrip(self, capsys, tmp_path):
        out_file = tmp_path / "swapped.csv"
        code, _, _ = run(capsys, "perturb", "--input", EXAMPLE,
                         "--swap", "6:8", "--swap", "12:16",
                         "--out", str(out_file))
        assert code == 0
        swapped = rank_records(load_scored(out_file))
        assert render_decimal(auc_pairs(swapped), 3) == "0.951"


class TestDisagreeCommand:
    def test_finds_certified_counterexample(self, capsys):
        code, out, _ = run(capsys, "disagree", "--metric-a", "auc",
                           "--metric-b", "lift@6", "--n", "10", "--npos", "5",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["certified"] is True
        assert payload["exhaustive"] is True

    def test_self_disagreement_reports_none(self, capsys):
        code, out, _ = run(capsys, "disagree", "--metric-a", "auc",
                           "--metric-b", "auc", "--n", "8", "--npos", "4")
        assert code == 0
        assert "no disagreement" in out

    def test_budget_exhaustion_exits_2(self, capsys):
        code, _, err = run(capsys, "disagree", "--metric-a", "auc",
                           "--metric-b", "auc", "--n", "40", "--npos", "20",
                           "--budget", "50")
        assert code == 2
        assert "budget" in err or "not certified" in err


class TestResampleCommand:
    def test_summary_emission(self, capsys, tmp_path):
        from gainslift import save_scored, synthetic_scorer
        pool_file = tmp_path / "pool.csv"
        save_scored(synthetic_scorer(300, 1700, 1.8, seed=5), pool_file)
        code, out, _ = run(capsys, "resample", "--input", str(pool_file),
                           "--rates", "0.1,0.2", "--reps", "3",
                           "--size", "100", "--seed", "9", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["bands"]) == 2
        assert payload["bands"][0]["n_pos"] == 10

    def test_infeasible_rate_exits_2(self, capsys, tmp_path):
        from gainslift import save_scored, synthetic_scorer
        pool_file = tmp_path / "pool.csv"
        save_scored(synthetic_scorer(5, 100, 1.0, seed=5), pool_file)
        code, _, err = run(capsys, "resample", "--input", str(pool_file),
                           "--rates", "0.5", "--reps", "2", "--size", "50")
        assert code == 2


class TestChartCommand:
    def test_svg_to_file(self, capsys, tmp_path):
        out_file = tmp_path / "gains.svg"
        code, _, _ = run(capsys, "chart", "--input", EXAMPLE,
                         "--kind", "gains-fraction", "--out", str(out_file))
        assert code == 0
        root = ET.fromstring(out_file.read_text())
        assert root.tag.endswith("svg")

    def test_benefit_chart_requires_costs(self, capsys):
        code, _, err = run(capsys, "chart", "--input", EXAMPLE,
                           "--kind", "benefit")
        assert code == 1
        assert "qtp" in err


class TestErrorPaths:
    def test_unknown_subcommand_usage_exit_1(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
        assert "usage" in err

    def test_unknown_flag_exit_1(self, capsys):
        code, _, err = run(capsys, "auc", "--input", EXAMPLE, "--bogus")
        assert code == 1
        assert "usage" in err

    def test_no_command_prints_usage(self, capsys):
        code, _, err = run(capsys, )
        assert code == 1
        assert "usage" in err

    def test_validation_error_exit_1(self, capsys):
        code, _, err = run(capsys, "lift", "--input", EXAMPLE, "--n", "0")
        assert code == 1
        assert "out of range" in err

    def test_missing_file_exit_1(self, capsys):
        code, _, err = run(capsys, "auc", "--input", "/nonexistent.csv")
        assert code == 1

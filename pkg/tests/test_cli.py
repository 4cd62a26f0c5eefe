"""Command-line interface: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from gamma_forest import cli


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "gamma_forest.cli", *args],
        capture_output=True,
        text=True,
        env=full_env,
    )


class TestPolyCommand:
    def test_gamma_text_format(self):
        r = run_cli("poly", "--n", "3", "--basis", "gamma", "--format", "text")
        assert r.returncode == 0
        assert r.stdout == "gamma: 2 1\n"

    def test_json_format_n1(self):
        r = run_cli("poly", "--n", "1", "--format", "json")
        assert r.returncode == 0
        assert r.stdout == '{"degree":0,"coeffs":["1"]}\n'

    def test_standard_text_format(self):
        r = run_cli("poly", "--n", "4", "--format", "text")
        assert r.returncode == 0
        assert r.stdout == "6 26 26 6\n"

    def test_csv_format(self):
        r = run_cli("poly", "--n", "4", "--basis", "gamma", "--format", "csv")
        assert r.stdout == "6,8\n"

    def test_large_n_exact(self):
        r = run_cli("poly", "--n", "20", "--format", "json")
        doc = json.loads(r.stdout)
        assert doc["degree"] == 19
        assert sum(int(c) for c in doc["coeffs"]) == 20**19

    def test_rejects_bad_n(self):
        r = run_cli("poly", "--n", "0")
        assert r.returncode == 2
        assert "error:" in r.stderr


class TestVerifyCommand:
    def test_default_suite_passes(self):
        r = run_cli("verify", "--suite", "all", "--n-max", "4")
        assert r.returncode == 0
        last = r.stdout.strip().splitlines()[-1]
        assert last.startswith("TOTAL suite=all")
        assert "failed=0" in last

    def test_each_named_suite(self):
        for suite in (
            "drake",
            "gamma",
            "combs",
            "lyndon",
            "stirling",
            "symfunc",
            "eulerian",
        ):
            r = run_cli("verify", "--suite", suite, "--n-max", "3")
            assert r.returncode == 0, (suite, r.stdout, r.stderr)
            assert "failed=0" in r.stdout.strip().splitlines()[-1]

    def test_invalid_suite(self):
        r = run_cli("verify", "--suite", "nonsense")
        assert r.returncode == 2
        assert "unknown suite" in r.stderr
        assert r.stdout == ""

    def test_invalid_suite_raises_typed_error(self):
        with pytest.raises(cli.InvalidSuiteError):
            cli.cmd_verify("nonsense", 3, 1, False)

    def test_above_cap_skips_instead_of_running(self):
        r = run_cli("verify", "--suite", "eulerian", "--n-max", "10")
        assert r.returncode == 0
        assert "SKIP eulerian.gamma-count-vs-peel n=9 reason=above-cap" in r.stdout
        assert "SKIP eulerian.gamma-count-vs-peel n=10 reason=above-cap" in r.stdout

    def test_tree_suites_skip_above_cap(self, monkeypatch):
        from gamma_forest import binary_trees

        monkeypatch.setattr(binary_trees, "DEFAULT_CAP", 4)
        report = cli.cmd_verify("gamma", 6, 1, False)
        skips = [c for c in report.checks if c.status == "skip"]
        assert {(c.check_id, c.params) for c in skips} >= {
            ("gamma.ndrd-rdes", "n=5"),
            ("gamma.ndrd-rdes", "n=6"),
            ("gamma.ndnl-nlyn", "n=5"),
        }
        assert report.counts()[1] == 0  # nothing failed, only skipped

    def test_json_format(self):
        r = run_cli("verify", "--suite", "eulerian", "--n-max", "3", "--format", "json")
        doc = json.loads(r.stdout)
        assert doc["failed"] == 0
        assert all(c["status"] == "pass" for c in doc["checks"])

    def test_stdout_deterministic_across_threads(self):
        a = run_cli("verify", "--suite", "drake", "--n-max", "5", "--threads", "1")
        b = run_cli("verify", "--suite", "drake", "--n-max", "5", "--threads", "3")
        assert a.stdout == b.stdout

    def test_env_var_thread_fallback(self):
        r = run_cli(
            "verify",
            "--suite",
            "eulerian",
            "--n-max",
            "3",
            env={"GAMMA_FOREST_THREADS": "2"},
        )
        assert r.returncode == 0
        bad = run_cli(
            "verify",
            "--suite",
            "eulerian",
            "--n-max",
            "3",
            env={"GAMMA_FOREST_THREADS": "0"},
        )
        assert bad.returncode == 2

    def test_failure_exit_code(self, monkeypatch):
        # force one check to disagree and confirm the suite reports nonzero
        report = cli.SuiteReport("drake", 2)
        cli._check(report, "forced", "n=1", 1, 2)
        assert report.counts() == (0, 1, 0)
        text = cli._render_verify(report, "text")
        assert "FAIL forced" in text


class TestEnumerateCommand:
    def test_stirling_csv_table(self):
        r = run_cli("enumerate", "--family", "stirling", "--n", "2", "--format", "csv")
        assert r.stdout.splitlines() == [
            "word,aapair,tnpair,is_naas,is_ntns",
            "1122,1,0,1,1",
            "1221,0,1,1,1",
            "2211,0,0,1,1",
        ]

    def test_incompatible_stat(self):
        r = run_cli("enumerate", "--family", "rooted", "--n", "3", "--stat", "rdes")
        assert r.returncode == 2
        assert "not defined for family" in r.stderr

    def test_incompatible_stat_raises_typed_error(self):
        with pytest.raises(cli.IncompatibleStatError):
            cli.cmd_enumerate("rooted", 3, "rdes", "text", "auto", 1, False)
        with pytest.raises(cli.IncompatibleStatError):
            cli.cmd_enumerate("nonsense", 3, None, "text", "auto", 1, False)

    def test_cap_refusal_is_report_not_crash(self):
        r = run_cli("enumerate", "--family", "stirling", "--n", "12")
        assert r.returncode == 0
        assert r.stdout.startswith("refused family=stirling n=12 cap=8")

    def test_cap_override_allows_run(self, monkeypatch):
        monkeypatch.setitem(cli.FAMILY_CAPS, "normalized", 3)
        text, refused = cli.cmd_enumerate(
            "normalized", 4, None, "text", "histogram", 1, False
        )
        assert refused
        assert text.startswith("refused family=normalized n=4 cap=3")
        text, refused = cli.cmd_enumerate(
            "normalized", 4, None, "text", "histogram", 1, True
        )
        assert not refused
        total = sum(int(line.split()[1]) for line in text.splitlines())
        assert total == 15  # 5!!

    def test_auto_mode_rows_small(self):
        r = run_cli("enumerate", "--family", "normalized", "--n", "3")
        assert len(r.stdout.splitlines()) == 3  # 3!! = 3 trees, one per row

    def test_auto_mode_histogram_large(self):
        # 7^6 = 117649 > 10^5 switches to histogram
        r = run_cli("enumerate", "--family", "rooted", "--n", "7")
        lines = r.stdout.splitlines()
        assert len(lines) == 7
        assert lines[0] == "0 720"

    def test_histogram_matches_product_form(self):
        r = run_cli(
            "enumerate", "--family", "combs", "--n", "6", "--mode", "histogram"
        )
        counts = [int(line.split()[1]) for line in r.stdout.splitlines()]
        assert counts == [120, 1044, 2724, 2724, 1044, 120]

    def test_rows_deterministic(self):
        a = run_cli("enumerate", "--family", "normalized", "--n", "5", "--mode", "rows")
        b = run_cli("enumerate", "--family", "normalized", "--n", "5", "--mode", "rows")
        assert a.stdout == b.stdout

    def test_json_rows(self):
        r = run_cli(
            "enumerate", "--family", "lyndon", "--n", "3", "--format", "json"
        )
        docs = [json.loads(line) for line in r.stdout.splitlines()]
        assert sum(1 for _ in docs) == 9
        assert all(set(d) == {"tree", "colors", "stat"} for d in docs)


class TestSymfuncCommand:
    def test_text_output(self):
        r = run_cli("symfunc", "--n", "4")
        lines = r.stdout.splitlines()
        assert lines[0] == "e-expansion n=4 weight=3"
        assert "e[1,1,1] 6" in lines
        assert "e[2,1] 8" in lines
        assert "e[3] 1" in lines
        assert lines[-1] == "specialization: 6 26 26 6"

    def test_json_output(self):
        r = run_cli("symfunc", "--n", "3", "--format", "json")
        doc = json.loads(r.stdout)
        assert doc["specialization"] == {"degree": 2, "coeffs": ["2", "5", "2"]}

    def test_cap_refusal(self):
        r = run_cli("symfunc", "--n", "12")
        assert r.returncode == 0
        assert r.stdout.startswith("refused family=symfunc")


class TestThreadResolution:
    def test_explicit_wins(self, monkeypatch):
        monkeypatch.setenv("GAMMA_FOREST_THREADS", "7")
        assert cli.resolve_threads(2) == 2

    def test_env_fallback(self, monkeypatch):
        monkeypatch.setenv("GAMMA_FOREST_THREADS", "7")
        assert cli.resolve_threads(None) == 7

    def test_default_is_cpu_count(self, monkeypatch):
        import os

        monkeypatch.delenv("GAMMA_FOREST_THREADS", raising=False)
        assert cli.resolve_threads(None) == (os.cpu_count() or 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cli.resolve_threads(0)

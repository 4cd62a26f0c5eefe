"""Command-line front end: verification suites, polynomials, enumerations.

Output discipline: everything deterministic goes to stdout, timing and other
diagnostics go to stderr, so identical invocations produce byte-identical
stdout.  Counts inside JSON are decimal strings because coefficients outgrow
doubles long before n reaches 20.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import binary_trees, poly, rooted_trees, stirling, symfunc
from .errors import LimitExceededError

SUITES = ("all", "drake", "gamma", "combs", "lyndon", "stirling", "symfunc", "eulerian")
FAMILIES = ("rooted", "normalized", "combs", "lyndon", "stirling")

FAMILY_STATS = {
    "rooted": ("des",),
    "normalized": ("rdes", "nlyn", "free", "combtype"),
    "combs": ("ones",),
    "lyndon": ("ones",),
    "stirling": ("aapair", "tnpair"),
}
FAMILY_DEFAULT_STAT = {
    "rooted": "des",
    "normalized": "rdes",
    "combs": "ones",
    "lyndon": "ones",
    "stirling": "tnpair",
}
FAMILY_CAPS = {
    "rooted": rooted_trees.DEFAULT_CAP,
    "normalized": binary_trees.DEFAULT_CAP,
    "combs": binary_trees.DEFAULT_CAP,
    "lyndon": binary_trees.DEFAULT_CAP,
    "stirling": stirling.DEFAULT_CAP,
}

HISTOGRAM_THRESHOLD = 10**5


class InvalidSuiteError(ValueError):
    pass


class IncompatibleStatError(ValueError):
    pass


@dataclass
class CheckRecord:
    check_id: str
    params: str
    status: str  # pass, fail, or skip
    expected: str
    actual: str
    elapsed_ms: int


@dataclass
class SuiteReport:
    suite: str
    n_max: int
    checks: list[CheckRecord] = field(default_factory=list)

    def counts(self) -> tuple[int, int, int]:
        passed = sum(1 for c in self.checks if c.status == "pass")
        failed = sum(1 for c in self.checks if c.status == "fail")
        skipped = sum(1 for c in self.checks if c.status == "skip")
        return passed, failed, skipped


def resolve_threads(value: int | None) -> int:
    if value is not None:
        if value < 1:
            raise ValueError("--threads must be at least 1")
        return value
    env = os.environ.get("GAMMA_FOREST_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("GAMMA_FOREST_THREADS must be at least 1")
        return n
    return os.cpu_count() or 1


def _fmt_ints(values) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def _check(report: SuiteReport, check_id: str, params: str, expected, actual) -> None:
    t0 = time.perf_counter()
    try:
        exp = expected() if callable(expected) else expected
        act = actual() if callable(actual) else actual
        status = "pass" if exp == act else "fail"
        exp_s, act_s = str(exp), str(act)
    except Exception as exc:  # a crashed check is a failed check
        status = "fail"
        exp_s, act_s = "no error", f"error: {exc}"
    elapsed = int((time.perf_counter() - t0) * 1000)
    report.checks.append(CheckRecord(check_id, params, status, exp_s, act_s, elapsed))


def _skip(report: SuiteReport, check_id: str, params: str, reason: str) -> None:
    report.checks.append(CheckRecord(check_id, params, "skip", reason, "", 0))


def _double_factorial(m: int) -> int:
    # (m)!! for odd m; 1 when m <= 0
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _suite_drake(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    poly_top = min(n_max, 20)
    for n in range(1, poly_top + 1):
        _check(
            report,
            "drake.cayley-count",
            f"n={n}",
            n ** (n - 1),
            lambda n=n: poly.evaluate(poly.drake_polynomial(n), 1),
        )
        _check(
            report,
            "drake.palindromic",
            f"n={n}",
            True,
            lambda n=n: poly.is_palindromic(poly.drake_polynomial(n)),
        )
    for n in range(poly_top + 1, n_max + 1):
        _skip(report, "drake.cayley-count", f"n={n}", "above-cap")
    for n in range(2, min(n_max, 10) + 1):
        _check(
            report,
            "drake.rational-roots",
            f"n={n}",
            [0] * (n - 1),
            lambda n=n: [
                poly.evaluate(poly.drake_polynomial(n), Fraction(-(n - i), i))
                for i in range(1, n)
            ],
        )
    enum_cap = n_max if cap_override else rooted_trees.DEFAULT_CAP
    for n in range(1, n_max + 1):
        if n > enum_cap:
            _skip(report, "drake.descent-vs-product", f"n={n}", "above-cap")
            continue
        _check(
            report,
            "drake.descent-vs-product",
            f"n={n}",
            lambda n=n: list(poly.drake_polynomial(n).coeffs),
            lambda n=n: list(rooted_trees.descent_polynomial(n, threads, cap=max(n, rooted_trees.DEFAULT_CAP)).coeffs),
        )


def _suite_gamma(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    for n in range(1, min(n_max, 20) + 1):
        _check(
            report,
            "gamma.closed-vs-peel",
            f"n={n}",
            lambda n=n: list(poly.to_gamma_basis(poly.drake_polynomial(n)).gammas),
            lambda n=n: list(poly.gamma_closed_form(n).gammas),
        )
        _check(
            report,
            "gamma.positive",
            f"n={n}",
            True,
            lambda n=n: all(g > 0 for g in poly.gamma_closed_form(n).gammas),
        )
    tree_cap = n_max if cap_override else binary_trees.DEFAULT_CAP
    for n in range(1, n_max + 1):
        if n > tree_cap:
            _skip(report, "gamma.ndrd-rdes", f"n={n}", "above-cap")
            _skip(report, "gamma.ndnl-nlyn", f"n={n}", "above-cap")
            continue
        cap = max(n, binary_trees.DEFAULT_CAP)
        _check(
            report,
            "gamma.ndrd-rdes",
            f"n={n}",
            lambda n=n: list(poly.gamma_closed_form(n).gammas),
            lambda n=n, cap=cap: list(binary_trees.distribution_ndrd_rdes(n, threads, cap).gammas),
        )
        _check(
            report,
            "gamma.ndnl-nlyn",
            f"n={n}",
            lambda n=n: list(poly.gamma_closed_form(n).gammas),
            lambda n=n, cap=cap: list(binary_trees.distribution_ndnl_nlyn(n, threads, cap).gammas),
        )


def _suite_combs(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    tree_cap = n_max if cap_override else binary_trees.DEFAULT_CAP
    for n in range(1, n_max + 1):
        if n > tree_cap:
            _skip(report, "combs.census-vs-product", f"n={n}", "above-cap")
            continue
        cap = max(n, binary_trees.DEFAULT_CAP)
        _check(
            report,
            "combs.census-vs-product",
            f"n={n}",
            lambda n=n: list(poly.drake_polynomial(n).coeffs),
            lambda n=n, cap=cap: list(binary_trees.bicolored_comb_census(n, threads, cap).coeffs),
        )
        _check(
            report,
            "combs.free-identity",
            f"n={n}",
            True,
            lambda n=n, cap=cap: all(
                f + 2 * r == n - 1
                for (r, d, _nl, _dl, f) in binary_trees.joint_statistics(n, threads, cap)
                if d == 0
            ),
        )
        _check(
            report,
            "combs.fiber-total",
            f"n={n}",
            n ** (n - 1),
            lambda n=n, cap=cap: poly.evaluate(
                binary_trees.bicolored_comb_census(n, threads, cap), 1
            ),
        )


def _suite_lyndon(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    tree_cap = n_max if cap_override else binary_trees.DEFAULT_CAP
    for n in range(1, n_max + 1):
        if n > tree_cap:
            _skip(report, "lyndon.census-vs-product", f"n={n}", "above-cap")
            continue
        cap = max(n, binary_trees.DEFAULT_CAP)
        _check(
            report,
            "lyndon.census-vs-product",
            f"n={n}",
            lambda n=n: list(poly.drake_polynomial(n).coeffs),
            lambda n=n, cap=cap: list(binary_trees.bicolored_lyndon_census(n, threads, cap).coeffs),
        )
        _check(
            report,
            "lyndon.count-zero-nlyn",
            f"n={n}",
            math.factorial(n - 1),
            lambda n=n, cap=cap: sum(
                c
                for (_r, _d, nl, _dl, _f), c in binary_trees.joint_statistics(
                    n, threads, cap
                ).items()
                if nl == 0
            ),
        )


def _suite_stirling(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    word_cap = n_max if cap_override else stirling.DEFAULT_CAP
    for m in range(1, n_max + 1):
        if m > word_cap:
            _skip(report, "stirling.count", f"n={m}", "above-cap")
            continue
        cap = max(m, stirling.DEFAULT_CAP)
        _check(
            report,
            "stirling.count",
            f"n={m}",
            _double_factorial(2 * m - 1),
            lambda m=m, cap=cap: sum(1 for _ in stirling.enumerate_stirling(m, cap)),
        )
        _check(
            report,
            "stirling.naas-vs-gamma",
            f"n={m}",
            lambda m=m: list(poly.gamma_closed_form(m + 1).gammas),
            lambda m=m, cap=cap: list(stirling.distribution_naas_aapair(m, cap).gammas),
        )
        _check(
            report,
            "stirling.ntns-vs-gamma",
            f"n={m}",
            lambda m=m: list(poly.gamma_closed_form(m + 1).gammas),
            lambda m=m, cap=cap: list(stirling.distribution_ntns_tnpair(m, cap).gammas),
        )
        if m + 1 > binary_trees.DEFAULT_CAP and not cap_override:
            _skip(report, "stirling.rdes-equidistribution", f"n={m}", "above-cap")
            continue
        tree_cap = max(m + 1, binary_trees.DEFAULT_CAP)

        def word_hist(m=m, cap=cap):
            aa_hist: dict[int, int] = {}
            tn_hist: dict[int, int] = {}
            for w in stirling.enumerate_stirling(m, cap):
                aa, tn, _naas, _ntns = stirling._pair_profile(w)
                aa_hist[aa] = aa_hist.get(aa, 0) + 1
                tn_hist[tn] = tn_hist.get(tn, 0) + 1
            return aa_hist, tn_hist

        def tree_hist(m=m, tree_cap=tree_cap):
            rdes_hist: dict[int, int] = {}
            nlyn_hist: dict[int, int] = {}
            for (r, _d, nl, _dl, _f), c in binary_trees.joint_statistics(
                m + 1, threads, tree_cap
            ).items():
                rdes_hist[r] = rdes_hist.get(r, 0) + c
                nlyn_hist[nl] = nlyn_hist.get(nl, 0) + c
            return rdes_hist, nlyn_hist

        whist = word_hist()
        thist = tree_hist()
        _check(
            report,
            "stirling.rdes-equidistribution",
            f"n={m}",
            sorted(thist[0].items()),
            sorted(whist[1].items()),
        )
        _check(
            report,
            "stirling.nlyn-equidistribution",
            f"n={m}",
            sorted(thist[1].items()),
            sorted(whist[0].items()),
        )


def _suite_symfunc(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    tree_cap = n_max if cap_override else binary_trees.DEFAULT_CAP
    for n in range(1, n_max + 1):
        if n > tree_cap:
            _skip(report, "symfunc.specialization-vs-product", f"n={n}", "above-cap")
            continue
        cap = max(n, binary_trees.DEFAULT_CAP)
        _check(
            report,
            "symfunc.specialization-vs-product",
            f"n={n}",
            lambda n=n: list(poly.drake_polynomial(n).coeffs),
            lambda n=n, cap=cap: list(
                symfunc.specialize_two_vars(symfunc.comb_type_expansion(n, cap)).coeffs
            ),
        )
        _check(
            report,
            "symfunc.gamma-extraction",
            f"n={n}",
            lambda n=n: list(poly.gamma_closed_form(n).gammas),
            lambda n=n, cap=cap: list(
                poly.to_gamma_basis(
                    symfunc.specialize_two_vars(symfunc.comb_type_expansion(n, cap))
                ).gammas
            ),
        )
    for n in range(1, min(n_max, 7) + 1):
        for k in range(1, 4):
            _check(
                report,
                "symfunc.fmcomb-vs-expansion",
                f"n={n} k={k}",
                lambda n=n, k=k: symfunc.expansion_in_variables(
                    symfunc.comb_type_expansion(n), k
                ).terms,
                lambda n=n, k=k: symfunc.f_mcomb_direct(n, k).terms,
            )
            _check(
                report,
                "symfunc.product-form-mass",
                f"n={n} k={k}",
                lambda n=n, k=k: symfunc.f_mcomb_direct(n, k).evaluate_all_ones(),
                lambda n=n, k=k: sum(
                    symfunc.product_form_count(t, k)
                    for t in binary_trees.enumerate_normalized(n)
                ),
            )


def _suite_eulerian(report: SuiteReport, n_max: int, threads: int, cap_override: bool) -> None:
    for n in range(1, min(n_max, 8) + 1):
        _check(
            report,
            "eulerian.gamma-count-vs-peel",
            f"n={n}",
            lambda n=n: list(poly.to_gamma_basis(poly.eulerian_polynomial(n)).gammas),
            lambda n=n: list(poly.eulerian_gamma_count(n).gammas),
        )
    for n in range(min(n_max, 8) + 1, n_max + 1):
        _skip(report, "eulerian.gamma-count-vs-peel", f"n={n}", "above-cap")
    if n_max >= 3:
        _check(
            report,
            "eulerian.reference-values",
            "n=3",
            ([1, 4, 1], [1, 2]),
            lambda: (
                list(poly.eulerian_polynomial(3).coeffs),
                list(poly.eulerian_gamma_count(3).gammas),
            ),
        )


_SUITE_RUNNERS = {
    "drake": _suite_drake,
    "gamma": _suite_gamma,
    "combs": _suite_combs,
    "lyndon": _suite_lyndon,
    "stirling": _suite_stirling,
    "symfunc": _suite_symfunc,
    "eulerian": _suite_eulerian,
}


def cmd_verify(suite: str, n_max: int, threads: int, cap_override: bool) -> SuiteReport:
    if suite not in SUITES:
        raise InvalidSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = SuiteReport(suite, n_max)
    names = list(_SUITE_RUNNERS) if suite == "all" else [suite]
    for name in names:
        _SUITE_RUNNERS[name](report, n_max, threads, cap_override)
    return report


def _render_verify(report: SuiteReport, fmt: str) -> str:
    passed, failed, skipped = report.counts()
    if fmt == "json":
        doc = {
            "suite": report.suite,
            "n_max": report.n_max,
            "checks": [
                {
                    "check": c.check_id,
                    "params": c.params,
                    "status": c.status,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in report.checks
            ],
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    lines = []
    for c in report.checks:
        if c.status == "skip":
            lines.append(f"SKIP {c.check_id} {c.params} reason={c.expected}")
        elif c.status == "pass":
            lines.append(f"PASS {c.check_id} {c.params} value={c.actual}")
        else:
            lines.append(f"FAIL {c.check_id} {c.params} expected={c.expected} actual={c.actual}")
    lines.append(
        f"TOTAL suite={report.suite} n_max={report.n_max} "
        f"passed={passed} failed={failed} skipped={skipped}"
    )
    return "\n".join(lines) + "\n"


def cmd_poly(n: int, basis: str, fmt: str) -> str:
    if basis == "gamma":
        g = poly.gamma_closed_form(n)
        if fmt == "json":
            return json.dumps(poly.gamma_to_json_dict(g), separators=(",", ":")) + "\n"
        if fmt == "csv":
            return ",".join(str(c) for c in g.gammas) + "\n"
        return "gamma: " + " ".join(str(c) for c in g.gammas) + "\n"
    p = poly.drake_polynomial(n)
    if fmt == "json":
        return json.dumps(poly.poly_to_json_dict(p), separators=(",", ":")) + "\n"
    if fmt == "csv":
        return ",".join(str(c) for c in p.coeffs) + "\n"
    return " ".join(str(c) for c in p.coeffs) + "\n"


def _family_count(family: str, n: int) -> int:
    if family in ("rooted", "combs", "lyndon"):
        return n ** (n - 1)
    if family == "normalized":
        return _double_factorial(2 * n - 3)
    return _double_factorial(2 * n - 1)


def _partition_key(parts: tuple[int, ...]) -> str:
    return "+".join(str(p) for p in parts) if parts else "0"


def _histogram(family: str, stat: str, n: int, threads: int, cap: int) -> dict:
    if family == "rooted":
        coeffs = rooted_trees.descent_polynomial(n, threads, cap).coeffs
        return {i: c for i, c in enumerate(coeffs) if c}
    if family == "normalized":
        if stat == "combtype":
            tally: dict = {}
            for t in binary_trees.enumerate_normalized(n, cap):
                key = binary_trees.comb_type(t)
                tally[key] = tally.get(key, 0) + 1
            return dict(sorted(tally.items()))
        idx = {"rdes": 0, "nlyn": 2, "free": 4}[stat]
        hist: dict[int, int] = {}
        for key, c in binary_trees.joint_statistics(n, threads, cap).items():
            hist[key[idx]] = hist.get(key[idx], 0) + c
        return hist
    if family == "combs":
        coeffs = binary_trees.bicolored_comb_census(n, threads, cap).coeffs
        return {i: c for i, c in enumerate(coeffs) if c}
    if family == "lyndon":
        coeffs = binary_trees.bicolored_lyndon_census(n, threads, cap).coeffs
        return {i: c for i, c in enumerate(coeffs) if c}
    # stirling
    hist = {}
    for w in stirling.enumerate_stirling(n, cap):
        aa, tn, _naas, _ntns = stirling._pair_profile(w)
        v = aa if stat == "aapair" else tn
        hist[v] = hist.get(v, 0) + 1
    return hist


def _render_histogram(family: str, stat: str, n: int, hist: dict, fmt: str) -> str:
    items = sorted(hist.items())
    total = sum(hist.values())
    if fmt == "json":
        doc = {
            "family": family,
            "n": n,
            "stat": stat,
            "total": str(total),
            "histogram": {
                (_partition_key(k) if isinstance(k, tuple) else str(k)): str(v)
                for k, v in items
            },
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["stat", "count"])
        for k, v in items:
            writer.writerow([_partition_key(k) if isinstance(k, tuple) else k, v])
        return buf.getvalue()
    lines = [
        f"{_partition_key(k) if isinstance(k, tuple) else k} {v}" for k, v in items
    ]
    return "\n".join(lines) + "\n"


def _iter_rows(family: str, stat: str, n: int, cap: int):
    if family == "rooted":
        for t in rooted_trees.enumerate_rooted_trees(n, cap):
            doc = rooted_trees.tree_to_json_dict(t)
            yield doc, rooted_trees.des(t)
    elif family == "normalized":
        stat_fn = {
            "rdes": binary_trees.rdes,
            "nlyn": binary_trees.nlyn,
            "free": binary_trees.free_count,
            "combtype": binary_trees.comb_type,
        }[stat]
        for t in binary_trees.enumerate_normalized(n, cap):
            yield binary_trees.tree_to_string(t), stat_fn(t)
    elif family == "combs":
        for t, colors in binary_trees.enumerate_bicolored_combs(n, cap):
            yield (binary_trees.tree_to_string(t), colors), sum(colors)
    elif family == "lyndon":
        for t, colors in binary_trees.enumerate_bicolored_lyndon(n, cap):
            yield (binary_trees.tree_to_string(t), colors), sum(colors)
    else:
        for w in stirling.enumerate_stirling(n, cap):
            aa, tn, _naas, _ntns = stirling._pair_profile(w)
            yield stirling.word_to_string(w), (aa if stat == "aapair" else tn)


def _render_rows(family: str, stat: str, n: int, cap: int, fmt: str) -> str:
    out = io.StringIO()
    if family == "stirling" and fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["word", "aapair", "tnpair", "is_naas", "is_ntns"])
        for row in stirling.statistics_rows(n, cap):
            writer.writerow([row[0], row[1], row[2], int(row[3]), int(row[4])])
        return out.getvalue()
    rows = _iter_rows(family, stat, n, cap)
    if fmt == "json":
        for obj, value in rows:
            if family == "rooted":
                doc = dict(obj)
            elif family in ("combs", "lyndon"):
                doc = {"tree": obj[0], "colors": list(obj[1])}
            elif family == "stirling":
                doc = {"word": obj}
            else:
                doc = {"tree": obj}
            doc["stat"] = list(value) if isinstance(value, tuple) else value
            out.write(json.dumps(doc, separators=(",", ":")) + "\n")
        return out.getvalue()
    if fmt == "csv":
        writer = csv.writer(out)
        if family in ("combs", "lyndon"):
            writer.writerow(["tree", "colors", "stat"])
        else:
            writer.writerow(["object", "stat"])
        for obj, value in rows:
            sval = _partition_key(value) if isinstance(value, tuple) else value
            if family == "rooted":
                writer.writerow([json.dumps(obj, separators=(",", ":")), sval])
            elif family in ("combs", "lyndon"):
                writer.writerow([obj[0], " ".join(str(c) for c in obj[1]), sval])
            else:
                writer.writerow([obj, sval])
        return out.getvalue()
    for obj, value in rows:
        sval = _partition_key(value) if isinstance(value, tuple) else value
        if family == "rooted":
            out.write(f"{json.dumps(obj, separators=(',', ':'))}\t{sval}\n")
        elif family in ("combs", "lyndon"):
            out.write(f"{obj[0]}\t{','.join(str(c) for c in obj[1])}\t{sval}\n")
        else:
            out.write(f"{obj}\t{sval}\n")
    return out.getvalue()


def cmd_enumerate(
    family: str,
    n: int,
    stat: str | None,
    fmt: str,
    mode: str,
    threads: int,
    cap_override: bool,
) -> tuple[str, bool]:
    """Returns (stdout text, refused flag)."""
    if family not in FAMILIES:
        raise IncompatibleStatError(
            f"unknown family {family!r}; choose from {', '.join(FAMILIES)}"
        )
    if stat is None:
        stat = FAMILY_DEFAULT_STAT[family]
    if stat not in FAMILY_STATS[family]:
        raise IncompatibleStatError(
            f"stat {stat!r} is not defined for family {family!r}; "
            f"choose from {', '.join(FAMILY_STATS[family])}"
        )
    default_cap = FAMILY_CAPS[family]
    if n > default_cap and not cap_override:
        return (
            f"refused family={family} n={n} cap={default_cap} "
            "hint=pass --cap-override to enumerate anyway\n",
            True,
        )
    cap = max(n, default_cap)
    if mode == "auto":
        mode = "histogram" if _family_count(family, n) > HISTOGRAM_THRESHOLD else "rows"
    if mode == "histogram":
        hist = _histogram(family, stat, n, threads, cap)
        return _render_histogram(family, stat, n, hist, fmt), False
    return _render_rows(family, stat, n, cap, fmt), False


def cmd_symfunc(n: int, fmt: str, cap_override: bool) -> tuple[str, bool]:
    default_cap = binary_trees.DEFAULT_CAP
    if n > default_cap and not cap_override:
        return (
            f"refused family=symfunc n={n} cap={default_cap} "
            "hint=pass --cap-override to enumerate anyway\n",
            True,
        )
    cap = max(n, default_cap)
    expansion = symfunc.comb_type_expansion(n, cap)
    specialized = symfunc.specialize_two_vars(expansion)
    if fmt == "json":
        doc = {
            "n": n,
            "weight": expansion.weight,
            "expansion": symfunc.expansion_to_json_list(expansion),
            "specialization": poly.poly_to_json_dict(specialized),
        }
        return json.dumps(doc, separators=(",", ":")) + "\n", False
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["lambda", "coeff"])
        for lam, c in expansion.terms:
            writer.writerow([_partition_key(lam.parts), c])
        writer.writerow(["specialization", " ".join(str(c) for c in specialized.coeffs)])
        return buf.getvalue(), False
    lines = [f"e-expansion n={n} weight={expansion.weight}"]
    for lam, c in expansion.terms:
        lines.append(f"e[{','.join(str(p) for p in lam.parts)}] {c}")
    lines.append("specialization: " + " ".join(str(c) for c in specialized.coeffs))
    return "\n".join(lines) + "\n", False


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamma-forest",
        description="Exact enumeration and verification of descent statistics "
        "on trees and Stirling permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity verification suites")
    p_verify.add_argument("--suite", default="all")
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--threads", type=int, default=None)
    p_verify.add_argument("--cap-override", action="store_true")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_poly = sub.add_parser("poly", help="print the product-form polynomial or its gamma vector")
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--basis", choices=("standard", "gamma"), default="standard")
    p_poly.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_enum = sub.add_parser("enumerate", help="stream objects with a statistic, or a histogram")
    p_enum.add_argument("--family", required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--stat", default=None)
    p_enum.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_enum.add_argument("--mode", choices=("auto", "rows", "histogram"), default="auto")
    p_enum.add_argument("--threads", type=int, default=None)
    p_enum.add_argument("--cap-override", action="store_true")

    p_sym = sub.add_parser("symfunc", help="print the comb-type e-expansion and its specialization")
    p_sym.add_argument("--n", type=int, required=True)
    p_sym.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_sym.add_argument("--cap-override", action="store_true")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            threads = resolve_threads(args.threads)
            t0 = time.perf_counter()
            report = cmd_verify(args.suite, args.n_max, threads, args.cap_override)
            sys.stdout.write(_render_verify(report, args.format))
            for c in report.checks:
                sys.stderr.write(f"# {c.check_id} {c.params} elapsed_ms={c.elapsed_ms}\n")
            sys.stderr.write(
                f"# suite elapsed_ms={int((time.perf_counter() - t0) * 1000)}\n"
            )
            return 0 if report.counts()[1] == 0 else 1
        if args.command == "poly":
            if args.n < 1:
                raise ValueError("--n must be a positive integer")
            sys.stdout.write(cmd_poly(args.n, args.basis, args.format))
            return 0
        if args.command == "enumerate":
            if args.n < 1:
                raise ValueError("--n must be a positive integer")
            threads = resolve_threads(args.threads)
            text, refused = cmd_enumerate(
                args.family, args.n, args.stat, args.format, args.mode, threads, args.cap_override
            )
            sys.stdout.write(text)
            if refused:
                sys.stderr.write("# enumeration refused: size above cap\n")
            return 0
        if args.command == "symfunc":
            if args.n < 1:
                raise ValueError("--n must be a positive integer")
            text, refused = cmd_symfunc(args.n, args.format, args.cap_override)
            sys.stdout.write(text)
            if refused:
                sys.stderr.write("# enumeration refused: size above cap\n")
            return 0
    except (InvalidSuiteError, IncompatibleStatError, LimitExceededError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Verification suites driven by a single ``max_n`` and a worker pool.

Every suite is cut into independent units; each unit returns how many
checks it ran and the failures it saw. Units are mapped in a fixed order,
so the report does not depend on the worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import coefficients as cf
from . import partitions as pt
from . import series as sr
from .exact import binomial

SUITE_NAMES = ("core", "gf", "partition", "lemma", "conjecture")

CONTIGUITY_A = range(-6, 7)
CONTIGUITY_B = range(-8, 1)
CONTIGUITY_C = 2
CONTIGUITY_DEGREE = 16


@dataclass(frozen=True)
class Failure:
    suite: str
    check: str
    key: str
    lhs: str
    rhs: str

    def __str__(self):
        return f"FAIL {self.suite}/{self.check} [{self.key}]: lhs={self.lhs} rhs={self.rhs}"


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "failures": [vars(f) for f in self.failures],
            "ok": self.ok,
        }


@dataclass(frozen=True)
class RunConfig:
    max_n: int
    suites: tuple[str, ...] = ("core",)
    workers: int = 1
    output_format: str = "plain"

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {self.max_n}")
        unknown = set(self.suites) - set(SUITE_NAMES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


def default_workers() -> int:
    env = os.environ.get("GENBINOM_WORKERS")
    if env:
        return int(env)
    return os.cpu_count() or 1


class _Collector:
    def __init__(self, suite):
        self.suite = suite
        self.cases = 0
        self.failures: list[Failure] = []

    def result(self, res: cf.CheckResult, check: str | None = None):
        key = ",".join(f"{k}={v}" for k, v in res.key.items())
        self.compare(check or res.name, key, res.lhs, res.rhs)

    def compare(self, check, key, lhs, rhs):
        self.cases += 1
        if lhs != rhs:
            self.failures.append(Failure(self.suite, check, key, str(lhs), str(rhs)))

    def done(self):
        return self.cases, self.failures


# -- units -----------------------------------------------------------------


def _core(n):
    out = _Collector("core")
    table = cf.gb_table(n)
    for p in range(n + 1):
        out.compare("k=0 convention", f"n={n},p={p},k=0", table.rows[p][0], 1 if p in (0, n) else 0)
        for k in range(1, n + 1):
            key = f"n={n},p={p},k={k}"
            value = table.rows[p][k]
            for name, fn in cf.FORMULAS.items():
                if name == "second" and p == 0:
                    continue
                out.compare(f"consensus:{name}", key, fn(n, p, k), value)
            out.compare("positivity", key, value > 0, True)
            rems = [(k * value) % n] + ([(p * value) % n] if p else [])
            out.compare("divisibility", key, tuple(rems), (0,) * len(rems))
            out.compare("symmetry", key, value, table.rows[n - p][k])
            for pattern, closed in cf.special_values(n, p, k).items():
                out.compare(f"special:{pattern}", key, closed, value)
            if n >= 2 and p >= 1:
                out.result(cf.check_recurrence(n, p, k))
    return out.done()


def _gf(unit):
    kind, arg = unit
    out = _Collector("gf")
    if kind == "thm2":
        out.result(sr.check_thm2(arg))
        if arg >= 2:
            prev2 = sr.gb_bipoly(arg - 2) if arg >= 3 else sr.BiPoly.const(2)
            x, y = sr.BiPoly.x(), sr.BiPoly.y()
            rhs = (1 + x) * (1 + y) * sr.gb_bipoly(arg - 1) - x * (1 + y) * prev2
            out.compare("bipoly_recurrence", f"n={arg}", sr.gb_bipoly(arg), rhs)
        bp = sr.gb_bipoly(arg)
        out.compare("x_mirror", f"n={arg}", bp, bp.mirror_x(arg))
    elif kind == "thm4":
        out.result(sr.check_thm4(arg))
    elif kind == "lucas":
        out.result(sr.lucas_univariate_check(arg))
    elif kind == "closing":
        out.result(sr.check_closing_identity(arg))
    elif kind == "contiguity":
        for b in CONTIGUITY_B:
            out.result(sr.check_contiguity(arg, b, CONTIGUITY_C, CONTIGUITY_DEGREE))
    return out.done()


def _partition(unit):
    kind, n = unit
    out = _Collector("partition")
    if kind == "count":
        count = sum(1 for _ in pt.enumerate_partitions(n))
        out.compare("partition_count", f"n={n}", count, pt.partition_count(n))
    else:
        for r in range(0, 5):
            for s in range(1, 5):
                out.result(pt.check_thm5(n, r, s))
    return out.done()


def _lemma(unit):
    kind, arg = unit
    out = _Collector("lemma")
    if kind == "sum_identity":
        n = arg
        for p in range(1, n + 1):
            for k in range(1, n + 1):
                out.result(cf.check_sum_identity(n, p, k))
    else:
        m = arg
        for r in range(0, m):
            s = m - r
            for k in range(1, m + 2):
                out.result(cf.check_lemma(r, s, k))
    return out.done()


def _conjecture(unit):
    kind, r, n_values = unit
    out = _Collector("conjecture")
    if kind == "m3":
        report = pt.check_conjecture(r, n_values)
        key = f"r={','.join(map(str, r))}"
        for res in report.results:
            k = f"{key},n={res.n}"
            out.compare("shape", k, res.overflow, ())
            out.compare("integral", k, res.integral, True)
            out.compare("positive", k, res.positive, True)
        out.compare("stable", key, report.unstable, ())
        return out.done()
    for n in n_values:
        res = pt.conjecture_coeffs(n, r).as_dict()
        for k, c in res.items():
            key = f"r={','.join(map(str, r))},n={n},k={k}"
            if kind == "m1":
                out.compare("m1_binomial", key, c, binomial(r[0], k))
            else:
                out.compare("m2_gb", key, c, cf.gb(sum(r), r[1], k))
    return out.done()


def suite_units(suite: str, max_n: int) -> list:
    """The fixed parameter grid for ``suite`` at ``max_n``."""
    if suite == "core":
        return list(range(1, max_n + 1))
    if suite == "gf":
        units = [(kind, n) for kind in ("thm2", "thm4", "lucas", "closing") for n in range(1, max_n + 1)]
        return units + [("contiguity", a) for a in CONTIGUITY_A]
    if suite == "partition":
        return [("count", n) for n in range(1, max_n + 1)] + [("thm5", n) for n in range(1, max_n + 1)]
    if suite == "lemma":
        return [("sum_identity", n) for n in range(1, max_n + 1)] + [("lemma", m) for m in range(1, max_n + 1)]
    if suite == "conjecture":
        ns = tuple(range(1, max_n + 1))
        cap = min(max_n, 8)
        units = [("m1", (r1,), ns) for r1 in range(1, cap + 1)]
        units += [("m2", (r, w - r), ns) for w in range(2, cap + 1) for r in range(1, w)]
        for w in range(3, min(max_n, 9) + 1):
            for r in _compositions3(w):
                units.append(("m3", r, (w, w + 1, w + 2)))
        return units
    raise ValueError(f"unknown suite {suite!r}")


def _compositions3(w):
    return [(a, b, w - a - b) for a in range(1, w - 1) for b in range(1, w - a)]


_RUNNERS = {
    "core": _core,
    "gf": _gf,
    "partition": _partition,
    "lemma": _lemma,
    "conjecture": _conjecture,
}


def _run_unit(task):
    suite, unit = task
    return _RUNNERS[suite](unit)


def run_suite(suite: str, max_n: int, workers: int = 1, pool=None) -> SuiteReport:
    start = time.perf_counter()
    tasks = [(suite, unit) for unit in suite_units(suite, max_n)]
    if pool is not None:
        results = list(pool.map(_run_unit, tasks))
    elif workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as own:
            results = list(own.map(_run_unit, tasks))
    else:
        results = [_run_unit(t) for t in tasks]
    report = SuiteReport(suite)
    for cases, failures in results:
        report.cases += cases
        report.failures.extend(failures)
    report.seconds = time.perf_counter() - start
    return report


def run(config: RunConfig) -> list[SuiteReport]:
    if config.workers == 1:
        return [run_suite(s, config.max_n) for s in config.suites]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return [run_suite(s, config.max_n, pool=pool) for s in config.suites]

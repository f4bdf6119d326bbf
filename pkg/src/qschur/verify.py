"""Exhaustive verification scans over all skew shapes up to a size bound.

Shapes are visited in a frozen order (size, outer lexicographically, inner
lexicographically), so a report for a given bound is reproducible. A scan
can start from any cursor position, and merging a partial report with the
remainder gives the full report.
"""

from __future__ import annotations

import os
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial

from .functions import is_symmetric, schur_decompose, skew_qschur_M
from .lr import (enumerate_lr_left, enumerate_lr_right_filtered, enumerate_lr_right_grown,
                 schur_expansion_left, schur_expansion_right)
from .rectify import insertion_word, rect_rc_fast
from .shapes import SkewShape, is_uniform, make_skew, partitions, reverse, skew_shapes
from .tableaux import canonical_srct, enumerate_srct, standardize

DEFAULT_LIMIT = 10**7
GOLDEN_SHAPES = (make_skew((9, 3, 2, 4), (4, 1, 1, 3)), make_skew((2, 3, 3, 2), (1, 2, 1)))


@dataclass
class ScanReport:
    check_name: str
    max_size: int
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    start: int = 0
    cursor: int = 0
    extra_cases: int = 0

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d

    @classmethod
    def from_json(cls, d: dict) -> ScanReport:
        d = dict(d)
        d.pop("status", None)
        return cls(**d)

    def merge(self, rest: ScanReport) -> ScanReport:
        if rest.check_name != self.check_name or rest.max_size != self.max_size:
            raise ValueError("can only merge reports of the same scan")
        if rest.start != self.cursor:
            raise ValueError(f"report resumes at {rest.start}, expected {self.cursor}")
        return ScanReport(self.check_name, self.max_size, self.cases_run + rest.cases_run,
                          self.failures + rest.failures, self.wall_time + rest.wall_time,
                          self.start, rest.cursor, self.extra_cases + rest.extra_cases)

    def summary(self) -> str:
        lines = [f"check      {self.check_name}",
                 f"max size   {self.max_size}",
                 f"shapes     {self.start}..{self.cursor}",
                 f"cases run  {self.cases_run}" + (f" (+{self.extra_cases} golden)" if self.extra_cases else ""),
                 f"failures   {len(self.failures)}",
                 f"wall time  {self.wall_time:.2f}s",
                 f"status     {self.status.upper()}"]
        for f in self.failures[:10]:
            lines.append(f"  {f['shape']}: {f['detail']}")
        return "\n".join(lines)


def _failure(s: SkewShape, detail: str) -> dict:
    return {"shape": str(s), "outer": list(s.outer), "inner": list(s.inner), "detail": detail}


# Each check returns None when the shape is out of its scope, else a list of failures.

def check_uniform_symmetric(s: SkewShape, limit: int = DEFAULT_LIMIT) -> list[dict] | None:
    sym = is_symmetric(skew_qschur_M(s, limit))
    uni = is_uniform(s)
    if sym != uni:
        return [_failure(s, f"symmetric={sym} but uniform={uni}")]
    return []


def check_rule_agreement(s: SkewShape, limit: int = DEFAULT_LIMIT) -> list[dict] | None:
    v = skew_qschur_M(s, limit)
    if not is_symmetric(v):
        return None
    left = schur_expansion_left(s, force=True)
    right = schur_expansion_right(s, force=True)
    greedy = schur_decompose(v)
    out = []
    if left != greedy:
        out.append(_failure(s, f"left rule {left} != greedy {greedy}"))
    if right != greedy:
        out.append(_failure(s, f"right rule {right} != greedy {greedy}"))
    return out


def check_corollary_bijections(s: SkewShape, limit: int = DEFAULT_LIMIT) -> list[dict] | None:
    by_rect: dict[tuple, set] = {}
    for t in enumerate_srct(s, limit):
        by_rect.setdefault(rect_rc_fast(insertion_word(t)), set()).add(t)
    out = []
    for nu in partitions(s.size):
        for side, fillings, target in (
                ("left", enumerate_lr_left(s, nu), nu),
                ("right", enumerate_lr_right_filtered(s, nu), reverse(nu))):
            image = [standardize(t) for t in fillings]
            expected = by_rect.get(canonical_srct(target).rows, set())
            if len(set(image)) != len(image):
                out.append(_failure(s, f"{side} standardization not injective for nu={nu}"))
            if set(image) != expected:
                out.append(_failure(s, f"{side} image has {len(set(image))} SRCTs, "
                                       f"{len(expected)} rectify to the target for nu={nu}"))
        grown = enumerate_lr_right_grown(s, nu)
        if grown != enumerate_lr_right_filtered(s, nu):
            out.append(_failure(s, f"grown and filtered right fillings differ for nu={nu}"))
    return out


CHECKS: dict[str, Callable[..., list[dict] | None]] = {
    "uniform-symmetric": check_uniform_symmetric,
    "rule-agreement": check_rule_agreement,
    "corollary-bijections": check_corollary_bijections,
}


def default_jobs() -> int:
    return int(os.environ.get("QSCHUR_JOBS", "1"))


def run_scan(check: str, max_size: int, *, jobs: int | None = None, start: int = 0,
             stop: int | None = None, limit: int = DEFAULT_LIMIT,
             extra: Sequence[SkewShape] = ()) -> ScanReport:
    """Run ``check`` on every skew shape with ``|outer| <= max_size``.

    ``start``/``stop`` select a slice of the frozen shape order; ``extra``
    shapes are checked in addition and counted in ``extra_cases``.
    Raises :class:`ResourceLimit` if an enumeration exceeds ``limit``.
    """
    fn = partial(CHECKS[check], limit=limit)
    jobs = default_jobs() if jobs is None else jobs
    shapes = list(skew_shapes(max_size))
    stop = len(shapes) if stop is None else min(stop, len(shapes))
    todo = shapes[start:stop]
    t0 = time.perf_counter()
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, todo, chunksize=max(1, len(todo) // (8 * jobs))))
    else:
        results = [fn(s) for s in todo]
    report = ScanReport(check, max_size, start=start, cursor=stop)
    for r in results:
        if r is not None:
            report.cases_run += 1
            report.failures.extend(r)
    for s in extra:
        r = fn(s)
        if r is not None:
            report.extra_cases += 1
            report.failures.extend(r)
    report.wall_time = time.perf_counter() - t0
    return report


def scan_uniform_symmetric(max_size: int, **kw) -> ScanReport:
    """Symmetric if and only if uniform, on every shape up to ``max_size``."""
    return run_scan("uniform-symmetric", max_size, **kw)


def scan_rule_agreement(max_size: int, **kw) -> ScanReport:
    """Left rule, right rule and greedy Schur extraction agree on every
    symmetric shape; the two worked golden shapes are always checked too."""
    kw.setdefault("extra", GOLDEN_SHAPES)
    return run_scan("rule-agreement", max_size, **kw)


def scan_corollary_bijections(max_size: int, **kw) -> ScanReport:
    return run_scan("corollary-bijections", max_size, **kw)


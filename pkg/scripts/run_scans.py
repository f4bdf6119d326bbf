#!/usr/bin/env python3
"""Run every verification scan up to a size bound and write JSON reports."""

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from qschur.verify import CHECKS, GOLDEN_SHAPES, default_jobs, run_scan


@dataclass
class ScanConfig:
    max_size: int = 8
    jobs: int = 1
    out_dir: Path = Path("results")
    checks: tuple[str, ...] = tuple(sorted(CHECKS))


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-size", type=int, default=ScanConfig.max_size)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--out-dir", type=Path, default=ScanConfig.out_dir)
    p.add_argument("--check", action="append", choices=sorted(CHECKS), dest="checks")
    a = p.parse_args()
    cfg = ScanConfig(a.max_size, a.jobs, a.out_dir, tuple(a.checks or ScanConfig.checks))

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    failed = False
    for name in cfg.checks:
        extra = GOLDEN_SHAPES if name == "rule-agreement" else ()
        report = run_scan(name, cfg.max_size, jobs=cfg.jobs, extra=extra)
        path = cfg.out_dir / f"{name}-{cfg.max_size}.json"
        path.write_text(json.dumps(dict(report.to_json(), config={**asdict(cfg), "out_dir": str(cfg.out_dir)}),
                                   indent=2) + "\n")
        print(report.summary())
        print(f"-> {path}\n")
        failed |= report.status != "pass"
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

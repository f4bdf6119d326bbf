#!/usr/bin/env python3
"""Empirical check: does rectification fix every straight-shape SRCT?"""

import argparse

from qschur.rectify import insertion_word, rect_rc_fast
from qschur.shapes import compositions, make_skew
from qschur.tableaux import enumerate_srct


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-size", type=int, default=7)
    n_max = p.parse_args().max_size
    bad = 0
    for n in range(n_max + 1):
        total = moved = 0
        for a in compositions(n):
            for t in enumerate_srct(make_skew(a)):
                total += 1
                if rect_rc_fast(insertion_word(t)) != t.rows:
                    moved += 1
        print(f"size {n}: {total} straight SRCTs, {moved} not fixed")
        bad += moved
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

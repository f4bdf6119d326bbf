#!/usr/bin/env python3
"""Recompute the worked examples: rectification chains, the rho pair, the
NCLR coefficient and both golden Schur expansions with their fillings."""

from qschur.lr import (enumerate_lrrct_left, enumerate_lrrct_right, nclr_witnesses, qs_expansion,
                       schur_expansion_left, schur_expansion_right)
from qschur.maps import rho
from qschur.rectify import rect_rc_chain, rect_rt_chain
from qschur.shapes import make_skew, partitions
from qschur.tableaux import Tableau, render

_ = None


def banner(title):
    print(f"\n=== {title} ===")


def show_chain(chain):
    print("\n->\n".join(render(t) for t in chain))


def main():
    banner("rectify an SRCT")
    show_chain(rect_rc_chain(Tableau.from_rows([[3, 2], [_, _, _, 6], [_, 1], [_, _, 5, 4]])))

    banner("rectify an SRT")
    show_chain(rect_rt_chain(Tableau.from_rows([[_, _, _, 6], [_, _, 5, 4], [_, 2], [3, 1]], "partition")))

    banner("rho with beta = (2,3,2)")
    t = Tableau.from_rows([[1], [4], [5, 5, 3], [_, _, 6, 4], [_, _, _, 8, 7], [_, _, 2]])
    print(render(t), "\n<->", render(rho(t, (2, 3, 2))), sep="\n")

    banner("(1,4,3)//(3,2)")
    s = make_skew((1, 4, 3), (3, 2))
    print(qs_expansion(s))
    for w in nclr_witnesses(s, (1, 2)):
        print(render(w), end="\n\n")

    for outer, inner in (((9, 3, 2, 4), (4, 1, 1, 3)), ((2, 3, 3, 2), (1, 2, 1))):
        s = make_skew(outer, inner)
        banner(str(s))
        print("left :", schur_expansion_left(s))
        print("right:", schur_expansion_right(s))
        for side, enum in (("left", enumerate_lrrct_left), ("right", enumerate_lrrct_right)):
            for nu in partitions(s.size):
                for f in enum(s, nu):
                    print(f"[{side} nu={nu}]\n{render(f)}\n")


if __name__ == "__main__":
    main()

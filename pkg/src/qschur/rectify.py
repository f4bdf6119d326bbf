"""Insertion and rectification for reverse composition tableaux and reverse tableaux."""

from __future__ import annotations

from collections.abc import Callable, Sequence

from .errors import InvalidInput
from .shapes import make_skew, make_skew_partition
from .tableaux import Tableau, ssrct_violation, ssrt_violation

Rows = list[list[int]]


def _rows_of(t: Tableau) -> Rows:
    if t.shape.inner:
        raise InvalidInput(f"insertion needs a straight shape, got {t.shape}")
    return [list(r) for r in t.rows]


def _check(t: Tableau, violation: Callable[[Tableau], str | None], name: str) -> None:
    reason = violation(t)
    if reason is not None:
        raise InvalidInput(f"not an {name}: {reason} condition fails", reason)


def _insert_rc_rows(rows: Rows, k: int) -> tuple[int, int]:
    """Insert ``k`` in place; return the (0-indexed) row and column where the
    scan finally stopped."""
    r = max((len(row) for row in rows), default=0)
    for j in range(r + 1, 1, -1):
        for i, row in enumerate(rows):
            if len(row) == j - 1:
                if k <= row[-1]:
                    row.append(k)
                    return i, j - 1
            elif len(row) >= j:
                if row[j - 1] < k <= row[j - 2]:
                    row[j - 1], k = k, row[j - 1]
    pos = sum(1 for row in rows if row[0] < k)
    rows.insert(pos, [k])
    return pos, 0


def insert_rc(t: Tableau, k: int) -> Tableau:
    """``k -> t``: insert ``k`` into a straight-shape SSRCT."""
    _check(t, ssrct_violation, "SSRCT")
    rows = _rows_of(t)
    _insert_rc_rows(rows, k)
    return _straight_rc(rows)


def _straight_rc(rows: Rows) -> Tableau:
    return Tableau(make_skew(tuple(len(r) for r in rows)), tuple(tuple(r) for r in rows))


def _insert_rt_rows(rows: Rows, k: int) -> None:
    for row in rows:
        if k <= row[-1]:
            row.append(k)
            return
        j = next(j for j, v in enumerate(row) if v < k)
        row[j], k = k, row[j]
    rows.append([k])


def insert_rt(t: Tableau, k: int) -> Tableau:
    """``t <- k``: row insertion into a straight-shape SSRT."""
    _check(t, ssrt_violation, "SSRT")
    rows = _rows_of(t)
    _insert_rt_rows(rows, k)
    return Tableau(make_skew_partition(tuple(len(r) for r in rows)), tuple(tuple(r) for r in rows))


def insertion_word(t: Tableau) -> list[int]:
    """Entries column by column, left to right, each column in increasing order."""
    word = []
    for col in range(1, t.shape.num_columns + 1):
        word.extend(sorted(t.column(col)))
    return word


def rect_rc_chain(t: Tableau, after_column: Callable[[int, Rows], None] | None = None) -> list[Tableau]:
    """Every intermediate tableau of the rectification of an SRCT, starting
    with the empty one. ``after_column(j, rows)`` is called once column ``j``
    has been fully inserted."""
    _check(t, ssrct_violation, "SRCT")
    rows: Rows = []
    chain = [_straight_rc(rows)]
    for col in range(1, t.shape.num_columns + 1):
        for k in sorted(t.column(col)):
            _insert_rc_rows(rows, k)
            chain.append(_straight_rc(rows))
        if after_column is not None:
            after_column(col, rows)
    return chain


def rect_rc(t: Tableau) -> Tableau:
    return rect_rc_chain(t)[-1]


def rect_rc_fast(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Rectify a pre-validated insertion word; returns the final rows only."""
    rows: Rows = []
    for k in word:
        _insert_rc_rows(rows, k)
    return tuple(tuple(r) for r in rows)


def rect_rt_chain(t: Tableau) -> list[Tableau]:
    _check(t, ssrt_violation, "SRT")
    rows: Rows = []

    def snap() -> Tableau:
        return Tableau(make_skew_partition(tuple(len(r) for r in rows)), tuple(tuple(r) for r in rows))

    chain = [snap()]
    for k in insertion_word(t):
        _insert_rt_rows(rows, k)
        chain.append(snap())
    return chain


def rect_rt(t: Tableau) -> Tableau:
    return rect_rt_chain(t)[-1]

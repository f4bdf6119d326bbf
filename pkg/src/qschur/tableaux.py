"""Tableaux on skew shapes: validators, canonical fillings, standardization and
exhaustive enumeration.

A :class:`Tableau` stores its filling row by row; inner-shape cells hold
``None``. Composition-kind shapes carry reverse composition tableaux
(SSRCT/SRCT), partition-kind shapes carry reverse tableaux (SSRT/SRT).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import accumulate

from .errors import ResourceLimit, ShapeMismatch
from .shapes import (Cell, Composition, Partition, SkewShape, make_skew, make_skew_partition,
                     shape_from_json, shape_to_json)

Row = tuple[int | None, ...]


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        s = self.shape
        if len(rows) != len(s.outer):
            raise ShapeMismatch(f"{len(rows)} rows given for shape {s}")
        for i, row in enumerate(rows, start=1):
            if len(row) != s.outer[i - 1]:
                raise ShapeMismatch(f"row {i} has {len(row)} cells, shape {s} needs {s.outer[i - 1]}")
            for j, v in enumerate(row, start=1):
                inner = s.in_inner((i, j))
                if inner and v is not None:
                    raise ShapeMismatch(f"cell {(i, j)} is in the inner shape but holds {v}")
                if not inner and (not isinstance(v, int) or v < 1):
                    raise ShapeMismatch(f"cell {(i, j)} needs a positive integer, got {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | None]], kind: str = "composition") -> Tableau:
        """Build a tableau, reading the inner shape off the leading ``None`` cells."""
        rows = [tuple(r) for r in rows]
        outer = tuple(len(r) for r in rows)
        dots = [next((j for j, v in enumerate(r) if v is not None), len(r)) for r in rows]
        if kind == "composition":
            first = next((i for i, d in enumerate(dots) if d), len(rows))
            inner = tuple(dots[first:])
        else:
            inner = tuple(d for d in dots if d)
        return cls(SkewShape(outer, inner, kind), tuple(rows))

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: dict[Cell, int]) -> Tableau:
        if set(entries) != shape.cells:
            raise ShapeMismatch(f"filling domain differs from the cells of {shape}")
        rows = tuple(tuple(entries.get((i, j)) for j in range(1, shape.outer[i - 1] + 1))
                     for i in range(1, len(shape.outer) + 1))
        return cls(shape, rows)

    def __getitem__(self, cell: Cell) -> int | None:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def get(self, cell: Cell) -> int | None:
        i, j = cell
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    def entries(self) -> dict[Cell, int]:
        return {(i, j): v for i, row in enumerate(self.rows, 1)
                for j, v in enumerate(row, 1) if v is not None}

    @property
    def size(self) -> int:
        return self.shape.size

    def column(self, col: int) -> list[int]:
        """Entries of column ``col``, top to bottom, inner cells skipped."""
        return [self[c] for c in self.shape.column_cells(col)]

    def reading_key(self) -> tuple[int, ...]:
        """Row-major entry list; the canonical sort key for enumerations."""
        return tuple(v for row in self.rows for v in row if v is not None)

    def __str__(self):
        return render(self)


def render(t: Tableau) -> str:
    """ASCII rendering, one row per line, ``.`` for inner cells."""
    if not t.rows:
        return "(empty)"
    width = max((len(str(v)) for row in t.rows for v in row if v is not None), default=1)
    return "\n".join(" ".join(("." if v is None else str(v)).rjust(width) for v in row)
                     for row in t.rows)


def tableau_to_json(t: Tableau) -> dict:
    return {"shape": shape_to_json(t.shape), "rows": [list(r) for r in t.rows]}


def tableau_from_json(d: dict) -> Tableau:
    return Tableau(shape_from_json(d["shape"]), tuple(tuple(r) for r in d["rows"]))


def ssrct_violation(t: Tableau) -> str | None:
    """Name of the first SSRCT axiom ``t`` violates, or ``None``."""
    s = t.shape
    for i in range(1, len(s.outer) + 1):
        vals = [t[c] for c in s.row_cells(i)]
        if any(a < b for a, b in zip(vals, vals[1:])):
            return "row-decrease"
    first = t.column(1)
    if any(a >= b for a, b in zip(first, first[1:])):
        return "first-column"
    for (j, c) in s.cells:
        if c < 2:
            continue
        k = c - 1
        v = t[(j, c)]
        for i in range(1, j):
            left = (i, k)
            if s.in_inner(left):
                triggered = True
            elif left in s.cells:
                triggered = t[left] >= v
            else:
                triggered = False
            if not triggered:
                continue
            above = (i, k + 1)
            if s.in_inner(above):
                continue
            if above in s.cells and t[above] > v:
                continue
            return "triple"
    return None


def validate_ssrct(t: Tableau) -> bool:
    if t.shape.kind != "composition":
        raise ShapeMismatch("SSRCT validation needs a composition shape")
    return ssrct_violation(t) is None


def ssrt_violation(t: Tableau) -> str | None:
    s = t.shape
    for (i, j) in s.cells:
        v = t[(i, j)]
        if (i, j + 1) in s.cells and t[(i, j + 1)] > v:
            return "row-decrease"
        if (i + 1, j) in s.cells and t[(i + 1, j)] >= v:
            return "column-decrease"
    return None


def validate_ssrt(t: Tableau) -> bool:
    if t.shape.kind != "partition":
        raise ShapeMismatch("SSRT validation needs a partition shape")
    return ssrt_violation(t) is None


def validate(t: Tableau) -> bool:
    """The flavour validator matching the tableau's shape kind."""
    return validate_ssrct(t) if t.shape.kind == "composition" else validate_ssrt(t)


def is_standard(t: Tableau) -> bool:
    return sorted(t.entries().values()) == list(range(1, t.size + 1))


def content(t: Tableau) -> tuple[int, ...]:
    vals = list(t.entries().values())
    counts = [0] * max(vals, default=0)
    for v in vals:
        counts[v - 1] += 1
    return tuple(counts)


def canonical_srct(a: Composition) -> Tableau:
    ends = list(accumulate(a))
    rows = [tuple(range(end, end - part, -1)) for end, part in zip(ends, a)]
    return Tableau(make_skew(a), tuple(rows))


def canonical_srt(p: Partition) -> Tableau:
    tails = list(accumulate(reversed(p)))[::-1]
    rows = [tuple(range(top, top - part, -1)) for top, part in zip(tails, p)]
    return Tableau(make_skew_partition(p), tuple(rows))


def standardize(t: Tableau) -> Tableau:
    """Relabel each value's occurrences right to left with consecutive integers."""
    order = sorted(t.entries().items(), key=lambda kv: (kv[1], -kv[0][1], kv[0][0]))
    return Tableau.from_entries(t.shape, {cell: n for n, (cell, _) in enumerate(order, 1)})


# --- enumeration ---------------------------------------------------------

def _column_major(s: SkewShape) -> list[Cell]:
    return sorted(s.cells, key=lambda c: (c[1], c[0]))


def _ssrct_plan(s: SkewShape):
    """Per-cell constraints for column-major backtracking.

    Each entry is ``(upper, lower, triples)`` where the placed value ``v``
    must satisfy ``v <= vals[upper]`` and ``v > vals[lower]``, and for every
    ``(left, above)`` in ``triples``: ``vals[left] < v or vals[above] > v``
    (``None`` standing for a condition that can never hold). A triple of
    ``(None, None)`` makes the cell unfillable.
    """
    order = _column_major(s)
    index = {c: n for n, c in enumerate(order)}
    plan = []
    for (j, c) in order:
        upper = index.get((j, c - 1))
        lower = None
        if c == 1:
            prev = [index[(i, 1)] for i in range(1, j) if (i, 1) in index]
            lower = prev[-1] if prev else None
        triples = []
        if c >= 2:
            for i in range(1, j):
                left, above = (i, c - 1), (i, c)
                if s.in_inner(above):
                    continue
                if s.in_inner(left):
                    triples.append((None, index.get(above)))
                elif left in index:
                    triples.append((index[left], index.get(above)))
        plan.append((upper, lower, tuple(triples)))
    return order, plan


def _ssrt_plan(s: SkewShape):
    order = _column_major(s)
    index = {c: n for n, c in enumerate(order)}
    plan = []
    for (i, j) in order:
        plan.append((index.get((i, j - 1)), index.get((i - 1, j)), ()))
    return order, plan


def _fillings(s: SkewShape, counts: Sequence[int], strict_lower_is_greater: bool,
              limit: int | None) -> Iterator[list[int]]:
    """Backtrack over fillings with exact ``counts``; yields the column-major value list.

    For SSRCT plans ``lower`` is a cell that must be strictly smaller; for
    SSRT plans it is the cell above, which must be strictly larger.
    """
    order, plan = _ssrct_plan(s) if not strict_lower_is_greater else _ssrt_plan(s)
    n = len(order)
    if sum(counts) != n:
        return
    remaining = list(counts)
    top = len(counts)
    vals = [0] * n
    produced = 0

    def place(pos: int) -> Iterator[list[int]]:
        nonlocal produced
        if pos == n:
            produced += 1
            if limit is not None and produced > limit:
                raise ResourceLimit(f"more than {limit} tableaux of shape {s}")
            yield vals
            return
        upper, lower, triples = plan[pos]
        hi = vals[upper] if upper is not None else top
        lo = 1
        if lower is not None:
            if strict_lower_is_greater:
                hi = min(hi, vals[lower] - 1)
            else:
                lo = vals[lower] + 1
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            ok = True
            for left, above in triples:
                if left is not None and vals[left] < v:
                    continue
                if above is not None and vals[above] > v:
                    continue
                ok = False
                break
            if not ok:
                continue
            remaining[v - 1] -= 1
            vals[pos] = v
            yield from place(pos + 1)
            remaining[v - 1] += 1
        vals[pos] = 0

    yield from place(0)


def _to_tableau(s: SkewShape, order: list[Cell], vals: list[int]) -> Tableau:
    return Tableau.from_entries(s, dict(zip(order, vals)))


def _enumerate(s: SkewShape, counts: Sequence[int], kind: str, limit: int | None) -> list[Tableau]:
    order = _column_major(s)
    found = [_to_tableau(s, order, vals)
             for vals in _fillings(s, counts, kind == "partition", limit)]
    found.sort(key=Tableau.reading_key)
    return found


def count_ssrct(s: SkewShape, counts: Sequence[int], limit: int | None = None) -> int:
    return sum(1 for _ in _fillings(s, counts, False, limit))


def count_ssrt(s: SkewShape, counts: Sequence[int], limit: int | None = None) -> int:
    return sum(1 for _ in _fillings(s, counts, True, limit))


def enumerate_ssrct(s: SkewShape, counts: Sequence[int], limit: int | None = None) -> list[Tableau]:
    """All SSRCTs of shape ``s`` with content exactly ``counts``, sorted row-major."""
    if s.kind != "composition":
        raise ShapeMismatch("SSRCT enumeration needs a composition shape")
    return _enumerate(s, counts, "composition", limit)


def enumerate_srct(s: SkewShape, limit: int | None = None) -> list[Tableau]:
    return enumerate_ssrct(s, (1,) * s.size, limit)


def enumerate_ssrt(s: SkewShape, counts: Sequence[int], limit: int | None = None) -> list[Tableau]:
    if s.kind != "partition":
        raise ShapeMismatch("SSRT enumeration needs a partition shape")
    return _enumerate(s, counts, "partition", limit)


def enumerate_srt(s: SkewShape, limit: int | None = None) -> list[Tableau]:
    return enumerate_ssrt(s, (1,) * s.size, limit)

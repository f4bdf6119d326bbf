"""Littlewood-Richardson machinery for skew quasisymmetric Schur functions.

Coefficients in the quasisymmetric Schur basis come from counting SRCTs by
rectification. Schur-basis coefficients of symmetric skew functions come from
left and right Littlewood-Richardson fillings, which are grown along cover
chains of the poset (L_c for composition shapes, Young's lattice for
partition shapes).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cache
from typing import Literal

from .errors import NotSymmetric, SizeMismatch
from .shapes import (Composition, Partition, SkewShape, compositions, format_composition,
                     is_uniform, less_c, less_Y, partitions, reverse)
from .tableaux import (Tableau, canonical_srct, enumerate_ssrct, enumerate_srct, enumerate_ssrt,
                       validate)
from .rectify import insertion_word, rect_rc, rect_rc_fast

Basis = Literal["qs", "schur", "M"]
_SYMBOL = {"qs": "S", "schur": "s", "M": "M"}


@dataclass(frozen=True)
class Expansion:
    """Nonnegative integer combination of basis elements indexed by compositions."""

    basis: Basis
    degree: int
    terms: dict[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.terms.items() if v}
        for k in clean:
            if sum(k) != self.degree:
                raise SizeMismatch(f"index {k} does not have size {self.degree}")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __getitem__(self, index: Sequence[int]) -> int:
        return self.terms.get(tuple(index), 0)

    def to_json(self) -> dict:
        return {"basis": self.basis, "degree": self.degree,
                "terms": [{"index": list(k), "coeff": v} for k, v in self.terms.items()]}

    @classmethod
    def from_json(cls, d: dict) -> Expansion:
        return cls(d["basis"], d["degree"], {tuple(t["index"]): t["coeff"] for t in d["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        sym = _SYMBOL[self.basis]
        parts = []
        for k, v in self.terms.items():
            label = f"{sym}[{','.join(map(str, k))}]"
            parts.append(label if v == 1 else f"{v}·{label}")
        return " + ".join(parts)


def _check_size(s: SkewShape, index: Sequence[int]) -> None:
    if sum(index) != s.size:
        raise SizeMismatch(f"|{format_composition(index)}| = {sum(index)} but |{s}| = {s.size}")


def rectification_counts(s: SkewShape, limit: int | None = None) -> Counter:
    """Map each straight rectified SRCT (as a row tuple) to how many SRCTs of ``s`` reach it."""
    tally: Counter = Counter()
    for t in enumerate_srct(s, limit):
        tally[rect_rc_fast(insertion_word(t))] += 1
    return tally


def _canonical_rows(delta: Composition) -> tuple[tuple[int, ...], ...]:
    return canonical_srct(delta).rows


def nclr_coefficient(s: SkewShape, delta: Sequence[int]) -> int:
    """Number of SRCTs of shape ``s`` rectifying to the canonical SRCT of ``delta``."""
    delta = tuple(delta)
    _check_size(s, delta)
    target = canonical_srct(delta)
    return sum(1 for t in enumerate_srct(s) if rect_rc(t) == target)


def nclr_witnesses(s: SkewShape, delta: Sequence[int]) -> list[Tableau]:
    delta = tuple(delta)
    _check_size(s, delta)
    target = canonical_srct(delta)
    return [t for t in enumerate_srct(s) if rect_rc(t) == target]


def qs_expansion(s: SkewShape, limit: int | None = None) -> Expansion:
    """Expansion in the quasisymmetric Schur basis, from one pass over the SRCTs."""
    tally = rectification_counts(s, limit)
    terms = {}
    for delta in compositions(s.size):
        c = tally.get(_canonical_rows(delta), 0)
        if c:
            terms[delta] = c
    return Expansion("qs", s.size, terms)


# --- LR fillings ---------------------------------------------------------

def _grow(s: SkewShape, counts: Sequence[int],
          group_ok: Callable[[int, list[int], list[int]], bool],
          step_ok: Callable[[int, int, int, list[int]], bool] | None = None) -> Iterator[Tableau]:
    """Grow fillings of ``s`` from its inner shape along poset covers.

    Values are placed from ``len(counts)`` down to 1, ``counts[v-1]`` cells
    of value ``v`` each, in strictly increasing column order within a value.
    ``step_ok(v, k, col, higher_cols)`` vets the ``k``-th cell of value ``v``
    (0-based) against the columns of value ``v + 1``; ``group_ok(v, cols,
    higher_cols)`` vets a completed group. Results are yielded only when the
    final shape is ``s`` and the filling passes its validator.
    """
    composition_kind = s.kind == "composition"
    if composition_kind:
        # Rows indexed from the bottom: L_c covers prepend rows at the top.
        target = list(reversed(s.outer))
        lengths = list(reversed(s.inner))
    else:
        target = list(s.outer)
        lengths = list(s.inner)
    cells: dict[tuple[int, int], int] = {}
    cols_by_value: dict[int, list[int]] = {}

    def shape_now() -> tuple[int, ...]:
        return tuple(reversed(lengths)) if composition_kind else tuple(lengths)

    def reachable() -> bool:
        now = shape_now()
        return less_c(now, s.outer) if composition_kind else less_Y(now, s.outer)

    def covers() -> list[tuple[int, int]]:
        """(row, col) of each cell a cover can add, sorted by column."""
        out = []
        seen = set()
        rows = range(len(lengths) - 1, -1, -1) if composition_kind else range(len(lengths))
        for r in rows:  # topmost row first
            if lengths[r] not in seen:
                out.append((r, lengths[r] + 1))
            seen.add(lengths[r])
        out.append((len(lengths), 1))
        return sorted(out, key=lambda rc: rc[1])

    def finish() -> Tableau:
        nrows = len(lengths)
        entries = {}
        for (r, c), v in cells.items():
            row = nrows - r if composition_kind else r + 1
            entries[(row, c)] = v
        return Tableau.from_entries(s, entries)

    def place(v: int, k: int, last_col: int) -> Iterator[Tableau]:
        if v == 0:
            if lengths == target:
                t = finish()
                if validate(t):
                    yield t
            return
        if k == counts[v - 1]:
            cols = cols_by_value.get(v, [])
            if group_ok(v, cols, cols_by_value.get(v + 1, [])):
                yield from place(v - 1, 0, 0)
            return
        higher = cols_by_value.get(v + 1, [])
        for r, c in covers():
            if c <= last_col:
                continue
            if step_ok is not None and not step_ok(v, k, c, higher):
                continue
            new_row = r == len(lengths)
            if new_row:
                lengths.append(1)
            else:
                lengths[r] += 1
            if reachable():
                cells[(r, c)] = v
                cols_by_value.setdefault(v, []).append(c)
                yield from place(v, k + 1, c)
                cols_by_value[v].pop()
                del cells[(r, c)]
            if new_row:
                lengths.pop()
            else:
                lengths[r] -= 1

    if sum(counts) != s.size:
        return
    yield from place(len(counts), 0, 0)


def _left_step(v: int, k: int, col: int, higher: list[int]) -> bool:
    # The k-th v from the left is weakly left of the k-th (v+1) from the left.
    return k >= len(higher) or col <= higher[k]


def _right_group(v: int, cols: list[int], higher: list[int]) -> bool:
    # The k-th (v+1) from the right is weakly right of the k-th v from the right.
    mine = sorted(cols, reverse=True)
    theirs = sorted(higher, reverse=True)
    return all(h >= m for m, h in zip(mine, theirs))


def _always(*_args) -> bool:
    return True


def _sorted(ts: Iterator[Tableau]) -> list[Tableau]:
    return sorted(ts, key=Tableau.reading_key)


def enumerate_lr_left(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    """Left LR fillings of ``s`` with content ``nu`` (either shape kind)."""
    nu = tuple(nu)
    _check_size(s, nu)
    return _sorted(_grow(s, nu, _always, _left_step))


def enumerate_lr_right_grown(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    """Right LR fillings of ``s`` with content ``reverse(nu)``, grown along covers."""
    nu = tuple(nu)
    _check_size(s, nu)
    return _sorted(_grow(s, reverse(nu), _right_group))


def right_reading_ok(t: Tableau) -> bool:
    """Read columns right to left, each column largest to smallest; every
    prefix must contain at least as many ``i+1`` as ``i``."""
    top = max(t.entries().values(), default=0)
    seen: Counter = Counter()
    for col in range(t.shape.num_columns, 0, -1):
        for v in sorted(t.column(col), reverse=True):
            seen[v] += 1
            if v < top and seen[v] > seen[v + 1]:
                return False
    return True


def enumerate_lr_right_filtered(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    """Right LR fillings as the SSRCTs of content ``reverse(nu)`` passing the reading test."""
    nu = tuple(nu)
    _check_size(s, nu)
    if s.kind == "composition":
        pool = enumerate_ssrct(s, reverse(nu))
    else:
        pool = enumerate_ssrt(s, reverse(nu))
    return [t for t in pool if right_reading_ok(t)]


def enumerate_lrrct_left(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    return enumerate_lr_left(s, nu)


def enumerate_lrrct_right(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    return enumerate_lr_right_filtered(s, nu)


def enumerate_lrrt_left(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    return enumerate_lr_left(s, nu)


def enumerate_lrrt_right(s: SkewShape, nu: Sequence[int]) -> list[Tableau]:
    return enumerate_lr_right_filtered(s, nu)


def _filling_counts(s: SkewShape, count: Callable[[SkewShape, Partition], int]) -> Expansion:
    return Expansion("schur", s.size, {nu: count(s, nu) for nu in partitions(s.size)})


@cache
def _symmetric(s: SkewShape) -> bool:
    from .functions import is_symmetric, skew_qschur_M
    return is_symmetric(skew_qschur_M(s))


def _require_symmetric(s: SkewShape) -> None:
    if not _symmetric(s):
        hint = "" if is_uniform(s) else " (its upper rows are not all the same length)"
        raise NotSymmetric(f"the skew function of {s} is not symmetric{hint}")


def schur_expansion_left(s: SkewShape, force: bool = False) -> Expansion:
    """Schur expansion of a symmetric skew function by counting left LR fillings.

    With ``force=True`` the symmetry check is skipped and the raw filling
    counts are returned, which need not be a Schur expansion of anything.
    """
    if not force:
        _require_symmetric(s)
    return _filling_counts(s, lambda s, nu: len(enumerate_lr_left(s, nu)))


def schur_expansion_right(s: SkewShape, force: bool = False) -> Expansion:
    if not force:
        _require_symmetric(s)
    return _filling_counts(s, lambda s, nu: len(enumerate_lr_right_filtered(s, nu)))


def classical_lr_expansion(s: SkewShape) -> Expansion:
    """Schur expansion of an ordinary skew Schur function via left LR reverse tableaux."""
    if s.kind != "partition":
        raise ValueError("classical expansion needs a partition shape")
    return _filling_counts(s, lambda s, nu: len(enumerate_lr_left(s, nu)))


def row_filling_composition(s: SkewShape) -> Composition:
    """Cell counts of the nonempty rows, top to bottom."""
    counts = (len(s.row_cells(i)) for i in range(1, len(s.outer) + 1))
    return tuple(c for c in counts if c)

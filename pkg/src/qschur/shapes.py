"""Compositions, partitions, the posets L_c and L_Y, and skew shapes.

Compositions and partitions are plain tuples of positive ints; ``()`` is the
empty composition. Cells are ``(row, col)`` pairs, 1-indexed from the top-left.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cache
from itertools import permutations
from typing import Literal

from .errors import NotComparable

Composition = tuple[int, ...]
Partition = tuple[int, ...]
Cell = tuple[int, int]
ShapeKind = Literal["composition", "partition"]


def composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def partition(parts: Iterable[int]) -> Partition:
    parts = composition(parts)
    if not is_partition(parts):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def reverse(c: Sequence[int]) -> Composition:
    return tuple(reversed(c))


def sort_to_partition(c: Sequence[int]) -> Partition:
    """The partition obtained by sorting the parts of ``c`` decreasingly."""
    return tuple(sorted(c, reverse=True))


def transpose(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def rearrangements(p: Sequence[int]) -> list[Composition]:
    """Distinct compositions whose parts sort to ``p``, in lexicographic order."""
    return sorted(set(permutations(p)))


def covers_Lc(c: Sequence[int]) -> set[Composition]:
    c = tuple(c)
    out = {(1,) + c}
    seen = set()
    for k, part in enumerate(c):
        if part not in seen:
            out.add(c[:k] + (part + 1,) + c[k + 1:])
        seen.add(part)
    return out


def covers_LY(p: Sequence[int]) -> set[Partition]:
    p = tuple(p)
    out = {p + (1,)}
    seen = set()
    for k, part in enumerate(p):
        if part not in seen:
            out.add(p[:k] + (part + 1,) + p[k + 1:])
        seen.add(part)
    return out


def _bottom_contained(b: Composition, a: Composition) -> bool:
    # Rows counted from the bottom never shrink along L_c covers.
    if len(b) > len(a):
        return False
    offset = len(a) - len(b)
    return all(bp <= a[offset + i] for i, bp in enumerate(b))


@cache
def less_c(b: Composition, a: Composition) -> bool:
    """``b <=_c a`` in the reverse composition poset (reflexive)."""
    if b == a:
        return True
    if sum(b) >= sum(a) or not _bottom_contained(b, a):
        return False
    return any(less_c(c, a) for c in covers_Lc(b))


def less_Y(m: Sequence[int], l: Sequence[int]) -> bool:
    """Containment of Young diagrams, i.e. ``m <=_Y l``."""
    if len(m) > len(l):
        return False
    return all(mp <= l[i] for i, mp in enumerate(m))


@dataclass(frozen=True)
class SkewShape:
    """A validated skew shape.

    For ``kind="composition"`` this is ``outer//inner`` with the inner
    composition drawn in the bottom-left corner; for ``kind="partition"`` it
    is the ordinary skew diagram ``outer/inner`` with the inner partition
    drawn top-left.
    """

    outer: Composition
    inner: Composition = ()
    kind: ShapeKind = "composition"
    cells: frozenset[Cell] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        outer, inner = composition(self.outer), composition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if self.kind == "composition":
            if not less_c(inner, outer):
                raise NotComparable(f"{format_composition(inner)} is not below "
                                    f"{format_composition(outer)} in L_c")
        elif self.kind == "partition":
            if not (is_partition(outer) and is_partition(inner) and less_Y(inner, outer)):
                raise NotComparable(f"{format_composition(inner)} is not contained in "
                                    f"{format_composition(outer)}")
        else:
            raise ValueError(f"unknown shape kind {self.kind!r}")
        object.__setattr__(self, "cells", frozenset(
            (i + 1, j) for i in range(len(outer))
            for j in range(self.inner_length(i + 1) + 1, outer[i] + 1)))

    @property
    def upper_rows(self) -> int:
        """Number of rows above the inner shape (composition shapes only)."""
        return len(self.outer) - len(self.inner)

    def inner_length(self, row: int) -> int:
        """Number of inner cells in ``row`` (1-indexed)."""
        if self.kind == "composition":
            k = row - 1 - self.upper_rows
            return self.inner[k] if k >= 0 else 0
        return self.inner[row - 1] if row - 1 < len(self.inner) else 0

    def in_inner(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.outer) and 1 <= j <= self.inner_length(i)

    def in_outer(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.outer) and 1 <= j <= self.outer[i - 1]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def num_columns(self) -> int:
        return max(self.outer, default=0)

    def row_cells(self, row: int) -> list[Cell]:
        return [(row, j) for j in range(self.inner_length(row) + 1, self.outer[row - 1] + 1)]

    def column_cells(self, col: int) -> list[Cell]:
        """Cells of the shape in column ``col``, top to bottom."""
        return [(i, col) for i in range(1, len(self.outer) + 1) if (i, col) in self.cells]

    def __str__(self):
        sep = "//" if self.kind == "composition" else "/"
        return f"{format_composition(self.outer)}{sep}{format_composition(self.inner)}"


def make_skew(a: Sequence[int], b: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(a), tuple(b), "composition")


def make_skew_partition(l: Sequence[int], m: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(l), tuple(m), "partition")


def is_uniform(s: SkewShape) -> bool:
    """True iff the rows above the inner shape all have equal length.

    With no upper rows the shape counts as uniform.
    """
    upper = s.outer[: s.upper_rows]
    return len(set(upper)) <= 1


def skew_shapes(max_size: int, min_size: int = 0) -> Iterator[SkewShape]:
    """Every composition skew shape with ``min_size <= |outer| <= max_size``.

    Order is frozen: by ``|outer|``, then outer lexicographically, then inner
    lexicographically.
    """
    smaller = sorted(c for n in range(max_size + 1) for c in compositions(n))
    for n in range(min_size, max_size + 1):
        for a in compositions(n):
            for b in smaller:
                if sum(b) <= n and less_c(b, a):
                    yield SkewShape(a, b)


def parse_composition(text: str) -> Composition:
    """Parse ``"2.4.3.2"`` (or ``"-"`` for the empty composition)."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return composition(int(p) for p in text.split("."))
    except ValueError as exc:
        raise ValueError(f"bad composition {text!r}: expected parts like 2.4.3.2 or '-'") from exc


def format_composition(c: Sequence[int]) -> str:
    return ".".join(map(str, c)) if c else "-"


def shape_to_json(s: SkewShape) -> dict:
    d = {"outer": list(s.outer), "inner": list(s.inner)}
    if s.kind != "composition":
        d["kind"] = s.kind
    return d


def shape_from_json(d: dict) -> SkewShape:
    return SkewShape(tuple(d["outer"]), tuple(d.get("inner", ())), d.get("kind", "composition"))

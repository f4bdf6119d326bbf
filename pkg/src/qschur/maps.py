"""The column-sorting bijection between SSRCTs with inner shape ``beta`` and
SSRTs with inner shape ``sort(beta)``, and its inverse."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InvalidInput
from .shapes import Composition, SkewShape, sort_to_partition, transpose
from .tableaux import Tableau, ssrct_violation, ssrt_violation


def rho(t: Tableau, beta: Sequence[int]) -> Tableau:
    """Sort each column decreasingly and top-justify it on ``sort(beta)``."""
    beta = tuple(beta)
    if t.shape.kind != "composition" or t.shape.inner != beta:
        raise InvalidInput(f"expected an SSRCT with inner shape {beta}, got shape {t.shape}")
    reason = ssrct_violation(t)
    if reason is not None:
        raise InvalidInput(f"not an SSRCT: {reason} condition fails", reason)
    mu = sort_to_partition(beta)
    mu_cols = transpose(mu)
    ncols = t.shape.num_columns
    columns = []
    for c in range(1, ncols + 1):
        start = mu_cols[c - 1] if c <= len(mu_cols) else 0
        columns.append((start, sorted(t.column(c), reverse=True)))
    heights = [start + len(vals) for start, vals in columns]
    lam = transpose([h for h in heights if h])
    entries = {}
    for c, (start, vals) in enumerate(columns, 1):
        for r, v in enumerate(vals, start + 1):
            entries[(r, c)] = v
    return Tableau.from_entries(SkewShape(lam, mu, "partition"), entries)


def rho_inv(T: Tableau, beta: Sequence[int]) -> Tableau:
    """Rebuild the SSRCT with inner shape ``beta`` whose columns sort to ``T``."""
    beta = tuple(beta)
    mu = sort_to_partition(beta)
    if T.shape.kind != "partition" or T.shape.inner != mu:
        raise InvalidInput(f"expected an SSRT with inner shape {mu}, got shape {T.shape}")
    reason = ssrt_violation(T)
    if reason is not None:
        raise InvalidInput(f"not an SSRT: {reason} condition fails", reason)

    first = sorted(T.column(1))
    # Each row is [inner_length, entries...]; new rows sit above beta's rows.
    rows: list[tuple[int, list[int]]] = [(0, [v]) for v in first]
    rows += [(b, []) for b in beta]
    for c in range(2, T.shape.num_columns + 1):
        for v in sorted(T.column(c), reverse=True):
            for inner, vals in rows:
                if inner + len(vals) != c - 1:
                    continue
                if vals and vals[-1] >= v:
                    break
                if not vals and inner == c - 1:
                    break
            else:
                raise InvalidInput(f"no row accepts {v} in column {c}")
            vals.append(v)
    outer: Composition = tuple(inner + len(vals) for inner, vals in rows)
    shape = SkewShape(outer, beta, "composition")
    table = tuple(tuple([None] * inner + vals) for inner, vals in rows)
    return Tableau(shape, table)

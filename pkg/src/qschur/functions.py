"""Exact arithmetic on homogeneous quasisymmetric functions in the monomial basis.

Every function here is a :class:`QSymVector`: integer coefficients on ``M_gamma``
for compositions ``gamma`` of a fixed degree. Tableau generating functions are
realized by counting tableaux of each content, so equality of two functions is
equality of their coefficient dicts.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cache

from .errors import NotSymmetric, SizeMismatch
from .lr import Expansion
from .shapes import (Composition, Partition, SkewShape, compositions, make_skew,
                     make_skew_partition, rearrangements, sort_to_partition)
from .tableaux import count_ssrct, count_ssrt


@dataclass(frozen=True)
class QSymVector:
    degree: int
    coeffs: Mapping[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.coeffs.items() if v}
        for k in clean:
            if sum(k) != self.degree:
                raise SizeMismatch(f"M index {k} does not have size {self.degree}")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, gamma: Sequence[int]) -> int:
        return self.coeffs.get(tuple(gamma), 0)

    def __add__(self, other: QSymVector) -> QSymVector:
        self._same_degree(other)
        out = defaultdict(int, self.coeffs)
        for k, v in other.coeffs.items():
            out[k] += v
        return QSymVector(self.degree, out)

    def __sub__(self, other: QSymVector) -> QSymVector:
        return self + other.scale(-1)

    def scale(self, c: int) -> QSymVector:
        return QSymVector(self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c: int) -> QSymVector:
        return self.scale(c)

    def _same_degree(self, other: QSymVector) -> None:
        if self.degree != other.degree:
            raise SizeMismatch(f"degrees {self.degree} and {other.degree} differ")

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self) -> dict:
        return {"basis": "M", "degree": self.degree,
                "terms": [{"index": list(k), "coeff": v} for k, v in self.coeffs.items()]}

    @classmethod
    def from_json(cls, d: dict) -> QSymVector:
        return cls(d["degree"], {tuple(t["index"]): t["coeff"] for t in d["terms"]})

    @classmethod
    def zero(cls, degree: int) -> QSymVector:
        return cls(degree, {})


def vsum(vectors: Iterable[QSymVector], degree: int) -> QSymVector:
    total = QSymVector.zero(degree)
    for v in vectors:
        total = total + v
    return total


def skew_qschur_M(s: SkewShape, limit: int | None = None) -> QSymVector:
    """M-expansion of the skew quasisymmetric Schur function of ``s``: the
    coefficient of ``M_gamma`` counts SSRCTs of content ``gamma``."""
    if s.kind != "composition":
        raise ValueError("skew_qschur_M needs a composition shape")
    return QSymVector(s.size, {g: count_ssrct(s, g, limit) for g in compositions(s.size)})


@cache
def qschur_M(delta: Composition) -> QSymVector:
    return skew_qschur_M(make_skew(tuple(delta)))


def skew_schur_M(s: SkewShape) -> QSymVector:
    if s.kind != "partition":
        raise ValueError("skew_schur_M needs a partition shape")
    return QSymVector(s.size, {g: count_ssrt(s, g) for g in compositions(s.size)})


@cache
def schur_M(lam: Partition) -> QSymVector:
    return skew_schur_M(make_skew_partition(tuple(lam)))


def monomial_M(lam: Partition) -> QSymVector:
    """``m_lambda`` as the sum of ``M_gamma`` over rearrangements of ``lambda``."""
    return QSymVector(sum(lam), {g: 1 for g in rearrangements(lam)})


def is_symmetric(v: QSymVector) -> bool:
    """Coefficients are constant on each rearrangement class."""
    classes: dict[Partition, set[int]] = defaultdict(set)
    for g in compositions(v.degree):
        classes[sort_to_partition(g)].add(v[g])
    return all(len(vals) == 1 for vals in classes.values())


def monomial_coefficients(v: QSymVector) -> dict[Partition, int]:
    """Coordinates in the ``m_lambda`` basis of a symmetric vector."""
    if not is_symmetric(v):
        raise NotSymmetric("vector is not symmetric")
    return {lam: c for lam, c in v.coeffs.items() if list(lam) == sorted(lam, reverse=True)}


def schur_decompose(v: QSymVector) -> Expansion:
    """Greedy Schur expansion of a symmetric vector.

    Repeatedly peels ``c * s_lambda`` for the lexicographically largest
    partition ``lambda`` still carrying coefficient ``c``. Raises
    ``ValueError`` if a negative coefficient appears, i.e. the vector is not
    Schur positive.
    """
    if not is_symmetric(v):
        raise NotSymmetric("vector is not symmetric")
    rest = v
    terms: dict[Partition, int] = {}
    while rest:
        lam = max(monomial_coefficients(rest))
        c = rest[lam]
        if c < 0:
            raise ValueError(f"negative Schur coefficient {c} at {lam}")
        terms[lam] = c
        rest = rest - schur_M(lam).scale(c)
    return Expansion("schur", v.degree, terms)


def schur_coefficient_if_symmetric(s: SkewShape, nu: Sequence[int]) -> int:
    """Coefficient of ``s_nu`` in a symmetric skew function, read off as the
    quasisymmetric Schur coefficient of ``S_nu``."""
    from .lr import nclr_coefficient

    if not is_symmetric(skew_qschur_M(s)):
        raise NotSymmetric(f"the skew function of {s} is not symmetric")
    return nclr_coefficient(s, tuple(nu))


def expansion_to_M(e: Expansion) -> QSymVector:
    """Realize a QS- or Schur-basis expansion as an M-vector."""
    basis = {"qs": qschur_M, "schur": schur_M}[e.basis]
    return vsum((basis(k).scale(c) for k, c in e.terms.items()), e.degree)

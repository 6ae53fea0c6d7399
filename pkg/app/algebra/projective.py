"""
Projective points of F_q^d and the standard symplectic form
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from app.algebra.finite_field import Field, FieldElement
from app.core.errors import DimensionMismatchError

Vector = Tuple[int, ...]


def vector_add(F: Field, x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(F.add(a, b) for a, b in zip(x, y))


def vector_scale(F: Field, c: int, x: Sequence[int]) -> Vector:
    return tuple(F.mul(c, a) for a in x)


@dataclass(frozen=True)
class ProjectivePoint:
    """A 1-dimensional subspace, represented with first nonzero coordinate 1"""

    field: Field
    coords: Vector

    @classmethod
    def from_vector(cls, F: Field, x: Sequence[int]) -> "ProjectivePoint":
        return normalize(F, x)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    def label(self) -> str:
        return "(" + ",".join(self.field.format(c) for c in self.coords) + ")"

    def __str__(self) -> str:
        return self.label()


def normalize(F: Field, x: Sequence[int]) -> ProjectivePoint:
    """Scale a nonzero vector so its first nonzero coordinate is 1"""
    for c in x:
        if c:
            inv = F.inv(c)
            return ProjectivePoint(F, vector_scale(F, inv, x))
    raise ValueError("the zero vector has no projective point")


def projective_points(F: Field, d: int) -> List[ProjectivePoint]:
    """All points of PG(d-1, q): leading 1 at position i, any tail after it"""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    points = []
    for lead in range(d):
        for tail in itertools.product(range(F.q), repeat=d - lead - 1):
            points.append(ProjectivePoint(F, (0,) * lead + (1,) + tail))
    return points


@dataclass(frozen=True)
class SymplecticForm:
    """x^t M y with M block diagonal in blocks [[0,-1],[1,0]]"""

    field: Field
    r: int

    @property
    def dimension(self) -> int:
        return 2 * self.r

    def matrix(self) -> List[List[FieldElement]]:
        F = self.field
        d = self.dimension
        m = [[F.zero] * d for _ in range(d)]
        for i in range(self.r):
            m[2 * i][2 * i + 1] = -F.one
            m[2 * i + 1][2 * i] = F.one
        return m

    def pair_values(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Raw integer value of x^t M y"""
        F = self.field
        total = 0
        for i in range(0, len(x), 2):
            term = F.sub(F.mul(x[i + 1], y[i]), F.mul(x[i], y[i + 1]))
            total = F.add(total, term)
        return total


VectorLike = Union[ProjectivePoint, Sequence[int], Sequence[FieldElement]]


def _as_values(v: VectorLike) -> Vector:
    if isinstance(v, ProjectivePoint):
        return v.coords
    return tuple(c.value if isinstance(c, FieldElement) else int(c) for c in v)


def symplectic_pair(M: SymplecticForm, x: VectorLike, y: VectorLike) -> FieldElement:
    xs, ys = _as_values(x), _as_values(y)
    d = M.dimension
    if len(xs) != d or len(ys) != d:
        raise DimensionMismatchError(f"expected vectors of length {d}, got {len(xs)} and {len(ys)}")
    return FieldElement(M.field, M.pair_values(xs, ys))

"""Integer sublattices of Z^2, finite shapes, and lattice tilings.

A lattice is the integer span of two independent row vectors.  A shape
is a finite set of grid cells containing the origin (the origin is the
designated center cell).  When the shape is a complete set of coset
representatives of Z^2 modulo the lattice, translating it by all
lattice vectors tiles the plane; that pairing is what the rest of the
package folds sequences onto.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .numtheory import xgcd

Point = tuple[int, int]


def _hnf_rows(rows: Iterable[Point]) -> tuple[Point, Point]:
    """Upper-triangular basis ((a, b), (0, d)) of the span of the rows.

    a > 0, d > 0, 0 <= b < d.  Raises if the rows do not span rank 2.
    """
    a, b = 0, 0
    d = 0
    for x, y in rows:
        if x == 0:
            d = math.gcd(d, y)
        elif a == 0:
            a, b = x, y
        else:
            g, u, v = xgcd(a, x)
            leftover = (a // g) * y - (x // g) * b
            a, b = g, u * b + v * y
            d = math.gcd(d, leftover)
    if a == 0 or d == 0:
        raise ValueError("rows do not span a rank-2 lattice")
    if a < 0:
        a, b = -a, -b
    return (a, b % d), (0, d)


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^2 spanned by the two rows of an integer matrix."""

    rows: tuple[Point, Point]
    hnf: tuple[Point, Point] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(c) for c in row) for row in self.rows)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError(f"expected a 2x2 integer matrix, got {self.rows!r}")
        (v11, v12), (v21, v22) = rows
        if v11 * v22 - v12 * v21 == 0:
            raise ValueError(f"basis rows {rows} are linearly dependent")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "hnf", _hnf_rows(rows))

    @property
    def volume(self) -> int:
        (v11, v12), (v21, v22) = self.rows
        return abs(v11 * v22 - v12 * v21)

    def coset_key(self, point: Point) -> Point:
        """Canonical label of the coset of point in Z^2 modulo the lattice."""
        (h11, h12), (_, h22) = self.hnf
        x, y = point
        q, r = divmod(x, h11)
        return r, (y - q * h12) % h22

    def __contains__(self, point: Point) -> bool:
        return self.coset_key(point) == (0, 0)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "Lattice":
        return cls(tuple(tuple(int(c) for c in row) for row in data))


@dataclass(frozen=True)
class Shape:
    """Finite set of grid cells; the origin cell is the center."""

    points: frozenset[Point]

    def __post_init__(self) -> None:
        pts = frozenset((int(x), int(y)) for x, y in self.points)
        if (0, 0) not in pts:
            raise ValueError("a shape must contain the origin")
        object.__setattr__(self, "points", pts)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Shape":
        if width < 1 or height < 1:
            raise ValueError(f"rectangle sides must be positive, got {width}x{height}")
        return cls(frozenset((x, y) for x in range(width) for y in range(height)))

    @property
    def size(self) -> int:
        return len(self.points)

    def bounds(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) of the cells."""
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in sorted(self.points)]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "Shape":
        return cls(frozenset(tuple(int(c) for c in p) for p in data))


def fundamental_shape(lattice: Lattice) -> Shape:
    """The rectangular transversal read off the triangular basis.

    With basis ((h11, h12), (0, h22)), every point reduces uniquely into
    [0, h11) x [0, h22), so the rectangle always tiles with the lattice.
    """
    (h11, _), (_, h22) = lattice.hnf
    return Shape.rectangle(h11, h22)


def is_lattice_tiling(lattice: Lattice, shape: Shape) -> bool:
    """Whether the shape is a complete set of coset representatives."""
    if shape.size != lattice.volume:
        return False
    keys = {lattice.coset_key(p) for p in shape.points}
    return len(keys) == shape.size


class Tiling:
    """A validated (lattice, shape) tiling pair with point reduction.

    Reduction sends any grid point to the unique cell of the shape in
    its coset; the matching lattice point (the "center" of the copy the
    point fell in) is the difference.
    """

    def __init__(self, lattice: Lattice, shape: Shape):
        if not is_lattice_tiling(lattice, shape):
            raise ValueError(
                f"shape of size {shape.size} does not tile with lattice {lattice.rows}"
                f" (volume {lattice.volume})"
            )
        self.lattice = lattice
        self.shape = shape
        self.representatives: dict[Point, Point] = {
            lattice.coset_key(p): p for p in shape.points
        }

    @property
    def size(self) -> int:
        return self.shape.size

    def key(self, point: Point) -> Point:
        return self.lattice.coset_key(point)

    def representative(self, point: Point) -> Point:
        """The cell of the shape congruent to the point."""
        return self.representatives[self.lattice.coset_key(point)]

    def reduce(self, point: Point) -> tuple[Point, Point]:
        """Split point into (center, offset): center in the lattice,
        offset in the shape, point == center + offset."""
        offset = self.representative(point)
        return (point[0] - offset[0], point[1] - offset[1]), offset


@dataclass(frozen=True)
class PeriodPair:
    """Two independent translation vectors and the volume they span."""

    vectors: tuple[Point, Point]

    @property
    def volume(self) -> int:
        (a, b), (c, d) = self.vectors
        return abs(a * d - b * c)


def minimal_period(lattice: Lattice, shape: Shape, dots: Iterable[Point]) -> PeriodPair:
    """Basis of the full translation-symmetry lattice of the pattern.

    The pattern is the doubly periodic 0/1 array obtained by stamping
    the dots into every lattice translate of the shape.  The returned
    lattice contains the input lattice, so its volume divides the input
    volume; it also divides the volume of any pair of symmetry vectors.
    """
    tiling = Tiling(lattice, shape)
    dot_list = [(int(x), int(y)) for x, y in dots]
    for p in dot_list:
        if p not in shape.points:
            raise ValueError(f"dot {p} lies outside the shape")
    dot_keys = frozenset(tiling.key(p) for p in dot_list)
    # The shape is a transversal, so its cells enumerate every candidate
    # translation class exactly once.  Translating by t permutes cosets,
    # hence containment of the shifted key set implies equality.
    symmetries = []
    for tx, ty in shape.points:
        if all(tiling.key((x + tx, y + ty)) in dot_keys for x, y in dot_list):
            symmetries.append((tx, ty))
    rows = list(lattice.rows) + symmetries
    return PeriodPair(_hnf_rows(rows))

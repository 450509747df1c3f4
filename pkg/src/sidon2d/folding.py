"""Folding a one-dimensional sequence onto a tiled shape and back.

Starting at the origin and repeatedly stepping by a fixed direction,
reducing back into the shape through the lattice whenever the step
leaves it, visits a trail of cells.  When the trail covers the whole
shape without repeats, the direction "defines a folding": the trail is
a bijection between sequence positions 0..|S|-1 and shape cells, and
fold/unfold transport symbols across it in both directions.
"""

from __future__ import annotations

import math
from typing import Hashable, Mapping, Sequence

from .lattices import Lattice, Point, Tiling
from .numtheory import euler_phi

Direction = tuple[int, int]


def _check_direction(direction: Direction) -> Direction:
    d1, d2 = int(direction[0]), int(direction[1])
    if (d1, d2) == (0, 0):
        raise ValueError("direction must be a nonzero vector")
    return d1, d2


def folded_row(tiling: Tiling, direction: Direction) -> tuple[list[Point], bool]:
    """Walk |S| steps from the origin, reducing into the shape each time.

    Returns the visited cells in order and whether they are all distinct.
    The walk satisfies row[t] == reduction of (t*d1, t*d2), so repeats,
    once they appear, just cycle.
    """
    d1, d2 = _check_direction(direction)
    reduce_ = tiling.representative
    current = (0, 0)
    row = [current]
    for _ in range(tiling.size - 1):
        current = reduce_((current[0] + d1, current[1] + d2))
        row.append(current)
    return row, len(set(row)) == tiling.size


def defines_folding(tiling: Tiling, direction: Direction) -> bool:
    """Whether the folded row visits every cell of the shape exactly once."""
    row, complete = folded_row(tiling, direction)
    if complete:
        d1, d2 = direction
        last = row[-1]
        # a complete trail must re-enter at the origin on the next step
        assert tiling.representative((last[0] + d1, last[1] + d2)) == (0, 0)
    return complete


def defines_folding_gcd(lattice: Lattice, size: int, direction: Direction) -> bool:
    """Closed-form folding test from the basis entries alone.

    With basis rows (v11, v12), (v21, v22) and tau = gcd(|d1|, |d2|),
    the direction folds a shape of the lattice's volume if and only if
    the two cross-determinants d1*v22 - d2*v21 and d2*v11 - d1*v12 are
    coprime after dividing out tau, and tau is coprime to the size.
    Agreement with the walk-based test is part of the test suite.
    """
    d1, d2 = _check_direction(direction)
    if size <= 0 or size != lattice.volume:
        raise ValueError(f"size {size} does not match the lattice volume {lattice.volume}")
    (v11, v12), (v21, v22) = lattice.rows
    tau = math.gcd(d1, d2)
    a = abs(d1 * v22 - d2 * v21) // tau
    b = abs(d2 * v11 - d1 * v12) // tau
    return math.gcd(a, b) == 1 and math.gcd(tau, size) == 1


def folding_directions(tiling: Tiling) -> list[Direction]:
    """All folding directions, one representative per residue class.

    Directions congruent modulo the lattice trace the same row, so
    candidates are deduplicated by coset; representatives are the
    lexicographically smallest in [0, |S|)^2.  Whenever the result is
    nonempty it has exactly phi(|S|) entries.
    """
    n = tiling.size
    if n == 1:
        return [(0, 1)]  # every direction folds the single cell
    out = []
    seen: set[Point] = set()
    for d1 in range(n):
        for d2 in range(n):
            if (d1, d2) == (0, 0):
                continue
            key = tiling.key((d1, d2))
            if key in seen:
                continue
            seen.add(key)
            if defines_folding(tiling, (d1, d2)):
                out.append((d1, d2))
    assert not out or len(out) == euler_phi(n)
    return out


def fold(
    seq: Sequence[Hashable], tiling: Tiling, direction: Direction
) -> dict[Point, Hashable]:
    """Lay a length-|S| sequence onto the shape along the folded row."""
    row, complete = folded_row(tiling, direction)
    if not complete:
        raise ValueError(f"direction {direction} does not define a folding")
    if len(seq) != tiling.size:
        raise ValueError(f"sequence length {len(seq)} != shape size {tiling.size}")
    return {cell: seq[t] for t, cell in enumerate(row)}


def unfold(
    array: Mapping[Point, Hashable], tiling: Tiling, direction: Direction
) -> list[Hashable]:
    """Read the shape's cells back into a sequence along the folded row."""
    row, complete = folded_row(tiling, direction)
    if not complete:
        raise ValueError(f"direction {direction} does not define a folding")
    if set(array) != tiling.shape.points:
        raise ValueError("array cells do not match the shape")
    return [array[cell] for cell in row]

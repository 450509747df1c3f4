"""Distinct difference configurations and their doubly periodic form.

A dot pattern is a DDC when the difference vectors between distinct
dots are pairwise distinct.  Stamping the dots into every lattice
translate of a tiling shape extends the pattern doubly periodically;
the periodic analogue asks the differences to stay distinct after
reduction modulo the lattice, which is the property that survives
unfolding into a Sidon sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .fields import Field, make_field
from .folding import Direction, defines_folding, fold, unfold
from .groups import SidonSequence, sidon_upper_bound, verify_sidon
from .lattices import Lattice, Point, Shape, Tiling
from .numtheory import prime_power
from .sidon import _max_distinct_difference_set


@dataclass(frozen=True)
class SegmentCollision:
    """Two distinct ordered dot pairs with the same difference vector."""

    difference: Point
    pair_a: tuple[Point, Point]
    pair_b: tuple[Point, Point]


def is_ddc(dots: Iterable[Point]) -> SegmentCollision | None:
    """First repeated difference vector among distinct dots, if any."""
    pts = sorted({(int(x), int(y)) for x, y in dots})
    seen: dict[Point, tuple[Point, Point]] = {}
    for a in pts:
        for b in pts:
            if a == b:
                continue
            d = (a[0] - b[0], a[1] - b[1])
            if d in seen:
                return SegmentCollision(d, seen[d], (a, b))
            seen[d] = (a, b)
    return None


@dataclass(frozen=True)
class PeriodicDdc:
    """One fundamental copy of a doubly periodic dot pattern.

    The lattice and shape must tile; the dots live on shape cells.  As
    with SidonSequence, the name states intent: whether the pattern
    really is a periodic DDC is checked separately.
    """

    lattice: Lattice
    shape: Shape
    dots: frozenset[Point]
    tiling: Tiling = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        tiling = Tiling(self.lattice, self.shape)  # raises unless it tiles
        dots = frozenset((int(x), int(y)) for x, y in self.dots)
        outside = dots - self.shape.points
        if outside:
            raise ValueError(f"dots outside the shape: {sorted(outside)}")
        object.__setattr__(self, "dots", dots)
        object.__setattr__(self, "tiling", tiling)

    @property
    def volume(self) -> int:
        return self.lattice.volume


def is_doubly_periodic_ddc(pattern: PeriodicDdc) -> SegmentCollision | None:
    """First difference collision modulo the lattice, if any.

    Differences are compared as cosets and reported as shape cells, so a
    collision here is exactly two segments that coincide in some pair of
    copies of the replicated pattern.
    """
    tiling = pattern.tiling
    seen: dict[Point, tuple[Point, Point]] = {}
    for a in sorted(pattern.dots):
        for b in sorted(pattern.dots):
            if a == b:
                continue
            d = tiling.representative((a[0] - b[0], a[1] - b[1]))
            if d in seen:
                return SegmentCollision(d, seen[d], (a, b))
            seen[d] = (a, b)
    return None


def window_ddc_violation(pattern: PeriodicDdc) -> tuple[Point, SegmentCollision] | None:
    """Scan every distinct window position for a plain-DDC violation.

    The window is the shape translated by t; the dots are those of the
    doubly periodic extension falling inside it.  Shape cells enumerate
    each window position once up to periodicity.  A pattern that passes
    the modular check always passes this one; the converse is weaker
    (a window can miss a collision that straddles copies).
    """
    tiling = pattern.tiling
    dot_keys = frozenset(tiling.key(d) for d in pattern.dots)
    for t in sorted(pattern.shape.points):
        window = [
            (x + t[0], y + t[1])
            for x, y in pattern.shape.points
            if tiling.key((x + t[0], y + t[1])) in dot_keys
        ]
        collision = is_ddc(window)
        if collision is not None:
            return t, collision
    return None


def _primitive_or_default(f: Field, alpha: int | None, name: str) -> int:
    if alpha is None:
        return f.generator
    if not f.is_primitive(alpha):
        raise ValueError(f"{name} = {alpha} is not primitive in GF({f.order})")
    return alpha


def construct_welch(p: int, alpha: int | None = None) -> PeriodicDdc:
    """Dots (i, alpha^i mod p) on a (p-1)-wide, p-tall rectangle,
    replicated by the diagonal lattice [[p-1, 0], [0, p]]."""
    pp = prime_power(p)
    if pp is None or pp[1] != 1:
        raise ValueError(f"need a prime, got {p}")
    f = make_field(p)
    alpha = _primitive_or_default(f, alpha, "alpha")
    dots = frozenset((i, f.pow(alpha, i)) for i in range(p - 1))
    return PeriodicDdc(
        Lattice(((p - 1, 0), (0, p))), Shape.rectangle(p - 1, p), dots
    )


def construct_golomb(
    q: int, alpha: int | None = None, beta: int | None = None
) -> PeriodicDdc:
    """Dots at (i, j) with alpha^i + beta^j = 1, on a (q-1) x (q-1)
    square replicated by [[q-1, 0], [0, q-1]].  q - 2 dots."""
    pp = prime_power(q)
    if pp is None or q < 3:
        raise ValueError(f"need a prime power q >= 3, got {q}")
    f = make_field(*pp)
    alpha = _primitive_or_default(f, alpha, "alpha")
    beta = _primitive_or_default(f, beta, "beta")
    dots = frozenset(
        (i, j)
        for i, j in product(range(q - 1), repeat=2)
        if f.add(f.pow(alpha, i), f.pow(beta, j)) == 1
    )
    return PeriodicDdc(
        Lattice(((q - 1, 0), (0, q - 1))), Shape.rectangle(q - 1, q - 1), dots
    )


def lower_left_dot(pattern: PeriodicDdc) -> Point:
    """The dot with minimal row, then minimal column."""
    if not pattern.dots:
        raise ValueError("pattern has no dots")
    return min(pattern.dots, key=lambda d: (d[1], d[0]))


def unfold_to_sidon(
    pattern: PeriodicDdc, direction: Direction, anchor: Point | None = None
) -> SidonSequence:
    """Read the dots off along the folded row as a subset of Z_{|S|}.

    The pattern is first translated so the anchor dot (lower-left by
    default) sits on the origin; dots pushed out of the shape re-enter
    through the lattice.
    """
    if anchor is None:
        anchor = lower_left_dot(pattern)
    elif anchor not in pattern.dots:
        raise ValueError(f"anchor {anchor} is not a dot")
    tiling = pattern.tiling
    if not defines_folding(tiling, direction):
        raise ValueError(f"direction {direction} does not define a folding")
    ax, ay = anchor
    translated = {tiling.representative((x - ax, y - ay)) for x, y in pattern.dots}
    bits = unfold({cell: cell in translated for cell in pattern.shape.points}, tiling, direction)
    return SidonSequence.from_ints(tiling.size, [t for t, b in enumerate(bits) if b])


def fold_sidon_to_ddc(
    seq: SidonSequence, lattice: Lattice, shape: Shape, direction: Direction
) -> PeriodicDdc:
    """Place a Sidon subset of Z_{|S|} onto the shape along the folded row."""
    tiling = Tiling(lattice, shape)
    if seq.group.rank != 1 or seq.group.order != tiling.size:
        raise ValueError(
            f"sequence group {seq.group.moduli} does not match shape size {tiling.size}"
        )
    if verify_sidon(seq) is not None:
        raise ValueError("sequence is not Sidon")
    members = set(seq.as_ints())
    array = fold([t in members for t in range(tiling.size)], tiling, direction)
    dots = frozenset(cell for cell, b in array.items() if b)
    return PeriodicDdc(lattice, shape, dots)


DEFAULT_DDC_SEARCH_CAP = 49


def max_ddc_dots(
    lattice: Lattice, shape: Shape, cap: int = DEFAULT_DDC_SEARCH_CAP
) -> tuple[int, tuple[Point, ...]]:
    """Exact maximum dot count of a doubly periodic DDC on the tiling.

    Backtracking over shape cells with differences tracked as cosets;
    anchored at the origin cell (translation moves any pattern onto it).
    Returns the count and the lexicographically smallest witness.
    """
    tiling = Tiling(lattice, shape)
    if tiling.size > cap:
        raise ValueError(f"volume {tiling.size} exceeds the search cap {cap}")
    candidates = sorted(shape.points)
    candidates.remove((0, 0))
    key = lattice.coset_key
    return _max_distinct_difference_set(
        (0, 0),
        candidates,
        lambda a, b: key((a[0] - b[0], a[1] - b[1])),
        sidon_upper_bound(tiling.size),
    )


def render_ascii(pattern: PeriodicDdc) -> str:
    """One fundamental copy, rows printed top to bottom: a bullet for a
    dot, a dot character for an empty cell, blank outside the shape."""
    min_x, min_y, max_x, max_y = pattern.shape.bounds()
    lines = []
    for y in range(max_y, min_y - 1, -1):
        row = []
        for x in range(min_x, max_x + 1):
            if (x, y) in pattern.dots:
                row.append("•")
            elif (x, y) in pattern.shape.points:
                row.append(".")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def pattern_to_json(pattern: PeriodicDdc) -> dict:
    return {
        "lattice": pattern.lattice.to_json(),
        "shape": pattern.shape.to_json(),
        "dots": [list(d) for d in sorted(pattern.dots)],
    }


def pattern_from_json(data: dict) -> PeriodicDdc:
    try:
        lattice = Lattice.from_json(data["lattice"])
        shape = Shape.from_json(data["shape"])
        dots = frozenset(tuple(int(c) for c in d) for d in data["dots"])
    except KeyError as missing:
        raise ValueError(f"pattern JSON is missing the {missing} key") from None
    return PeriodicDdc(lattice, shape, dots)

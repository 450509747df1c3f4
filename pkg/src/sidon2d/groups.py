"""Finite abelian groups Z_{m1} x ... x Z_{mr} and Sidon sequences over them.

A Sidon sequence is a subset whose ordered differences of distinct
elements are pairwise distinct; equivalently (and verified separately,
because the equivalence itself is a fact worth checking) all pairwise
sums with repetition are distinct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator

from .numtheory import modinv

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """A direct product of cyclic groups, given by the tuple of moduli."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if not self.moduli:
            raise ValueError("a group needs at least one cyclic factor")
        if any(m < 1 for m in self.moduli):
            raise ValueError(f"moduli must be positive: {self.moduli}")

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    def normalize(self, el: Iterable[int]) -> Element:
        t = tuple(int(c) for c in el)
        if len(t) != len(self.moduli):
            raise ValueError(f"element {t} has {len(t)} components, group has {len(self.moduli)}")
        return tuple(c % m for c, m in zip(t, self.moduli))

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Element) -> Element:
        return tuple(-x % m for x, m in zip(a, self.moduli))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def elements(self) -> Iterator[Element]:
        return product(*(range(m) for m in self.moduli))


class SidonSequence:
    """An ordered set of group elements, stored sorted and duplicate-free.

    The name records intent, not a checked property: verification is a
    separate step so that near-misses can be inspected.
    """

    def __init__(self, group: GroupSpec, elements: Iterable[Iterable[int]]):
        self.group = group
        normalized = [group.normalize(e) for e in elements]
        seen: set[Element] = set()
        for e in normalized:
            if e in seen:
                raise ValueError(f"duplicate element {e}")
            seen.add(e)
        self.elements: tuple[Element, ...] = tuple(sorted(normalized))

    @classmethod
    def from_ints(cls, modulus: int, values: Iterable[int]) -> "SidonSequence":
        return cls(GroupSpec((modulus,)), [(v,) for v in values])

    def as_ints(self) -> list[int]:
        if self.group.rank != 1:
            raise ValueError("as_ints requires a single cyclic factor")
        return [e[0] for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, el: object) -> bool:
        return el in set(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SidonSequence):
            return NotImplemented
        return self.group == other.group and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.group, self.elements))

    def __repr__(self) -> str:
        return f"SidonSequence({self.group.moduli}, {list(self.elements)})"


@dataclass(frozen=True)
class DifferenceCollision:
    """Two distinct ordered pairs with the same difference."""

    difference: Element
    pair_a: tuple[Element, Element]
    pair_b: tuple[Element, Element]


@dataclass(frozen=True)
class SumCollision:
    """Two distinct unordered pairs with the same sum."""

    total: Element
    pair_a: tuple[Element, Element]
    pair_b: tuple[Element, Element]


def verify_sidon(seq: SidonSequence) -> DifferenceCollision | None:
    """First collision among ordered differences of distinct elements, if any."""
    g = seq.group
    seen: dict[Element, tuple[Element, Element]] = {}
    for a, b in product(seq.elements, repeat=2):
        if a == b:
            continue
        d = g.sub(a, b)
        if d in seen:
            return DifferenceCollision(d, seen[d], (a, b))
        seen[d] = (a, b)
    return None


def verify_sidon_sums(seq: SidonSequence) -> SumCollision | None:
    """First collision among pairwise sums, repetition allowed, if any."""
    g = seq.group
    seen: dict[Element, tuple[Element, Element]] = {}
    for a, b in combinations_with_replacement(seq.elements, 2):
        s = g.add(a, b)
        if s in seen:
            return SumCollision(s, seen[s], (a, b))
        seen[s] = (a, b)
    return None


def verify_weak_sidon(seq: SidonSequence) -> SumCollision | None:
    """Like verify_sidon_sums but only sums of two distinct elements."""
    g = seq.group
    seen: dict[Element, tuple[Element, Element]] = {}
    for a, b in combinations(seq.elements, 2):
        s = g.add(a, b)
        if s in seen:
            return SumCollision(s, seen[s], (a, b))
        seen[s] = (a, b)
    return None


def sidon_upper_bound(n: int) -> int:
    """Largest m with m*(m-1) <= n-1: a Sidon set in a group of order n
    spends its m*(m-1) nonzero differences on the n-1 nonzero elements."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    return (1 + math.isqrt(4 * n - 3)) // 2


class CrtIsomorphism:
    """Bijection between a product of pairwise coprime cyclic factors and
    the single cycle of the same order, via CRT interpolation weights."""

    def __init__(self, group: GroupSpec):
        mods = group.moduli
        for i, a in enumerate(mods):
            for b in mods[i + 1 :]:
                if math.gcd(a, b) != 1:
                    raise ValueError(f"moduli {a} and {b} are not coprime")
        self.group = group
        self.modulus = group.order
        n = self.modulus
        self.weights = tuple(n // m * modinv(n // m % m, m) % n for m in mods)

    def to_int(self, el: Element) -> int:
        el = self.group.normalize(el)
        return sum(c * w for c, w in zip(el, self.weights)) % self.modulus

    def from_int(self, x: int) -> Element:
        return tuple(x % m for m in self.group.moduli)

    def map_sequence(self, seq: SidonSequence) -> SidonSequence:
        if seq.group != self.group:
            raise ValueError("sequence group does not match the isomorphism domain")
        return SidonSequence.from_ints(self.modulus, [self.to_int(e) for e in seq.elements])


def crt_flatten(seq: SidonSequence) -> SidonSequence:
    """Rewrite a sequence over coprime factors as one over a single cycle."""
    return CrtIsomorphism(seq.group).map_sequence(seq)


def sequence_to_json(seq: SidonSequence) -> dict:
    if seq.group.rank == 1:
        return {"modulus": seq.group.moduli[0], "elements": seq.as_ints()}
    return {"moduli": list(seq.group.moduli), "elements": [list(e) for e in seq.elements]}


def sequence_from_json(data: dict) -> SidonSequence:
    if "modulus" in data:
        return SidonSequence.from_ints(int(data["modulus"]), data["elements"])
    if "moduli" in data:
        group = GroupSpec(tuple(int(m) for m in data["moduli"]))
        return SidonSequence(group, data["elements"])
    raise ValueError("sequence JSON needs a 'modulus' or 'moduli' key")

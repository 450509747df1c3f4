"""Sidon sequence constructions and exhaustive-search oracles.

Constructions: power_pairs (the pair family (i, alpha^i) over
Z_{q-1} x GF(q)+), ruzsa (its single-cycle form modulo p^2 - p), bose
(q elements modulo q^2 - 1) and singer (q + 1 elements modulo
q^2 + q + 1, a perfect difference set).  The oracles find exact maxima
by backtracking and grade a sequence against them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .fields import Field, make_field
from .groups import Element, GroupSpec, SidonSequence, sidon_upper_bound, verify_sidon
from .numtheory import factorize, partitions, prime_power, xgcd


def _field_for(q: int, what: str, degree: int = 1) -> Field:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{what} needs a prime power, got {q}")
    p, k = pp
    return make_field(p, k * degree)


def _check_primitive(field: Field, alpha: int | None) -> int:
    if alpha is None:
        return field.generator
    if not field.is_primitive(alpha):
        raise ValueError(f"{alpha} is not primitive in GF({field.order})")
    return alpha


def construct_power_pairs(q: int, alpha: int | None = None) -> SidonSequence:
    """The q-1 pairs (i, alpha^i) over Z_{q-1} x (Z_p)^k.

    The second coordinate is the coefficient vector of alpha^i, so the
    group order is q*(q-1) and the size meets the counting bound.
    """
    if q < 3:
        raise ValueError(f"need a prime power q >= 3, got {q}")
    field = _field_for(q, "power pair construction")
    alpha = _check_primitive(field, alpha)
    group = GroupSpec((q - 1,) + (field.p,) * field.k)
    elements = [(i,) + field.coeffs(field.pow(alpha, i)) for i in range(q - 1)]
    return SidonSequence(group, elements)


def construct_ruzsa(p: int, alpha: int | None = None) -> SidonSequence:
    """p-1 elements modulo p^2 - p: the pair construction pushed through
    the splitting Z_{p(p-1)} = Z_{p-1} x Z_p, written out directly."""
    pp = prime_power(p)
    if pp is None or pp[1] != 1 or p < 3:
        raise ValueError(f"need a prime p >= 3, got {p}")
    field = make_field(p)
    alpha = _check_primitive(field, alpha)
    n = p * (p - 1)
    # interpolation weights: w1 == 1 mod p-1, 0 mod p; w2 the reverse
    g, u, v = xgcd(p - 1, p)
    assert g == 1
    w1 = v * p % n
    w2 = u * (p - 1) % n
    values = [(i * w1 + field.pow(alpha, i) * w2) % n for i in range(p - 1)]
    return SidonSequence.from_ints(n, values)


def _subfield(field: Field, order: int) -> list[int]:
    """Elements of the subfield of the given order, via the exp table."""
    n = field.order - 1
    assert n % (order - 1) == 0
    step = n // (order - 1)
    return [0] + [field.exp_table[step * j] for j in range(order - 1)]


def construct_bose(q: int) -> SidonSequence:
    """q elements over Z_{q^2-1}: logs of the line beta + GF(q) in GF(q^2)."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"need a prime power q >= 2, got {q}")
    field = _field_for(q, "Bose construction", degree=2)
    beta = field.generator
    values = [field.log(field.add(beta, c)) for c in _subfield(field, q)]
    return SidonSequence.from_ints(q * q - 1, values)


def construct_singer(q: int) -> SidonSequence:
    """q+1 elements over Z_{q^2+q+1}: logs of the projective line
    spanned by {1, beta} in GF(q^3).  A perfect difference set."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"need a prime power q >= 2, got {q}")
    field = _field_for(q, "Singer construction", degree=3)
    beta = field.generator
    n = q * q + q + 1
    subfield = _subfield(field, q)
    values = {
        field.log(field.add(c, field.mul(d, beta))) % n
        for c, d in itertools.product(subfield, repeat=2)
        if (c, d) != (0, 0)
    }
    return SidonSequence.from_ints(n, sorted(values))


def _max_distinct_difference_set(
    identity: Hashable,
    candidates: Sequence[Hashable],
    diff: Callable[[Hashable, Hashable], Hashable],
    upper_bound: int,
) -> tuple[int, tuple]:
    """Largest subset (with the identity) whose ordered differences of
    distinct members are pairwise distinct; ties break to the
    lexicographically smallest witness.

    Depth-first over candidates in their given (sorted) order, recording
    the first witness of each new size: branches are cut only when they
    cannot exceed the best size, so the first maximum found is the
    lexicographically smallest one.  Stops early at the counting bound.
    """
    best_size = 1
    best_witness: tuple = (identity,)
    chosen: list = [identity]
    used: set = set()

    def extend(start: int) -> bool:
        nonlocal best_size, best_witness
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_witness = tuple(chosen)
            if best_size == upper_bound:
                return True
        for idx in range(start, len(candidates)):
            if len(chosen) + (len(candidates) - idx) <= best_size:
                break  # cannot beat the best even taking everything left
            c = candidates[idx]
            new_diffs = set()
            for x in chosen:
                new_diffs.add(diff(c, x))
                new_diffs.add(diff(x, c))
            if len(new_diffs) < 2 * len(chosen) or new_diffs & used:
                continue
            chosen.append(c)
            used.update(new_diffs)
            done = extend(idx + 1)
            chosen.pop()
            used.difference_update(new_diffs)
            if done:
                return True
        return False

    extend(0)
    return best_size, best_witness


DEFAULT_SEARCH_CAP = 60


def max_sidon_size(group: GroupSpec, cap: int = DEFAULT_SEARCH_CAP) -> tuple[int, tuple[Element, ...]]:
    """Exact maximum Sidon size over the group, with one witness.

    Any Sidon set translates to one containing the identity, so the
    search is anchored there; the witness is the lexicographically
    smallest maximum-size set containing the identity.
    """
    n = group.order
    if n > cap:
        raise ValueError(f"group order {n} exceeds the search cap {cap}")
    candidates = sorted(group.elements())
    candidates.remove(group.identity())
    return _max_distinct_difference_set(
        group.identity(), candidates, group.sub, sidon_upper_bound(n)
    )


def abelian_group_specs(n: int) -> list[GroupSpec]:
    """One GroupSpec per isomorphism class of abelian groups of order n."""
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    if n == 1:
        return [GroupSpec((1,))]
    per_prime: list[list[tuple[int, ...]]] = []
    for p, e in sorted(factorize(n).items()):
        per_prime.append([tuple(p**part for part in parts) for parts in partitions(e)])
    specs = []
    for combo in itertools.product(*per_prime):
        moduli = tuple(sorted(m for factor in combo for m in factor))
        specs.append(GroupSpec(moduli))
    return specs


DEFAULT_BRUTE_CAP = 40


@dataclass(frozen=True)
class OptimalityReport:
    """How a sequence's size compares against what its order allows."""

    group_order: int
    size: int
    upper_bound: int
    brute_force_max: int | None
    verdict: str  # optimal-by-bound | optimal | unknown

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "size": self.size,
            "upper_bound": self.upper_bound,
            "brute_force_max": self.brute_force_max,
            "verdict": self.verdict,
        }


def check_optimality(seq: SidonSequence, brute_cap: int = DEFAULT_BRUTE_CAP) -> OptimalityReport:
    """Grade a Sidon sequence: at the counting bound it is optimal by
    bound; otherwise exhaustive search over every abelian group of the
    same order (when small enough) can still certify optimality."""
    if verify_sidon(seq) is not None:
        raise ValueError("sequence is not Sidon")
    n = seq.group.order
    m = len(seq)
    bound = sidon_upper_bound(n)
    brute: int | None = None
    if n <= brute_cap:
        brute = max(max_sidon_size(g, cap=brute_cap)[0] for g in abelian_group_specs(n))
    if m == bound:
        verdict = "optimal-by-bound"
    elif brute is not None and m == brute:
        verdict = "optimal"
    else:
        verdict = "unknown"
    return OptimalityReport(n, m, bound, brute, verdict)

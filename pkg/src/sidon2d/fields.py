"""Finite fields GF(p^k) with table-based arithmetic.

Elements are plain ints: the element with coefficient vector
(c0, c1, ..., c_{k-1}) -- c0 the constant term -- is encoded as
sum(ci * p**i).  Multiplication, inversion and discrete logs go through
exp/log tables built once per field, so construction costs O(q) and the
arithmetic afterwards is O(1) per operation.

The reducing polynomial and the generator are chosen deterministically:
the modulus is the first irreducible monic polynomial and the generator
the first primitive element, both in lexicographic order of the
coefficient vector with the constant term most significant.  Two fields
built with the same (p, k) therefore agree element for element.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .numtheory import factorize, is_prime, modinv, xgcd

# Table construction is O(q); keep q sane.
ORDER_LIMIT = 1 << 20


# ---------------------------------------------------------------------------
# polynomial helpers (dense coefficient lists, constant term first)


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f modulo g over GF(p).  g must be nonzero."""
    f = [c % p for c in f]
    _poly_trim(f)
    dg = len(g) - 1
    lead_inv = modinv(g[-1], p)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        scale = f[-1] * lead_inv % p
        for i, c in enumerate(g):
            f[shift + i] = (f[shift + i] - scale * c) % p
        _poly_trim(f)
    return f


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    return _poly_rem(prod, list(mod), p)


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_rem(list(base), list(mod), p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _is_irreducible(coeffs: Sequence[int], p: int, k: int) -> bool:
    """Whether x^k + sum(coeffs[i] * x^i) is irreducible over GF(p)."""
    if k == 1:
        return True
    # cheap root checks: a root at 0 or 1 gives a linear factor
    if coeffs[0] == 0:
        return False
    if (1 + sum(coeffs)) % p == 0:
        return False
    f = list(coeffs) + [1]
    # f is irreducible iff x^(p^k) == x mod f and, for every prime r | k,
    # x^(p^(k/r)) - x shares no factor with f
    x = [0, 1]
    t = x
    powers = {}
    for step in range(1, k + 1):
        t = _poly_powmod(t, p, f, p)
        powers[step] = t
    top = list(powers[k])
    if len(top) < 2:
        top += [0] * (2 - len(top))
    top[1] = (top[1] - 1) % p
    if _poly_trim(top):
        return False
    for r in factorize(k):
        u = list(powers[k // r])
        if len(u) < 2:
            u += [0] * (2 - len(u))
        u[1] = (u[1] - 1) % p
        if len(_poly_gcd(list(f), u, p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class Field:
    """GF(p^k) with exp/log tables over a fixed reducing polynomial.

    ``modulus`` is the coefficient vector (c0, ..., c_{k-1}) of the monic
    reducing polynomial x^k + c_{k-1} x^{k-1} + ... + c0.  Omitting it
    selects the canonical one (see module docstring).
    """

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be positive, got {k}")
        order = p**k
        if order > ORDER_LIMIT:
            raise ValueError(f"field order {order} exceeds limit {ORDER_LIMIT}")
        self.p = p
        self.k = k
        self.order = order
        if modulus is None:
            modulus = self._canonical_modulus(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k:
                raise ValueError(f"modulus needs {k} coefficients, got {len(modulus)}")
            if not _is_irreducible(modulus, p, k):
                raise ValueError(f"reducing polynomial {modulus} is not irreducible over GF({p})")
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._build_tables()

    @staticmethod
    def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
        for coeffs in itertools.product(range(p), repeat=k):
            if _is_irreducible(coeffs, p, k):
                return coeffs
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.order
        mod = list(self.modulus) + [1]
        prime_divs = list(factorize(q - 1)) if q > 2 else []
        gen: tuple[int, ...] | None = None
        for cand in itertools.product(range(p), repeat=k):
            if not any(cand):
                continue
            if all(
                _poly_trim(_poly_powmod(cand, (q - 1) // r, mod, p)) != [1]
                for r in prime_divs
            ):
                gen = cand
                break
        assert gen is not None  # the multiplicative group is cyclic
        exp = [0] * (q - 1)
        cur = [1]
        for i in range(q - 1):
            exp[i] = sum(c * p**j for j, c in enumerate(cur))
            cur = _poly_mulmod(cur, gen, mod, p)
        log: list[int | None] = [None] * q
        for i, v in enumerate(exp):
            log[v] = i
        assert _poly_trim(cur) == [1]  # generator order must be exactly q - 1
        self.generator = exp[1] if q > 2 else 1
        self.exp_table = exp
        self.log_table = log

    # -- element plumbing ---------------------------------------------------

    def _check(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.order:
            raise ValueError(f"{x!r} is not an element of GF({self.order})")
        return x

    def elements(self) -> range:
        return range(self.order)

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of x, constant term first."""
        self._check(x)
        out = []
        for _ in range(self.k):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        cs = list(coeffs)
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(cs)}")
        if any(not 0 <= c < self.p for c in cs):
            raise ValueError(f"coefficients out of range for GF({self.p}): {cs}")
        return sum(c * self.p**i for i, c in enumerate(cs))

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        out = 0
        unit = 1
        for _ in range(self.k):
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            out += (ca + cb) % self.p * unit
            unit *= self.p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        out = 0
        unit = 1
        for _ in range(self.k):
            a, ca = divmod(a, self.p)
            out += -ca % self.p * unit
            unit *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        n = self.order - 1
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % n]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        n = self.order - 1
        return self.exp_table[-self.log_table[a] % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        n = self.order - 1
        return self.exp_table[self.log_table[a] * e % n]

    def log(self, x: int, base: int | None = None) -> int:
        """Discrete log of x, to the field generator unless a base is given."""
        self._check(x)
        if x == 0:
            raise ValueError("0 has no discrete logarithm")
        lx = self.log_table[x]
        assert lx is not None
        if base is None:
            return lx
        self._check(base)
        if base == 0:
            raise ValueError("0 is not a valid logarithm base")
        lb = self.log_table[base]
        assert lb is not None
        n = self.order - 1
        # solve t * lb == lx (mod n)
        g, _, _ = xgcd(lb, n)
        if lx % g:
            raise ValueError(f"{x} is not a power of {base}")
        m = n // g
        return lx // g * modinv(lb // g, m) % m

    # -- multiplicative structure -------------------------------------------

    def element_order(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.order - 1
        o = n
        lx = self.log_table[x]
        for r in factorize(n) if n > 1 else {}:
            while o % r == 0 and lx * (o // r) % n == 0:
                o //= r
        return o

    def is_primitive(self, x: int) -> bool:
        if x == 0:
            return False
        return self.element_order(x) == self.order - 1

    def primitive_elements(self) -> list[int]:
        return [x for x in range(1, self.order) if self.is_primitive(x)]

    # -- misc ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "Field":
        return cls(int(data["p"]), int(data["k"]), data.get("modulus"))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.k}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    """Cached constructor for the canonical GF(p^k)."""
    return Field(p, k)

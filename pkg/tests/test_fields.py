"""Finite field arithmetic, checked against a naive polynomial oracle."""

import random

import pytest

from sidon2d import Field, make_field


def naive_mul(field: Field, a: int, b: int) -> int:
    """Schoolbook polynomial product reduced by the field's monic modulus.

    Independent of the exp/log tables: works directly on coefficient
    vectors, so it cross-checks the table construction.
    """
    p, k = field.p, field.k
    ca, cb = field.coeffs(a), field.coeffs(b)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for i, m in enumerate(field.modulus):
                prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
    return field.from_coeffs(prod[:k])


# -- frozen small-field facts ----------------------------------------------


def test_gf7_tables():
    f = Field(7)
    assert f.generator == 3
    assert f.exp_table == [1, 3, 2, 6, 4, 5]
    assert f.log(6) == 3
    assert f.log(1) == 0


def test_gf2_is_degenerate_but_valid():
    f = Field(2)
    assert f.generator == 1
    assert f.exp_table == [1]
    assert f.mul(1, 1) == 1
    assert f.add(1, 1) == 0


def test_gf4_canonical_modulus():
    # x^2 + x + 1 is the only irreducible quadratic over GF(2)
    assert Field(2, 2).modulus == (1, 1)


def test_gf8_canonical_modulus():
    # first irreducible cubic in constant-first lexicographic order
    assert Field(2, 3).modulus == (1, 0, 1)  # x^3 + x^2 + 1


def test_gf9_tables():
    f = Field(3, 2)
    assert f.modulus == (1, 0)  # x^2 + 1
    assert f.coeffs(f.generator) == (1, 1)  # x + 1 generates
    powers = [f.coeffs(v) for v in f.exp_table]
    assert powers == [
        (1, 0), (1, 1), (0, 2), (1, 2), (2, 0), (2, 2), (0, 1), (2, 1),
    ]
    assert f.log(2) == 4  # element 2 is -1, the unique order-2 element


def test_gf25_and_gf27_canonical_moduli():
    assert Field(5, 2).modulus == (1, 1)  # x^2 + x + 1
    assert Field(3, 3).modulus == (1, 0, 2)  # x^3 + 2x^2 + 1


# -- table multiplication vs. the polynomial oracle --------------------------


@pytest.mark.parametrize("p,k", [(2, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_mul_matches_naive_oracle_exhaustively(p, k):
    f = Field(p, k)
    for a in f.elements():
        for b in f.elements():
            assert f.mul(a, b) == naive_mul(f, a, b)


def test_mul_matches_naive_oracle_sampled_large():
    rng = random.Random(20260819)
    for p, k in [(2, 10), (3, 6), (7, 4), (11, 3)]:
        f = make_field(p, k)
        for _ in range(200):
            a = rng.randrange(f.order)
            b = rng.randrange(f.order)
            assert f.mul(a, b) == naive_mul(f, a, b)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (2, 5), (5, 2), (61, 1)])
def test_exp_table_satisfies_the_cyclic_law(p, k):
    f = Field(p, k)
    n = f.order - 1
    exp = f.exp_table
    assert len(set(exp)) == n  # one entry per nonzero element
    for i in range(n):
        for j in range(n):
            assert f.mul(exp[i], exp[j]) == exp[(i + j) % n]


# -- ring axioms on coefficient arithmetic ----------------------------------


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3)])
def test_addition_group_axioms(p, k):
    f = Field(p, k)
    for a in f.elements():
        assert f.add(a, f.neg(a)) == 0
        assert f.add(a, 0) == a
        for b in f.elements():
            assert f.add(a, b) == f.add(b, a)
            assert f.sub(a, b) == f.add(a, f.neg(b))


def test_distributivity_sampled():
    f = make_field(3, 4)
    rng = random.Random(7)
    for _ in range(300):
        a, b, c = (rng.randrange(f.order) for _ in range(3))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


# -- inverse, division, powers -----------------------------------------------


def test_inverse_and_division():
    f = Field(3, 2)
    for a in range(1, f.order):
        assert f.mul(a, f.inv(a)) == 1
        assert f.div(a, a) == 1
    assert f.div(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(1, 0)


def test_pow_edge_cases():
    f = Field(7)
    assert f.pow(3, 0) == 1
    assert f.pow(0, 0) == 1  # empty product convention
    assert f.pow(0, 5) == 0
    assert f.pow(3, -1) == f.inv(3)
    assert f.pow(3, 6) == 1
    with pytest.raises(ZeroDivisionError):
        f.pow(0, -2)


def test_log_with_nonstandard_base():
    f = Field(7)
    # 2 = 3^2, so log base 2 solves 2t = log(x) in Z_6
    assert f.log(4, base=2) == 2
    assert f.pow(2, f.log(4, base=2)) == 4
    assert f.log(1, base=2) == 0
    with pytest.raises(ValueError):
        f.log(3, base=2)  # 3 is not a power of 2
    with pytest.raises(ValueError):
        f.log(0)
    with pytest.raises(ValueError):
        f.log(3, base=0)


def test_element_order_and_primitivity():
    f = Field(3, 2)
    orders = sorted({f.element_order(x) for x in range(1, 9)})
    assert orders == [1, 2, 4, 8]  # divisors of 8 realised by a cyclic group
    prim = f.primitive_elements()
    assert len(prim) == 4  # euler_phi(8)
    assert all(f.is_primitive(x) for x in prim)
    assert f.generator in prim
    assert not f.is_primitive(1)
    assert not f.is_primitive(0)


# -- construction and serialisation ------------------------------------------


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(2, 0)
    with pytest.raises(ValueError):
        Field(2, 21)  # 2^21 exceeds the order cap
    with pytest.raises(ValueError):
        Field(2, 2, modulus=(1,))  # wrong length
    with pytest.raises(ValueError):
        Field(2, 2, modulus=(0, 0))  # x^2 is reducible
    with pytest.raises(ValueError):
        Field(2, 2, modulus=(1, 0))  # x^2 + 1 = (x+1)^2 over GF(2)


def test_explicit_modulus_is_honoured():
    f = Field(2, 3, modulus=(1, 1, 0))  # x^3 + x + 1
    assert f.modulus == (1, 1, 0)
    assert f != Field(2, 3)
    # same abstract field, different coordinates: orders agree
    assert sorted(f.element_order(x) for x in range(1, 8)) == sorted(
        Field(2, 3).element_order(x) for x in range(1, 8)
    )


def test_coeffs_round_trip_and_validation():
    f = Field(3, 2)
    for x in f.elements():
        assert f.from_coeffs(f.coeffs(x)) == x
    assert f.coeffs(5) == (2, 1)  # 5 = 2 + 1*3
    with pytest.raises(ValueError):
        f.from_coeffs((1,))
    with pytest.raises(ValueError):
        f.from_coeffs((3, 0))
    with pytest.raises(ValueError):
        f.coeffs(9)
    with pytest.raises(ValueError):
        f.mul(9, 1)


def test_json_round_trip_and_caching():
    f = Field(3, 2)
    data = f.to_json()
    assert data == {"p": 3, "k": 2, "modulus": [1, 0]}
    assert Field.from_json(data) == f
    assert make_field(3, 2) is make_field(3, 2)  # cached
    assert make_field(3, 2) == f


def test_construction_is_deterministic():
    a, b = Field(5, 2), Field(5, 2)
    assert a.modulus == b.modulus
    assert a.generator == b.generator
    assert a.exp_table == b.exp_table

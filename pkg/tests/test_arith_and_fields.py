from __future__ import annotations

from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from cluster_forge.arith import divisors, euler_phi, factorize, is_prime, omega, prime_power, units, valuation
from cluster_forge.errors import UsageError
from cluster_forge.finite_field import GF, first_irreducible
from cluster_forge.realizations import (AffineRealization, HolomorphRealization, PermutationRealization,
                                        ShiftSemidirectRealization, cycle_perm)

from oracles import valuation as brute_valuation


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, e in f:
        assert all(p % d for d in range(2, int(p**0.5) + 1))
        prod *= p**e
    assert prod == n
    assert [p for p, _ in f] == sorted(p for p, _ in f)


@given(st.integers(min_value=1, max_value=3000))
def test_phi_divisors_units(n):
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
    if n > 1:
        assert len(units(n)) == euler_phi(n)
    assert omega(n) == sum(1 for p in range(2, n + 1) if n % p == 0 and is_prime(p))


def test_valuations_and_prime_powers():
    for n in range(1, 500):
        for p in (2, 3, 5, 7):
            assert valuation(n, p) == brute_valuation(n, p)
    assert prime_power(81) == (3, 4)
    assert prime_power(12) is None
    assert prime_power(1) is None
    with pytest.raises(ValueError):
        valuation(0, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49])
def test_field_axioms(q):
    F = GF(q)
    els = range(q)
    for x, y in product(els, els):
        assert F.add(x, y) == F.add(y, x)
        assert F.mul(x, y) == F.mul(y, x)
    for x in els:
        assert F.add(x, F.neg(x)) == 0
        assert F.add(x, 0) == x and F.mul(x, 1) == x
        if x:
            assert F.mul(x, F.inv(x)) == 1
    small = range(min(q, 9))
    for x, y, z in product(small, small, small):
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    # primitive element generates the unit group
    seen, x = set(), 1
    for _ in range(q - 1):
        seen.add(x)
        x = F.mul(x, F.primitive)
    assert seen == set(range(1, q))


def test_field_moduli():
    assert GF(4).spec.modulus == (1, 1, 1)
    assert GF(9).spec.modulus == (1, 0, 1)
    assert first_irreducible(2, 3) == (1, 0, 1, 1)
    with pytest.raises(UsageError):
        GF(6)
    with pytest.raises(UsageError):
        GF(1024)


def test_realization_inverses():
    reals = [
        PermutationRealization(5, [cycle_perm(5, (0, 1, 2)), cycle_perm(5, (3, 4))]),
        ShiftSemidirectRealization(3, 3),
        HolomorphRealization(12),
        AffineRealization(GF(8)),
    ]
    for R in reals:
        x = R.generators[0]
        y = R.generators[-1]
        z = R.mul(x, y)
        assert R.mul(z, R.inv(z)) == R.identity
        assert R.mul(R.inv(z), z) == R.identity


def test_shift_semidirect_law():
    R = ShiftSemidirectRealization(5, 3)
    x = ((1, 2, 3), 1)
    y = ((4, 0, 2), 2)
    # b acts by c -> (c_{b+1}, ..., c_s, c_1, ..., c_b)
    assert R.mul(x, y) == ((1 + 0, 2 + 2, (3 + 4) % 5), 0)


def test_holomorph_acts_on_roots():
    R = HolomorphRealization(7)
    f, g = (3, 2), (1, 5)
    h = R.mul(f, g)
    for x in range(7):
        gx = (g[1] * x + g[0]) % 7
        assert (h[1] * x + h[0]) % 7 == (f[1] * gx + f[0]) % 7


def test_bad_permutation():
    with pytest.raises(UsageError):
        PermutationRealization(3, [(0, 0, 1)])

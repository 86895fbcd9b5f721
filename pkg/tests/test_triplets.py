from __future__ import annotations

from math import gcd, lcm

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cluster_forge import constructions as C
from cluster_forge import triplets as T
from cluster_forge.errors import SizeLimitError, UsageError
from cluster_forge.group_core import all_subgroups, conjugate_subgroup, pointwise_stabilizer

import oracles

pos = st.integers(min_value=1, max_value=300)


def test_necessary_form_examples():
    assert T.necessary_form(4, 6, 24) == 2
    assert T.necessary_form(3, 3, 6) == 2
    assert T.necessary_form(2, 3, 5) is None


def test_c_prime_examples():
    assert T.in_c_prime(4, 6, 24)
    assert not T.in_c_prime(3, 3, 6)
    assert T.in_c_prime(12, 12, 48)
    assert not T.in_c_prime(4, 4, 12)


def test_valuation_examples():
    assert T.valuation_check(4, 6, 24)
    assert not T.valuation_check(3, 3, 6)
    assert T.valuation_check(1, 1, 1)


@given(pos, pos, pos)
def test_three_tests_agree_with_brute_force(a, b, c):
    expected = oracles.in_c_prime(a, b, c)
    assert T.in_c_prime(a, b, c) == T.valuation_check(a, b, c) == T.divisibility_check(a, b, c) == expected
    assert (T.necessary_form(a, b, c) is not None) == oracles.has_form(a, b, c)


@given(st.tuples(pos, pos, pos), st.tuples(pos, pos, pos))
def test_monoid_product(x, y):
    assert T.triplet_mul(x, (1, 1, 1)) == x
    assert T.triplet_mul(x, y) == T.triplet_mul(y, x)
    if T.in_c_prime(*x) and T.in_c_prime(*y):
        assert T.in_c_prime(*T.triplet_mul(x, y))


def test_irreducibility_examples():
    assert T.is_irreducible_c_prime(7, 7, 7)
    assert not T.is_irreducible_c_prime(1, 6, 6)
    assert not T.is_irreducible_c_prime(2, 4, 8)
    assert T.is_irreducible_c_prime(1, 1, 1)
    with pytest.raises(UsageError):
        T.is_irreducible_c_prime(3, 3, 6)


def test_factorization_examples():
    assert T.factorizations_c_prime(1, 1, 1) == []
    assert ((2, 2, 2), (2, 2, 2)) in T.factorizations_c_prime(4, 4, 4)
    assert ((1, 2, 2), (1, 3, 3)) in T.factorizations_c_prime(1, 6, 6)


def test_factorizations_match_brute_force():
    for a in range(1, 25):
        for b in range(1, 25):
            g, l = gcd(a, b), lcm(a, b)
            for t in range(1, g + 1):
                if g % t:
                    continue
                c = l * t
                assert T.factorizations_c_prime(a, b, c) == oracles.c_prime_splits(a, b, c)


def test_prime_holomorph_triplets_do_not_split():
    for p in (2, 3, 5, 7, 11, 13):
        assert T.factorizations_necessary_form(p, p, p * (p - 1)) == []
    assert T.factorizations_necessary_form(6, 6, 12)


def test_classify():
    t = T.classify(4, 6, 24)
    d = t.as_dict()
    assert d["t"] == 2 and d["in_c_prime"] and d["irreducible"] is False and d["factorizations"]
    out = T.classify(3, 3, 6).as_dict()
    assert (out["t"], out["in_c_prime"], out["irreducible"]) == (2, False, None)
    with pytest.raises(UsageError):
        T.classify(0, 1, 1)


def test_grid_matches_scalar_tests():
    form, window, divis = T.classify_grid(40)
    assert form.shape == (41, 41, 41)
    ref = np.zeros_like(form)
    for a in range(1, 41):
        for b in range(1, 41):
            for c in range(1, 41):
                ref[a, b, c] = oracles.in_c_prime(a, b, c)
    assert (form == ref).all() and (window == ref).all() and (divis == ref).all()
    with pytest.raises(SizeLimitError):
        T.classify_grid(401)


def test_realize_examples():
    S4 = C.symmetric_group(4)
    w = T.realize(S4, S4.whole(), S4.whole())
    assert w.triplet == (1, 1, 1)
    w = T.realize(S4, pointwise_stabilizer(S4, [0]), pointwise_stabilizer(S4, [1]))
    assert w.triplet == (4, 4, 12) and w.solvable
    m = C.holomorph_model(5)
    H2 = conjugate_subgroup(m.table, m.table.index((1, 1)), m.H)
    assert T.realize(m.table, m.H, H2).triplet == (5, 5, 20)


def test_search_examples():
    S4 = C.symmetric_group(4)
    found = T.search_realizations(S4, (4, 4, 12), "S4")
    pairs = {(w.h1.members, w.h2.members) for w in found}
    for i in range(4):
        for j in range(4):
            if i != j:
                assert (pointwise_stabilizer(S4, [i]).members, pointwise_stabilizer(S4, [j]).members) in pairs
    assert all(w.row()[3:6] == [4, 4, 12] for w in found)
    up_to = T.search_realizations(S4, (4, 4, 12), "S4", up_to_conjugacy=True)
    assert 0 < len(up_to) < len(found)
    assert T.search_realizations(S4, (1, 1, 1))[0].h1 == S4.whole()
    Z6 = C.cyclic_group(6)
    (w,) = T.search_realizations(Z6, (2, 3, 6))
    assert (w.h1.order, w.h2.order) == (3, 2)


def test_search_matches_brute_force_pairs():
    G = C.holomorph_model(6).table
    subs = all_subgroups(G)
    for target in [(2, 3, 6), (6, 6, 12), (3, 3, 9), (2, 2, 4)]:
        expected = sum(1 for A in subs for B in subs
                       if (G.order // A.order, G.order // B.order, G.order // (A.mask & B.mask).bit_count())
                       == target)
        assert len(T.search_realizations(G, target)) == expected


def test_feasibility_flags():
    S4 = C.symmetric_group(4)
    for w in T.search_realizations(S4, (4, 4, 12)) + T.search_realizations(S4, (1, 1, 1)):
        assert T.feasibility_flags(w) == {"compositum_feasible": True, "sum_feasible": True,
                                          "product_feasible": True}

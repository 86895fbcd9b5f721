from __future__ import annotations

import pytest

from cluster_forge import constructions as C
from cluster_forge.errors import SizeLimitError, UsageError
from cluster_forge.group_core import (all_subgroups, build_table, commutator_subgroup, conjugate_subgroup, core,
                                      core_quotient, direct_power, direct_product, distinct_conjugates,
                                      element_order, generated_subgroup, index_of, intersect, is_normal,
                                      is_solvable, is_transitive, join, normal_closure, normalizer,
                                      pointwise_stabilizer, restrict_to, subgroup_where)
from cluster_forge.realizations import (PermutationRealization, ResidueTupleRealization,
                                        ShiftSemidirectRealization, cycle_perm)

from oracles import Brute, elements_of


@pytest.fixture(scope="module")
def S4():
    return C.symmetric_group(4)


def perm_index(G, *cycles):
    return G.index(cycle_perm(G.realization.degree, *cycles))


def test_s4_from_transposition_and_four_cycle():
    G = build_table(PermutationRealization(4, [cycle_perm(4, (0, 1)), cycle_perm(4, (0, 1, 2, 3))]))
    assert G.order == 24


def test_identity_generator_gives_trivial_group():
    G = build_table(PermutationRealization(3, [(0, 1, 2)]))
    assert G.order == 1
    assert G.elements[0] == (0, 1, 2)


def test_sdp_3_4_order():
    assert build_table(ShiftSemidirectRealization(3, 4)).order == 324


@pytest.mark.parametrize("spec", ["sym:4,1", "sdp:2,3", "holo:10", "frob:8", "cyc:9"])
def test_table_agrees_with_realization(spec):
    from cluster_forge.groupspec import parse_spec
    G = parse_spec(spec).model.table
    real = G.realization
    assert G.elements[0] == real.identity
    for i in range(G.order):
        for j in range(G.order):
            assert G.elements[G.mul(i, j)] == real.mul(G.elements[i], G.elements[j])
        assert G.mul(i, G.inv(i)) == 0


def test_element_cap():
    with pytest.raises(SizeLimitError):
        C.symmetric_group(7, cap=1000)


def test_large_group_without_table():
    G = build_table(ResidueTupleRealization([5000]))
    assert G.mul_table is None
    assert G.elements[G.mul(4999, 2)] == (1,)
    assert G.inv(1) == G.index((4999,))
    H = generated_subgroup(G, [G.index((1000,))])
    assert H.order == 5


def test_generated_subgroup_examples(S4):
    assert generated_subgroup(S4, []).members == (0,)
    assert generated_subgroup(S4, range(24)).order == 24
    V = generated_subgroup(S4, [perm_index(S4, (0, 1)), perm_index(S4, (2, 3))])
    assert V.order == 4
    brute = Brute(S4)
    assert elements_of(S4, V) == brute.closure([cycle_perm(4, (0, 1)), cycle_perm(4, (2, 3))])


def test_index_of(S4):
    assert index_of(S4, S4.whole()) == 1
    assert index_of(S4, S4.trivial()) == 24
    assert index_of(S4, pointwise_stabilizer(S4, [0])) == 4


def test_normalizer_examples(S4):
    assert normalizer(S4, S4.whole()) == S4.whole()
    H = pointwise_stabilizer(S4, [0])
    assert normalizer(S4, H) == H
    m = C.shift_semidirect_model(3, 4)
    N = normalizer(m.table, m.H)
    assert N.order == 81
    assert all(m.table.elements[i][1] == 0 for i in N.members)


def test_normal_closure_examples(S4):
    assert normal_closure(S4, S4.trivial()).is_trivial()
    assert normal_closure(S4, pointwise_stabilizer(S4, [0])) == S4.whole()
    m = C.shift_semidirect_model(3, 4)
    assert normal_closure(m.table, m.H) == normalizer(m.table, m.H)


def test_conjugation_examples(S4):
    H = pointwise_stabilizer(S4, [0])
    assert conjugate_subgroup(S4, 0, H) == H
    assert conjugate_subgroup(S4, perm_index(S4, (0, 1)), H) == pointwise_stabilizer(S4, [1])
    for g in normalizer(S4, H).members:
        assert conjugate_subgroup(S4, g, H) == H


def test_distinct_conjugates(S4):
    A4 = subgroup_where(S4, lambda p: sum(1 for i in range(4) for j in range(i) if p[j] > p[i]) % 2 == 0)
    assert distinct_conjugates(S4, A4) == [A4]
    stabs = distinct_conjugates(S4, pointwise_stabilizer(S4, [0]))
    assert sorted(s.members for s in stabs) == sorted(pointwise_stabilizer(S4, [i]).members for i in range(4))
    assert stabs[0] == pointwise_stabilizer(S4, [0])


def test_sdp_conjugates_are_coordinate_kernels():
    m = C.shift_semidirect_model(3, 4)
    G = m.table
    expected = {tuple(i for i, (a, b) in enumerate(G.elements) if b == 0 and a[k] == 0) for k in range(4)}
    assert {c.members for c in distinct_conjugates(G, m.H)} == expected


def test_intersections(S4):
    H = pointwise_stabilizer(S4, [0])
    assert intersect(H, H) == H
    assert intersect(H, S4.whole()) == H
    both = intersect(H, pointwise_stabilizer(S4, [1]))
    assert both.order == 2 and perm_index(S4, (2, 3)) in both


def test_core_quotient():
    K4 = build_table(ResidueTupleRealization([2, 2]))
    first = subgroup_where(K4, lambda e: e[1] == 0)
    q = core_quotient(K4, first)
    assert q.table.order == 2
    S4 = C.symmetric_group(4)
    assert core_quotient(S4, pointwise_stabilizer(S4, [0])).table.order == 24
    assert core_quotient(S4, S4.whole()).table.order == 1


def test_direct_products():
    S3 = C.symmetric_group(3)
    Z4 = C.cyclic_group(4)
    dp = direct_product(S3, Z4)
    assert dp.table.order == 24
    assert direct_product(S3, C.cyclic_group(1)).table.order == 6
    A = pointwise_stabilizer(S3, [0])
    P = dp.product_subgroup(A, Z4.whole())
    assert P.order == 8
    assert dp.project(P, 0) == A and dp.project(P, 1) == Z4.whole()
    assert direct_power(C.cyclic_group(3), 3).order == 27


@pytest.mark.parametrize("spec,count", [("sym:3,1", 6), ("sym:4,1", 30), ("cyc:12", 6), ("cyc:1", 1),
                                        ("sym:5,1", 156), ("sdp:2,2", 10)])
def test_subgroup_counts(spec, count):
    from cluster_forge.groupspec import parse_spec
    assert len(all_subgroups(parse_spec(spec).model.table)) == count


@pytest.mark.parametrize("spec", ["sym:4,1", "sdp:2,3", "holo:7", "frob:8", "holo:10", "mag:(sym:3,1)x(cyc:2)"])
def test_subgroups_match_brute_force(spec):
    from cluster_forge.groupspec import parse_spec
    G = parse_spec(spec).model.table
    brute = Brute(G)
    assert {elements_of(G, S) for S in all_subgroups(G)} == brute.subgroups()


@pytest.mark.parametrize("spec", ["sym:4,2", "sdp:2,3", "holo:9", "frob:7", "sym:5,1"])
def test_normalizer_closure_conjugates_match_brute_force(spec):
    from cluster_forge.groupspec import parse_spec
    m = parse_spec(spec).model
    G, H = m.table, m.H
    brute = Brute(G)
    Hs = elements_of(G, H)
    assert elements_of(G, normalizer(G, H)) == brute.normalizer(Hs)
    assert elements_of(G, normal_closure(G, H)) == brute.normal_closure(Hs)
    assert {elements_of(G, c) for c in distinct_conjugates(G, H)} == brute.conjugates(Hs)


def test_solvability():
    assert is_solvable(C.symmetric_group(4))
    assert not is_solvable(C.symmetric_group(5))
    A5 = commutator_subgroup(C.symmetric_group(5), C.symmetric_group(5).whole())
    assert A5.order == 60
    assert is_solvable(C.holomorph_model(21).table)


def test_core_and_normality(S4):
    H = pointwise_stabilizer(S4, [0])
    assert core(S4, H).is_trivial()
    assert not is_normal(S4, H)
    V = generated_subgroup(S4, [perm_index(S4, (0, 1), (2, 3)), perm_index(S4, (0, 2), (1, 3))])
    assert is_normal(S4, V)


def test_element_orders(S4):
    assert element_order(S4, 0) == 1
    assert element_order(S4, perm_index(S4, (0, 1, 2, 3))) == 4


def test_transitivity_and_restriction(S4):
    assert is_transitive(S4)
    H = pointwise_stabilizer(S4, [0])
    assert not is_transitive(S4, H)
    res = restrict_to(S4, H)
    assert res.table.order == 6
    inner = pointwise_stabilizer(res.table, [1])
    assert res.lift(inner) == pointwise_stabilizer(S4, [0, 1])


def test_join(S4):
    a = generated_subgroup(S4, [perm_index(S4, (0, 1))])
    b = generated_subgroup(S4, [perm_index(S4, (1, 2, 3))])
    assert join(a, b).order == 24


def test_mismatched_parents_rejected(S4):
    S3 = C.symmetric_group(3)
    with pytest.raises(UsageError):
        intersect(S4.whole(), S3.whole())


def test_subgroup_where_rejects_non_subgroups(S4):
    with pytest.raises(UsageError):
        subgroup_where(S4, lambda p: p[0] == 1)

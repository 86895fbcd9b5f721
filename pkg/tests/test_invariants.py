from __future__ import annotations

from itertools import permutations

import pytest

from cluster_forge import constructions as C
from cluster_forge import invariants as I
from cluster_forge.errors import SemanticsError, SizeLimitError, UsageError
from cluster_forge.group_core import all_subgroups, intersect, pointwise_stabilizer
from cluster_forge.groupspec import parse_spec

import oracles
from oracles import Brute, elements_of

ORACLE_MODELS = ["sym:4,1", "sym:4,2", "sdp:2,3", "sdp:3,2", "holo:8", "holo:9", "frob:7", "sym:5,1",
                 "dp:(sym:3,1)x(cyc:2)", "mag:(holo:5)x(cyc:3)"]


@pytest.mark.parametrize("spec", ORACLE_MODELS)
def test_report_matches_oracle(spec):
    m = parse_spec(spec).model
    brute = Brute(m.table)
    got = I.invariant_report(m).as_dict()
    expected = oracles.invariants(brute, elements_of(m.table, m.H))
    assert {k: got[k] for k in expected} == expected
    assert got["degree"] == got["cluster_size"] * got["num_clusters"] == got["ascending_index"] * got["u"]


@pytest.mark.parametrize("spec", ORACLE_MODELS)
def test_rho_tau_match_oracle(spec):
    m = parse_spec(spec).model
    G = m.table
    brute = Brute(G)
    H = elements_of(G, m.H)
    for U in all_subgroups(G):
        Us = elements_of(G, U)
        assert I.root_capacity(m, U) == oracles.rho(brute, H, Us)
        assert I.intersection_indicium(m, U) == oracles.tau(brute, H, Us)


def test_rho_examples():
    holo = C.holomorph_model(15)
    assert I.root_capacity(holo, holo.table.trivial()) == 15
    assert I.root_capacity(holo, C.holomorph_sub_M(holo, 3)) == 5
    s4 = C.symmetric_model(4, 1)
    assert I.root_capacity(s4, pointwise_stabilizer(s4.table, [0, 1])) == 2


def test_rho_of_L_itself_is_cluster_size():
    holo = C.holomorph_model(15)
    assert I.root_capacity(holo, C.holomorph_sub_M(holo, 15)) == 1
    assert I.intersection_indicium(holo, C.holomorph_sub_M(holo, 15)) == 15


def test_tau_examples():
    holo = C.holomorph_model(15)
    assert I.intersection_indicium(holo, C.holomorph_sub_M(holo, 3)) == 3
    for spec in ("sym:4,1", "sdp:3,4", "holo:8"):
        m = parse_spec(spec).model
        rep = I.invariant_report(m)
        assert I.intersection_indicium(m, m.H) == rep.degree
        assert I.intersection_indicium(m, m.table.trivial()) == rep.ascending_index


def test_tau_zero_when_no_conjugate_contains_u():
    m = C.symmetric_model(4, 1)
    assert I.intersection_indicium(m, m.table.whole()) == 0
    assert I.root_capacity(m, m.table.whole()) == 0


def test_foreign_subgroup_rejected():
    m = C.symmetric_model(4, 1)
    other = C.symmetric_group(3)
    with pytest.raises(UsageError):
        I.root_capacity(m, other.whole())


def test_towers():
    m = C.shift_semidirect_model(3, 4)
    for o in [(0, 1, 2, 3), (3, 1, 0, 2), (2, 3, 1, 0)]:
        t = I.cluster_tower(m, o)
        assert (t.length, t.degrees) == (5, (12, 36, 108, 324))
    cyc = C.cyclic_model(5)
    assert (I.cluster_tower(cyc, [0]).length, I.cluster_tower(cyc, [0]).degrees) == (2, (5,))
    s4 = C.symmetric_model(4, 1)
    t = I.cluster_tower(s4, [0, 1, 2, 3])
    assert (t.length, t.degrees) == (4, (4, 12, 24))
    with pytest.raises(UsageError):
        I.cluster_tower(s4, [0, 1, 2])


def test_tower_profiles():
    assert I.tower_profiles(C.symmetric_model(4, 1)).profiles == ((4, (4, 12, 24)),)
    sdp = I.tower_profiles(C.shift_semidirect_model(2, 3))
    assert sdp.exhaustive and len(sdp.profiles) == 1 and sdp.profiles[0][0] == 4
    for spec in ("holo:6", "sym:3,2", "cyc:4"):
        m = parse_spec(spec).model
        if len(I.conjugates(m)) <= 2:
            assert len(I.tower_profiles(m).profiles) == 1


def test_tower_profiles_sampled_when_too_many_orderings():
    m = C.frobenius_model(9)
    a = I.tower_profiles(m, max_orderings=50, seed=3)
    b = I.tower_profiles(m, max_orderings=50, seed=3)
    assert not a.exhaustive and a.orderings_checked == 50
    assert a == b


def test_tower_profiles_match_brute_force():
    m = C.holomorph_model(6)
    conj = I.conjugates(m)
    seen = set()
    for o in permutations(range(len(conj))):
        degrees, cur = [], m.table.whole()
        for i in o:
            nxt = intersect(cur, conj[i])
            if nxt != cur:
                degrees.append(m.table.order // nxt.order)
            cur = nxt
        seen.add((len(degrees) + 1, tuple(degrees)))
    assert set(I.tower_profiles(m).profiles) == seen


@pytest.mark.parametrize("spec", ["sdp:2,3", "frob:5", "sym:4,1", "holo:6", "holo:10", "frob:4", "sym:5,1",
                                  "sym:4,2", "cyc:6"])
def test_min_gen_sets_match_brute_force(spec):
    m = parse_spec(spec).model
    conj = [elements_of(m.table, c) for c in I.conjugates(m)]
    rep = I.minimal_generating_sets(m)
    assert list(rep.sets) == oracles.min_gen_sets(conj, m.table.realization.identity)
    assert rep.exhaustive and rep.closed


def test_min_gen_examples():
    sdp = I.minimal_generating_sets(C.shift_semidirect_model(2, 3))
    assert sdp.unique and sdp.sets == ((0, 1, 2),) and sdp.cardinalities == (3,)
    frob = I.minimal_generating_sets(C.frobenius_model(5))
    assert frob.cardinalities == (2,)
    galois = I.minimal_generating_sets(C.cyclic_model(4))
    assert galois.sets == ((0,),) and galois.cardinalities == (1,)
    assert I.minimal_generating_sets(C.cyclic_model(1)).sets == ((),)


def test_min_gen_bounded_search():
    rep = I.minimal_generating_sets(C.holomorph_model(105), max_card=4)
    assert rep.cardinalities == (2, 3)
    assert not rep.exhaustive and rep.closed
    cut = I.minimal_generating_sets(C.holomorph_model(105), max_card=2)
    assert cut.cardinalities == (2,) and not cut.closed and not cut.unique
    as_dict = cut.as_dict()
    assert min(min(b) for b in as_dict["sets"]) == 1


def test_min_gen_needs_faithful_model():
    with pytest.raises(SemanticsError):
        I.minimal_generating_sets(C.symmetric_model(4, 0))
    with pytest.raises(UsageError):
        I.minimal_generating_sets(C.symmetric_model(4, 1), max_card=0)


def test_d_set():
    assert I.d_set(C.shift_semidirect_model(2, 3)) == (0, 1, 2)
    assert I.d_set(C.symmetric_model(4, 1)) == ()


def test_relative_examples():
    G = C.symmetric_group(4)
    H2 = pointwise_stabilizer(G, [0, 1])
    G0 = pointwise_stabilizer(G, [0])
    rep = I.relative_report(G, G0, H2)
    # r over K is 2! = 2: the transposition of the two fixed points normalizes Stab(0, 1)
    brute = Brute(G)
    Hs = elements_of(G, H2)
    assert (rep.r_P, rep.r_K) == (1, len(brute.normalizer(Hs)) // len(Hs)) == (1, 2)
    # in S_4, fixing three points fixes all four, so the chain has already reached the closure
    rep = I.relative_report(G, G0, pointwise_stabilizer(G, [0, 1, 2]))
    assert rep.r_P == G0.order == 6
    assert all(rep.checks.values())
    S5 = C.symmetric_group(5)
    rep = I.relative_report(S5, pointwise_stabilizer(S5, [0]), pointwise_stabilizer(S5, [0, 1, 2]))
    assert rep.r_P == 2
    assert all(rep.checks.values())
    m = C.shift_semidirect_model(2, 3)
    absolute = I.invariant_report(m)
    same = I.relative_report(m.table, m.table.whole(), m.H)
    assert (same.r_P, same.s_P, same.t_P, same.u_P) == (absolute.cluster_size, absolute.num_clusters,
                                                         absolute.ascending_index, absolute.u)
    assert (same.r_K, same.t_K) == (absolute.cluster_size, absolute.ascending_index)
    with pytest.raises(UsageError):
        I.relative_report(G, H2, G0)


def test_capacity_sweep():
    rows = I.capacity_sweep(C.cyclic_model(1))
    assert [(r.subgroup.order, r.rho, r.tau) for r in rows] == [(1, 1, 1)]
    assert {r.tau for r in I.capacity_sweep(C.shift_semidirect_model(2, 3))} <= {0, 3, 6}
    assert all(r.rho != 3 for r in I.capacity_sweep(C.symmetric_model(4, 1)))
    with pytest.raises(SizeLimitError):
        I.capacity_sweep(C.symmetric_model(7, 1))

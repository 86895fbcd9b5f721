"""Named verification suites.

Each suite is a list of :class:`Check` records.  A check pairs a case
builder (``seed -> iterable of cases``) with a property (``case -> bool`` or
``(bool, note)``) and the anchor naming the claim it tests.  Adding a claim
means adding a record; the runner and the command line do not change.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, gcd, lcm, perm
from typing import Any, Callable, Iterable

import numpy as np

from . import constructions as C
from . import invariants as I
from . import triplets as T
from .arith import euler_phi, factorize, is_prime
from .group_core import (all_subgroups, conjugate_subgroup, distinct_conjugates, intersect, is_transitive, join,
                         normal_closure, normalizer, pointwise_stabilizer, restrict_to)
from .groupspec import parse_spec

DEFAULT_SEED = 0

# Models with |G| <= 500 used by the randomized and sweeping checks.
SWEEP_MODELS = (
    "sym:3,1", "sym:4,1", "sym:4,2", "sym:5,1", "sym:5,2",
    "sdp:2,2", "sdp:2,3", "sdp:3,2", "sdp:2,4", "sdp:3,3", "sdp:4,2", "sdp:2,5", "sdp:4,3", "sdp:3,4",
    "holo:5", "holo:6", "holo:7", "holo:8", "holo:9", "holo:10", "holo:12", "holo:15", "holo:16",
    "holo:21", "frob:4", "frob:5", "frob:7", "frob:8", "frob:9", "frob:11", "frob:13",
    "cyc:6", "cyc:8",
)
MAGNIFY_MODELS = tuple(m for m in SWEEP_MODELS if m not in ("sdp:3,4", "sdp:4,3", "sdp:2,5", "holo:21"))
SMALL_GROUPS = (
    "sym:3,1", "sym:4,1", "sdp:2,2", "sdp:2,3", "sdp:3,2", "holo:5", "holo:6", "holo:7", "holo:8",
    "holo:10", "holo:12", "frob:4", "frob:5", "frob:7", "cyc:12", "cyc:30",
    "dp:(cyc:2)x(sym:3,1)", "dp:(cyc:2)x(cyc:2)", "mag:(sym:3,1)x(cyc:4)", "mag:(holo:5)x(cyc:2)",
)


@lru_cache(maxsize=None)
def model(spec: str) -> C.ExtensionModel:
    return parse_spec(spec).model


@dataclass(frozen=True)
class Check:
    claim: str
    anchor: str
    cases: Callable[[int], Iterable[Any]]
    prop: Callable[[Any], Any]
    label: Callable[[Any], str] = repr


@dataclass(frozen=True)
class CheckResult:
    claim: str
    anchor: str
    passed: bool
    details: str

    def as_dict(self) -> dict:
        return {"claim": self.claim, "anchor": self.anchor, "passed": self.passed, "details": self.details}


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checks: tuple[CheckResult, ...]
    elapsed: float = field(compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.as_dict() for c in self.checks]}


def run_check(check: Check, seed: int = DEFAULT_SEED) -> CheckResult:
    total = 0
    failures = []
    for case in check.cases(seed):
        total += 1
        try:
            res = check.prop(case)
        except Exception as exc:  # a crash counts as a failed case
            res = (False, f"{type(exc).__name__}: {exc}")
        ok, note = res if isinstance(res, tuple) else (bool(res), "")
        if not ok:
            failures.append(f"{check.label(case)}{' ' + note if note else ''}")
    if total == 0:
        return CheckResult(check.claim, check.anchor, False, "no cases generated")
    if failures:
        return CheckResult(check.claim, check.anchor, False,
                           f"{len(failures)}/{total} cases failed; first: {failures[0]}")
    return CheckResult(check.claim, check.anchor, True, f"{total} cases hold")


def run_suite(name: str, seed: int = DEFAULT_SEED) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    results = tuple(run_check(c, seed) for c in SUITES[name])
    return SuiteResult(name, results, time.perf_counter() - start)


# ---------------------------------------------------------------- helpers

def rho_by_cosets(m: C.ExtensionModel, U) -> int:
    """Count cosets ``gH`` with ``U`` inside ``gHg^-1`` directly."""
    G, H = m.table, m.H
    seen = set()
    count = 0
    um = U.mask
    for g in range(G.order):
        rep = min(G.mul_many(g, H.array).tolist())
        if rep in seen:
            continue
        seen.add(rep)
        conj = conjugate_subgroup(G, g, H)
        if conj.mask & um == um:
            count += 1
    return count


@lru_cache(maxsize=None)
def _sweep(spec: str):
    m = model(spec)
    rep = I.invariant_report(m)
    rows = I.capacity_sweep(m)
    return m, rep, rows


def _sweep_cases(seed):
    for spec in SWEEP_MODELS:
        m, rep, rows = _sweep(spec)
        yield spec, m, rep, rows


def _all_rows(pred):
    def prop(case):
        spec, m, rep, rows = case
        for row in rows:
            if not pred(m, rep, row):
                return False, f"U of order {row.subgroup.order}: rho={row.rho}, tau={row.tau}"
        return True
    return prop


def _spec_label(case):
    return case[0] if isinstance(case, tuple) and isinstance(case[0], str) else repr(case)


@lru_cache(maxsize=None)
def _magnified(spec: str, d: int):
    base = model(spec)
    R = C.cyclic_group(d)
    mag = C.magnify(base, R)
    dp = C.product_parts(mag)
    base_conj = I.conjugates(base)
    pos = {c.members: i for i, c in enumerate(base_conj)}
    mapping = [pos[dp.project(c, 0).members] for c in I.conjugates(mag)]
    return base, mag, dp, mapping


def _magnify_cases(seed):
    rng = random.Random(seed)
    for _ in range(200):
        spec = rng.choice(MAGNIFY_MODELS)
        d = rng.randint(2, 5)
        base, mag, dp, mapping = _magnified(spec, d)
        subs = all_subgroups(base.table)
        picks = rng.sample(subs, min(6, len(subs))) + [base.table.trivial()]
        picks += [U for U in subs if base.H.issubset(U)]
        s = len(mapping)
        orders = []
        for _ in range(4):
            o = list(range(s))
            rng.shuffle(o)
            orders.append(tuple(o))
        yield spec, d, base, mag, dp, mapping, picks, orders


def _mag_label(case):
    return f"{case[0]} with Z/{case[1]}"


def _mag_invariants(case):
    spec, d, base, mag, *_ = case
    a, b = I.invariant_report(base), I.invariant_report(mag)
    return a, b, d


def _mag_rho(case):
    spec, d, base, mag, dp, mapping, picks, orders = case
    trivial = dp.right.trivial()
    for U in picks:
        U2 = dp.product_subgroup(U, trivial)
        if I.root_capacity(mag, U2) != d * I.root_capacity(base, U):
            return False, f"U of order {U.order}"
    return True


def _mag_tau(case):
    spec, d, base, mag, dp, mapping, picks, orders = case
    trivial = dp.right.trivial()
    for U in picks:
        U2 = dp.product_subgroup(U, trivial)
        if I.intersection_indicium(mag, U2) != d * I.intersection_indicium(base, U):
            return False, f"U of order {U.order}"
    return True


def _mag_towers(case):
    spec, d, base, mag, dp, mapping, picks, orders = case
    inverse = {b: i for i, b in enumerate(mapping)}
    for o in orders:
        t1 = I.cluster_tower(base, o)
        t2 = I.cluster_tower(mag, [inverse[i] for i in o])
        if t2.length != t1.length or t2.degrees != tuple(d * x for x in t1.degrees):
            return False, f"ordering {o}"
    return True


def _mag_mingen(case):
    spec, d, base, mag, dp, mapping, picks, orders = case
    cap = min(len(mapping), 4)
    r1 = I.minimal_generating_sets(base, cap)
    r2 = I.minimal_generating_sets(mag, cap)
    mapped = sorted(tuple(sorted(mapping[i] for i in b)) for b in r2.sets)
    same = mapped == sorted(r1.sets) and r1.unique == r2.unique and r1.closed == r2.closed
    return same and sorted(mapping[i] for i in r2.d_set) == sorted(r1.d_set)


@lru_cache(maxsize=None)
def _product(spec1: str, spec2: str):
    m1, m2 = model(spec1), model(spec2)
    return m1, m2, C.product_extension(m1, m2)


def _product_cases(seed):
    rng = random.Random(seed + 1)
    sizes = {s: model(s).table.order for s in MAGNIFY_MODELS}
    pairs = [(a, b) for a in MAGNIFY_MODELS for b in MAGNIFY_MODELS if sizes[a] * sizes[b] <= 2000]
    for _ in range(100):
        s1, s2 = rng.choice(pairs)
        m1, m2, pm = _product(s1, s2)
        subs = all_subgroups(m1.table)
        picks = rng.sample(subs, min(4, len(subs))) + [m1.H, m1.table.trivial()]
        yield s1, s2, m1, m2, pm, picks


def _prod_label(case):
    return f"{case[0]} x {case[1]}"


def _prod_degree(case):
    _, _, m1, m2, pm, _ = case
    a, b, c = I.invariant_report(m1), I.invariant_report(m2), I.invariant_report(pm)
    return c.degree == a.degree * b.degree and c.ascending_index == a.ascending_index * b.ascending_index


def _prod_clusters(case):
    _, _, m1, m2, pm, _ = case
    a, b, c = I.invariant_report(m1), I.invariant_report(m2), I.invariant_report(pm)
    return c.cluster_size == a.cluster_size * b.cluster_size and c.num_clusters == a.num_clusters * b.num_clusters


def _prod_rho(case):
    _, _, m1, m2, pm, picks = case
    dp = C.product_parts(pm)
    r2 = I.invariant_report(m2).cluster_size
    for U in picks:
        UT = dp.product_subgroup(U, m2.H)
        if I.root_capacity(pm, UT) != r2 * I.root_capacity(m1, U):
            return False, f"U of order {U.order}"
    return True


def _prod_tau(case):
    _, _, m1, m2, pm, picks = case
    dp = C.product_parts(pm)
    for U in picks:
        UT = dp.product_subgroup(U, m2.H)
        if I.intersection_indicium(pm, UT) != m2.degree * I.intersection_indicium(m1, U):
            return False, f"U of order {U.order}"
    return True


def _monotone(case):
    spec, m, rep, rows = case
    for A in rows:
        if A.tau == 0:
            continue
        am = A.subgroup.mask
        for B in rows:
            if B.subgroup.mask & am == am and B.tau % A.tau:
                return False, f"orders {A.subgroup.order} <= {B.subgroup.order}"
    return True


def _holo_zeta_cases(seed):
    for n in (5, 7, 9, 15, 21, 25):
        m = model(f"holo:{n}")
        for l in (x for x in range(1, n + 1) if n % x == 0):
            yield n, l, m


def _d_set_case(seed):
    for spec in SWEEP_MODELS:
        m = model(spec)
        if len(I.conjugates(m)) <= 12:
            yield spec, m


def _dual_cases(seed):
    for spec in SWEEP_MODELS:
        m = model(spec)
        if len(I.conjugates(m)) <= 6:
            yield spec, m


def _duality(case):
    spec, m = case
    conj = I.conjugates(m)
    masks = [c.mask for c in conj]
    report = I.minimal_generating_sets(m)
    minimal = set(report.sets)
    full = (1 << m.table.order) - 1
    s = len(masks)
    for k in range(1, s + 1):
        for B in combinations(range(s), k):
            inter = full
            for i in B:
                inter &= masks[i]
            strict = inter == 1
            if strict:
                for o in permutations(B):
                    cur = full
                    steps = 0
                    for i in o:
                        nxt = cur & masks[i]
                        steps += nxt != cur
                        cur = nxt
                    if steps != k:
                        strict = False
                        break
            if strict != (B in minimal):
                return False, f"subset {B}"
    return True


def _unique_f(case):
    spec, m = case
    return join(*I.conjugates(m)) == normal_closure(m.table, m.H)


# ---------------------------------------------------------------- family checks

def _sdp_report(case):
    r, s, m = case
    rep = I.invariant_report(m)
    ok = (rep.degree, rep.cluster_size, rep.num_clusters, rep.ascending_index, rep.u) == (r * s, r, s, s, r)
    G = m.table
    base = [i for i, e in enumerate(G.elements) if e[1] == 0]
    ok &= rep.normalizer.members == tuple(base) == rep.normal_closure.members
    return ok


def _sdp_cases(seed):
    for r, s in ((2, 3), (3, 4), (2, 5), (4, 3)):
        yield r, s, model(f"sdp:{r},{s}")


def _sdp_towers(case):
    r, s, m = case
    n = r * s
    prof = I.tower_profiles(m)
    return prof.exhaustive and prof.profiles == ((s + 1, tuple(n * r**k for k in range(s))),)


def _sdp_mingen(case):
    r, s, m = case
    rep = I.minimal_generating_sets(m)
    return rep.unique and rep.sets == (tuple(range(s)),) and rep.d_set == tuple(range(s))


def _law_cases(seed):
    for s in range(2, 12):
        for r in range(2, 64):
            if r**s * s > 2000:
                break
            yield r, s


def sdp_inverse_formula(a, b, s, r):
    """``((-a_{s-b+1}, ..., -a_s, -a_1, ..., -a_{s-b}), -b)`` written out literally."""
    tail = [-x % r for x in a[s - b:]]
    head = [-x % r for x in a[:s - b]]
    return tuple(tail + head), -b % s


def sdp_conjugation_formula(c, b):
    """``((c_{b+1}, ..., c_{s-1}, 0, c_1, ..., c_b), 0)`` for ``c = (c_1, ..., c_{s-1})``."""
    return tuple(list(c[b:]) + [0] + list(c[:b])), 0


def _law_fidelity(case):
    r, s = case
    G = model(f"sdp:{r},{s}").table
    for g, (a, b) in enumerate(G.elements):
        if G.elements[G.inv(g)] != sdp_inverse_formula(a, b, s, r):
            return False, f"inverse of {(a, b)}"
    Hs = [i for i, (a, b) in enumerate(G.elements) if b == 0 and a[s - 1] == 0]
    Hs_arr = np.asarray(Hs)
    for g, (a, b) in enumerate(G.elements):
        got = G.conjugate_many(g, Hs_arr).tolist()
        for h, x in zip(Hs, got):
            c = G.elements[h][0][: s - 1]
            if G.elements[x] != sdp_conjugation_formula(c, b):
                return False, f"conjugating {G.elements[h]} by {(a, b)}"
    return True


def _sym_chain_cases(seed):
    for n in range(3, 7):
        G = C.symmetric_group(n)
        for k in range(0, n - 2):
            G0 = pointwise_stabilizer(G, range(k))
            sub = restrict_to(G, G0)
            for j in range(1, n - 1 - k):
                yield n, k, j, sub


def _sym_chain(case):
    n, k, j, sub = case
    S = sub.table
    Hj = pointwise_stabilizer(S, range(k + j))
    r = normalizer(S, Hj).order // Hj.order
    if r != factorial(j):
        return False, f"r = {r}"
    for l in range(1, j + 1):
        L = pointwise_stabilizer(S, range(k + l))
        m = C.ExtensionModel(S, L, f"S_{n} chain")
        rho = I.root_capacity(m, Hj)
        if rho != perm(j, l):
            return False, f"l={l}: rho = {rho}"
    return True


def _holo_case(case):
    n, l, m = case
    U = C.holomorph_sub_M(m, l)
    rep = I.invariant_report(m)
    rho, tau = I.root_capacity(m, U), I.intersection_indicium(m, U)
    return (rho, tau, rep.ascending_index) == (n // l, l, 1), f"rho={rho} tau={tau} t={rep.ascending_index}"


def _holo_even(case):
    n = case
    m = model(f"holo:{n}")
    rep = I.invariant_report(m)
    ok = rep.ascending_index == 2
    if n == 8:
        U = C.holomorph_sub_M(m, 2)
        ok &= I.intersection_indicium(m, U) == 4
    return ok


def _impossibility(case):
    S4 = C.symmetric_group(4)
    hits = []
    for K in all_subgroups(S4):
        if not is_transitive(S4, K):
            continue
        sub = restrict_to(S4, K)
        H = pointwise_stabilizer(sub.table, [0])
        m = C.ExtensionModel(sub.table, H, f"transitive order {K.order}")
        if I.invariant_report(m).ascending_index != 1:
            continue
        hits.append(K.order)
        for U in all_subgroups(sub.table):
            if I.intersection_indicium(m, U) == 2:
                return False, f"tau = 2 in transitive group of order {K.order}"
    return sorted(hits) == [12, 24], f"t = 1 groups of orders {sorted(hits)}"


def _sn_triplets(seed):
    for n in range(2, 7):
        yield n


def _sn_realize(n):
    G = C.symmetric_group(n)
    for k in range(0, n):
        for j in range(0, k + 1):
            for i in range(0, j + 1):
                if k + i > n - 1:
                    continue
                H1 = pointwise_stabilizer(G, range(j))
                H2 = pointwise_stabilizer(G, range(i, k + i))
                w = T.realize(G, H1, H2)
                if w.triplet != (perm(n, j), perm(n, k), perm(n, k + i)):
                    return False, f"(j,k,i)=({j},{k},{i}) gave {w.triplet}"
                if T.in_c_prime(*w.triplet) != (perm(n, j) % perm(n - k, i) == 0):
                    return False, f"C' membership at (j,k,i)=({j},{k},{i})"
    return True


def _phi_realize(n):
    m = model(f"holo:{n}")
    G = m.table
    H2 = conjugate_subgroup(G, G.index((1, 1)), m.H)
    w = T.realize(G, m.H, H2)
    return w.triplet == (n, n, n * euler_phi(n)) and w.solvable


def _pairs_condition(spec):
    G = model(spec).table
    subs = all_subgroups(G)
    n = G.order
    for A in subs:
        for B in subs:
            a, b = n // A.order, n // B.order
            c = n // (A.mask & B.mask).bit_count()
            if T.necessary_form(a, b, c) is None:
                return False, f"({a},{b},{c})"
    return True


def _relative_cases(seed):
    for n in range(3, 7):
        G = C.symmetric_group(n)
        for k in range(0, n + 1):
            for mm in range(k, n + 1):
                yield f"S_{n} k={k} m={mm}", G, pointwise_stabilizer(G, range(k)), pointwise_stabilizer(G, range(mm))
    for spec in ("sdp:2,3", "sdp:3,2", "sdp:2,4", "sdp:3,3"):
        m = model(spec)
        for G0 in all_subgroups(m.table):
            if m.H.issubset(G0):
                yield f"{spec} |G0|={G0.order}", m.table, G0, m.H


def _relative(case):
    _, G, G0, H = case
    rep = I.relative_report(G, G0, H)
    NP = normalizer(G, H, within=G0)
    NK = normalizer(G, H)
    extra = intersect(NK, G0) == NP
    bad = [k for k, v in rep.checks.items() if not v]
    return (not bad and extra), ", ".join(bad)


def _direct_power_cases(seed):
    for spec, G in (("Z/2", C.cyclic_group(2)), ("Z/3", C.cyclic_group(3)), ("S_3", C.symmetric_group(3))):
        for m in (2, 3):
            if G.order**m <= 2000:
                yield spec, m, G


def _direct_power(case):
    _, m, G = case
    P, Ns = C.direct_power_family(G, m)
    for i in range(m):
        conj = {c.members for c in distinct_conjugates(P, Ns[i])}
        for j in range(i + 1, m):
            if join(Ns[i], Ns[j]).order != P.order:
                return False, f"N_{i + 1} and N_{j + 1} do not generate"
            if Ns[j].members in conj:
                return False, f"N_{i + 1} and N_{j + 1} are conjugate"
    return True


# ---------------------------------------------------------------- triplet checks

def _grid_case(seed):
    yield 200


def _grid(N):
    form, window, divis = T.classify_grid(N)
    return bool((form == window).all() and (window == divis).all())


def _grid_spot(seed):
    rng = random.Random(seed + 7)
    for _ in range(2000):
        yield tuple(rng.randint(1, 200) for _ in range(3))


def _scalar_agree(t):
    form, window, divis = _cached_grid()
    a, b, c = t
    vals = (T.in_c_prime(a, b, c), T.valuation_check(a, b, c), T.divisibility_check(a, b, c))
    return vals == (bool(form[a, b, c]), bool(window[a, b, c]), bool(divis[a, b, c]))


@lru_cache(maxsize=1)
def _cached_grid():
    return T.classify_grid(200)


def _irreducible_cases(seed):
    for a in range(1, 61):
        for b in range(1, 61):
            l, g = lcm(a, b), gcd(a, b)
            for t in range(1, g + 1):
                if g % t == 0:
                    yield a, b, l * t


def _irreducible(t):
    return T.is_irreducible_c_prime(*t) == (not T.factorizations_c_prime(*t))


def _monoid_cases(seed):
    rng = random.Random(seed + 11)
    pool = list(_irreducible_cases(seed))
    for _ in range(3000):
        yield rng.choice(pool), rng.choice(pool)


def _monoid(pair):
    x, y = pair
    xy, yx = T.triplet_mul(x, y), T.triplet_mul(y, x)
    ok = xy == yx and T.in_c_prime(*xy) and T.triplet_mul(x, (1, 1, 1)) == tuple(x)
    for k in range(1, 5):
        ok &= T.in_c_prime(x[0] ** k, x[1] ** k, x[2] ** k)
    return ok


def _phi_c_prime(seed):
    yield from range(1, 201)


def _phi_membership(n):
    f = dict(factorize(n)) if n > 1 else {}
    expected = n == 1 or (set(f) <= {2, 3} and f.get(2, 0) >= 1)
    return T.in_c_prime(n, n, n * euler_phi(n)) == expected


def _phi_irreducible(n):
    trip = (n, n, n * euler_phi(n))
    splits = T.factorizations_necessary_form(*trip)
    if n == 1 or is_prime(n):
        return not splits, f"necessary-form split {splits[:1]}"
    # composite: exhibit a split into two members of the same family
    for d in range(2, n):
        if n % d == 0 and gcd(d, n // d) == 1:
            x, y = (d, d, d * euler_phi(d)), (n // d, n // d, (n // d) * euler_phi(n // d))
            return T.triplet_mul(x, y) == trip
    p = factorize(n)[0][0]
    q = n // p
    x, y = (p, p, p * p), (q, q, q * euler_phi(q))
    return T.triplet_mul(x, y) == trip and T.necessary_form(*x) is not None


def _examples(seed):
    yield "in", (4, 6, 24), True, 2
    yield "in", (12, 12, 48), True, 4
    yield "out", (3, 3, 6), False, 2
    yield "out", (4, 4, 12), False, 3
    yield "out", (2, 3, 5), False, None


def _example(case):
    _, trip, inside, t = case
    return T.in_c_prime(*trip) == inside and T.necessary_form(*trip) == t


# ---------------------------------------------------------------- suite table

def _one(seed):
    yield None


SUITES: dict[str, list[Check]] = {
    "magnification": [
        Check("MAG-1", "cluster size magnification: r' = d r, n' = d n, s' = s", _magnify_cases,
              lambda c: (lambda a, b, d: (b.cluster_size, b.degree, b.num_clusters)
                         == (d * a.cluster_size, d * a.degree, a.num_clusters))(*_mag_invariants(c)), _mag_label),
        Check("MAG-2", "ascending index magnification: t' = d t, u' = u", _magnify_cases,
              lambda c: (lambda a, b, d: (b.ascending_index, b.u) == (d * a.ascending_index, a.u))(*_mag_invariants(c)),
              _mag_label),
        Check("MAG-3", "root capacity magnification: rho' = d rho", _magnify_cases, _mag_rho, _mag_label),
        Check("MAG-4", "intersection indicium magnification: tau' = d tau", _magnify_cases, _mag_tau, _mag_label),
        Check("MAG-5", "magnified cluster towers: same lengths, degrees times d", _magnify_cases, _mag_towers,
              _mag_label),
        Check("MAG-6", "magnified minimal generating sets correspond", _magnify_cases, _mag_mingen, _mag_label),
    ],
    "product-extension": [
        Check("PROD-1", "compositum with disjoint extension: degree and t multiply", _product_cases, _prod_degree,
              _prod_label),
        Check("PROD-2", "compositum with disjoint extension: r and s multiply", _product_cases, _prod_clusters,
              _prod_label),
        Check("PROD-3", "compositum with disjoint extension: rho(MJ, LJ) = r(J) rho(M, L)", _product_cases,
              _prod_rho, _prod_label),
        Check("PROD-4", "compositum with disjoint extension: tau(MJ, LJ) = [J:K] tau(M, L)", _product_cases,
              _prod_tau, _prod_label),
    ],
    "tau-properties": [
        Check("TAU-1", "tau(L, L) = [L:K]", _sweep_cases,
              lambda c: I.intersection_indicium(c[1], c[1].H) == c[2].degree, _spec_label),
        Check("TAU-2", "tau(closure, L) = t", _sweep_cases,
              lambda c: I.intersection_indicium(c[1], c[1].table.trivial()) == c[2].ascending_index, _spec_label),
        Check("TAU-3", "t | tau | [L:K] whenever tau != 0", _sweep_cases,
              _all_rows(lambda m, rep, row: row.tau == 0 or (row.tau % rep.ascending_index == 0
                                                            and rep.degree % row.tau == 0)), _spec_label),
        Check("TAU-4", "tau monotone: U <= U' and tau(U) != 0 imply tau(U) | tau(U')", _sweep_cases, _monotone,
              _spec_label),
        Check("TAU-5", "shift semidirect models: tau in {0, t, n}",
              lambda seed: (c for c in _sweep_cases(seed) if c[0].startswith("sdp")),
              _all_rows(lambda m, rep, row: row.tau in (0, rep.ascending_index, rep.degree)), _spec_label),
        Check("TAU-6", "symmetric models with one fixed root: tau in {0, 1, n}",
              lambda seed: (c for c in _sweep_cases(seed) if c[0] in ("sym:3,1", "sym:4,1", "sym:5,1")),
              _all_rows(lambda m, rep, row: row.tau in (0, 1, rep.degree)), _spec_label),
        Check("TAU-7", "holomorph root-of-unity subfields: rho = n/l, tau = l", _holo_zeta_cases,
              lambda c: (I.root_capacity(c[2], C.holomorph_sub_M(c[2], c[1])),
                         I.intersection_indicium(c[2], C.holomorph_sub_M(c[2], c[1]))) == (c[0] // c[1], c[1]),
              lambda c: f"n={c[0]} l={c[1]}"),
    ],
    "rho-properties": [
        Check("RHO-1", "r | rho and rho <= n", _sweep_cases,
              _all_rows(lambda m, rep, row: row.rho % rep.cluster_size == 0 and row.rho <= rep.degree), _spec_label),
        Check("RHO-2", "rho never equals n - 1", _sweep_cases,
              _all_rows(lambda m, rep, row: rep.degree < 3 or row.rho != rep.degree - 1), _spec_label),
        Check("RHO-3", "rho = n iff U lies in every conjugate", _sweep_cases,
              _all_rows(lambda m, rep, row: (row.rho == rep.degree)
                        == all(row.subgroup.issubset(h) for h in I.conjugates(m))), _spec_label),
        Check("RHO-4", "rho = r iff tau = n", _sweep_cases,
              _all_rows(lambda m, rep, row: (row.rho == rep.cluster_size) == (row.tau == rep.degree)), _spec_label),
        Check("RHO-5", "rho = n implies tau = t", _sweep_cases,
              _all_rows(lambda m, rep, row: row.rho != rep.degree or row.tau == rep.ascending_index), _spec_label),
        Check("RHO-6", "root capacity equals the coset count", _sweep_cases,
              _all_rows(lambda m, rep, row: row.rho == rho_by_cosets(m, row.subgroup)), _spec_label),
        Check("RHO-7", "full-length tower realizes every capacity a r, 0 <= a <= s", _sweep_cases,
              lambda c: _full_tower_capacity(c), _spec_label),
    ],
    "towers": [
        Check("TOW-1", "shift semidirect towers: degrees (n, nr, ..., nr^(s-1)) for every ordering", _sdp_cases,
              _sdp_towers, lambda c: f"sdp:{c[0]},{c[1]}"),
        Check("TOW-2", "tower length at most s + 1, degrees strictly increasing", _d_set_case,
              lambda c: all(l <= len(I.conjugates(c[1])) + 1 and list(d) == sorted(set(d))
                            and all(c[1].table.order % x == 0 for x in d)
                            for l, d in I.tower_profiles(c[1], max_orderings=720).profiles), _spec_label),
        Check("TOW-3", "minimal generating set iff every ordering gives a tower of length |B| + 1", _dual_cases,
              _duality, _spec_label),
        Check("TOW-4", "S_4 point stabilizers: single profile (4, 12, 24)", _one,
              lambda _: I.tower_profiles(model("sym:4,1")).profiles == ((4, (4, 12, 24)),)),
    ],
    "mingen": [
        Check("GEN-1", "shift semidirect: unique minimal generating set, all conjugates", _sdp_cases, _sdp_mingen,
              lambda c: f"sdp:{c[0]},{c[1]}"),
        Check("GEN-2", "affine groups of GF(q): every minimal generating set has two members",
              lambda seed: iter((4, 5, 7, 8, 9)),
              lambda q: (lambda r: r.exhaustive and r.cardinalities == (2,))(
                  I.minimal_generating_sets(model(f"frob:{q}"))), lambda q: f"frob:{q}"),
        Check("GEN-3", "holomorph of Z/n: cardinalities 2..omega(n)", lambda seed: iter(((15, 15), (105, 4))),
              lambda c: (lambda r: r.cardinalities == ((2,) if c[0] == 15 else (2, 3)))(
                  I.minimal_generating_sets(model(f"holo:{c[0]}"), c[1])), lambda c: f"holo:{c[0]}"),
        Check("GEN-4", "D is empty or everything; a unique minimal set is everything", _d_set_case,
              lambda c: (lambda r, s: r.d_set in ((), tuple(range(s)))
                         and (not r.unique or r.sets == (tuple(range(s)),))
                         and all(set(r.d_set) <= set(b) for b in r.sets))(
                  I.minimal_generating_sets(c[1]), len(I.conjugates(c[1]))), _spec_label),
        Check("GEN-5", "join of the conjugates is the normal closure", _d_set_case, _unique_f, _spec_label),
    ],
    "triplets": [
        Check("TRI-1", "C' form, valuation window and lcm | c | ab agree on [1, 200]^3", _grid_case, _grid),
        Check("TRI-2", "scalar tests agree with the grid", _grid_spot, _scalar_agree),
        Check("TRI-3", "irreducible elements of C' are (1,1,1), (1,p,p), (p,1,p), (p,p,p)", _irreducible_cases,
              _irreducible),
        Check("TRI-4", "C' is a commutative monoid closed under powers", _monoid_cases, _monoid),
        Check("TRI-5", "(n, n, n phi(n)) lies in C' iff n = 1 or n = 2^l 3^m with l >= 1", _phi_c_prime,
              _phi_membership),
        Check("TRI-6", "(n, n, n phi(n)) is irreducible iff n = 1 or n is prime", lambda seed: iter(range(1, 25)),
              _phi_irreducible),
        Check("TRI-7", "necessary form versus C' on known examples", _examples, _example),
    ],
    "impossibility-412": [
        Check("IMP-1", "no degree-4 extension with t = 1 has tau = 2", _one, lambda _: _impossibility(None)),
    ],
    "families": [
        Check("FAM-1", "shift semidirect invariants: (rs, r, s, s, r) and N = H^G = (Z/r)^s", _sdp_cases,
              _sdp_report, lambda c: f"sdp:{c[0]},{c[1]}"),
        Check("FAM-2", "shift semidirect inverse and conjugation formulas", _law_cases, _law_fidelity,
              lambda c: f"sdp:{c[0]},{c[1]}"),
        Check("FAM-3", "S_n stabilizer chains: r = j! and rho = jPl", _sym_chain_cases, _sym_chain,
              lambda c: f"n={c[0]} k={c[1]} j={c[2]}"),
        Check("FAM-4", "holomorph root-of-unity subfields with t = 1", lambda seed: (
            (n, l, model(f"holo:{n}")) for n in (9, 15, 21, 25) for l in range(1, n + 1) if n % l == 0),
            _holo_case, lambda c: f"n={c[0]} l={c[1]}"),
        Check("FAM-5", "even holomorphs: t = 2, and tau = 4 for Q(a, i) at n = 8", lambda seed: iter((8, 12)),
              _holo_even),
        Check("FAM-6", "S_n stabilizer pairs realize (nPj, nPk, nP(k+i))", _sn_triplets, _sn_realize),
        Check("FAM-7", "holomorphs realize (n, n, n phi(n)) with a solvable group", lambda seed: iter(range(3, 25)),
              _phi_realize),
        Check("FAM-8", "every realized triplet has the necessary form", lambda seed: iter(SMALL_GROUPS),
              _pairs_condition),
    ],
    "relative": [
        Check("REL-1", "relative cluster invariants over an intermediate field", _relative_cases, _relative,
              lambda c: c[0]),
    ],
    "direct-power": [
        Check("DP-1", "coordinate kernels of G^m pairwise generate and are not conjugate", _direct_power_cases,
              _direct_power, lambda c: f"{c[0]}^{c[1]}"),
    ],
}


def _full_tower_capacity(case):
    """If some ordering gives a tower of length s + 1, each prefix intersection has rho = a r (and G has rho = 0)."""
    spec, m, rep, rows = case
    conj = I.conjugates(m)
    s = len(conj)
    if factorial(s) > 5040:
        return True
    for o in permutations(range(s)):
        if I.cluster_tower(m, o).length != s + 1:
            continue
        if rep.degree > 1 and I.root_capacity(m, m.table.whole()) != 0:
            return False, "a=0"
        for a in range(1, s + 1):
            U = intersect(*[conj[i] for i in o[:a]])
            if I.root_capacity(m, U) != a * rep.cluster_size:
                return False, f"a={a}"
        return True
    return True


def anchors() -> list[tuple[str, str, str]]:
    """``(suite, claim, anchor)`` for every registered check."""
    return [(name, c.claim, c.anchor) for name, checks in SUITES.items() for c in checks]

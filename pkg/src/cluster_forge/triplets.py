"""Compositum triplets ``(a, b, c) = ([L1:K], [L2:K], [L1 L2:K])``.

Every realizable triplet satisfies ``c = lcm(a, b) t`` with ``t <= gcd(a, b)``.
The submonoid ``C'`` keeps the triplets with ``t | gcd(a, b)``; membership can
be read off three ways (the ``t`` parameter, prime valuations, or
``lcm(a, b) | c | ab``), and all three agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from ._backend import kernels
from .arith import divisors, factorize, is_prime
from .errors import SizeLimitError, UsageError
from .group_core import GroupTable, SubgroupSet, all_subgroups, intersect, is_solvable


def _check(a, b, c):
    if min(a, b, c) < 1:
        raise UsageError("triplet entries must be positive integers")


def necessary_form(a: int, b: int, c: int) -> int | None:
    """``t`` with ``c = lcm(a, b) t`` and ``t <= gcd(a, b)``, or ``None``."""
    _check(a, b, c)
    l = lcm(a, b)
    if c % l:
        return None
    t = c // l
    return t if t <= gcd(a, b) else None


def in_c_prime(a: int, b: int, c: int) -> bool:
    """Necessary form with ``t`` dividing ``gcd(a, b)``."""
    t = necessary_form(a, b, c)
    return t is not None and gcd(a, b) % t == 0


def valuation_check(a: int, b: int, c: int) -> bool:
    """``max(v_p a, v_p b) <= v_p c <= v_p a + v_p b`` for every prime ``p``."""
    _check(a, b, c)
    va, vb, vc = dict(factorize(a)), dict(factorize(b)), dict(factorize(c))
    for p in set(va) | set(vb) | set(vc):
        x, y, z = va.get(p, 0), vb.get(p, 0), vc.get(p, 0)
        if not max(x, y) <= z <= x + y:
            return False
    return True


def divisibility_check(a: int, b: int, c: int) -> bool:
    """``lcm(a, b) | c | ab``."""
    _check(a, b, c)
    return c % lcm(a, b) == 0 and (a * b) % c == 0


def triplet_mul(x: tuple, y: tuple) -> tuple[int, int, int]:
    return x[0] * y[0], x[1] * y[1], x[2] * y[2]


def _is_identity(x):
    return tuple(x) == (1, 1, 1)


def is_irreducible_c_prime(a: int, b: int, c: int) -> bool:
    """Irreducible elements of ``C'``: ``(1,1,1)``, ``(1,p,p)``, ``(p,1,p)``, ``(p,p,p)``."""
    if not in_c_prime(a, b, c):
        raise UsageError(f"({a},{b},{c}) is not in C'")
    if (a, b, c) == (1, 1, 1):
        return True
    if a == 1:
        return is_prime(b) and c == b
    if b == 1:
        return is_prime(a) and c == a
    return a == b == c and is_prime(a)


def _factor_pairs(a, b, c, member):
    # a left factor (a1, b1, c1) of either kind has c1 = lcm(a1, b1) t1 with t1 <= gcd(a1, b1)
    out = set()
    for a1 in divisors(a):
        for b1 in divisors(b):
            l1, g1 = lcm(a1, b1), gcd(a1, b1)
            for t1 in range(1, g1 + 1):
                c1 = l1 * t1
                if c % c1:
                    continue
                x = (a1, b1, c1)
                y = (a // a1, b // b1, c // c1)
                if _is_identity(x) or _is_identity(y):
                    continue
                if member(*x) and member(*y):
                    out.add(tuple(sorted((x, y))))
    return sorted(out)


def factorizations_c_prime(a: int, b: int, c: int) -> list[tuple[tuple, tuple]]:
    """Unordered factorizations into two non-identity elements of ``C'``."""
    _check(a, b, c)
    return _factor_pairs(a, b, c, in_c_prime)


def factorizations_necessary_form(a: int, b: int, c: int) -> list[tuple[tuple, tuple]]:
    """Factorizations into two non-identity triplets that both have the necessary form.

    No such factorization means ``(a, b, c)`` cannot split inside any
    monoid of realizable triplets.
    """
    _check(a, b, c)
    return _factor_pairs(a, b, c, lambda *x: necessary_form(*x) is not None)


@dataclass(frozen=True)
class Triplet:
    a: int
    b: int
    c: int
    t: int | None
    in_c_prime: bool
    irreducible: bool | None
    factorizations: tuple

    def as_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "c": self.c, "t": self.t,
            "in_c_prime": self.in_c_prime,
            "irreducible": self.irreducible,
            "factorizations": [[list(x), list(y)] for x, y in self.factorizations],
        }


def classify(a: int, b: int, c: int) -> Triplet:
    t = necessary_form(a, b, c)
    inside = in_c_prime(a, b, c)
    facts = tuple(factorizations_c_prime(a, b, c)) if inside else ()
    return Triplet(a, b, c, t, inside, is_irreducible_c_prime(a, b, c) if inside else None, facts)


def classify_grid(N: int):
    """Necessary-form, valuation and divisibility tests on all of ``[1, N]^3`` at once."""
    if N < 1:
        raise UsageError("grid size must be positive")
    if N > 400:
        raise SizeLimitError("triplet grids are capped at N = 400")
    return kernels.triplet_grid(N)


@dataclass(frozen=True)
class RealizationWitness:
    group: str
    h1: SubgroupSet
    h2: SubgroupSet
    triplet: tuple[int, int, int]
    solvable: bool

    def row(self) -> list:
        a, b, c = self.triplet
        return [self.group, self.h1.order, self.h2.order, a, b, c, str(self.solvable).lower()]


def realize(G: GroupTable, H1: SubgroupSet, H2: SubgroupSet, label: str = "") -> RealizationWitness:
    """The triplet ``([G:H1], [G:H2], [G:H1 cap H2])`` of two subgroups."""
    I = intersect(H1, H2)
    trip = (G.order // H1.order, G.order // H2.order, G.order // I.order)
    return RealizationWitness(label, H1, H2, trip, _solvable(G))


def _solvable(G):
    if not hasattr(G, "_solvable"):
        G._solvable = is_solvable(G)
    return G._solvable


def search_realizations(G: GroupTable, target: tuple[int, int, int], label: str = "",
                        up_to_conjugacy: bool = False) -> list[RealizationWitness]:
    """All ordered pairs of subgroups realizing ``target``."""
    a, b, c = target
    _check(a, b, c)
    subs = all_subgroups(G)
    n = G.order
    if n % a or n % b or n % c:
        return []
    firsts = [S for S in subs if S.order == n // a]
    seconds = [S for S in subs if S.order == n // b]
    out = []
    seen = set()
    for H1 in firsts:
        for H2 in seconds:
            if n // (H1.mask & H2.mask).bit_count() != c:
                continue
            if up_to_conjugacy:
                key = _pair_class(G, H1, H2)
                if key in seen:
                    continue
                seen.add(key)
            out.append(realize(G, H1, H2, label))
    return out


def _pair_class(G, H1, H2):
    best = None
    for g in range(G.order):
        x = tuple(sorted(G.conjugate_many(g, H1.array).tolist()))
        y = tuple(sorted(G.conjugate_many(g, H2.array).tolist()))
        if best is None or (x, y) < best:
            best = (x, y)
    return best


def feasibility_flags(witness: RealizationWitness) -> dict:
    """A realized triplet is compositum feasible, hence also sum and product feasible.

    The flags are recomputed from the triplet, so a witness that breaks the
    necessary form reports ``False`` everywhere.
    """
    a, b, c = witness.triplet
    ok = necessary_form(a, b, c) is not None
    return {"compositum_feasible": ok, "sum_feasible": ok, "product_feasible": ok}

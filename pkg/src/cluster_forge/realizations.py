"""Concrete groups given by an element encoding, a multiplication and generators.

Every realization exposes ``identity``, ``generators``, ``mul(x, y)`` and
``inv(x)`` on hashable, totally ordered encodings.  ``GroupTable`` turns one
of these into an indexed finite group.
"""
from __future__ import annotations

import copy

from .arith import units
from .errors import UsageError


class Realization:
    kind = "abstract"

    def __init__(self, identity, generators=()):
        self.identity = identity
        gens = tuple(generators)
        self.generators = gens if gens else (identity,)

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def with_generators(self, generators):
        """Same multiplication, different generating list."""
        other = copy.copy(self)
        gens = tuple(generators)
        other.generators = gens if gens else (self.identity,)
        return other

    def describe(self) -> str:
        return self.kind

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()}>"


def _check_perm(p, degree):
    if sorted(p) != list(range(degree)):
        raise UsageError(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return tuple(int(i) for i in p)


class PermutationRealization(Realization):
    """Permutations of ``0..degree-1`` as image tuples.

    Products compose right to left: ``mul(p, q)[i] == p[q[i]]``.
    """

    kind = "permutation"

    def __init__(self, degree: int, generators):
        if degree < 1:
            raise UsageError("permutation degree must be positive")
        self.degree = degree
        gens = [_check_perm(g, degree) for g in generators]
        super().__init__(tuple(range(degree)), gens)

    def mul(self, p, q):
        return tuple(map(p.__getitem__, q))

    def inv(self, p):
        out = [0] * len(p)
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    def describe(self):
        return f"permutations of degree {self.degree}"


def cycle_perm(degree: int, *cycles) -> tuple[int, ...]:
    """Permutation tuple from disjoint cycles, e.g. ``cycle_perm(4, (0, 1), (2, 3))``."""
    img = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return _check_perm(img, degree)


class ResidueTupleRealization(Realization):
    """Direct sums of cyclic groups ``Z/m_1 x ... x Z/m_j`` written additively."""

    kind = "residue-tuple"

    def __init__(self, moduli, generators=None):
        self.moduli = tuple(int(m) for m in moduli)
        if not self.moduli or min(self.moduli) < 1:
            raise UsageError("moduli must be positive")
        if generators is None:
            generators = [tuple(int(i == j) % m for j, m in enumerate(self.moduli))
                          for i in range(len(self.moduli))]
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != len(self.moduli) or any(not 0 <= x < m for x, m in zip(g, self.moduli)):
                raise UsageError(f"{g} is not a residue tuple for moduli {self.moduli}")
            gens.append(g)
        super().__init__(tuple(0 for _ in self.moduli), gens)

    def mul(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def inv(self, x):
        return tuple(-a % m for a, m in zip(x, self.moduli))

    def describe(self):
        return "x".join(f"Z/{m}" for m in self.moduli)


class ShiftSemidirectRealization(Realization):
    """``(Z/r)^s`` extended by ``Z/s`` acting through cyclic coordinate shifts.

    Elements are ``((a_1, ..., a_s), b)`` with
    ``((a), b) * ((c), d) = (a + b.c, b + d)`` and
    ``b.(c_1, ..., c_s) = (c_{b+1}, ..., c_s, c_1, ..., c_b)``.
    """

    kind = "shift-semidirect"

    def __init__(self, r: int, s: int):
        if r < 1 or s < 1:
            raise UsageError("shift semidirect needs r, s >= 1")
        self.r, self.s = r, s
        self._shift = [tuple((i + b) % s for i in range(s)) for b in range(s)]
        zero = (0,) * s
        gens = [((1,) + (0,) * (s - 1), 0), (zero, 1 % s)]
        super().__init__((zero, 0), gens)

    def mul(self, x, y):
        a, b = x
        c, d = y
        r = self.r
        return tuple((ai + c[j]) % r for ai, j in zip(a, self._shift[b])), (b + d) % self.s

    def inv(self, x):
        a, b = x
        s, r = self.s, self.r
        return tuple(-a[(i - b) % s] % r for i in range(s)), -b % s

    def describe(self):
        return f"(Z/{self.r})^{self.s} x| Z/{self.s}"


class HolomorphRealization(Realization):
    """Affine maps ``x -> c x + b`` of ``Z/n``, encoded ``(b, c)``."""

    kind = "holomorph"

    def __init__(self, n: int):
        if n < 1:
            raise UsageError("holomorph needs n >= 1")
        self.n = n
        gens = [(1 % n, 1 % n)] + [(0, c) for c in _unit_generators(n)]
        super().__init__((0, 1 % n), gens)

    def mul(self, x, y):
        n = self.n
        return (x[0] + x[1] * y[0]) % n, (x[1] * y[1]) % n

    def inv(self, x):
        n = self.n
        ci = pow(x[1], -1, n) if n > 1 else 0
        return (-ci * x[0]) % n, ci

    def describe(self):
        return f"Z/{self.n} x| (Z/{self.n})^*"


def _unit_generators(n):
    """Greedy generating set of the unit group, scanning residues upward."""
    if n <= 2:
        return []
    seen = {1}
    gens = []
    for c in units(n):
        if c in seen:
            continue
        gens.append(c)
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % n
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


class AffineRealization(Realization):
    """Affine group of a finite field: ``x -> u x + v`` encoded ``(v, u)``."""

    kind = "affine"

    def __init__(self, field):
        self.field = field
        gens = [(1, 1)] if field.q == 2 else [(1, 1), (0, field.primitive)]
        super().__init__((0, 1), gens)

    def mul(self, x, y):
        f = self.field
        return f.add(x[0], f.mul(x[1], y[0])), f.mul(x[1], y[1])

    def inv(self, x):
        f = self.field
        ui = f.inv(x[1])
        return f.neg(f.mul(ui, x[0])), ui

    def describe(self):
        return f"AGL(1, {self.field.q})"


class ProductRealization(Realization):
    """Direct product of already tabulated groups; elements are tuples of factor encodings."""

    kind = "product"

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise UsageError("empty direct product")
        ident = tuple(t.realization.identity for t in self.factors)
        gens = []
        for slot, t in enumerate(self.factors):
            for g in t.realization.generators:
                if g == t.realization.identity:
                    continue
                e = list(ident)
                e[slot] = g
                gens.append(tuple(e))
        super().__init__(ident, gens)

    def mul(self, x, y):
        return tuple(t.realization.mul(a, b) for t, a, b in zip(self.factors, x, y))

    def inv(self, x):
        return tuple(t.realization.inv(a) for t, a in zip(self.factors, x))

    def describe(self):
        return " x ".join(f"({t.realization.describe()})" for t in self.factors)

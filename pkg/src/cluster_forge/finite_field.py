"""Arithmetic in GF(p^k) for small q.

Elements are encoded as integers ``0 <= x < q`` whose base-``p`` digits are
the polynomial coefficients in ascending degree, so ``x = sum c_i p^i``.
The modulus is the lexicographically first monic irreducible polynomial of
degree ``k`` when its lower coefficients ``(c_0, ..., c_{k-1})`` are listed
in ascending degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .arith import prime_power
from .errors import UsageError

MAX_FIELD_ORDER = 512


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = a[-1] % p
        if coef:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * mc) % p
        a.pop()
    while a and a[-1] % p == 0:
        a.pop()
    return [c % p for c in a]


def _is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod(poly, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Coefficients ``(c_0, ..., c_{k-1}, 1)`` of the chosen modulus."""
    for low in product(range(p), repeat=k):
        poly = list(low) + [1]
        if k == 1 or (low[0] != 0 and _is_irreducible(poly, p)):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FiniteFieldSpec:
    q: int
    p: int
    k: int
    modulus: tuple[int, ...]


class GF:
    """The field with ``q`` elements, tabulated."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise UsageError(f"{q} is not a prime power")
        if q > MAX_FIELD_ORDER:
            raise UsageError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        p, k = pk
        self.spec = FiniteFieldSpec(q, p, k, first_irreducible(p, k))
        self.q, self.p, self.k = q, p, k
        digits = np.array([[(x // p**i) % p for i in range(k)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        self._add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int32)
        self._neg = ((-digits % p) @ weights).astype(np.int32)
        self._digits = digits
        self._weights = weights
        self.primitive = self._find_primitive()
        exp = [1]
        for _ in range(q - 2):
            exp.append(self._slow_mul(exp[-1], self.primitive))
        self._exp = exp
        self._log = {x: i for i, x in enumerate(exp)}

    def _encode(self, coeffs) -> int:
        return int(sum(int(c) * self.p**i for i, c in enumerate(coeffs)))

    def _slow_mul(self, x: int, y: int) -> int:
        a, b = self._digits[x], self._digits[y]
        prod = [0] * (2 * self.k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += int(ai) * int(bj)
        return self._encode(_polymod(prod, list(self.spec.modulus), self.p))

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        for w in range(2, self.q):
            x, order = w, 1
            while x != 1:
                x = self._slow_mul(x, w)
                order += 1
            if order == self.q - 1:
                return w
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    def add(self, x: int, y: int) -> int:
        return int(self._add[x, y])

    def neg(self, x: int) -> int:
        return int(self._neg[x])

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def __repr__(self):
        return f"GF({self.q})"

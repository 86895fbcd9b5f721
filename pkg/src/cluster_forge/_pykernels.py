"""Pure-Python versions of the hot kernels.

Signatures match the compiled module so either can be selected at import.
Subgroups travel as sorted index arrays with the identity (index 0) first;
families of subgroups travel as Python integers used as bit sets.
"""
from __future__ import annotations

import numpy as np

NAME = "python"


def dimino_extend(mul, base, gens, new):
    """Elements of ``<K, new>`` where ``K`` has sorted members ``base`` and generators ``gens``.

    ``mul`` is a full multiplication table.  The result is unsorted: ``K``
    first, then one block per right coset ``K x``.
    """
    n = mul.shape[0]
    base = np.asarray(base, dtype=np.int32)
    inside = np.zeros(n, dtype=bool)
    inside[base] = True
    if inside[new]:
        return base.copy()
    blocks = [base]
    size = k = len(base)
    allgens = [int(g) for g in gens] + [int(new)]
    reps = [int(new)]
    coset = mul[base, new]
    inside[coset] = True
    blocks.append(coset)
    size += k
    pos = 0
    while pos < len(reps):
        rep = reps[pos]
        row = mul[rep]
        for g in allgens:
            y = int(row[g])
            if not inside[y]:
                coset = mul[base, y]
                inside[coset] = True
                blocks.append(coset)
                reps.append(y)
                size += k
        pos += 1
    return np.concatenate(blocks).astype(np.int32)


def irredundant_search(masks, max_card, full):
    """All irredundant subfamilies of ``masks`` with trivial intersection, up to ``max_card``.

    A family is irredundant when dropping any member enlarges the
    intersection.  Returns the index tuples in lexicographic order and a flag
    telling whether some live branch was cut off at ``max_card``.
    """
    s = len(masks)
    max_card = min(max_card, s)
    found = []
    cut = False

    def walk(start, chosen, inter, loo):
        nonlocal cut
        depth = len(chosen)
        for j in range(start, s):
            m = masks[j]
            new = inter & m
            if new == inter:
                continue
            nloo = [x & m for x in loo]
            if new in nloo:
                continue
            if new == 1:
                found.append(tuple(chosen) + (j,))
                continue
            if depth + 1 == max_card:
                cut = True
                continue
            nloo.append(inter)
            walk(j + 1, chosen + [j], new, nloo)

    if max_card > 0:
        walk(0, [], full, [])
    return found, cut


def count_minimal_of_size(masks, k):
    """Brute-force count of ``k``-subsets with trivial intersection and no redundant member."""
    from itertools import combinations

    total = 0
    for combo in combinations(range(len(masks)), k):
        inter = -1
        for i in combo:
            inter &= masks[i]
        if inter != 1:
            continue
        ok = True
        for drop in range(k):
            rest = -1
            for pos, i in enumerate(combo):
                if pos != drop:
                    rest &= masks[i]
            if rest == 1:
                ok = False
                break
        total += ok
    return total


def _primes_upto(n):
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return np.flatnonzero(sieve)


def triplet_grid(N):
    """Three independent membership tests on every ``(a, b, c)`` in ``[1, N]^3``.

    Returns boolean arrays indexed ``[a, b, c]`` (index 0 unused):
    necessary form with ``t | gcd``, the prime-valuation window and
    ``lcm(a, b) | c | ab``.
    """
    shape = (N + 1, N + 1, N + 1)
    form = np.zeros(shape, dtype=bool)
    window = np.zeros(shape, dtype=bool)
    divis = np.zeros(shape, dtype=bool)
    vals = np.arange(N + 1, dtype=np.int64)
    primes = _primes_upto(N)
    vp = np.zeros((len(primes), N + 1), dtype=np.int64)
    for i, p in enumerate(primes):
        x = vals[1:].copy()
        while True:
            hit = x % p == 0
            if not hit.any():
                break
            vp[i, 1:] += hit
            x = np.where(hit, x // p, x)
    B = vals[1:, None]
    C = vals[None, 1:]
    for a in range(1, N + 1):
        g = np.gcd(a, B)
        lcm = a * B // g
        c_mult = C % lcm == 0
        t = np.where(c_mult, C // lcm, 1)
        form[a, 1:, 1:] = c_mult & (g % t == 0)
        divis[a, 1:, 1:] = c_mult & ((a * B) % C == 0)
        ok = np.ones((N, N), dtype=bool)
        for i in range(len(primes)):
            va = vp[i, a]
            vb = vp[i, 1:, None]
            vc = vp[i, None, 1:]
            ok &= (np.maximum(va, vb) <= vc) & (vc <= va + vb)
        window[a, 1:, 1:] = ok
    return form, window, divis

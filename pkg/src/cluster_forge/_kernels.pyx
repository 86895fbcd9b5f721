# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot kernels in ``_pykernels``.

Same call signatures; bit-set families are converted to ``uint64`` word
arrays on entry.
"""
import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t, uint64_t

NAME = "cython"


cdef Py_ssize_t _add_coset(const int32_t[:, ::1] mul, const int32_t[::1] base, int32_t x,
                           int32_t[::1] elems, uint8_t[::1] inside, Py_ssize_t size) nogil:
    cdef Py_ssize_t i
    cdef int32_t y
    for i in range(base.shape[0]):
        y = mul[base[i], x]
        elems[size] = y
        inside[y] = 1
        size += 1
    return size


def dimino_extend(mul_in, base_in, gens_in, int new):
    cdef const int32_t[:, ::1] mul = np.ascontiguousarray(mul_in, dtype=np.int32)
    cdef const int32_t[::1] base = np.ascontiguousarray(base_in, dtype=np.int32)
    gens_arr = np.ascontiguousarray(list(gens_in) + [new], dtype=np.int32)
    cdef const int32_t[::1] gens = gens_arr
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t k = base.shape[0]
    cdef Py_ssize_t ng = gens.shape[0]
    out = np.empty(n, dtype=np.int32)
    flags = np.zeros(n, dtype=np.uint8)
    cdef int32_t[::1] elems = out
    cdef uint8_t[::1] inside = flags
    cdef Py_ssize_t size = 0, pos, gi, i
    cdef int32_t rep, y
    for i in range(k):
        elems[i] = base[i]
        inside[base[i]] = 1
    size = k
    if inside[new]:
        return out[:size].copy()
    with nogil:
        size = _add_coset(mul, base, new, elems, inside, size)
        pos = k
        while pos < size:
            rep = elems[pos]
            for gi in range(ng):
                y = mul[rep, gens[gi]]
                if not inside[y]:
                    size = _add_coset(mul, base, y, elems, inside, size)
            pos += k
    return out[:size].copy()


def _words(masks, Py_ssize_t width):
    nbytes = width * 8
    buf = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    return np.frombuffer(buf, dtype="<u8").reshape(len(masks), width).copy()


cdef inline bint _equal(uint64_t[:, ::1] a, Py_ssize_t i, uint64_t[:, ::1] b, Py_ssize_t j,
                        Py_ssize_t width) nogil:
    cdef Py_ssize_t w
    for w in range(width):
        if a[i, w] != b[j, w]:
            return False
    return True


def irredundant_search(masks, int max_card, full):
    cdef Py_ssize_t s = len(masks)
    if max_card > s:
        max_card = s
    if max_card <= 0:
        return [], False
    cdef Py_ssize_t width = max(1, (int(full).bit_length() + 63) // 64)
    cdef uint64_t[:, ::1] bits = _words(masks, width)
    inter_arr = np.zeros((max_card + 1, width), dtype=np.uint64)
    cdef uint64_t[:, ::1] inter = inter_arr
    inter_arr[0] = _words([full], width)[0]
    # loo[d * max_card + x] holds the intersection of the depth-d family without member x
    loo_arr = np.zeros(((max_card + 1) * max_card, width), dtype=np.uint64)
    cdef uint64_t[:, ::1] loo = loo_arr
    chosen_arr = np.zeros(max_card, dtype=np.int64)
    cdef int64_t[::1] chosen = chosen_arr
    nxt_arr = np.zeros(max_card + 1, dtype=np.int64)
    cdef int64_t[::1] nxt = nxt_arr
    found = []
    cdef bint cut = False, ok, trivial
    cdef Py_ssize_t d = 0, j, x, w, row, prow
    nxt[0] = 0
    while d >= 0:
        j = nxt[d]
        if j >= s:
            d -= 1
            continue
        nxt[d] = j + 1
        for w in range(width):
            inter[d + 1, w] = inter[d, w] & bits[j, w]
        if _equal(inter, d + 1, inter, d, width):
            continue
        ok = True
        row = (d + 1) * max_card
        prow = d * max_card
        for x in range(d):
            for w in range(width):
                loo[row + x, w] = loo[prow + x, w] & bits[j, w]
            if _equal(loo, row + x, inter, d + 1, width):
                ok = False
                break
        if not ok:
            continue
        chosen[d] = j
        trivial = inter[d + 1, 0] == 1
        if trivial:
            for w in range(1, width):
                if inter[d + 1, w] != 0:
                    trivial = False
                    break
        if trivial:
            found.append(tuple(int(chosen[x]) for x in range(d + 1)))
            continue
        if d + 1 == max_card:
            cut = True
            continue
        for w in range(width):
            loo[row + d, w] = inter[d, w]
        d += 1
        nxt[d] = j + 1
    return found, bool(cut)


def count_minimal_of_size(masks, int k):
    cdef Py_ssize_t s = len(masks)
    if k <= 0 or k > s or s == 0:
        return 0
    full = 0
    for m in masks:
        full |= m
    cdef Py_ssize_t width = max(1, (int(full).bit_length() + 63) // 64)
    cdef uint64_t[:, ::1] bits = _words(masks, width)
    idx_arr = np.arange(k, dtype=np.int64)
    cdef int64_t[::1] idx = idx_arr
    acc_arr = np.zeros(width, dtype=np.uint64)
    cdef uint64_t[::1] acc = acc_arr
    cdef Py_ssize_t total = 0, i, w, drop, p
    cdef bint trivial, ok
    with nogil:
        while True:
            for w in range(width):
                acc[w] = bits[idx[0], w]
            for i in range(1, k):
                for w in range(width):
                    acc[w] &= bits[idx[i], w]
            trivial = acc[0] == 1
            for w in range(1, width):
                if acc[w] != 0:
                    trivial = False
            if trivial:
                ok = True
                for drop in range(k):
                    for w in range(width):
                        acc[w] = 0xFFFFFFFFFFFFFFFF
                    for i in range(k):
                        if i != drop:
                            for w in range(width):
                                acc[w] &= bits[idx[i], w]
                    trivial = acc[0] == 1
                    for w in range(1, width):
                        if acc[w] != 0:
                            trivial = False
                    if trivial:
                        ok = False
                        break
                if ok:
                    total += 1
            # next combination
            p = k - 1
            while p >= 0 and idx[p] == s - k + p:
                p -= 1
            if p < 0:
                break
            idx[p] += 1
            for i in range(p + 1, k):
                idx[i] = idx[i - 1] + 1
    return total


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


def _primes_upto(n):
    return [m for m in range(2, n + 1) if all(m % d for d in range(2, int(m ** 0.5) + 1))]


def triplet_grid(int N):
    cdef Py_ssize_t size = N + 1
    form_arr = np.zeros((size, size, size), dtype=np.uint8)
    window_arr = np.zeros((size, size, size), dtype=np.uint8)
    divis_arr = np.zeros((size, size, size), dtype=np.uint8)
    cdef uint8_t[:, :, ::1] form = form_arr
    cdef uint8_t[:, :, ::1] window = window_arr
    cdef uint8_t[:, :, ::1] divis = divis_arr
    primes = _primes_upto(N)
    cdef Py_ssize_t P = len(primes)
    vp_arr = np.zeros((max(P, 1), size), dtype=np.int64)
    cdef int64_t[:, ::1] vp = vp_arr
    cdef Py_ssize_t i, x, a, b, c
    cdef int64_t p, y, g, l, t, va, vb, vc, hi
    cdef bint ok
    for i in range(P):
        p = primes[i]
        for x in range(1, size):
            y = x
            while y % p == 0:
                vp[i, x] += 1
                y //= p
    with nogil:
        for a in range(1, size):
            for b in range(1, size):
                g = _gcd(a, b)
                l = a // g * b
                for c in range(1, size):
                    if c % l == 0:
                        t = c // l
                        if g % t == 0:
                            form[a, b, c] = 1
                        if (a * b) % c == 0:
                            divis[a, b, c] = 1
                    ok = True
                    for i in range(P):
                        va = vp[i, a]
                        vb = vp[i, b]
                        vc = vp[i, c]
                        hi = va if va > vb else vb
                        if vc < hi or vc > va + vb:
                            ok = False
                            break
                    if ok:
                        window[a, b, c] = 1
    return form_arr.view(bool), window_arr.view(bool), divis_arr.view(bool)

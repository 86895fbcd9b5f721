"""Indexed finite groups and their subgroups.

A :class:`GroupTable` enumerates a realization by breadth-first closure from
the identity, so element ``0`` is always the identity.  Subgroups are
:class:`SubgroupSet` objects: sorted index tuples plus an integer bit set used
for fast intersections and containment tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from ._backend import kernels
from .errors import SizeLimitError, UsageError
from .realizations import PermutationRealization, ProductRealization, Realization

ELEMENT_CAP = 100_000
TABLE_LIMIT = 4096
SUBGROUP_ORDER_CAP = 2000


def mask_from_members(members, n: int) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(members, dtype=np.int64)] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def members_from_mask(mask: int, n: int) -> tuple[int, ...]:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:n]
    return tuple(np.flatnonzero(bits).tolist())


class GroupTable:
    """A finite group enumerated from a realization.

    Attributes
    ----------
    elements : list
        Encoded elements; index 0 is the identity.
    lookup : dict
        Encoding to index.
    mul_table : numpy.ndarray or None
        Full Cayley table, kept only for groups of order at most ``TABLE_LIMIT``.
    inv_table : numpy.ndarray
        Index of each inverse.
    """

    def __init__(self, realization: Realization, elements, lookup, right_cols, parents,
                 table_limit: int = TABLE_LIMIT):
        self.realization = realization
        self.elements = elements
        self.lookup = lookup
        self.order = len(elements)
        self.generator_indices = tuple(lookup[g] for g in realization.generators)
        self._col_cache: dict[int, np.ndarray] = {}
        self._np_elements = None
        n = self.order
        if n <= table_limit:
            mul = np.empty((n, n), dtype=np.int32)
            mul[:, 0] = np.arange(n, dtype=np.int32)
            for j in range(1, n):
                p, gi = parents[j]
                mul[:, j] = right_cols[gi][mul[:, p]]
            mul.setflags(write=False)
            self.mul_table = mul
            rows, cols = np.nonzero(mul == 0)
            inv = np.empty(n, dtype=np.int32)
            inv[rows] = cols
        else:
            self.mul_table = None
            inv = np.array([lookup[realization.inv(e)] for e in elements], dtype=np.int32)
        inv.setflags(write=False)
        self.inv_table = inv

    def __repr__(self):
        return f"<GroupTable order={self.order} {self.realization.describe()}>"

    def __len__(self):
        return self.order

    def index(self, element) -> int:
        try:
            return self.lookup[element]
        except (KeyError, TypeError):
            raise UsageError(f"{element!r} is not an element of this group") from None

    def element(self, i: int):
        return self.elements[i]

    def mul(self, i: int, j: int) -> int:
        if self.mul_table is not None:
            return int(self.mul_table[i, j])
        r = self.realization
        return self.lookup[r.mul(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return int(self.inv_table[i])

    def col(self, j: int) -> np.ndarray:
        """Indices of ``x * g_j`` for every ``x``."""
        if self.mul_table is not None:
            return self.mul_table[:, j]
        c = self._col_cache.get(j)
        if c is None:
            r, ej, lk = self.realization, self.elements[j], self.lookup
            c = np.array([lk[r.mul(e, ej)] for e in self.elements], dtype=np.int32)
            if len(self._col_cache) > 64:
                self._col_cache.clear()
            self._col_cache[j] = c
        return c

    def mul_many(self, left, right) -> np.ndarray:
        """Elementwise products of two broadcastable index arrays."""
        if self.mul_table is not None:
            return self.mul_table[left, right]
        a, b = np.broadcast_arrays(np.asarray(left), np.asarray(right))
        r, els, lk = self.realization, self.elements, self.lookup
        out = np.fromiter((lk[r.mul(els[x], els[y])] for x, y in zip(a.ravel().tolist(), b.ravel().tolist())),
                          dtype=np.int32, count=a.size)
        return out.reshape(a.shape)

    def conjugate_many(self, g: int, xs) -> np.ndarray:
        """Indices of ``g x g^-1`` for each ``x``."""
        return self.mul_many(self.mul_many(g, xs), self.inv(g))

    @property
    def element_array(self) -> np.ndarray:
        """Elements as a 2-D integer array, for permutation groups."""
        if self._np_elements is None:
            self._np_elements = np.array(self.elements, dtype=np.int64)
        return self._np_elements

    def whole(self) -> "SubgroupSet":
        return SubgroupSet(self, range(self.order), gens=self.generator_indices, trusted=True)

    def trivial(self) -> "SubgroupSet":
        return SubgroupSet(self, (0,), gens=(), trusted=True)


def build_table(realization: Realization, cap: int = ELEMENT_CAP,
                table_limit: int = TABLE_LIMIT) -> GroupTable:
    """Enumerate the group generated by ``realization.generators``.

    Breadth-first from the identity, multiplying on the right by the
    generators in the given order; each new layer is sorted by encoding.
    """
    gens = realization.generators
    mul = realization.mul
    ident = realization.identity
    elements = [ident]
    lookup = {ident: 0}
    parents = [(-1, -1)]
    known = []
    pending = []
    frontier = [0]
    while frontier:
        fresh = {}
        for i in frontier:
            e = elements[i]
            for gi, x in enumerate(gens):
                y = mul(e, x)
                j = lookup.get(y)
                if j is None:
                    if y not in fresh:
                        fresh[y] = (i, gi)
                    pending.append((gi, i, y))
                else:
                    known.append((gi, i, j))
        if len(elements) + len(fresh) > cap:
            raise SizeLimitError(f"group exceeds the element cap of {cap}")
        frontier = []
        for y in sorted(fresh):
            lookup[y] = len(elements)
            frontier.append(len(elements))
            elements.append(y)
            parents.append(fresh[y])
    n = len(elements)
    cols = [np.empty(n, dtype=np.int32) for _ in gens]
    for gi, i, j in known:
        cols[gi][i] = j
    for gi, i, y in pending:
        cols[gi][i] = lookup[y]
    return GroupTable(realization, elements, lookup, cols, parents, table_limit=table_limit)


class SubgroupSet:
    """A subgroup of a :class:`GroupTable`, stored as sorted member indices."""

    __slots__ = ("parent", "members", "_mask", "_gens", "_array", "_flags", "cache")

    def __init__(self, parent: GroupTable, members: Iterable[int], gens=None, trusted: bool = False):
        if trusted:
            mem = tuple(members)
        else:
            mem = tuple(sorted({int(m) for m in members}))
            if not mem or mem[0] != 0:
                raise UsageError("a subgroup must contain the identity (index 0)")
            if mem[-1] >= parent.order:
                raise UsageError("member index out of range")
        if parent.order % len(mem):
            raise UsageError(f"order {len(mem)} does not divide the group order {parent.order}")
        self.parent = parent
        self.members = mem
        self._mask = None
        self._gens = None if gens is None else tuple(int(g) for g in gens)
        self._array = None
        self._flags = None
        self.cache = {}

    @classmethod
    def from_mask(cls, parent: GroupTable, mask: int, gens=None) -> "SubgroupSet":
        sub = cls(parent, members_from_mask(mask, parent.order), gens=gens, trusted=True)
        sub._mask = mask
        return sub

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def mask(self) -> int:
        if self._mask is None:
            self._mask = mask_from_members(self.members, self.parent.order)
        return self._mask

    @property
    def array(self) -> np.ndarray:
        if self._array is None:
            self._array = np.asarray(self.members, dtype=np.int32)
        return self._array

    @property
    def flags(self) -> np.ndarray:
        if self._flags is None:
            f = np.zeros(self.parent.order, dtype=bool)
            f[self.array] = True
            self._flags = f
        return self._flags

    def __contains__(self, i) -> bool:
        return bool(self.mask >> int(i) & 1)

    def __eq__(self, other):
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.issubset(other)

    def issubset(self, other: "SubgroupSet") -> bool:
        _same_parent(self, other)
        return self.mask & other.mask == self.mask

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def generators(self) -> tuple[int, ...]:
        """A small generating list, built greedily from the member order."""
        if self._gens is None:
            gens: list[int] = []
            cur = (0,)
            inside = {0}
            for m in self.members:
                if m not in inside:
                    cur = _extend(self.parent, cur, gens, m)
                    gens.append(m)
                    inside = set(cur)
                    if len(cur) == len(self.members):
                        break
            self._gens = tuple(gens)
        return self._gens

    def __repr__(self):
        return f"<SubgroupSet order={self.order} of {self.parent.order}>"


def _same_parent(*subs):
    p = subs[0].parent
    for s in subs[1:]:
        if s.parent is not p:
            raise UsageError("subgroups belong to different groups")


def _extend(table: GroupTable, base: Sequence[int], gens: Sequence[int], new: int) -> tuple[int, ...]:
    """Sorted members of ``<base, new>`` where ``base`` is a subgroup with generators ``gens``."""
    if table.mul_table is not None:
        out = kernels.dimino_extend(table.mul_table, np.asarray(base, dtype=np.int32), list(gens), int(new))
        return tuple(sorted(out.tolist()))
    return tuple(sorted(_dimino_generic(table, base, gens, new)))


def _dimino_generic(table, base, gens, new):
    base_arr = np.asarray(base, dtype=np.int32)
    inside = set(base)
    if new in inside:
        return list(base)
    elems = list(base)
    allgens = list(gens) + [new]
    reps = []

    def add(x):
        block = table.mul_many(base_arr, x).tolist()
        elems.extend(block)
        inside.update(block)
        reps.append(x)

    add(new)
    pos = 0
    while pos < len(reps):
        rep = reps[pos]
        for g in allgens:
            y = table.mul(rep, g)
            if y not in inside:
                add(y)
        pos += 1
    return elems


def generated_subgroup(table: GroupTable, seeds: Iterable[int], base: SubgroupSet | None = None) -> SubgroupSet:
    """The subgroup generated by ``seeds`` (together with ``base`` if given)."""
    if base is None:
        cur: tuple[int, ...] = (0,)
        gens: list[int] = []
    else:
        cur, gens = base.members, list(base.generators())
    inside = set(cur)
    for s in seeds:
        s = int(s)
        if not 0 <= s < table.order:
            raise UsageError(f"seed index {s} out of range")
        if s in inside:
            continue
        cur = _extend(table, cur, gens, s)
        gens.append(s)
        inside = set(cur)
    return SubgroupSet(table, cur, gens=gens, trusted=True)


def subgroup_from_elements(table: GroupTable, elements) -> SubgroupSet:
    """Subgroup generated by encoded elements."""
    return generated_subgroup(table, [table.index(e) for e in elements])


def subgroup_where(table: GroupTable, predicate: Callable) -> SubgroupSet:
    """Members are the elements whose encoding satisfies ``predicate``; closure is checked."""
    members = [i for i, e in enumerate(table.elements) if predicate(e)]
    sub = SubgroupSet(table, members)
    check = generated_subgroup(table, sub.generators())
    if check.members != sub.members:
        raise UsageError("predicate does not cut out a subgroup")
    return sub


def index_of(table: GroupTable, H: SubgroupSet) -> int:
    if H.parent is not table:
        raise UsageError("subgroup belongs to another group")
    return table.order // H.order


def relative_index(K: SubgroupSet, H: SubgroupSet) -> int:
    if not H.issubset(K):
        raise UsageError("index [K:H] needs H inside K")
    return K.order // H.order


def intersect(*subs: SubgroupSet) -> SubgroupSet:
    _same_parent(*subs)
    m = subs[0].mask
    for s in subs[1:]:
        m &= s.mask
    return SubgroupSet.from_mask(subs[0].parent, m)


def join(*subs: SubgroupSet) -> SubgroupSet:
    """Smallest subgroup containing all of ``subs``."""
    _same_parent(*subs)
    biggest = max(subs, key=lambda s: s.order)
    seeds = [g for s in subs if s is not biggest for g in s.generators()]
    return generated_subgroup(biggest.parent, seeds, base=biggest)


def conjugate_subgroup(table: GroupTable, g: int, H: SubgroupSet) -> SubgroupSet:
    """``g H g^-1``."""
    if H.parent is not table:
        raise UsageError("subgroup belongs to another group")
    members = table.conjugate_many(g, H.array)
    gens = table.conjugate_many(g, np.asarray(H.generators(), dtype=np.int32)).tolist() if H.generators() else []
    return SubgroupSet(table, sorted(members.tolist()), gens=gens, trusted=True)


def normalizer(table: GroupTable, H: SubgroupSet, within: SubgroupSet | None = None) -> SubgroupSet:
    """``N_G(H)``, or ``N_G(H)`` intersected with ``within``."""
    key = ("normalizer", None if within is None else within.members)
    if key in H.cache:
        return H.cache[key]
    cand = np.arange(table.order, dtype=np.int32) if within is None else within.array
    inv = table.inv_table[cand]
    ok = np.ones(len(cand), dtype=bool)
    flags = H.flags
    for h in H.generators():
        conj = table.mul_many(table.mul_many(cand, h), inv)
        ok &= flags[conj]
    out = SubgroupSet(table, cand[ok].tolist(), trusted=True)
    H.cache[key] = out
    return out


def normal_closure(table: GroupTable, H: SubgroupSet, within: SubgroupSet | None = None) -> SubgroupSet:
    """Smallest subgroup containing ``H`` normalized by ``within`` (default the whole group)."""
    key = ("closure", None if within is None else within.members)
    if key in H.cache:
        return H.cache[key]
    ambient = table.generator_indices if within is None else within.generators()
    cur, gens = H.members, list(H.generators())
    inside = set(cur)
    changed = True
    while changed:
        changed = False
        for x in ambient:
            for h in list(gens):
                y = int(table.conjugate_many(x, h))
                if y not in inside:
                    cur = _extend(table, cur, gens, y)
                    gens.append(y)
                    inside = set(cur)
                    changed = True
    out = SubgroupSet(table, cur, gens=gens, trusted=True)
    H.cache[key] = out
    return out


def distinct_conjugates(table: GroupTable, H: SubgroupSet) -> list[SubgroupSet]:
    """The distinct conjugates of ``H``, starting with ``H`` itself.

    Conjugates are indexed by left cosets of ``N_G(H)``; each coset is
    represented by its smallest element index and cosets are taken in
    ascending order of that representative.
    """
    if "conjugates" in H.cache:
        return H.cache["conjugates"]
    N = normalizer(table, H)
    covered = np.zeros(table.order, dtype=bool)
    reps = []
    for g in range(table.order):
        if covered[g]:
            continue
        reps.append(g)
        covered[table.mul_many(g, N.array)] = True
        if len(reps) * N.order == table.order:
            break
    out = [H] + [conjugate_subgroup(table, g, H) for g in reps[1:]]
    H.cache["conjugates"] = out
    H.cache["conjugate_reps"] = reps
    return out


def conjugate_representatives(table: GroupTable, H: SubgroupSet) -> list[int]:
    distinct_conjugates(table, H)
    return H.cache["conjugate_reps"]


def core(table: GroupTable, H: SubgroupSet) -> SubgroupSet:
    """Largest normal subgroup inside ``H``."""
    return intersect(*distinct_conjugates(table, H))


def is_normal(table: GroupTable, H: SubgroupSet) -> bool:
    return normalizer(table, H).order == table.order


def commutator_subgroup(table: GroupTable, K: SubgroupSet) -> SubgroupSet:
    gens = K.generators()
    comms = []
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            xy = table.mul(x, y)
            yx = table.mul(y, x)
            comms.append(table.mul(xy, table.inv(yx)))
    seed = generated_subgroup(table, comms)
    return normal_closure(table, seed, within=K)


def derived_series(table: GroupTable, K: SubgroupSet | None = None) -> list[SubgroupSet]:
    cur = table.whole() if K is None else K
    series = [cur]
    while not cur.is_trivial():
        nxt = commutator_subgroup(table, cur)
        if nxt.order == cur.order:
            break
        series.append(nxt)
        cur = nxt
    return series


def is_solvable(table: GroupTable, K: SubgroupSet | None = None) -> bool:
    return derived_series(table, K)[-1].is_trivial()


def element_order(table: GroupTable, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = table.mul(x, g)
        k += 1
    return k


@dataclass(frozen=True)
class CoreQuotient:
    """Permutation image of the coset action ``G -> Sym(G/H)``."""

    table: GroupTable
    image_of_H: SubgroupSet
    coset_of: np.ndarray


def core_quotient(table: GroupTable, H: SubgroupSet) -> CoreQuotient:
    """Act on left cosets ``gH``; the trivial coset is point 0."""
    coset_of = np.full(table.order, -1, dtype=np.int64)
    reps = []
    for g in range(table.order):
        if coset_of[g] >= 0:
            continue
        coset_of[table.mul_many(g, H.array)] = len(reps)
        reps.append(g)
    reps_arr = np.asarray(reps, dtype=np.int32)

    def image(g):
        return tuple(coset_of[table.mul_many(g, reps_arr)].tolist())

    degree = len(reps)
    gens = [image(g) for g in table.generator_indices]
    real = PermutationRealization(degree, gens)
    qt = build_table(real)
    img = generated_subgroup(qt, [qt.index(image(h)) for h in H.generators()])
    return CoreQuotient(qt, img, coset_of)


@dataclass(frozen=True)
class DirectProduct:
    """``A x B`` with its coordinate embeddings and the pair-to-index map."""

    table: GroupTable
    left: GroupTable
    right: GroupTable
    pair_index: np.ndarray

    @property
    def embed_left(self) -> np.ndarray:
        return self.pair_index[:, 0]

    @property
    def embed_right(self) -> np.ndarray:
        return self.pair_index[0, :]

    def product_subgroup(self, A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
        if A.parent is not self.left or B.parent is not self.right:
            raise UsageError("factor subgroups must come from the factors")
        members = self.pair_index[np.ix_(A.array, B.array)].ravel()
        gens = [int(self.pair_index[a, 0]) for a in A.generators()] + \
               [int(self.pair_index[0, b]) for b in B.generators()]
        return SubgroupSet(self.table, sorted(members.tolist()), gens=gens, trusted=True)

    def project(self, S: SubgroupSet, side: int = 0) -> SubgroupSet:
        """Image of ``S`` under a coordinate projection."""
        n1, n2 = self.pair_index.shape
        pos = np.empty(self.table.order, dtype=np.int64)
        pos[self.pair_index.ravel()] = np.arange(n1 * n2)
        coords = pos[S.array]
        comp = coords // n2 if side == 0 else coords % n2
        target = self.left if side == 0 else self.right
        return SubgroupSet(target, sorted(set(comp.tolist())), trusted=True)


def direct_product(t1: GroupTable, t2: GroupTable, cap: int = ELEMENT_CAP) -> DirectProduct:
    if t1.order * t2.order > cap:
        raise SizeLimitError(f"direct product of order {t1.order * t2.order} exceeds the cap of {cap}")
    table = build_table(ProductRealization([t1, t2]), cap=cap)
    lk = table.lookup
    pair = np.empty((t1.order, t2.order), dtype=np.int64)
    for i, a in enumerate(t1.elements):
        for j, b in enumerate(t2.elements):
            pair[i, j] = lk[(a, b)]
    return DirectProduct(table, t1, t2, pair)


def direct_power(t: GroupTable, m: int, cap: int = ELEMENT_CAP) -> GroupTable:
    if t.order**m > cap:
        raise SizeLimitError(f"direct power of order {t.order ** m} exceeds the cap of {cap}")
    return build_table(ProductRealization([t] * m), cap=cap)


def all_subgroups(table: GroupTable, cap: int = SUBGROUP_ORDER_CAP) -> list[SubgroupSet]:
    """Every subgroup, ordered by (order, members).

    Cyclic subgroups first, then repeated joins with cyclic subgroups until
    nothing new appears.
    """
    if table.order > cap:
        raise SizeLimitError(f"subgroup enumeration is capped at order {cap}, got {table.order}")
    cached = getattr(table, "_all_subgroups", None)
    if cached is not None:
        return cached
    n = table.order
    skip = np.zeros(n, dtype=bool)
    cyclic = []
    seen = {}
    for g in range(n):
        if skip[g]:
            continue
        powers = [0]
        x = g
        while x != 0:
            powers.append(x)
            x = table.mul(x, g)
        k = len(powers)
        for e in range(1, k):
            if np.gcd(e, k) == 1:
                skip[powers[e]] = True
        sub = SubgroupSet(table, sorted(powers), gens=(g,) if g else (), trusted=True)
        if sub.mask not in seen:
            seen[sub.mask] = sub
            cyclic.append((g, sub))
    layer = [s for _, s in cyclic]
    while layer:
        nxt = []
        for K in layer:
            kmask = K.mask
            for g, C in cyclic:
                if C.mask & kmask == C.mask:
                    continue
                members = _extend(table, K.members, K.generators(), g)
                J = SubgroupSet(table, members, gens=K.generators() + (g,), trusted=True)
                if J.mask not in seen:
                    seen[J.mask] = J
                    nxt.append(J)
        layer = nxt
    out = sorted(seen.values(), key=lambda s: (s.order, s.members))
    table._all_subgroups = out
    return out


def pointwise_stabilizer(table: GroupTable, points: Iterable[int]) -> SubgroupSet:
    """Elements of a permutation group fixing every listed point."""
    if table.realization.kind != "permutation":
        raise UsageError("pointwise stabilizers need a permutation group")
    pts = sorted({int(p) for p in points})
    degree = table.realization.degree
    if any(not 0 <= p < degree for p in pts):
        raise UsageError(f"points must lie in 0..{degree - 1}")
    if not pts:
        return table.whole()
    E = table.element_array
    ok = np.all(E[:, pts] == np.asarray(pts), axis=1)
    return SubgroupSet(table, np.flatnonzero(ok).tolist(), trusted=True)


def is_transitive(table: GroupTable, K: SubgroupSet | None = None) -> bool:
    if table.realization.kind != "permutation":
        raise UsageError("transitivity needs a permutation group")
    gens = table.generator_indices if K is None else K.generators()
    degree = table.realization.degree
    orbit = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = table.elements[g][p]
                if q not in orbit:
                    orbit.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(orbit) == degree


@dataclass(frozen=True)
class Restriction:
    """A subgroup re-enumerated as a group in its own right."""

    table: GroupTable
    parent: GroupTable
    to_parent: np.ndarray

    def lift(self, S: SubgroupSet) -> SubgroupSet:
        return SubgroupSet(self.parent, sorted(self.to_parent[S.array].tolist()), trusted=True)

    def restrict(self, S: SubgroupSet) -> SubgroupSet:
        """Translate a subgroup of the parent lying inside the restricted group."""
        lk = self.table.lookup
        try:
            idx = [lk[self.parent.elements[i]] for i in S.members]
        except KeyError:
            raise UsageError("subgroup is not contained in the restricted group") from None
        return SubgroupSet(self.table, sorted(idx), trusted=True)


def restrict_to(table: GroupTable, K: SubgroupSet) -> Restriction:
    real = table.realization.with_generators([table.elements[g] for g in K.generators()])
    sub = build_table(real)
    to_parent = np.array([table.lookup[e] for e in sub.elements], dtype=np.int64)
    return Restriction(sub, table, to_parent)

"""Cluster invariants of an extension model.

For a model ``(G, H)`` of degree ``n = [G:H]``:

* ``r = [N_G(H):H]`` is the cluster size and ``s = [G:N_G(H)]`` the number
  of clusters, so ``n = r s``;
* ``t = [G:H^G]`` is the ascending index and ``u = [H^G:H]``, so ``n = t u``;
* for a subgroup ``U`` (standing for a field ``M``), the root capacity
  ``rho`` counts cosets ``gH`` with ``U`` inside ``gHg^-1``, and the
  intersection indicium ``tau`` is the index of the subgroup generated by
  the conjugates of ``H`` that contain ``U`` (zero if there are none).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from ._backend import kernels
from .constructions import ExtensionModel
from .errors import SemanticsError, SizeLimitError, UsageError
from .group_core import (SubgroupSet, all_subgroups, distinct_conjugates, generated_subgroup,
                         normal_closure, normalizer)


@dataclass(frozen=True)
class InvariantReport:
    degree: int
    cluster_size: int
    num_clusters: int
    ascending_index: int
    u: int
    faithful: bool
    group_order: int
    normalizer: SubgroupSet
    normal_closure: SubgroupSet

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "cluster_size": self.cluster_size,
            "num_clusters": self.num_clusters,
            "ascending_index": self.ascending_index,
            "u": self.u,
            "faithful": self.faithful,
            "group_order": self.group_order,
            "normalizer_order": self.normalizer.order,
            "normal_closure_order": self.normal_closure.order,
        }


def invariant_report(model: ExtensionModel) -> InvariantReport:
    G, H = model.table, model.H
    N = normalizer(G, H)
    F = normal_closure(G, H)
    n = G.order // H.order
    r = N.order // H.order
    s = G.order // N.order
    t = G.order // F.order
    u = F.order // H.order
    assert r * s == n and t * u == n
    return InvariantReport(n, r, s, t, u, model.faithful, G.order, N, F)


def conjugates(model: ExtensionModel) -> list[SubgroupSet]:
    """``H_1 = H, H_2, ..., H_s`` in canonical order."""
    return distinct_conjugates(model.table, model.H)


def _conjugate_masks(model: ExtensionModel) -> list[int]:
    key = "conjugate_masks"
    if key not in model.extra:
        model.extra[key] = [c.mask for c in conjugates(model)]
    return model.extra[key]


def _check_sub(model, U):
    if U.parent is not model.table:
        raise UsageError("U must be a subgroup of the model's group")


def containing_conjugates(model: ExtensionModel, U: SubgroupSet) -> list[int]:
    """Positions ``i`` with ``U`` inside ``H_i``."""
    _check_sub(model, U)
    um = U.mask
    return [i for i, m in enumerate(_conjugate_masks(model)) if m & um == um]


def root_capacity(model: ExtensionModel, U: SubgroupSet) -> int:
    """``rho``: the number of roots of ``L`` lying in ``M``, counted as ``a * r``."""
    a = len(containing_conjugates(model, U))
    r = normalizer(model.table, model.H).order // model.H.order
    return a * r


def intersection_indicium(model: ExtensionModel, U: SubgroupSet) -> int:
    """``tau``: degree of the intersection of the conjugate fields inside ``M``; 0 if none."""
    idx = containing_conjugates(model, U)
    if not idx:
        return 0
    conj = conjugates(model)
    base = conj[idx[0]]
    seeds = [g for i in idx[1:] for g in conj[i].generators()]
    J = generated_subgroup(model.table, seeds, base=base)
    return model.table.order // J.order


@dataclass(frozen=True)
class TowerProfile:
    ordering: tuple[int, ...]
    length: int
    degrees: tuple[int, ...]


def _tower_from_masks(order, masks, ordering):
    cur = (1 << order) - 1
    degrees = []
    for i in ordering:
        nxt = cur & masks[i]
        if nxt != cur:
            degrees.append(order // nxt.bit_count())
            cur = nxt
    return tuple(degrees)


def _check_ordering(ordering, s):
    ordering = tuple(int(i) for i in ordering)
    if sorted(ordering) != list(range(s)):
        raise UsageError(f"ordering must be a permutation of 0..{s - 1}")
    return ordering


def cluster_tower(model: ExtensionModel, ordering) -> TowerProfile:
    """Adjoin the conjugate fields in the given order and record the proper steps.

    ``degrees`` lists ``[G : H_{i_1} cap ... cap H_{i_k}]`` at every ``k``
    where the intersection actually shrinks; ``length`` counts the fields in
    the resulting tower, base field included.
    """
    masks = _conjugate_masks(model)
    ordering = _check_ordering(ordering, len(masks))
    degrees = _tower_from_masks(model.table.order, masks, ordering)
    return TowerProfile(ordering, len(degrees) + 1, degrees)


@dataclass(frozen=True)
class TowerProfileSet:
    profiles: tuple[tuple[int, tuple[int, ...]], ...]
    exhaustive: bool
    orderings_checked: int

    def as_dict(self) -> dict:
        return {
            "exhaustive": self.exhaustive,
            "orderings_checked": self.orderings_checked,
            "profiles": [{"length": l, "degrees": list(d)} for l, d in self.profiles],
        }


def tower_profiles(model: ExtensionModel, max_orderings: int = 40320, seed: int = 0) -> TowerProfileSet:
    """Distinct ``(length, degrees)`` over all orderings, or a seeded sample of them."""
    masks = _conjugate_masks(model)
    s = len(masks)
    n = model.table.order
    if factorial(s) <= max_orderings:
        orderings = permutations(range(s))
        exhaustive = True
    else:
        rng = random.Random(seed)
        base = list(range(s))
        samples = [tuple(base)]
        for _ in range(max_orderings - 1):
            rng.shuffle(base)
            samples.append(tuple(base))
        orderings = samples
        exhaustive = False
    seen = set()
    count = 0
    for o in orderings:
        seen.add(_tower_from_masks(n, masks, o))
        count += 1
    profiles = tuple(sorted((len(d) + 1, d) for d in seen))
    return TowerProfileSet(profiles, exhaustive, count)


@dataclass(frozen=True)
class MinGenReport:
    """Minimal generating sets of conjugates (0-based positions)."""

    sets: tuple[tuple[int, ...], ...]
    cardinalities: tuple[int, ...]
    minimum: int | None
    maximum: int | None
    unique: bool
    d_set: tuple[int, ...]
    exhaustive: bool
    closed: bool
    max_card: int
    num_conjugates: int

    def as_dict(self, one_based: bool = True) -> dict:
        shift = 1 if one_based else 0
        return {
            "num_conjugates": self.num_conjugates,
            "max_card": self.max_card,
            "exhaustive": self.exhaustive,
            "closed": self.closed,
            "count": len(self.sets),
            "cardinalities": list(self.cardinalities),
            "minimum": self.minimum,
            "maximum": self.maximum,
            "unique": self.unique,
            "d_set": [i + shift for i in self.d_set],
            "sets": [[i + shift for i in b] for b in self.sets],
        }


def _require_faithful(model):
    if not model.faithful:
        raise SemanticsError("generating sets of conjugates need a faithful model (core(H) = 1)")


def d_set(model: ExtensionModel) -> tuple[int, ...]:
    """Positions ``i`` whose removal leaves a nontrivial intersection."""
    _require_faithful(model)
    masks = _conjugate_masks(model)
    s = len(masks)
    full = (1 << model.table.order) - 1
    prefix = [full]
    for m in masks:
        prefix.append(prefix[-1] & m)
    suffix = [full]
    for m in reversed(masks):
        suffix.append(suffix[-1] & m)
    suffix.reverse()
    return tuple(i for i in range(s) if prefix[i] & suffix[i + 1] != 1)


def minimal_generating_sets(model: ExtensionModel, max_card: int | None = None) -> MinGenReport:
    """Subsets of conjugates with trivial intersection and no redundant member.

    The search walks irredundant families in lexicographic order and prunes
    any family that has already become trivial, so every set of size up to
    ``max_card`` is covered.  ``exhaustive`` means ``max_card`` reached ``s``;
    ``closed`` means no family of size ``max_card`` was still open, so larger
    minimal sets cannot exist either.
    """
    _require_faithful(model)
    masks = _conjugate_masks(model)
    s = len(masks)
    if max_card is None:
        max_card = s
    if max_card < 1:
        raise UsageError("max_card must be positive")
    max_card = min(max_card, s)
    full = (1 << model.table.order) - 1
    if full == 1:
        found, cut = [()], False
    else:
        found, cut = kernels.irredundant_search(masks, max_card, full)
    found = sorted(tuple(b) for b in found)
    cards = tuple(sorted({len(b) for b in found}))
    exhaustive = max_card >= s
    closed = exhaustive or not cut
    return MinGenReport(
        sets=tuple(found),
        cardinalities=cards,
        minimum=cards[0] if cards else None,
        maximum=cards[-1] if cards else None,
        unique=closed and len(found) == 1,
        d_set=d_set(model),
        exhaustive=exhaustive,
        closed=closed,
        max_card=max_card,
        num_conjugates=s,
    )


@dataclass(frozen=True)
class RelativeReport:
    """Invariants of ``L/P`` next to those of ``L/K`` and ``P/K``.

    ``G0`` is the subgroup for the intermediate field ``P``.
    """

    r_K: int
    r_P: int
    s_K: int
    s_P: int
    t_K: int
    t_P: int
    u_K: int
    u_P: int
    r_K_of_P: int
    t_K_of_P: int
    u_K_of_P: int
    index_P_K: int
    index_L_P: int
    normalizer_ratio: int
    t_ratio: int
    closure_ratio: int
    normalizers_agree: bool
    checks: dict

    def as_dict(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "checks"}
        out["checks"] = dict(self.checks)
        return out


def relative_report(G, G0: SubgroupSet, H: SubgroupSet) -> RelativeReport:
    """Compare the towers ``L/P/K`` where ``H <= G0 <= G``."""
    if not (H.parent is G and G0.parent is G):
        raise UsageError("G0 and H must be subgroups of G")
    if not H.issubset(G0):
        raise UsageError("H must lie inside G0")
    NK = normalizer(G, H)
    NP = normalizer(G, H, within=G0)
    FK = normal_closure(G, H)
    FP = normal_closure(G, H, within=G0)
    F0 = normal_closure(G, G0)
    N0 = normalizer(G, G0)
    r_K, r_P = NK.order // H.order, NP.order // H.order
    s_K, s_P = G.order // NK.order, G0.order // NP.order
    t_K, t_P = G.order // FK.order, G0.order // FP.order
    u_K, u_P = FK.order // H.order, FP.order // H.order
    idx_PK, idx_LP = G.order // G0.order, G0.order // H.order
    t_K_P = G.order // F0.order
    u_K_P = F0.order // G0.order
    checks = {
        "r_P divides r_K": r_K % r_P == 0,
        "r_K / r_P = [N_G(H) : N_G0(H)]": r_K // r_P == NK.order // NP.order,
        "s_K divides s_P [P:K]": (s_P * idx_PK) % s_K == 0,
        "t_K(P) divides t_K(L)": t_K % t_K_P == 0,
        "t_K(L) / t_K(P) = [G0^G : H^G]": FK.issubset(F0) and t_K == t_K_P * (F0.order // FK.order),
        "u_P divides u_K": u_K % u_P == 0,
        "t_P [P:K] = t_K [H^G : H^G0]": t_P * idx_PK == t_K * (FK.order // FP.order),
        "u_K divides u_K(P) [L:P]": (u_K_P * idx_LP) % u_K == 0,
        "N_G(H) <= G0 iff N_G(H) = N_G0(H)": NK.issubset(G0) == (NK.order == NP.order),
    }
    return RelativeReport(
        r_K=r_K, r_P=r_P, s_K=s_K, s_P=s_P, t_K=t_K, t_P=t_P, u_K=u_K, u_P=u_P,
        r_K_of_P=N0.order // G0.order, t_K_of_P=t_K_P, u_K_of_P=u_K_P,
        index_P_K=idx_PK, index_L_P=idx_LP,
        normalizer_ratio=NK.order // NP.order, t_ratio=F0.order // FK.order,
        closure_ratio=FK.order // FP.order, normalizers_agree=NK.order == NP.order, checks=checks,
    )


@dataclass(frozen=True)
class SweepRow:
    subgroup: SubgroupSet
    rho: int
    tau: int


def capacity_sweep(model: ExtensionModel, cap: int = 2000) -> list[SweepRow]:
    """``rho`` and ``tau`` for every subgroup ``U`` of ``G``."""
    if model.table.order > cap:
        raise SizeLimitError(f"sweeps are capped at group order {cap}")
    return [SweepRow(U, root_capacity(model, U), intersection_indicium(model, U))
            for U in all_subgroups(model.table, cap=cap)]

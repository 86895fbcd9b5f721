"""Standard extension models ``(G, H)`` and ways of combining them.

A model stands for a degree-``n`` extension ``L/K``: ``G`` plays the Galois
group of the closure of ``L`` and ``H`` the subgroup fixing ``L``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .arith import euler_phi
from .errors import SizeLimitError, UsageError
from .finite_field import GF
from .group_core import (ELEMENT_CAP, DirectProduct, GroupTable, SubgroupSet, build_table, core,
                         direct_power, direct_product, pointwise_stabilizer, subgroup_where)
from .realizations import (AffineRealization, HolomorphRealization, PermutationRealization,
                           ResidueTupleRealization, ShiftSemidirectRealization, cycle_perm)


@dataclass(frozen=True, eq=False)
class ExtensionModel:
    """A finite group with a distinguished subgroup.

    ``family`` and ``params`` record how the model was built so that
    family-specific selectors (roots of unity, point stabilizers) can find
    their way back.
    """

    table: GroupTable
    H: SubgroupSet
    label: str
    family: str = "custom"
    params: tuple = ()
    extra: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.H.parent is not self.table:
            raise UsageError("H must be a subgroup of the model's group")

    @property
    def degree(self) -> int:
        return self.table.order // self.H.order

    @cached_property
    def faithful(self) -> bool:
        """True when ``H`` contains no nontrivial normal subgroup of ``G``."""
        return core(self.table, self.H).is_trivial()


def symmetric_group(n: int, cap: int = ELEMENT_CAP) -> GroupTable:
    if n < 1:
        raise UsageError("symmetric group needs n >= 1")
    gens = [] if n == 1 else [cycle_perm(n, (0, 1)), cycle_perm(n, tuple(range(n)))]
    return build_table(PermutationRealization(n, gens), cap=cap)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise UsageError("cyclic group needs n >= 1")
    return build_table(ResidueTupleRealization([n]))


def symmetric_model(n: int, k: int) -> ExtensionModel:
    """``S_n`` with ``H`` the pointwise stabilizer of ``0..k-1``."""
    if not 1 <= n <= 8:
        raise UsageError("symmetric models support 1 <= n <= 8")
    if not 0 <= k <= n:
        raise UsageError("need 0 <= k <= n")
    G = symmetric_group(n)
    H = pointwise_stabilizer(G, range(k))
    return ExtensionModel(G, H, f"sym:{n},{k}", "sym", (n, k))


def shift_semidirect_model(r: int, s: int) -> ExtensionModel:
    """``(Z/r)^s x| Z/s`` with ``H`` the tuples with first coordinate 0 and trivial shift."""
    if r < 2 or s < 2:
        raise UsageError("shift semidirect models need r, s >= 2")
    if r**s * s > ELEMENT_CAP:
        raise SizeLimitError(f"order {r ** s * s} exceeds the element cap")
    G = build_table(ShiftSemidirectRealization(r, s))
    H = subgroup_where(G, lambda e: e[0][0] == 0 and e[1] == 0)
    return ExtensionModel(G, H, f"sdp:{r},{s}", "sdp", (r, s))


def holomorph_model(n: int) -> ExtensionModel:
    """``Z/n x| (Z/n)^*`` acting on the roots ``a zeta^i``; ``H`` fixes ``a``."""
    if n < 2:
        raise UsageError("holomorph models need n >= 2")
    if n * euler_phi(n) > ELEMENT_CAP:
        raise SizeLimitError("holomorph exceeds the element cap")
    G = build_table(HolomorphRealization(n))
    H = subgroup_where(G, lambda e: e[0] == 0)
    return ExtensionModel(G, H, f"holo:{n}", "holo", (n,))


def holomorph_sub_M(model: ExtensionModel, l: int) -> SubgroupSet:
    """Subgroup fixing both ``a`` and ``zeta^l``: ``{(0, c) : c = 1 mod n/l}``."""
    if model.family != "holo":
        raise UsageError("zeta selectors need a holomorph model")
    n = model.params[0]
    if l < 1 or n % l:
        raise UsageError(f"l must divide n = {n}")
    m = n // l
    G = model.table
    return SubgroupSet(G, [i for i, (b, c) in enumerate(G.elements) if b == 0 and (c - 1) % m == 0])


def frobenius_model(q: int) -> ExtensionModel:
    """Affine group of GF(q) with ``H`` the stabilizer of 0."""
    F = GF(q)
    G = build_table(AffineRealization(F))
    H = subgroup_where(G, lambda e: e[0] == 0)
    return ExtensionModel(G, H, f"frob:{q}", "frob", (q,), {"field": F})


def cyclic_model(n: int) -> ExtensionModel:
    """A cyclic extension of degree ``n``: ``Z/n`` with trivial ``H``."""
    G = cyclic_group(n)
    return ExtensionModel(G, G.trivial(), f"cyc:{n}", "cyc", (n,))


def permutation_model(degree: int, generators, label: str = "perm") -> ExtensionModel:
    """Group generated by permutations, with ``H`` the stabilizer of point 0."""
    G = build_table(PermutationRealization(degree, generators))
    H = pointwise_stabilizer(G, [0])
    return ExtensionModel(G, H, label, "perm", (degree,))


def magnify(model: ExtensionModel, R: GroupTable) -> ExtensionModel:
    """``(G x R, H x 1)``: compose with a disjoint Galois extension with group ``R``."""
    dp = direct_product(model.table, R)
    H = dp.product_subgroup(model.H, R.trivial())
    return ExtensionModel(dp.table, H, f"mag:({model.label})x({R.realization.describe()})",
                          "mag", (model, R), {"product": dp})


def product_extension(m1: ExtensionModel, m2: ExtensionModel) -> ExtensionModel:
    """``(G x S, H x T)``: the compositum of linearly disjoint ``L`` and ``J``."""
    dp = direct_product(m1.table, m2.table)
    H = dp.product_subgroup(m1.H, m2.H)
    return ExtensionModel(dp.table, H, f"dp:({m1.label})x({m2.label})", "dp", (m1, m2), {"product": dp})


def product_parts(model: ExtensionModel) -> DirectProduct:
    try:
        return model.extra["product"]
    except KeyError:
        raise UsageError("model is not a direct product") from None


def direct_power_family(G: GroupTable, m: int) -> tuple[GroupTable, list[SubgroupSet]]:
    """``G^m`` and the subgroups ``N_i`` whose ``i``-th coordinate is trivial."""
    if m < 1:
        raise UsageError("need m >= 1")
    P = direct_power(G, m)
    ident = G.realization.identity
    Ns = [SubgroupSet(P, [j for j, e in enumerate(P.elements) if e[i] == ident], trusted=True)
          for i in range(m)]
    return P, Ns

"""Cluster invariants of finite field extensions, computed on their Galois groups.

An extension ``L/K`` of degree ``n`` is modelled by a finite group ``G`` (the
Galois group of the closure) with a subgroup ``H`` fixing ``L``.  Fields
between ``K`` and the closure are subgroups of ``G``.
"""
from __future__ import annotations

from ._backend import BACKEND
from .constructions import (ExtensionModel, cyclic_group, cyclic_model, direct_power_family, frobenius_model,
                            holomorph_model, holomorph_sub_M, magnify, permutation_model, product_extension,
                            shift_semidirect_model, symmetric_group, symmetric_model)
from .errors import ClusterForgeError, SemanticsError, SizeLimitError, SpecParseError, UsageError
from .group_core import GroupTable, SubgroupSet, all_subgroups, build_table, normal_closure, normalizer
from .groupspec import parse_spec
from .invariants import (capacity_sweep, cluster_tower, intersection_indicium, invariant_report,
                         minimal_generating_sets, relative_report, root_capacity, tower_profiles)
from .triplets import classify, in_c_prime, necessary_form, search_realizations

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ClusterForgeError", "ExtensionModel", "GroupTable", "SemanticsError", "SizeLimitError",
    "SpecParseError", "SubgroupSet", "UsageError", "all_subgroups", "build_table", "capacity_sweep", "classify",
    "cluster_tower", "cyclic_group", "cyclic_model", "direct_power_family", "frobenius_model", "holomorph_model",
    "holomorph_sub_M", "in_c_prime", "intersection_indicium", "invariant_report", "magnify",
    "minimal_generating_sets", "necessary_form", "normal_closure", "normalizer", "parse_spec", "permutation_model",
    "product_extension", "relative_report", "root_capacity", "search_realizations", "shift_semidirect_model",
    "symmetric_group", "symmetric_model", "tower_profiles",
]

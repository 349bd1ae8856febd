"""Subgroup lattices, subgroup-class posets, and group recognition checks."""

from .catalog import (
    GroupSpec,
    OrderCatalog,
    alternating,
    catalog_for_order,
    catalog_specs,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    frobenius21,
    group_from_name,
    psl2,
    semidirect_cyclic,
    sl2_5,
    spec_from_name,
    symmetric,
    trivial,
)
from .classposet import IsoClassNode, IsoPoset, build_iso_poset, downset, maximal_nontop_classes
from .groupiso import GroupIso, are_isomorphic, classify, find_isomorphism
from .invariants import Fingerprint, conjugacy_classes, fingerprint
from .limits import DEFAULT_LIMITS, Limits, ResourceLimitError
from .perm import FiniteGroup, Permutation, closure, compose, element_order
from .poset import (
    Poset,
    are_posets_isomorphic,
    canonical_form,
    canonical_hash,
    find_poset_isomorphism,
    refine,
)
from .subgroups import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    composition_factors,
    conjugate_subgroup,
    coset_action,
    derived_series,
    has_subgroup_of_order,
    is_maximal,
    is_normal,
    is_simple,
    is_solvable,
    normal_subgroups,
    order_shape,
    subgroup_from_members,
    subgroup_generated_by,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_LIMITS",
    "FiniteGroup",
    "Fingerprint",
    "GroupIso",
    "GroupSpec",
    "IsoClassNode",
    "IsoPoset",
    "Limits",
    "OrderCatalog",
    "Permutation",
    "Poset",
    "ResourceLimitError",
    "Subgroup",
    "SubgroupLattice",
    "all_subgroups",
    "alternating",
    "are_isomorphic",
    "are_posets_isomorphic",
    "build_iso_poset",
    "canonical_form",
    "canonical_hash",
    "catalog_for_order",
    "catalog_specs",
    "classify",
    "closure",
    "compose",
    "composition_factors",
    "conjugacy_classes",
    "conjugate_subgroup",
    "coset_action",
    "cyclic",
    "derived_series",
    "dicyclic",
    "dihedral",
    "direct_product",
    "downset",
    "element_order",
    "find_isomorphism",
    "find_poset_isomorphism",
    "fingerprint",
    "frobenius21",
    "group_from_name",
    "has_subgroup_of_order",
    "is_maximal",
    "is_normal",
    "is_simple",
    "is_solvable",
    "maximal_nontop_classes",
    "normal_subgroups",
    "order_shape",
    "psl2",
    "refine",
    "semidirect_cyclic",
    "sl2_5",
    "spec_from_name",
    "subgroup_from_members",
    "subgroup_generated_by",
    "symmetric",
    "trivial",
]

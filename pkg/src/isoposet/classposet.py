"""The poset of isomorphism classes of subgroups of a finite group.

Nodes are isomorphism classes of subgroups; one class sits below another
exactly when SOME member of the first is contained in SOME member of the
second, evaluated over the complete subgroup lattice.  Checking containment
only between class representatives would be wrong: representatives need not
nest even when the relation holds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from functools import lru_cache

from .catalog import catalog_for_order
from .groupiso import classify_with_data, find_isomorphism
from .invariants import Fingerprint, fingerprint
from .limits import DEFAULT_LIMITS, Limits
from .perm import FiniteGroup
from .poset import Poset
from .subgroups import Subgroup, SubgroupLattice, all_subgroups, order_shape


@dataclass(frozen=True)
class IsoClassNode:
    """One isomorphism class of subgroups."""

    node_id: int
    members: tuple[int, ...]
    rep: Subgroup
    class_size: int
    order: int
    shape: tuple[int, ...]
    fp: Fingerprint
    all_members_maximal: bool
    label: str


@dataclass(frozen=True, eq=False)
class IsoPoset:
    """Poset of subgroup isomorphism classes, with full order and Hasse edges."""

    parent: FiniteGroup
    nodes: tuple[IsoClassNode, ...]
    below_masks: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]
    top: int
    bottom: int

    def __len__(self) -> int:
        return len(self.nodes)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below_masks[j] >> i & 1)

    def to_poset(self) -> Poset:
        return Poset(len(self.nodes), self.hasse)

    def shapes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(node.shape for node in self.nodes)


@lru_cache(maxsize=None)
def _recognition_candidates(order: int) -> tuple[tuple[str, FiniteGroup, Fingerprint], ...]:
    out = []
    for spec in catalog_for_order(order).specs:
        group = spec.build()
        out.append((spec.name, group, fingerprint(group)))
    return tuple(out)


def _label_for(fp: Fingerprint, rep: Subgroup, node_id: int, *, limits: Limits) -> str:
    if fp.order == 1:
        return "1"
    if dict(fp.order_histogram).get(fp.order):  # an element of full order: cyclic
        return f"Z{fp.order}"
    if fp.order <= limits.iso_cap:
        standalone = None
        for name, group, cfp in _recognition_candidates(fp.order):
            if cfp != fp:
                continue
            if standalone is None:
                standalone = rep.as_group(limits=limits)
            if find_isomorphism(group, standalone, limits=limits, fg=cfp, fh=fp):
                return name
    return f"G{fp.order}.{node_id}"


def build_iso_poset(
    group: FiniteGroup,
    *,
    lattice: SubgroupLattice | None = None,
    limits: Limits = DEFAULT_LIMITS,
    cache_dir: str | os.PathLike | None = None,
    recognize: bool = True,
) -> IsoPoset:
    """Construct the subgroup-class poset of a group."""
    if lattice is None:
        lattice = all_subgroups(group, limits=limits, cache_dir=cache_dir)
    classes = classify_with_data(group, lattice, limits=limits)
    k = len(classes)

    class_bits = []
    union_contains = []
    for members, _, _ in classes:
        bits = 0
        for s in members:
            bits |= 1 << s
        class_bits.append(bits)
        cont = 0
        for s in members:
            cont |= lattice.contains_masks[s]
        union_contains.append(cont)

    below = [0] * k
    for j in range(k):
        for i in range(k):
            if union_contains[j] & class_bits[i]:
                below[j] |= 1 << i

    nodes = []
    for node_id, (members, fp, rep_idx) in enumerate(classes):
        rep = lattice.subgroups[rep_idx]
        all_max = all(lattice.maximal_flags[s] for s in members)
        if recognize:
            label = _label_for(fp, rep, node_id, limits=limits)
        elif fp.order == 1:
            label = "1"
        else:
            label = f"G{fp.order}.{node_id}"
        nodes.append(
            IsoClassNode(
                node_id=node_id,
                members=members,
                rep=rep,
                class_size=len(members),
                order=fp.order,
                shape=order_shape(fp.order),
                fp=fp,
                all_members_maximal=all_max,
                label=label,
            )
        )
    if group.name and nodes[-1].order == group.order:
        nodes[-1] = replace(nodes[-1], label=group.name)

    top = k - 1
    bottom = 0
    if nodes[top].order != group.order or nodes[bottom].order != 1:
        raise RuntimeError("class poset lost its top or bottom node")
    if below[top] != (1 << k) - 1 or any(not below[j] & 1 for j in range(k)):
        raise RuntimeError("class poset order relation is inconsistent")

    hasse = []
    for i in range(k):
        for j in range(k):
            if i == j or not below[j] >> i & 1:
                continue
            implied = any(
                m not in (i, j) and below[m] >> i & 1 and below[j] >> m & 1
                for m in range(k)
            )
            if not implied:
                hasse.append((i, j))

    return IsoPoset(
        parent=group,
        nodes=tuple(nodes),
        below_masks=tuple(below),
        hasse=tuple(sorted(hasse)),
        top=top,
        bottom=bottom,
    )


def downset(iso: IsoPoset, node_id: int) -> IsoPoset:
    """The induced poset on every class below (and including) a node."""
    if not 0 <= node_id < len(iso.nodes):
        raise ValueError(f"no class with id {node_id}")
    keep = [i for i in range(len(iso.nodes)) if iso.leq(i, node_id)]
    remap = {old: new for new, old in enumerate(keep)}
    nodes = tuple(
        replace(iso.nodes[old], node_id=new) for new, old in enumerate(keep)
    )
    below = []
    for old_j in keep:
        bits = 0
        for old_i in keep:
            if iso.leq(old_i, old_j):
                bits |= 1 << remap[old_i]
        below.append(bits)
    # covers of a downset are the covers of the ambient poset within it
    hasse = tuple(
        sorted((remap[a], remap[b]) for a, b in iso.hasse if a in remap and b in remap)
    )
    return IsoPoset(
        parent=iso.parent,
        nodes=nodes,
        below_masks=tuple(below),
        hasse=hasse,
        top=remap[node_id],
        bottom=0,
    )


def maximal_nontop_classes(iso: IsoPoset) -> list[IsoClassNode]:
    """Classes whose only upper cover is the top class."""
    up: dict[int, set[int]] = {i: set() for i in range(len(iso.nodes))}
    for lo, hi in iso.hasse:
        up[lo].add(hi)
    return [
        iso.nodes[i]
        for i in range(len(iso.nodes))
        if i != iso.top and up[i] == {iso.top}
    ]

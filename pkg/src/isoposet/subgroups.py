"""Exhaustive subgroup enumeration and structural queries.

Subgroups are index sets into the parent group's element table.  Complete
enumeration seeds with every cyclic subgroup and closes under joins with
cyclic subgroups until no new subgroup appears; that is complete because
every subgroup is a join of its own cyclic subgroups.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .invariants import Fingerprint, derived_subgroup_indices, fingerprint
from .limits import DEFAULT_LIMITS, Limits, ResourceLimitError
from .perm import FiniteGroup, Permutation, closure, element_order

# Orders m <= 100 for which every group of order m is cyclic.  For these,
# a subgroup of order m exists iff an element of order m exists, which lets
# has_subgroup_of_order answer without enumerating anything.
CYCLIC_ONLY_ORDERS = frozenset({
    1, 2, 3, 5, 7, 11, 13, 15, 17, 19, 23, 29, 31, 33, 35, 37, 41, 43, 47,
    51, 53, 59, 61, 65, 67, 69, 71, 73, 77, 79, 83, 85, 87, 89, 91, 95, 97,
})


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` as a sorted element-index set."""

    parent: FiniteGroup
    members: tuple[int, ...]
    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        mask = 0
        for m in self.members:
            mask |= 1 << m
        object.__setattr__(self, "mask", mask)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.parent.order

    def contains(self, other: "Subgroup") -> bool:
        if other.parent is not self.parent:
            raise ValueError("subgroups of different parent groups are incomparable")
        return other.mask & self.mask == other.mask

    def as_group(self, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
        """Standalone FiniteGroup realization on the parent's points."""
        gens = [self.parent.elements[g] for g in self.gens]
        return closure(self.parent.degree, gens, limits=limits)

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"


def subgroup_generated_by(group: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """The subgroup generated by the given element indices."""
    seed = list(seed)
    members = group.closure_indices(seed)
    gens = tuple(dict.fromkeys(s for s in seed if s != group.identity_index))
    return Subgroup(group, tuple(members), gens)


def subgroup_from_members(group: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Wrap an element-index set as a Subgroup, checking it really is one."""
    members = tuple(sorted(set(members)))
    gens = group.greedy_generator_indices(members)
    closed = tuple(group.closure_indices(list(members)))
    if closed != members:
        raise ValueError("member set is not closed under multiplication")
    return Subgroup(group, members, gens)


def conjugate_subgroup(group: FiniteGroup, sub: Subgroup, g: int) -> Subgroup:
    """The conjugate subgroup {g^-1 h g : h in sub}."""
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    members = tuple(sorted(group.conjugate_index(h, g) for h in sub.members))
    gens = tuple(group.conjugate_index(h, g) for h in sub.gens)
    return Subgroup(group, members, gens)


def is_normal(group: FiniteGroup, sub: Subgroup) -> bool:
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    # invariance under conjugation by generators suffices
    for g in group.generator_indices():
        conj = 0
        for h in sub.members:
            conj |= 1 << group.conjugate_index(h, g)
        if conj != sub.mask:
            return False
    return True


def coset_action(group: FiniteGroup, normal: Subgroup, *,
                 limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """The quotient group realized by the action on cosets of ``normal``.

    The returned permutation group acts on the |G|/|N| cosets and is
    isomorphic to G/N; raises ValueError if N is not normal.
    """
    if normal.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    if not is_normal(group, normal):
        raise ValueError("coset_action requires a normal subgroup")
    n = group.order
    coset_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if coset_of[i] < 0:
            c = len(reps)
            reps.append(i)
            for h in normal.members:
                coset_of[group.mult(h, i)] = c
    ncos = len(reps)
    gens = [
        Permutation(tuple(coset_of[group.mult(reps[c], g)] for c in range(ncos)))
        for g in group.generator_indices()
    ]
    qname = f"{group.name}/N{normal.order}" if group.name else None
    return closure(ncos, gens, limits=limits, name=qname)


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """Every subgroup of a group, with containment and maximality data.

    ``contains_masks[i]`` has bit j set iff subgroups[j] is a subset of
    subgroups[i]; ``maximal_flags[i]`` is True iff the only strict
    over-subgroup of i is the whole group.
    """

    parent: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    contains_masks: tuple[int, ...]
    maximal_flags: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    @property
    def trivial_index(self) -> int:
        return 0

    @property
    def full_index(self) -> int:
        return len(self.subgroups) - 1

    def contains(self, i: int, j: int) -> bool:
        """True iff subgroups[j] is a subset of subgroups[i]."""
        return bool(self.contains_masks[i] >> j & 1)

    def indices_of_order(self, m: int) -> list[int]:
        return [i for i, s in enumerate(self.subgroups) if s.order == m]


def _finish_lattice(group: FiniteGroup, raw: list[tuple[tuple[int, ...], tuple[int, ...]]]
                    ) -> SubgroupLattice:
    raw.sort(key=lambda mg: (len(mg[0]), mg[0]))
    subs = tuple(Subgroup(group, members, gens) for members, gens in raw)
    k = len(subs)
    contains_masks = []
    for i in range(k):
        mask_i = subs[i].mask
        bits = 0
        for j in range(k):
            if subs[j].mask & mask_i == subs[j].mask:
                bits |= 1 << j
        contains_masks.append(bits)
    full = k - 1
    above = [0] * k
    for i in range(k):
        for j in range(k):
            if i != j and contains_masks[j] >> i & 1:
                above[i] |= 1 << j
    flags = tuple(i != full and above[i] == 1 << full for i in range(k))
    return SubgroupLattice(group, subs, tuple(contains_masks), flags)


def _enumerate_subgroups(group: FiniteGroup) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    n = group.order
    ident = group.identity_index
    half = n // 2
    full_mask = (1 << n) - 1

    cyclic_by_mask: dict[int, int] = {}
    for i in range(n):
        members = [ident]
        j = i
        while j != ident:
            members.append(j)
            j = group.mult(j, i)
        mask = 0
        for m in members:
            mask |= 1 << m
        cyclic_by_mask.setdefault(mask, i)
    cyclics = sorted(cyclic_by_mask.items(), key=lambda kv: (kv[0].bit_count(), kv[0]))

    known: dict[int, tuple[int, ...]] = {1 << ident: ()}
    for mask, gen in cyclics:
        known.setdefault(mask, (gen,))
    queue = list(known)
    qi = 0
    while qi < len(queue):
        hmask = queue[qi]
        qi += 1
        if hmask == full_mask:
            continue
        hgens = known[hmask]
        for cmask, cgen in cyclics:
            if cmask & hmask == cmask:
                continue
            result = group.closure_indices(list(hgens) + [cgen], stop_above=half)
            if result is None:
                jmask = full_mask
                jgens = group.generator_indices()
            else:
                jmask = 0
                for m in result:
                    jmask |= 1 << m
                if jmask in known:
                    continue
                jgens = group.greedy_generator_indices(result)
            if jmask not in known:
                known[jmask] = jgens
                queue.append(jmask)
    if full_mask not in known:
        known[full_mask] = group.generator_indices()
        queue.append(full_mask)
    out = []
    for mask, gens in known.items():
        members = tuple(i for i in range(n) if mask >> i & 1)
        out.append((members, tuple(gens)))
    return out


def _cache_path(group: FiniteGroup, cache_dir: str | os.PathLike) -> Path:
    payload = json.dumps(
        [group.degree, group.order, [list(p.images) for p in group.generators]]
    )
    key = hashlib.sha256(payload.encode()).hexdigest()[:32]
    return Path(cache_dir) / f"lattice-{key}.json"


def _resolve_cache_dir(cache_dir: str | os.PathLike | None) -> Path | None:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get("ISOPOSET_CACHE_DIR")
    return Path(env) if env else None


def _load_cached(group: FiniteGroup, path: Path) -> SubgroupLattice | None:
    try:
        payload = json.loads(path.read_text("utf-8"))
    except (OSError, ValueError):
        return None
    if (
        payload.get("format_version") != 1
        or payload.get("degree") != group.degree
        or payload.get("order") != group.order
        or payload.get("generators") != [list(p.images) for p in group.generators]
    ):
        return None
    raw = [
        (tuple(members), tuple(gens))
        for members, gens in zip(payload["members"], payload["gens"])
    ]
    return _finish_lattice(group, raw)


def _save_cached(group: FiniteGroup, lattice: SubgroupLattice, path: Path) -> None:
    payload = {
        "format_version": 1,
        "degree": group.degree,
        "order": group.order,
        "generators": [list(p.images) for p in group.generators],
        "members": [list(s.members) for s in lattice.subgroups],
        "gens": [list(s.gens) for s in lattice.subgroups],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True), "utf-8")


def all_subgroups(group: FiniteGroup, *, limits: Limits = DEFAULT_LIMITS,
                  cache_dir: str | os.PathLike | None = None) -> SubgroupLattice:
    """The complete subgroup lattice of a group within the enumeration cap."""
    if group.order > limits.enum_cap:
        raise ResourceLimitError(
            f"group order {group.order} exceeds subgroup enumeration cap {limits.enum_cap}"
        )
    directory = _resolve_cache_dir(cache_dir)
    path = _cache_path(group, directory) if directory else None
    if path is not None and path.exists():
        cached = _load_cached(group, path)
        if cached is not None:
            return cached
    lattice = _finish_lattice(group, _enumerate_subgroups(group))
    if path is not None:
        _save_cached(group, lattice, path)
    return lattice


def is_maximal(group: FiniteGroup, sub: Subgroup) -> bool:
    """True iff extending ``sub`` by any outside element generates the group.

    Works without enumerating the subgroup lattice, so it is usable above
    the enumeration cap.  <H, g> = <H, h*g> for h in H, so one candidate
    per nontrivial coset suffices, and |<H, g>| = |H| * (orbit of the
    trivial coset under <H, g>) in the right-coset action.
    """
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to this group")
    if sub.order == group.order:
        raise ValueError("maximality is undefined for the whole group")
    n = group.order
    coset_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if coset_of[i] < 0:
            reps.append(i)
            c = len(reps) - 1
            for h in sub.members:
                coset_of[group.mult(h, i)] = c
    ncos = len(reps)
    hacts = [
        [coset_of[group.mult(reps[c], g)] for c in range(ncos)]
        for g in sub.gens
        if g != group.identity_index
    ]
    for r in reps[1:]:
        racts = [coset_of[group.mult(reps[c], r)] for c in range(ncos)]
        acts = hacts + [racts]
        seen = bytearray(ncos)
        seen[0] = 1
        count = 1
        stack = [0]
        while stack:
            x = stack.pop()
            for act in acts:
                y = act[x]
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    stack.append(y)
        if count < ncos:
            return False
    return True


def has_subgroup_of_order(group: FiniteGroup, m: int, *,
                          limits: Limits = DEFAULT_LIMITS,
                          lattice: SubgroupLattice | None = None,
                          cache_dir: str | os.PathLike | None = None) -> bool:
    """Whether the group has a subgroup of order m.

    Uses the lattice when available or enumerable; for orders in the
    hardcoded cyclic-only table it falls back to an element-order scan,
    which stays exact above the enumeration cap.
    """
    if m < 1:
        raise ValueError(f"subgroup order must be positive, got {m}")
    if m == 1 or m == group.order:
        return True
    if group.order % m:
        return False
    if lattice is not None:
        if lattice.parent is not group:
            raise ValueError("lattice does not belong to this group")
        return any(s.order == m for s in lattice.subgroups)
    if m in CYCLIC_ONLY_ORDERS:
        return any(element_order(group, i) == m for i in range(group.order))
    if group.order <= limits.enum_cap:
        lattice = all_subgroups(group, limits=limits, cache_dir=cache_dir)
        return any(s.order == m for s in lattice.subgroups)
    raise ResourceLimitError(
        f"group order {group.order} exceeds enumeration cap {limits.enum_cap} "
        f"and order {m} has no element-order shortcut"
    )


def normal_subgroups(group: FiniteGroup, *, limits: Limits = DEFAULT_LIMITS,
                     lattice: SubgroupLattice | None = None,
                     cache_dir: str | os.PathLike | None = None) -> list[Subgroup]:
    if lattice is None:
        lattice = all_subgroups(group, limits=limits, cache_dir=cache_dir)
    return [s for s in lattice.subgroups if is_normal(group, s)]


def is_simple(group: FiniteGroup, *, limits: Limits = DEFAULT_LIMITS,
              lattice: SubgroupLattice | None = None,
              cache_dir: str | os.PathLike | None = None) -> bool:
    """True iff the group has exactly two normal subgroups."""
    return len(normal_subgroups(group, limits=limits, lattice=lattice,
                                cache_dir=cache_dir)) == 2


def derived_series(group: FiniteGroup) -> list[Subgroup]:
    """Strictly descending derived series, ending at a perfect subgroup."""
    every = tuple(range(group.order))
    series = [Subgroup(group, every, group.generator_indices())]
    while True:
        current = series[-1]
        nxt = derived_subgroup_indices(group, current.gens)
        if len(nxt) == current.order:
            return series
        members = tuple(nxt)
        series.append(Subgroup(group, members, group.greedy_generator_indices(members)))
        if len(nxt) == 1:
            return series


def is_solvable(group: FiniteGroup) -> bool:
    return derived_series(group)[-1].order == 1


def composition_factors(group: FiniteGroup, *, limits: Limits = DEFAULT_LIMITS,
                        cache_dir: str | os.PathLike | None = None,
                        _policy: str = "first") -> tuple[Fingerprint, ...]:
    """Fingerprints of the composition factors, as a sorted tuple.

    Repeatedly splits along a maximal proper normal subgroup, recursing on
    the subgroup and the quotient.  Ties between maximal proper normal
    subgroups break by subgroup index; the resulting multiset is
    choice-independent, which the test suite checks rather than assumes.
    """
    if group.order == 1:
        return ()
    lattice = all_subgroups(group, limits=limits, cache_dir=cache_dir)
    proper_normals = [
        i for i, s in enumerate(lattice.subgroups)
        if not s.is_full and is_normal(group, s)
    ]
    maximal_normals = [
        i for i in proper_normals
        if not any(
            j != i and lattice.subgroups[j].contains(lattice.subgroups[i])
            for j in proper_normals
        )
    ]
    if maximal_normals == [lattice.trivial_index]:
        return (fingerprint(group),)
    pick = min(maximal_normals) if _policy == "first" else max(maximal_normals)
    chosen = lattice.subgroups[pick]
    quotient = coset_action(group, chosen, limits=limits)
    inner = chosen.as_group(limits=limits)
    factors = composition_factors(inner, limits=limits, cache_dir=cache_dir, _policy=_policy)
    factors += composition_factors(quotient, limits=limits, cache_dir=cache_dir, _policy=_policy)
    return tuple(sorted(factors))


def order_shape(n: int) -> tuple[int, ...]:
    """Multiset of prime-factorization exponents, sorted descending."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    shape = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            shape.append(e)
        p += 1
    if n > 1:
        shape.append(1)
    return tuple(sorted(shape, reverse=True))

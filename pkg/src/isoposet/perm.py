"""Permutations on finite point sets and closure-enumerated finite groups.

Composition convention, fixed project-wide: ``compose(p, q)`` applies p
first, then q, i.e. ``compose(p, q)(x) == q(p(x))``.  Group multiplication,
Cayley tables and the BFS element order all follow this convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .limits import DEFAULT_LIMITS, Limits, ResourceLimitError


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1} stored as its image table."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise ValueError("a permutation needs at least one point")
        seen = [False] * n
        for x in self.images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"images {self.images!r} are not a bijection on 0..{n - 1}")
            seen[x] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        touched = set()
        for cycle in cycles:
            for x in cycle:
                if x in touched:
                    raise ValueError(f"cycles are not disjoint at point {x}")
                touched.add(x)
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                images[a] = b
        return cls(tuple(images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycle decomposition, each cycle led by its least point."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q: the result maps x to q(p(x))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[x] for x in p.images))


def _compose_images(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # raw-tuple fast path for inner loops; same convention as compose()
    return tuple(b[x] for x in a)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite permutation group with every element enumerated.

    Elements sit in deterministic BFS discovery order (identity first,
    generators applied in input order).  Instances are immutable and all
    operations on them are pure, so groups can be shared freely across
    threads.  Construct through :func:`closure` or the catalog module.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    identity_index: int
    cayley_table: tuple[tuple[int, ...], ...] | None
    name: str | None = None

    def __post_init__(self) -> None:
        images = [p.images for p in self.elements]
        index = {img: i for i, img in enumerate(images)}
        if len(index) != len(images):
            raise ValueError("duplicate elements")
        inverses = []
        for img in images:
            inv = [0] * self.degree
            for x, y in enumerate(img):
                inv[y] = x
            inverses.append(index[tuple(inv)])
        object.__setattr__(self, "_images", images)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_inverses", inverses)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, p: Permutation) -> int:
        """Element index of p, or ValueError if p is not in the group."""
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        return isinstance(p, Permutation) and p.images in self._index

    def mult(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j] (elements[i] applied first)."""
        if self.cayley_table is not None:
            return self.cayley_table[i][j]
        a = self._images[i]
        b = self._images[j]
        return self._index[tuple(b[x] for x in a)]

    def inverse_index(self, i: int) -> int:
        return self._inverses[i]

    def conjugate_index(self, i: int, g: int) -> int:
        """Index of g^-1 * elements[i] * g."""
        return self.mult(self.mult(self._inverses[g], i), g)

    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self._index[g.images] for g in self.generators)

    def closure_indices(
        self, seed: Iterable[int], stop_above: int | None = None
    ) -> list[int] | None:
        """Sorted element indices of the subgroup generated by ``seed``.

        Returns None as soon as the partial closure exceeds ``stop_above``
        members; by Lagrange any subgroup larger than |G|/2 is G itself,
        which is what callers use this for.
        """
        gens = [g for g in dict.fromkeys(seed) if g != self.identity_index]
        if not gens:
            return [self.identity_index]
        table = self.cayley_table
        seen = bytearray(self.order)
        seen[self.identity_index] = 1
        members = [self.identity_index]
        frontier = [self.identity_index]
        while frontier:
            nxt = []
            for x in frontier:
                if table is not None:
                    row = table[x]
                    for g in gens:
                        y = row[g]
                        if not seen[y]:
                            seen[y] = 1
                            members.append(y)
                            nxt.append(y)
                else:
                    for g in gens:
                        y = self.mult(x, g)
                        if not seen[y]:
                            seen[y] = 1
                            members.append(y)
                            nxt.append(y)
            if stop_above is not None and len(members) > stop_above:
                return None
            frontier = nxt
        members.sort()
        return members

    def greedy_generator_indices(self, members: Sequence[int] | None = None) -> tuple[int, ...]:
        """Small generating set: repeatedly take the lowest index not yet generated."""
        pool = list(members) if members is not None else list(range(self.order))
        gens: list[int] = []
        covered = {self.identity_index}
        for m in pool:
            if m not in covered:
                gens.append(m)
                covered = set(self.closure_indices(gens))
        return tuple(gens)

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label}: order {self.order}, degree {self.degree}>"


def closure(
    degree: int,
    generators: Sequence[Permutation],
    *,
    limits: Limits = DEFAULT_LIMITS,
    name: str | None = None,
) -> FiniteGroup:
    """Enumerate the group generated by ``generators`` on ``degree`` points.

    Discovery order is breadth-first from the identity with generators
    applied in input order, so two runs with identical inputs produce
    identical element orderings.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} does not match {degree}")
    gen_images = [g.images for g in generators]
    identity = tuple(range(degree))
    index: dict[tuple[int, ...], int] = {identity: 0}
    elems: list[tuple[int, ...]] = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gen_images:
                c = tuple(b[x] for x in a)
                if c not in index:
                    index[c] = len(elems)
                    elems.append(c)
                    nxt.append(c)
        if len(elems) > limits.element_cap:
            raise ResourceLimitError(
                f"closure reached more than {limits.element_cap} elements "
                f"(element cap {limits.element_cap})"
            )
        frontier = nxt
    table = None
    if len(elems) <= limits.cayley_cap:
        table = tuple(
            tuple(index[tuple(b[x] for x in a)] for b in elems) for a in elems
        )
    return FiniteGroup(
        degree=degree,
        generators=tuple(generators),
        elements=tuple(Permutation(e) for e in elems),
        identity_index=0,
        cayley_table=table,
        name=name,
    )


def element_order(group: FiniteGroup, i: int) -> int:
    """Smallest k >= 1 with elements[i]^k equal to the identity."""
    return group.elements[i].order()

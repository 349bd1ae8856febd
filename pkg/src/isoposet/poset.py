"""Finite posets: refinement coloring, isomorphism, canonical hashing.

Posets are stored as Hasse diagrams (cover relations); for finite posets
cover-digraph isomorphism and order isomorphism coincide, so all searches
run on the reduction.  Refinement is a pruning heuristic only; completeness
always comes from the backtracking below it.
"""

from __future__ import annotations

import hashlib
import sys
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .limits import DEFAULT_LIMITS, Limits, ResourceLimitError


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its Hasse edges (lo, hi), lo covered by hi."""

    n: int
    hasse: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for lo, hi in self.hasse:
            if not (0 <= lo < self.n and 0 <= hi < self.n) or lo == hi:
                raise ValueError(f"bad cover edge ({lo}, {hi})")
            if (lo, hi) in seen:
                raise ValueError(f"duplicate cover edge ({lo}, {hi})")
            seen.add((lo, hi))
        # acyclicity via Kahn's algorithm
        indeg = [0] * self.n
        for _, hi in self.hasse:
            indeg[hi] += 1
        ready = [x for x in range(self.n) if indeg[x] == 0]
        topo = []
        while ready:
            x = ready.pop()
            topo.append(x)
            for lo, hi in self.hasse:
                if lo == x:
                    indeg[hi] -= 1
                    if indeg[hi] == 0:
                        ready.append(hi)
        if len(topo) != self.n:
            raise ValueError("cover edges contain a cycle")
        # transitive reduction: no edge may follow from two others
        for lo, hi in self.hasse:
            for mid in self.up[lo]:
                if mid != hi and self.above[mid] >> hi & 1:
                    raise ValueError(f"edge ({lo}, {hi}) is implied by ({lo}, {mid})")

    @classmethod
    def from_relation(cls, n: int, leq_pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Build from the full order relation, reducing to covers."""
        strict = [0] * n
        for a, b in leq_pairs:
            if a != b:
                strict[a] |= 1 << b
        for a in range(n):
            for b in range(n):
                if strict[a] >> b & 1:
                    if strict[b] >> a & 1:
                        raise ValueError("relation is not antisymmetric")
                    if strict[b] & ~strict[a]:
                        raise ValueError("relation is not transitive")
        covers = []
        for a in range(n):
            for b in range(n):
                if strict[a] >> b & 1:
                    implied = any(
                        strict[a] >> c & 1 and strict[c] >> b & 1
                        for c in range(n)
                        if c not in (a, b)
                    )
                    if not implied:
                        covers.append((a, b))
        return cls(n, tuple(sorted(covers)))

    @cached_property
    def up(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for lo, hi in self.hasse:
            adj[lo].append(hi)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def down(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for lo, hi in self.hasse:
            adj[hi].append(lo)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def above(self) -> tuple[int, ...]:
        """above[x] = bitmask of nodes strictly greater than x."""
        order = self._topo_from_top()
        masks = [0] * self.n
        for x in order:
            acc = 0
            for y in self.up[x]:
                acc |= 1 << y
                acc |= masks[y]
            masks[x] = acc
        return tuple(masks)

    @cached_property
    def below(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for x in reversed(self._topo_from_top()):
            acc = 0
            for y in self.down[x]:
                acc |= 1 << y
                acc |= masks[y]
            masks[x] = acc
        return tuple(masks)

    def _topo_from_top(self) -> list[int]:
        # maximal elements first, every node after all its up-neighbors
        outdeg = [len(self.up[x]) for x in range(self.n)]
        ready = [x for x in range(self.n) if outdeg[x] == 0]
        order = []
        while ready:
            x = ready.pop()
            order.append(x)
            for y in self.down[x]:
                outdeg[y] -= 1
                if outdeg[y] == 0:
                    ready.append(y)
        return order

    @cached_property
    def heights(self) -> tuple[int, ...]:
        h = [0] * self.n
        for x in reversed(self._topo_from_top()):
            h[x] = max((h[y] + 1 for y in self.down[x]), default=0)
        return tuple(h)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        d = [0] * self.n
        for x in self._topo_from_top():
            d[x] = max((d[y] + 1 for y in self.up[x]), default=0)
        return tuple(d)

    @cached_property
    def cover_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.hasse)

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.above[a] >> b & 1)


def _refine_rounds(posets: Sequence[Poset],
                   labels: Sequence[Sequence[Hashable] | None]) -> list[tuple[int, ...]]:
    """Joint iterated refinement; equal colors mean equal signatures across posets."""
    keys = []
    for p, lab in zip(posets, labels):
        base = []
        for x in range(p.n):
            extra = (lab[x],) if lab is not None else ()
            base.append(extra + (p.heights[x], p.depths[x], len(p.up[x]), len(p.down[x])))
        keys.append(base)
    colors = _rank(keys)
    while True:
        new_keys = []
        for p, col in zip(posets, colors):
            new_keys.append([
                (
                    col[x],
                    tuple(sorted(col[y] for y in p.up[x])),
                    tuple(sorted(col[y] for y in p.down[x])),
                )
                for x in range(p.n)
            ])
        new_colors = _rank(new_keys)
        if new_colors == colors:
            return [tuple(c) for c in colors]
        colors = new_colors


def _rank(keys: list[list]) -> list[list[int]]:
    universe = sorted({k for ks in keys for k in ks})
    rank = {k: i for i, k in enumerate(universe)}
    return [[rank[k] for k in ks] for ks in keys]


def refine(poset: Poset, labels: Sequence[Hashable] | None = None) -> tuple[int, ...]:
    """Stable node coloring; isomorphic posets get identical color multisets."""
    return _refine_rounds([poset], [labels])[0]


def find_poset_isomorphism(
    p: Poset,
    q: Poset,
    *,
    p_labels: Sequence[Hashable] | None = None,
    q_labels: Sequence[Hashable] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> tuple[int, ...] | None:
    """An order isomorphism p -> q as a node mapping, or None.

    With labels given on both sides, only label-preserving mappings count
    (a strictly stronger test than plain order isomorphism).
    """
    if (p_labels is None) != (q_labels is None):
        raise ValueError("labels must be supplied for both posets or neither")
    if max(p.n, q.n) > limits.poset_cap:
        raise ResourceLimitError(
            f"poset size {max(p.n, q.n)} exceeds poset cap {limits.poset_cap}"
        )
    if p.n != q.n or len(p.hasse) != len(q.hasse):
        return None
    colors_p, colors_q = _refine_rounds([p, q], [p_labels, q_labels])
    if sorted(colors_p) != sorted(colors_q):
        return None
    by_color: dict[int, list[int]] = {}
    for y in range(q.n):
        by_color.setdefault(colors_q[y], []).append(y)
    candidates = {x: by_color[colors_p[x]] for x in range(p.n)}
    order = sorted(range(p.n), key=lambda x: (len(candidates[x]), x))

    mapping = [-1] * p.n
    used = [False] * q.n
    placed: list[int] = []

    def consistent(x: int, y: int) -> bool:
        for x2 in placed:
            y2 = mapping[x2]
            if ((x, x2) in p.cover_set) != ((y, y2) in q.cover_set):
                return False
            if ((x2, x) in p.cover_set) != ((y2, y) in q.cover_set):
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == p.n:
            return True
        x = order[k]
        for y in candidates[x]:
            if not used[y] and consistent(x, y):
                mapping[x] = y
                used[y] = True
                placed.append(x)
                if backtrack(k + 1):
                    return True
                placed.pop()
                used[y] = False
                mapping[x] = -1
        return False

    bound = max(1000, 4 * p.n + 100)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, bound))
    try:
        ok = backtrack(0)
    finally:
        sys.setrecursionlimit(old)
    if not ok:
        return None
    # re-verify the witness edge-by-edge in both directions
    image = {(mapping[a], mapping[b]) for a, b in p.hasse}
    if image != set(q.hasse):
        raise RuntimeError("poset isomorphism search produced an invalid witness")
    return tuple(mapping)


def are_posets_isomorphic(
    p: Poset,
    q: Poset,
    *,
    p_labels: Sequence[Hashable] | None = None,
    q_labels: Sequence[Hashable] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    return find_poset_isomorphism(
        p, q, p_labels=p_labels, q_labels=q_labels, limits=limits
    ) is not None


def canonical_form(poset: Poset, *, limits: Limits = DEFAULT_LIMITS) -> tuple:
    """A relabeling-invariant form that determines the poset up to isomorphism.

    Nodes are placed one position at a time; each position records
    (refinement color, cover bits down to the placed prefix, cover bits up),
    and the lexicographically least full placement wins.  Equal forms hold
    exactly for isomorphic posets.
    """
    if poset.n > limits.poset_cap:
        raise ResourceLimitError(
            f"poset size {poset.n} exceeds poset cap {limits.poset_cap}"
        )
    n = poset.n
    if n == 0:
        return (0, ())
    colors = refine(poset)
    cover = poset.cover_set
    placed: list[int] = []
    unplaced = set(range(n))
    form: list[tuple[int, int, int]] = []
    best: tuple | None = None

    def signature(c: int) -> tuple[int, int, int]:
        lo = hi = 0
        for pos, x in enumerate(placed):
            if (x, c) in cover:
                lo |= 1 << pos
            if (c, x) in cover:
                hi |= 1 << pos
        return (colors[c], lo, hi)

    def rec() -> None:
        nonlocal best
        k = len(placed)
        if k == n:
            cand = tuple(form)
            if best is None or cand < best:
                best = cand
            return
        sigs = {c: signature(c) for c in unplaced}
        least = min(sigs.values())
        if best is not None and tuple(form) + (least,) > best[: k + 1]:
            return
        for c in sorted(c for c, s in sigs.items() if s == least):
            placed.append(c)
            unplaced.discard(c)
            form.append(least)
            rec()
            placed.pop()
            unplaced.add(c)
            form.pop()

    bound = max(1000, 4 * n + 100)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, bound))
    try:
        rec()
    finally:
        sys.setrecursionlimit(old)
    return (n, best)


def canonical_hash(poset: Poset, *, limits: Limits = DEFAULT_LIMITS) -> str:
    """Hex digest equal exactly for isomorphic posets; stable across runs."""
    form = canonical_form(poset, limits=limits)
    return hashlib.sha256(repr(form).encode("ascii")).hexdigest()

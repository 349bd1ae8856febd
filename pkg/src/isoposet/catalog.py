"""Constructors for named finite groups and the curated order catalog.

Every named construction is deterministic: rebuilding a group from its name
yields bit-identical generators, hence an identical element enumeration.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .limits import DEFAULT_LIMITS, Limits, ResourceLimitError
from .perm import FiniteGroup, Permutation, closure


def cyclic(n: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """Cyclic group of order n as the n-cycle on n points."""
    if n < 1:
        raise ValueError(f"cyclic order must be positive, got {n}")
    if n == 1:
        return closure(1, [], limits=limits, name="Z1")
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    return closure(n, [rot], limits=limits, name=f"Z{n}")


def dihedral(order: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """Dihedral group of the given order (order = 2n, n >= 3) on n points."""
    if order < 6 or order % 2:
        raise ValueError(f"dihedral order must be an even number >= 6, got {order}")
    n = order // 2
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    flip = Permutation(tuple((-i) % n for i in range(n)))
    return closure(n, [rot, flip], limits=limits, name=f"D{order}")


def symmetric(n: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """Symmetric group on n points."""
    if n < 1:
        raise ValueError(f"symmetric degree must be positive, got {n}")
    if n == 1:
        return closure(1, [], limits=limits, name="S1")
    gens = [Permutation.from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
    return closure(n, gens, limits=limits, name=f"S{n}")


def alternating(n: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """Alternating group on n points, n >= 3."""
    if n < 3:
        raise ValueError(f"alternating degree must be at least 3, got {n}")
    gens = [Permutation.from_cycles(n, (0, 1, 2))]
    if n > 3:
        if n % 2:
            gens.append(Permutation(tuple((i + 1) % n for i in range(n))))
        else:
            # the full cycle is odd for even n; rotate the last n-1 points
            gens.append(Permutation.from_cycles(n, tuple(range(1, n))))
    return closure(n, gens, limits=limits, name=f"A{n}")


def psl2(q: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """PSL(2,q) for q in {5, 7}, acting on the q+1 points of the projective line.

    Points 0..q-1 are the field elements, point q is infinity.  Generators
    are the Moebius maps x -> x+1 and x -> -1/x.
    """
    if q not in (5, 7):
        raise ValueError(f"unsupported field size {q}; expected 5 or 7")
    inf = q
    shift = Permutation(tuple((x + 1) % q for x in range(q)) + (inf,))
    neg_inv = [0] * (q + 1)
    neg_inv[0] = inf
    neg_inv[inf] = 0
    for x in range(1, q):
        neg_inv[x] = (-pow(x, q - 2, q)) % q
    return closure(q + 1, [shift, Permutation(tuple(neg_inv))], limits=limits, name=f"PSL(2,{q})")


def sl2_5(*, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """SL(2,5) acting on the 24 nonzero vectors of F5^2."""
    vecs = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    # column action of [[1,1],[0,1]] and [[0,-1],[1,0]]
    t = Permutation(tuple(index[((a + b) % 5, b)] for a, b in vecs))
    s = Permutation(tuple(index[((-b) % 5, a)] for a, b in vecs))
    return closure(24, [t, s], limits=limits, name="SL(2,5)")


def semidirect_cyclic(n: int, m: int, k: int, *, limits: Limits = DEFAULT_LIMITS,
                      name: str | None = None) -> FiniteGroup:
    """Zn semidirect Zm on n points, generated by x -> x+1 and x -> k*x mod n.

    Requires k to have multiplicative order exactly m mod n, which makes the
    action faithful and the group order n*m.
    """
    from math import gcd

    if n < 2 or m < 1:
        raise ValueError(f"invalid semidirect parameters n={n}, m={m}")
    if gcd(k, n) != 1:
        raise ValueError(f"multiplier {k} is not invertible mod {n}")
    ord_k, acc = 1, k % n
    while acc != 1:
        acc = acc * k % n
        ord_k += 1
    if ord_k != m:
        raise ValueError(f"multiplier {k} has order {ord_k} mod {n}, expected {m}")
    shift = Permutation(tuple((i + 1) % n for i in range(n)))
    mul = Permutation(tuple(i * k % n for i in range(n)))
    return closure(n, [shift, mul], limits=limits, name=name or f"Z{n}:Z{m}")


def frobenius21(*, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """The nonabelian group of order 21 (Z7 semidirect Z3) on 7 points."""
    return semidirect_cyclic(7, 3, 2, limits=limits, name="F21")


def dicyclic(n: int, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    """Dicyclic group of order 4n (Q8 for n=2) in its regular action.

    Presentation x^(2n) = 1, y^2 = x^n, y^-1 x y = x^-1; points encode the
    elements x^a (a < 2n) and x^a y (as 2n + a).
    """
    if n < 2:
        raise ValueError(f"dicyclic parameter must be at least 2, got {n}")
    m = 2 * n
    x_images = [(a + 1) % m for a in range(m)] + [m + (a - 1) % m for a in range(m)]
    y_images = [m + a for a in range(m)] + [(a + n) % m for a in range(m)]
    gens = [Permutation(tuple(x_images)), Permutation(tuple(y_images))]
    return closure(4 * n, gens, limits=limits, name=f"Dic{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, *, limits: Limits = DEFAULT_LIMITS,
                   name: str | None = None) -> FiniteGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    degree = g.degree + h.degree
    if degree > limits.degree_cap:
        raise ResourceLimitError(
            f"combined degree {degree} exceeds degree cap {limits.degree_cap}"
        )
    if g.order * h.order > limits.element_cap:
        raise ResourceLimitError(
            f"product order {g.order * h.order} exceeds element cap {limits.element_cap}"
        )
    id_h = tuple(range(g.degree, degree))
    id_g = tuple(range(g.degree))
    gens = [Permutation(p.images + id_h) for p in g.generators]
    gens += [Permutation(id_g + tuple(x + g.degree for x in p.images)) for p in h.generators]
    if name is None and g.name and h.name:
        name = f"{g.name}x{h.name}"
    return closure(degree, gens, limits=limits, name=name)


def trivial(*, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    return cyclic(1, limits=limits)


@dataclass(frozen=True)
class GroupSpec:
    """A named, reproducible group construction."""

    name: str
    kind: str
    params: tuple = ()

    def build(self, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
        return _build_spec(self, limits)


@dataclass(frozen=True)
class OrderCatalog:
    """Curated groups of one order, with curation metadata."""

    order: int
    specs: tuple[GroupSpec, ...]
    curated: bool
    complete: bool


_BUILDERS = {
    "cyclic": lambda p, lim: cyclic(p[0], limits=lim),
    "dihedral": lambda p, lim: dihedral(p[0], limits=lim),
    "symmetric": lambda p, lim: symmetric(p[0], limits=lim),
    "alternating": lambda p, lim: alternating(p[0], limits=lim),
    "psl2": lambda p, lim: psl2(p[0], limits=lim),
    "sl2_5": lambda p, lim: sl2_5(limits=lim),
    "frobenius21": lambda p, lim: frobenius21(limits=lim),
    "dicyclic": lambda p, lim: dicyclic(p[0], limits=lim),
    "semidirect_cyclic": lambda p, lim: semidirect_cyclic(p[0], p[1], p[2], limits=lim),
}


def _build_spec(spec: GroupSpec, limits: Limits) -> FiniteGroup:
    if spec.kind == "product":
        left = group_from_name(spec.params[0], limits=limits)
        right = group_from_name(spec.params[1], limits=limits)
        return direct_product(left, right, limits=limits, name=spec.name)
    builder = _BUILDERS.get(spec.kind)
    if builder is None:
        raise ValueError(f"unknown construction kind {spec.kind!r}")
    group = builder(spec.params, limits)
    if group.name != spec.name:
        group = FiniteGroup(
            degree=group.degree,
            generators=group.generators,
            elements=group.elements,
            identity_index=group.identity_index,
            cayley_table=group.cayley_table,
            name=spec.name,
        )
    return group


@lru_cache(maxsize=1)
def _catalog_table() -> dict[int, OrderCatalog]:
    raw = resources.files("isoposet.data").joinpath("catalog.json").read_text("utf-8")
    data = json.loads(raw)
    table = {}
    for order_str, entry in data["orders"].items():
        order = int(order_str)
        specs = tuple(
            GroupSpec(g["name"], g["kind"], tuple(g.get("params", ())))
            for g in entry["groups"]
        )
        table[order] = OrderCatalog(order, specs, True, bool(entry["complete"]))
    return table


def catalog_for_order(n: int) -> OrderCatalog:
    """Curated list of pairwise non-isomorphic groups of order n.

    Uncurated orders come back with curated=False and no entries; curated
    orders carry an explicit completeness flag.
    """
    entry = _catalog_table().get(n)
    if entry is None:
        return OrderCatalog(n, (), False, False)
    return entry


def catalog_specs(max_order: int | None = None) -> list[GroupSpec]:
    """All curated specs, ordered by (order, position), optionally capped."""
    out = []
    for order in sorted(_catalog_table()):
        if max_order is not None and order > max_order:
            continue
        out.extend(_catalog_table()[order].specs)
    return out


_SPECIAL_NAMES = {
    "1": GroupSpec("Z1", "cyclic", (1,)),
    "V4": GroupSpec("V4", "product", ("Z2", "Z2")),
    "Q8": GroupSpec("Q8", "dicyclic", (2,)),
    "F20": GroupSpec("F20", "semidirect_cyclic", (5, 4, 2)),
    "F21": GroupSpec("F21", "frobenius21"),
    "PSL(2,5)": GroupSpec("PSL(2,5)", "psl2", (5,)),
    "PSL(2,7)": GroupSpec("PSL(2,7)", "psl2", (7,)),
    "SL(2,5)": GroupSpec("SL(2,5)", "sl2_5"),
    "Z15:Z4": GroupSpec("Z15:Z4", "semidirect_cyclic", (15, 4, 2)),
}

_ATOM_RE = re.compile(r"^(Dic|Z|S|A|D)(\d+)$")
_ATOM_KINDS = {
    "Z": "cyclic",
    "S": "symmetric",
    "A": "alternating",
    "D": "dihedral",
    "Dic": "dicyclic",
}


def spec_from_name(name: str) -> GroupSpec:
    """Parse a group name like Z12, S4, D10, Dic3, A4xZ5 or PSL(2,7)."""
    name = name.strip()
    if name in _SPECIAL_NAMES:
        return _SPECIAL_NAMES[name]
    if "x" in name:
        left, _, right = name.partition("x")
        spec_from_name(left)
        spec_from_name(right)  # validate both halves
        return GroupSpec(name, "product", (left, right))
    m = _ATOM_RE.match(name)
    if m:
        prefix, value = m.group(1), int(m.group(2))
        return GroupSpec(name, _ATOM_KINDS[prefix], (value,))
    raise ValueError(f"unrecognized group name {name!r}")


def group_from_name(name: str, *, limits: Limits = DEFAULT_LIMITS) -> FiniteGroup:
    return spec_from_name(name).build(limits=limits)

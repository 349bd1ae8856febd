import itertools
import math

import pytest

from isoposet import (
    ResourceLimitError,
    Limits,
    alternating,
    are_isomorphic,
    catalog_for_order,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    element_order,
    frobenius21,
    group_from_name,
    is_simple,
    is_solvable,
    psl2,
    semidirect_cyclic,
    spec_from_name,
    symmetric,
    trivial,
)


@pytest.mark.parametrize("builder,arg,expected", [
    (cyclic, 1, 1),
    (cyclic, 7, 7),
    (dihedral, 10, 10),
    (dihedral, 6, 6),
    (symmetric, 1, 1),
    (symmetric, 2, 2),
    (symmetric, 4, 24),
    (alternating, 3, 3),
    (alternating, 4, 12),
    (alternating, 6, 360),
    (dicyclic, 2, 8),
    (dicyclic, 3, 12),
])
def test_constructor_orders(builder, arg, expected):
    assert builder(arg).order == expected


def test_alternating_order_formula():
    for n in (3, 4, 5, 6):
        assert alternating(n).order == math.factorial(n) // 2


@pytest.mark.parametrize("builder,arg", [
    (cyclic, 0),
    (dihedral, 5),
    (dihedral, 4),
    (symmetric, 0),
    (alternating, 2),
    (dicyclic, 1),
])
def test_constructor_parameter_errors(builder, arg):
    with pytest.raises(ValueError):
        builder(arg)


def test_psl2_orders():
    # q(q^2 - 1)/2
    assert psl2(5).order == 60
    assert psl2(7).order == 168
    with pytest.raises(ValueError):
        psl2(11)


def test_psl25_is_alternating5():
    assert are_isomorphic(psl2(5), alternating(5))


def test_psl2_simple(psl25_lattice, psl27_lattice, psl25, psl27):
    assert is_simple(psl25, lattice=psl25_lattice)
    assert is_simple(psl27, lattice=psl27_lattice)


def test_sl2_5_order_and_center(sl25):
    assert sl25.order == 120
    # independent center count: elements commuting with every element
    center = [
        i for i in range(sl25.order)
        if all(sl25.mult(i, j) == sl25.mult(j, i) for j in range(sl25.order))
    ]
    assert len(center) == 2


def test_sl2_5_has_no_order_15_element(sl25):
    assert all(element_order(sl25, i) != 15 for i in range(sl25.order))


def test_frobenius21():
    f = frobenius21()
    assert f.order == 21
    a, b = (f.index_of(g) for g in f.generators)
    commutator = f.mult(f.mult(f.inverse_index(a), f.inverse_index(b)), f.mult(a, b))
    assert commutator != f.identity_index  # nonabelian


def test_frobenius21_sits_inside_psl27(psl27_lattice):
    f = frobenius21()
    copies = [s for s in psl27_lattice.subgroups if s.order == 21]
    assert copies
    assert all(are_isomorphic(s.as_group(), f) for s in copies)


def test_semidirect_cyclic_rejects_wrong_order():
    with pytest.raises(ValueError):
        semidirect_cyclic(7, 3, 3)  # 3 has order 6 mod 7
    with pytest.raises(ValueError):
        semidirect_cyclic(9, 2, 3)  # 3 not invertible mod 9


def test_direct_product_order_and_degree():
    g = direct_product(alternating(5), cyclic(2))
    assert g.order == 120
    assert g.degree == 7


def test_direct_product_with_trivial():
    g = direct_product(symmetric(3), trivial())
    assert are_isomorphic(g, symmetric(3))


def test_direct_product_respects_caps():
    with pytest.raises(ResourceLimitError):
        direct_product(cyclic(4), cyclic(4), limits=Limits(degree_cap=6))
    with pytest.raises(ResourceLimitError):
        direct_product(symmetric(4), symmetric(4), limits=Limits(element_cap=100))


def test_catalog_order_4():
    cat = catalog_for_order(4)
    assert [s.name for s in cat.specs] == ["Z4", "V4"]
    assert cat.complete and cat.curated
    assert all(is_solvable(s.build()) for s in cat.specs)


def test_catalog_order_60_unique_nonsolvable():
    cat = catalog_for_order(60)
    nonsolvable = [s.name for s in cat.specs if not is_solvable(s.build())]
    assert nonsolvable == ["A5"]
    assert not cat.complete  # curated but not known-complete


def test_catalog_order_120_contains_trio():
    names = {s.name for s in catalog_for_order(120).specs}
    assert {"S5", "A5xZ2", "SL(2,5)"} <= names


def test_catalog_uncurated_order():
    cat = catalog_for_order(37)
    assert not cat.curated
    assert cat.specs == ()


def test_catalog_declared_orders_match_built_orders():
    for order in range(1, 200):
        cat = catalog_for_order(order)
        for spec in cat.specs:
            group = spec.build()
            assert group.order == order, spec.name
            assert group.name == spec.name


def test_catalog_entries_pairwise_nonisomorphic():
    for order in (4, 6, 8, 9, 10, 12, 20, 21, 24, 60, 120):
        groups = [(s.name, s.build()) for s in catalog_for_order(order).specs]
        for (name_a, ga), (name_b, gb) in itertools.combinations(groups, 2):
            assert not are_isomorphic(ga, gb), (name_a, name_b)


def test_group_from_name_roundtrip():
    for name in ("Z12", "S4", "A5", "D10", "Dic3", "Q8", "V4", "F21",
                 "PSL(2,5)", "SL(2,5)", "A4xZ5", "Z15:Z4"):
        first = group_from_name(name)
        second = group_from_name(name)
        assert first.elements == second.elements  # bit-identical rebuild
        assert first.name == name


def test_group_from_name_rejects_unknown():
    with pytest.raises(ValueError):
        group_from_name("E8")
    with pytest.raises(ValueError):
        spec_from_name("Zx")

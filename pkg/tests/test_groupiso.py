from collections import Counter

import pytest

from isoposet import (
    Limits,
    ResourceLimitError,
    all_subgroups,
    alternating,
    are_isomorphic,
    classify,
    closure,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    fingerprint,
    group_from_name,
    symmetric,
)
from isoposet.groupiso import classify_with_data

from oracles import oracle_group_isomorphic


def shuffled_copy(group):
    """Same group regenerated from reversed generators: a relabeled twin."""
    return closure(group.degree, list(reversed(group.generators)))


def test_fingerprint_fields():
    fp = fingerprint(cyclic(6))
    assert fp.abelian
    assert fp.order == 6
    assert fp.exponent == 6
    assert fp.center_size == 6
    assert fp.derived_size == 1

    fp3 = fingerprint(symmetric(3))
    assert not fp3.abelian
    assert fp3.class_sizes == (1, 2, 3)
    assert fp3.center_size == 1
    assert fp3.derived_size == 3


def test_fingerprint_psl25_histogram(psl25):
    fp = fingerprint(psl25)
    assert dict(fp.order_histogram) == {1: 1, 2: 15, 3: 20, 5: 24}


def test_fingerprint_components_bounded_by_order():
    for name in ("Z12", "S4", "D10", "Dic3", "F21", "A5"):
        g = group_from_name(name)
        fp = fingerprint(g)
        assert g.order % fp.exponent == 0
        assert g.order % fp.center_size == 0
        assert g.order % fp.derived_size == 0
        assert sum(count for _, count in fp.order_histogram) == g.order
        assert sum(fp.class_sizes) == g.order
        assert all(g.order % size == 0 for size in fp.class_sizes)


def test_fingerprint_as_dict_is_json_ready():
    import json

    payload = fingerprint(symmetric(3)).as_dict()
    assert json.loads(json.dumps(payload)) == payload
    assert payload["class_sizes"] == [1, 2, 3]


def test_are_isomorphic_basics():
    assert are_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)))
    assert not are_isomorphic(symmetric(3), cyclic(6))
    assert not are_isomorphic(dihedral(8), dicyclic(2))


def test_psl25_isomorphic_to_a5(psl25, a5):
    assert are_isomorphic(psl25, a5)


def test_witness_is_a_bijective_homomorphism(psl25, a5):
    iso = find_isomorphism(psl25, a5)
    assert iso is not None
    mapping = iso.mapping
    assert sorted(mapping) == list(range(a5.order))
    for i in range(psl25.order):
        for j in range(psl25.order):
            assert mapping[psl25.mult(i, j)] == a5.mult(mapping[i], mapping[j])
    for src, img in zip(iso.generator_indices, iso.generator_images):
        assert mapping[src] == img


def test_isomorphism_reflexive_and_symmetric():
    groups = [cyclic(8), dihedral(10), alternating(4), dicyclic(3)]
    for g in groups:
        assert are_isomorphic(g, g)
    for g in groups:
        for h in groups:
            assert are_isomorphic(g, h) == are_isomorphic(h, g)


def test_isomorphism_cap(a5):
    big = direct_product(a5, a5)
    with pytest.raises(ResourceLimitError, match="400"):
        are_isomorphic(big, big)
    assert are_isomorphic(cyclic(4), cyclic(4), limits=Limits(iso_cap=4))


ORACLE_PAIRS = [
    # order-class profiles small enough for the exhaustive bijection search
    ("Z6", "Z3xZ2", True),
    ("S3", None, True),
    ("D8", None, True),
    ("Q8", None, True),
    ("D10", None, True),
    ("Dic3", None, True),
    ("A4", None, True),
    ("Z12", "Z4xZ3", True),
    ("Z15", "Z5xZ3", True),
    ("Z8", "Z4xZ2", False),
    ("S3", "Z6", False),
    ("D8", "Q8", False),
    ("A4", "D12", False),
    ("Dic3", "Z12", False),
    ("D10", "Z10", False),
    ("V4", "Z4", False),
    ("S4", "Z24", False),
    ("S4", "A4xZ2", False),
]


@pytest.mark.parametrize("name_a,name_b,expected", ORACLE_PAIRS)
def test_matches_bruteforce_oracle(name_a, name_b, expected):
    g = group_from_name(name_a)
    h = shuffled_copy(g) if name_b is None else group_from_name(name_b)
    assert oracle_group_isomorphic(g, h) is expected
    assert are_isomorphic(g, h) is expected


def test_isomorphic_groups_share_fingerprints():
    for name_a, name_b, expected in ORACLE_PAIRS:
        if not expected:
            continue
        g = group_from_name(name_a)
        h = shuffled_copy(g) if name_b is None else group_from_name(name_b)
        assert fingerprint(g) == fingerprint(h)


def test_search_exhausts_without_fingerprint_screen():
    # feeding equal fingerprints bypasses the screen; the backtracking
    # itself must still reject the pair
    d8, q8 = dihedral(8), dicyclic(2)
    fp = fingerprint(d8)
    assert find_isomorphism(d8, q8, fg=fp, fh=fp) is None


def test_classify_cyclic6():
    g = cyclic(6)
    classes = classify(g, all_subgroups(g))
    assert sorted(len(c) for c in classes) == [1, 1, 1, 1]


def test_classify_s3():
    g = symmetric(3)
    classes = classify(g, all_subgroups(g))
    assert sorted(len(c) for c in classes) == [1, 1, 1, 3]


def test_classify_a5(a5, a5_lattice):
    classes = classify(a5, a5_lattice)
    assert len(classes) == 9
    assert sorted(len(c) for c in classes) == [1, 1, 5, 5, 6, 6, 10, 10, 15]


def test_classify_refines_order(a5, a5_lattice):
    for members, fp, rep in classify_with_data(a5, a5_lattice):
        orders = {a5_lattice.subgroups[i].order for i in members}
        assert orders == {fp.order}
        assert rep == members[0]


def test_classify_members_share_fingerprints(a5, a5_lattice):
    for members, fp, _ in classify_with_data(a5, a5_lattice):
        for idx in members:
            assert fingerprint(a5_lattice.subgroups[idx].as_group()) == fp


def test_classify_partition_covers_lattice(a5, a5_lattice):
    classes = classify(a5, a5_lattice)
    seen = Counter(idx for cls in classes for idx in cls)
    assert set(seen) == set(range(len(a5_lattice)))
    assert all(count == 1 for count in seen.values())


def test_classify_rejects_foreign_lattice(a5):
    other = symmetric(3)
    with pytest.raises(ValueError):
        classify(a5, all_subgroups(other))

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de construcción y validación de grupos
"""

import numpy as np
import pytest

from counting import SubsetMask
from group_core import (
    GroupTable,
    conjugate_subset,
    cyclic,
    dihedral,
    direct_product,
    is_subgroup,
    parse_group,
    quaternion8,
    residue_index,
    split_labels,
    subgroup_generated,
    subset_from_labels,
    units_mod,
)


def _residues(g, mask):
    return sorted(int(label) for label in mask.labels(g))


def test_cyclic_tables():
    trivial = cyclic(1)
    assert trivial.mul.tolist() == [[0]]
    c5 = cyclic(5)
    assert c5.mult(1, 4) == 0
    assert int(c5.inv[2]) == 3
    assert int(cyclic(13).inv[4]) == 9
    with pytest.raises(ValueError):
        cyclic(0)


def test_direct_product_encoding():
    klein = direct_product(cyclic(2), cyclic(2))
    assert klein.order == 4
    assert all(int(klein.inv[x]) == x for x in range(4))

    c4c4 = direct_product(cyclic(4), cyclic(4))
    assert c4c4.order == 16
    x = c4c4.index_of("(1,0)")
    assert x == 1 * 4 + 0
    assert c4c4.labels[int(c4c4.inv[x])] == "(3,0)"
    assert direct_product(cyclic(6), cyclic(6)).order == 36


def test_direct_product_rejects_large_order():
    with pytest.raises(ValueError):
        direct_product(cyclic(64), cyclic(65))


def test_three_factor_labels_are_flat():
    g = parse_group("C2xC2xC2")
    assert g.order == 8
    assert "(1,0,1)" in g.labels
    assert g.is_abelian


def test_units_mod():
    assert units_mod(3).order == 2
    z13 = units_mod(13)
    assert z13.order == 12
    assert z13.element_order(residue_index(z13, 2)) == 12
    z7 = units_mod(7)
    assert z7.element_order(residue_index(z7, 2)) == 3
    with pytest.raises(ValueError):
        units_mod(15)


def test_quaternion_relations():
    q8 = quaternion8()
    i, j, k = (q8.index_of(x) for x in ("i", "j", "k"))
    assert q8.mult(i, j) == k
    assert q8.mult(j, i) == q8.index_of("-k")
    assert int(q8.inv[i]) == q8.index_of("-i")
    assert not q8.is_abelian
    assert q8.involutions() == [q8.index_of("-1")]


def test_subgroup_generated():
    c6 = cyclic(6)
    assert subgroup_generated(c6, [2]).indices() == (0, 2, 4)

    z17 = units_mod(17)
    h = subgroup_generated(z17, [residue_index(z17, 2)])
    assert _residues(z17, h) == [1, 2, 4, 8, 9, 13, 15, 16]
    assert is_subgroup(z17, h)

    z13 = units_mod(13)
    h = subgroup_generated(z13, [residue_index(z13, 4)])
    assert _residues(z13, h) == [1, 3, 4, 9, 10, 12]


def test_conjugate_subset():
    c5 = cyclic(5)
    s = subset_from_labels(c5, "1,4")
    assert conjugate_subset(c5, s, 3) == s

    q8 = quaternion8()
    s = subset_from_labels(q8, "i,-i")
    assert conjugate_subset(q8, s, q8.index_of("j")) == s
    center = subset_from_labels(q8, "-1")
    for t in range(8):
        assert conjugate_subset(q8, center, t) == center

    d4 = dihedral(4)
    s = subset_from_labels(d4, "s")
    images = {conjugate_subset(d4, s, t).bits for t in range(8)}
    assert len(images) == 2


def test_dihedral_is_valid_group():
    d5 = dihedral(5)
    assert d5.order == 10
    assert not d5.is_abelian
    assert len(d5.involutions()) == 5


def test_constructors_satisfy_axioms():
    for g in (cyclic(7), units_mod(11), quaternion8(), dihedral(6), parse_group("C3xC3")):
        n = g.order
        idx = np.arange(n)
        assert (np.sort(g.mul, axis=1) == idx).all()
        assert (g.mul[idx, g.inv] == 0).all()
        assert (g.mul[g.inv, idx] == 0).all()
        for a in range(n):
            assert np.array_equal(g.mul[g.mul[a]], g.mul[a][g.mul])


def test_invalid_tables_are_rejected():
    with pytest.raises(ValueError):
        GroupTable("roto", [[0, 1], [1, 1]], ["e", "a"])
    with pytest.raises(ValueError):
        GroupTable("sin_identidad", [[1, 0], [0, 1]], ["a", "b"])
    # cuadrado latino con identidad pero no asociativo
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ValueError):
        GroupTable("lazo", loop, list("eabcd"))


def test_parse_group_descriptors():
    assert parse_group("C4xC4").order == 16
    assert parse_group("Zmult13").order == 12
    assert parse_group("Q8").name == "Q8"
    assert parse_group("D4").order == 8
    with pytest.raises(ValueError):
        parse_group("S3")


def test_label_parsing():
    assert split_labels("(1,0),(2,0), (0,1)") == ["(1,0)", "(2,0)", "(0,1)"]
    with pytest.raises(ValueError):
        split_labels("(1,0")
    c4 = cyclic(4)
    with pytest.raises(ValueError):
        subset_from_labels(c4, "0,1")
    with pytest.raises(ValueError):
        subset_from_labels(c4, "7")
    assert subset_from_labels(c4, "0,2", allow_identity=True) == SubsetMask.from_indices(4, [0, 2], True)


if __name__ == "__main__":
    print("=== PRUEBAS DE GROUP_CORE ===\n")
    failures = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
                print(f"✅ {name}")
            except Exception as e:
                failures += 1
                print(f"❌ {name}: {e}")
    print(f"\n📊 {failures} fallos")

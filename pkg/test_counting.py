#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de los conteos de pares N_(A,B)^g
"""

import itertools

import numpy as np
import pytest

from counting import SubsetMask, count_pair, inverse_set, is_inverse_closed, pair_counts
from group_core import cyclic, dihedral, parse_group, quaternion8, subset_from_labels

SMALL_GROUPS = ("C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C2xC4", "Q8", "D4")


def _brute_force(g, a, b, target):
    return sum(1 for x in a for y in b if g.mult(x, y) == target)


def test_count_pair_examples():
    c5 = cyclic(5)
    empty = SubsetMask.empty(5)
    assert all(count_pair(c5, empty, SubsetMask.non_identity(5), t) == 0 for t in range(5))
    a = subset_from_labels(c5, "1,4")
    b = subset_from_labels(c5, "2,3")
    assert count_pair(c5, a, b, 0) == 2

    c13 = cyclic(13)
    s = subset_from_labels(c13, "1,3,4,9,10,12")
    assert all(count_pair(c13, s, s, x) == 2 for x in s)


def test_count_pair_rejects_foreign_masks():
    with pytest.raises(ValueError):
        count_pair(cyclic(5), SubsetMask.empty(4), SubsetMask.empty(5), 0)
    with pytest.raises(ValueError):
        count_pair(cyclic(5), SubsetMask.empty(5), SubsetMask.empty(5), 9)


def test_inverse_closure():
    c5 = cyclic(5)
    assert is_inverse_closed(c5, SubsetMask.empty(5))
    assert is_inverse_closed(c5, subset_from_labels(c5, "1,4"))
    assert not is_inverse_closed(c5, subset_from_labels(c5, "1,2"))
    q8 = quaternion8()
    assert is_inverse_closed(q8, subset_from_labels(q8, "-1"))


def test_inverse_set():
    q8 = quaternion8()
    assert inverse_set(q8, subset_from_labels(q8, "i,j,k")) == subset_from_labels(q8, "-i,-j,-k")
    c9 = cyclic(9)
    assert inverse_set(c9, subset_from_labels(c9, "1,2")) == subset_from_labels(c9, "7,8")
    c6 = cyclic(6)
    h = subset_from_labels(c6, "2,4")
    assert inverse_set(c6, h) == h


def test_partition_symmetry_exhaustive():
    """N_(S,T) = N_(T,S) siempre que S y T formen una partición de G sin e"""
    for name in SMALL_GROUPS:
        g = parse_group(name)
        full = SubsetMask.non_identity(g.order)
        for bits in range(0, 1 << g.order, 2):
            s = SubsetMask(g.order, bits)
            t = full - s
            assert np.array_equal(pair_counts(g, s, t), pair_counts(g, t, s)), (name, s.labels(g))


def test_partition_symmetry_random():
    rng = np.random.default_rng(7)
    for g in (dihedral(6), dihedral(12), parse_group("C4xC6"), parse_group("C2xC2xC6")):
        full = SubsetMask.non_identity(g.order)
        for _ in range(50):
            members = np.nonzero(rng.random(g.order - 1) < 0.5)[0] + 1
            s = SubsetMask.from_indices(g.order, members)
            t = full - s
            assert np.array_equal(pair_counts(g, s, t), pair_counts(g, t, s))


def test_sum_rule_and_oracle():
    rng = np.random.default_rng(11)
    for g in (cyclic(8), quaternion8(), dihedral(5), parse_group("C3xC3"), parse_group("C8xC8")):
        for _ in range(10):
            a = SubsetMask.from_indices(g.order, np.nonzero(rng.random(g.order) < 0.4)[0], allow_identity=True)
            b = SubsetMask.from_indices(g.order, np.nonzero(rng.random(g.order) < 0.4)[0], allow_identity=True)
            counts = pair_counts(g, a, b)
            assert counts.sum() == len(a) * len(b)
            for target in range(g.order):
                assert counts[target] == count_pair(g, a, b, target)
            if g.order <= 16:
                for target in range(g.order):
                    assert counts[target] == _brute_force(g, a, b, target)


def test_subset_mask_invariants():
    with pytest.raises(ValueError):
        SubsetMask(4, 0b0001)
    with pytest.raises(ValueError):
        SubsetMask(4, 1 << 4)
    a = SubsetMask.from_indices(6, [1, 2, 3])
    b = SubsetMask.from_indices(6, [3, 4])
    assert (a | b).indices() == (1, 2, 3, 4)
    assert (a & b).indices() == (3,)
    assert (a - b).indices() == (1, 2)
    assert not a.isdisjoint(b)
    assert len(a) == 3 and 2 in a and 5 not in a
    assert list(itertools.islice(iter(a), 2)) == [1, 2]


if __name__ == "__main__":
    print("=== PRUEBAS DE CONTEO ===\n")
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

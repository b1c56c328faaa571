#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de pares de signatura y cuasi-signatura con raíces cúbicas de la unidad
"""

import numpy as np
import pytest

from counting import SubsetMask
from cube_root import (
    CubePartition,
    build_cube_matrix,
    counting_criterion,
    cube_necessary_conditions,
    cube_regrep,
    nmu_excluded,
    pair_identities_hold,
    unique_square_root,
    verify_quasi_signature_pair,
    verify_signature_pair,
)
from exact_matrix import border_standard, certify_two_eigenvalue, matrix_from_cells
from group_core import cyclic, parse_group, quaternion8, subset_from_labels
from search_engine import SearchSpec, cube_candidates, search

# Matriz 9x9 del marco (9,6) sobre Q8, en el orden 1,-1,i,-i,j,-j,k,-k.
# Estas referencias usan la convención transpuesta M[r][c] = coef[r^-1·c];
# build_cube_matrix usa M[r][c] = coef[r·c^-1] y produce su conjugada.
PRINTED_Q8 = [
    ["0", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["1", "0", "1", "w", "w2", "w", "w2", "w", "w2"],
    ["1", "1", "0", "w2", "w", "w2", "w", "w2", "w"],
    ["1", "w2", "w", "0", "1", "w2", "w", "w", "w2"],
    ["1", "w", "w2", "1", "0", "w", "w2", "w2", "w"],
    ["1", "w2", "w", "w", "w2", "0", "1", "w2", "w"],
    ["1", "w", "w2", "w2", "w", "1", "0", "w", "w2"],
    ["1", "w2", "w", "w2", "w", "w", "w2", "0", "1"],
    ["1", "w", "w2", "w", "w2", "w2", "w", "1", "0"],
]

PRINTED_Z3 = [["0", "w", "w2"], ["w2", "0", "w"], ["w", "w2", "0"]]


def _q8_partition():
    q8 = quaternion8()
    return q8, subset_from_labels(q8, "-1"), subset_from_labels(q8, "i,j,k")


def test_q8_quasi_pair_is_conjugate_of_reference_matrix():
    q8, s, t = _q8_partition()
    verdict = verify_quasi_signature_pair(q8, s, t)
    assert verdict
    assert verdict.witness_mu == -2
    assert (verdict.params.n, verdict.params.k) == (9, 6)
    assert verdict.matrix_dim == 9
    assert verdict.t_set == t

    q = border_standard(build_cube_matrix(q8, CubePartition.from_st(q8, s, t)))
    printed = matrix_from_cells(PRINTED_Q8)
    assert q.entries.conjugate() == printed.entries, "la matriz construida debe ser la conjugada de la referencia"
    assert q.entries != printed.entries, "convención r·c^-1: no coincide entrada a entrada con la referencia"
    assert certify_two_eigenvalue(printed).mu == -2


def test_q8_is_not_a_signature_pair():
    q8, s, t = _q8_partition()
    assert not verify_signature_pair(q8, s, t)


def test_z3_examples_use_conjugate_convention():
    c3 = cyclic(3)
    full = SubsetMask.non_identity(3)
    empty = SubsetMask.empty(3)

    q = build_cube_matrix(c3, CubePartition.from_st(c3, full, empty))
    assert np.array_equal(q.entries.a, np.ones((3, 3), dtype=np.int64) - np.eye(3, dtype=np.int64))
    assert not q.entries.b.any()
    verdict = verify_signature_pair(c3, full, empty)
    assert verdict.witness_mu == 1
    assert (verdict.params.n, verdict.params.k) == (3, 1)

    t = subset_from_labels(c3, "1")
    q = build_cube_matrix(c3, CubePartition.from_st(c3, empty, t))
    printed = matrix_from_cells(PRINTED_Z3)
    assert q.entries.conjugate() == printed.entries, "la matriz construida debe ser la conjugada de la referencia"
    assert q.entries != printed.entries, "convención r·c^-1: no coincide entrada a entrada con la referencia"
    verdict = verify_signature_pair(c3, empty, t)
    assert verdict.witness_mu == 1
    assert (verdict.params.n, verdict.params.k) == (3, 1)

    quasi = verify_quasi_signature_pair(c3, full, empty)
    assert quasi.witness_mu == 2
    assert (quasi.params.n, quasi.params.k) == (4, 1)


def test_bordered_full_set_is_trivial():
    for g in (cyclic(5), quaternion8(), parse_group("C2xC4")):
        full = SubsetMask.non_identity(g.order)
        verdict = verify_quasi_signature_pair(g, full, SubsetMask.empty(g.order))
        assert verdict.witness_mu == g.order - 1
        assert verdict.params.k == 1


def test_hermitian_rejects():
    c3 = cyclic(3)
    both = subset_from_labels(c3, "1,2")
    p = CubePartition.from_st(c3, SubsetMask.empty(3), both)
    assert p.v == SubsetMask.empty(3)
    # sin V = T^-1 la suma no es hermítica
    with pytest.raises(ValueError):
        build_cube_matrix(c3, p)
    assert cube_regrep(c3, p).n == 3
    rejected = verify_signature_pair(c3, SubsetMask.empty(3), both)
    assert rejected.clause == "T⁻¹ = V"

    c5 = cyclic(5)
    rejected = verify_signature_pair(c5, subset_from_labels(c5, "1"), subset_from_labels(c5, "2"))
    assert rejected.clause == "S = S⁻¹"
    with pytest.raises(ValueError):
        CubePartition.from_st(c5, subset_from_labels(c5, "1"), subset_from_labels(c5, "1,2"))


def test_necessary_conditions():
    assert cube_necessary_conditions(9, -2)
    assert cube_necessary_conditions(33, 4)
    failed = cube_necessary_conditions(10, 1)
    assert not failed
    assert any("múltiplo de 3" in reason for reason in failed.reasons)
    assert cube_necessary_conditions(9, -2, quasi=True)
    assert not cube_necessary_conditions(9, 0, quasi=True)
    assert cube_necessary_conditions(3, 1).to_dict()["passed"]
    assert not cube_necessary_conditions(9, 1)


def test_nmu_excluded():
    assert nmu_excluded(9, -2, True)
    assert nmu_excluded(33, 4, True)
    assert not nmu_excluded(9, 1, True)
    assert not nmu_excluded(9, -2, False)


def test_unique_square_root():
    assert unique_square_root(cyclic(9), 2) == 1
    assert unique_square_root(cyclic(3), 1) == 2
    assert unique_square_root(cyclic(15), 4) == 2
    c3c3 = parse_group("C3xC3")
    x = c3c3.index_of("(1,2)")
    h = unique_square_root(c3c3, x)
    assert c3c3.mult(h, h) == x
    with pytest.raises(ValueError):
        unique_square_root(cyclic(4), 1)
    with pytest.raises(ValueError):
        unique_square_root(cyclic(9), 0)


def test_excluded_pairs_are_absent():
    for name in ("C9", "C3xC3"):
        assert search(SearchSpec(group=parse_group(name), kind="cube-pair", mu_filter=-2, threads=1)) == []


def test_pair_hits_satisfy_identities():
    for name, mu, count in (("C9", 7, 2), ("C3xC3", 7, 8), ("C6", 4, 2)):
        g = parse_group(name)
        hits = search(SearchSpec(group=g, kind="cube-pair", threads=1))
        assert len(hits) == count
        for hit in hits:
            verdict = hit.verdict
            assert verdict.witness_mu == mu
            assert cube_necessary_conditions(g.order, mu)
            assert pair_identities_hold(g, verdict.set, verdict.t_set, mu)
            # toda involución cae en S
            assert all(x in verdict.set for x in g.involutions())


def test_counting_agrees_with_matrix():
    for g in (cyclic(3), cyclic(6), cyclic(7), quaternion8(), parse_group("C2xC2")):
        for s, t in cube_candidates(g):
            p = CubePartition.from_st(g, s, t)
            pair = certify_two_eigenvalue(build_cube_matrix(g, p))
            ok, mu = counting_criterion(g, p)
            assert ok == bool(pair) or pair.clause == "parámetros"
            if pair:
                assert mu == pair.mu

            expected = len(s) - len(t)
            quasi = certify_two_eigenvalue(border_standard(build_cube_matrix(g, p)))
            ok, _ = counting_criterion(g, p, bordered=True, mu=expected)
            assert ok == (bool(quasi) and quasi.mu == expected) or quasi.clause == "parámetros"


def test_quasi_hits_satisfy_cardinalities():
    q8 = quaternion8()
    hits = search(SearchSpec(group=q8, kind="cube-quasi", threads=1))
    assert any(hit.verdict.witness_mu == -2 for hit in hits)
    for hit in hits:
        n, mu = hit.verdict.params.n, hit.verdict.witness_mu
        assert cube_necessary_conditions(n, mu, quasi=True)
        assert 3 * len(hit.verdict.set) == n + 2 * mu - 2
        assert 3 * len(hit.verdict.t_set) == n - mu - 2


if __name__ == "__main__":
    print("=== PRUEBAS DE PARES CÚBICOS ===\n")
    raise SystemExit(pytest.main([__file__, "-q"]))

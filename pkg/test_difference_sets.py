#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de conjuntos de diferencias y su paso a conjuntos de signatura
"""

import numpy as np

from counting import SubsetMask
from difference_sets import (
    complement_report,
    diffset_to_signature,
    hadamard_from_signature,
    hadamard_parameters,
    lemma_counts_hold,
    signature_is_hadamard,
    sum_equals_difference_counts,
    verify_difference_set,
)
from exact_matrix import is_hadamard
from group_core import cyclic, parse_group, quaternion8, subset_from_labels

C4_AXES = "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)"

C8_HALF = "(1,4),(1,5),(1,6),(1,7),(2,2),(2,3),(2,6),(2,7),(3,2),(3,4),(3,5),(3,7),(4,1),(4,3)"
C8_INVERSES = "(7,4),(7,3),(7,2),(7,1),(6,6),(6,5),(6,2),(6,1),(5,6),(5,4),(5,3),(5,1),(4,7),(4,5)"


def _c6_axes_and_diagonal():
    return ",".join(f"({i},0),(0,{i}),({i},{i})" for i in range(1, 6))


def _triple(report):
    return report.n, report.k, report.lam


def test_cyclic_eleven():
    c11 = cyclic(11)
    report = verify_difference_set(c11, subset_from_labels(c11, "1,3,4,5,9"))
    assert _triple(report) == (11, 5, 2)
    assert not report.reversible
    assert not report.hadamard_family
    assert not report.contains_identity
    assert _triple(complement_report(report)) == (11, 6, 3)
    assert _triple(complement_report(report, c11)) == (11, 6, 3)

    rejected = diffset_to_signature(c11, subset_from_labels(c11, "1,3,4,5,9"))
    assert not rejected
    assert rejected.clause == "√n entero"


def test_c4_axes_difference_set():
    g = parse_group("C4xC4")
    d = subset_from_labels(g, C4_AXES)
    report = verify_difference_set(g, d)
    assert _triple(report) == (16, 6, 2)
    assert report.reversible and report.hadamard_family
    assert report.to_dict(g)["lambda"] == 2

    complement = complement_report(report, g)
    assert _triple(complement) == (16, 10, 6)
    assert complement.contains_identity

    verdict = diffset_to_signature(g, d)
    assert (verdict.params.n, verdict.params.k) == (16, 6)
    assert verdict.witness_mu == 2
    assert lemma_counts_hold(g, d)
    assert sum_equals_difference_counts(g, d)
    assert signature_is_hadamard(g, d)


def test_identity_branch():
    g = parse_group("C4xC4")
    full = SubsetMask(16, (1 << 16) - 1, allow_identity=True)
    d = full - subset_from_labels(g, C4_AXES).with_identity_allowed()
    assert 0 in d
    verdict = diffset_to_signature(g, d)
    assert (verdict.params.n, verdict.params.k) == (16, 10)
    assert verdict.witness_mu == -2
    assert verdict.set == d.without_identity()


def test_c8_difference_set():
    g = parse_group("C8xC8")
    d = subset_from_labels(g, C8_HALF) | subset_from_labels(g, C8_INVERSES)
    assert len(d) == 28
    report = verify_difference_set(g, d)
    assert _triple(report) == (64, 28, 12)
    assert report.reversible and report.hadamard_family

    verdict = diffset_to_signature(g, d)
    assert (verdict.params.n, verdict.params.k) == (64, 28)
    assert verdict.witness_mu == 2
    assert is_hadamard(hadamard_from_signature(g, d))
    assert lemma_counts_hold(g, d)


def test_c6_difference_set():
    g = parse_group("C6xC6")
    d = subset_from_labels(g, _c6_axes_and_diagonal())
    report = verify_difference_set(g, d)
    # 15*14 / 35 = 6
    assert _triple(report) == (36, 15, 6)
    assert report.hadamard_family
    verdict = diffset_to_signature(g, d)
    assert (verdict.params.n, verdict.params.k) == (36, 15)
    assert signature_is_hadamard(g, d)


def test_degenerate_full_set():
    c7 = cyclic(7)
    full = SubsetMask(7, (1 << 7) - 1, allow_identity=True)
    report = verify_difference_set(c7, full)
    assert _triple(report) == (7, 7, 7)
    complement = complement_report(report, c7)
    assert _triple(complement) == (7, 0, 0)


def test_rejections():
    q8 = quaternion8()
    rejected = verify_difference_set(q8, subset_from_labels(q8, "i,-i"))
    assert rejected.clause == "G abeliano"
    c5 = cyclic(5)
    rejected = verify_difference_set(c5, subset_from_labels(c5, "1,2"))
    assert rejected.clause == "λ constante"


def test_accepted_sets_satisfy_parameter_relation():
    for name in ("C2xC2xC2xC2", "C4xC4", "C2xC8"):
        g = parse_group(name)
        rng = np.random.default_rng(1)
        for _ in range(200):
            members = np.nonzero(rng.random(g.order) < 0.4)[0]
            d = SubsetMask.from_indices(g.order, members, allow_identity=True)
            report = verify_difference_set(g, d)
            if not report:
                continue
            assert report.lam * (report.n - 1) == report.k * (report.k - 1)
            if report.reversible:
                assert sum_equals_difference_counts(g, d)


def test_hadamard_parameters():
    assert hadamard_parameters(4, 1, 0)
    assert hadamard_parameters(16, 6, 2)
    assert hadamard_parameters(64, 28, 12)
    assert not hadamard_parameters(11, 5, 2)
    assert not hadamard_parameters(20, 6, 2)


if __name__ == "__main__":
    print("=== PRUEBAS DE CONJUNTOS DE DIFERENCIAS ===\n")
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

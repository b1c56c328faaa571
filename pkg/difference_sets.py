#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Conjuntos de diferencias (n,k,lambda) en grupos abelianos y su paso a conjuntos de signatura
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from counting import SubsetMask, check_owner, inverse_set, pair_counts
from exact_matrix import Reject, is_hadamard
from frame_params import exact_sqrt
from group_core import GroupTable
from real_signature import complement_set, signature_matrix, verify_signature_set

logger = logging.getLogger(__name__)


def hadamard_parameters(n: int, k: int, lam: int) -> bool:
    """(n, k, lambda) = (4m^2, 2m^2 - m, m^2 - m) para algún m >= 1"""
    if n % 4:
        return False
    m = exact_sqrt(n // 4)
    if not m:
        return False
    return k == 2 * m * m - m and lam == m * m - m


@dataclass(frozen=True)
class DifferenceSetReport:
    n: int
    k: int
    lam: int
    reversible: bool
    hadamard_family: bool
    contains_identity: bool
    set: Optional[SubsetMask] = None

    def to_dict(self, g: Optional[GroupTable] = None):
        data = {
            "valid": True,
            "n": self.n,
            "k": self.k,
            "lambda": self.lam,
            "reversible": self.reversible,
            "hadamard_family": self.hadamard_family,
            "contains_identity": self.contains_identity,
        }
        if g is not None:
            data["group"] = g.name
            if self.set is not None:
                data["set"] = self.set.labels(g)
        return data


def difference_counts(g: GroupTable, d: SubsetMask) -> np.ndarray:
    """
    #{(x, y) en D x D : x*y^-1 = t} para cada t
    """
    check_owner(g, d)
    return pair_counts(g, d, inverse_set(g, d))


def verify_difference_set(g: GroupTable, d: SubsetMask):
    check_owner(g, d)
    n = g.order
    if not g.is_abelian:
        return Reject(f"{g.name} no es abeliano", clause="G abeliano", witness=g.name)
    if n < 2:
        return Reject("el grupo trivial no tiene elementos no nulos", clause="n >= 2", witness=n)
    counts = difference_counts(g, d)
    lam = int(counts[1])
    bad = np.nonzero(counts[1:] != lam)[0]
    if bad.size:
        t = int(bad[0]) + 1
        return Reject(
            f"{g.labels[t]} aparece {int(counts[t])} veces como diferencia, "
            f"{g.labels[1]} aparece {lam} veces",
            clause="λ constante",
            witness=g.labels[t],
        )
    k = len(d)
    if lam * (n - 1) != k * (k - 1):
        raise RuntimeError(f"λ(n-1) ≠ k(k-1) para ({n},{k},{lam})")
    return DifferenceSetReport(
        n=n,
        k=k,
        lam=lam,
        reversible=inverse_set(g, d).bits == d.bits,
        hadamard_family=hadamard_parameters(n, k, lam),
        contains_identity=0 in d,
        set=d,
    )


def complement_report(r: DifferenceSetReport, g: Optional[GroupTable] = None) -> DifferenceSetReport:
    """
    Parámetros del complemento, (n, n-k, (n-k)(n-k-1)/(n-1)); si se conocen el grupo
    y el conjunto, el complemento también se verifica directamente
    """
    n, k = r.n, r.n - r.k
    numerator = k * (k - 1)
    if numerator % (n - 1):
        raise ValueError(f"({r.n},{r.k},{r.lam}) no admite complemento entero")
    lam = numerator // (n - 1)
    complement = None
    if g is not None and r.set is not None:
        full = SubsetMask(n, (1 << n) - 1, allow_identity=True)
        complement = full - r.set.with_identity_allowed()
        direct = verify_difference_set(g, complement)
        if not direct or (direct.k, direct.lam) != (k, lam):
            raise RuntimeError(f"El complemento de ({r.n},{r.k},{r.lam}) no verifica como ({n},{k},{lam})")
    return DifferenceSetReport(
        n=n,
        k=k,
        lam=lam,
        reversible=r.reversible,
        hadamard_family=hadamard_parameters(n, k, lam),
        contains_identity=not r.contains_identity,
        set=complement,
    )


def diffset_to_signature(g: GroupTable, d: SubsetMask):
    """
    Sin la identidad: conjunto de signatura para (n, (n-sqrt n)/2) si y solo si D es
    reversible con k = (n-sqrt n)/2. Con la identidad: D sin e para (n, (n+sqrt n)/2).
    """
    report = verify_difference_set(g, d)
    if not report:
        return report
    n = report.n
    root = exact_sqrt(n)
    if root is None:
        return Reject(f"n = {n} no es un cuadrado perfecto", clause="√n entero", witness=n)

    if not report.contains_identity:
        target_k, target_mu, s = (n - root) // 2, 2, d
    else:
        target_k, target_mu, s = (n + root) // 2, -2, d.without_identity()

    accepted = report.reversible and report.k == target_k
    if not report.contains_identity and accepted != (report.hadamard_family and report.reversible):
        raise RuntimeError(f"Caracterización de Hadamard violada para ({n},{report.k},{report.lam})")
    if not report.reversible:
        return Reject("D no es reversible (D⁻¹ ≠ D)", clause="D = D⁻¹")
    if report.k != target_k:
        return Reject(f"k = {report.k}, se requiere {target_k}", clause="k = (n∓√n)/2", witness=report.k)

    verdict = verify_signature_set(g, s)
    if not verdict or verdict.params.k != target_k or verdict.witness_mu != target_mu:
        raise RuntimeError(f"El conjunto de diferencias ({n},{report.k},{report.lam}) no dio la signatura esperada")
    logger.info(f"✅ Conjunto de diferencias ({n},{report.k},{report.lam}) → marco ({n},{target_k})")
    return verdict


def hadamard_from_signature(g: GroupTable, s: SubsetMask) -> np.ndarray:
    """I - Q para la matriz de signatura Q de S"""
    return np.eye(g.order, dtype=np.int64) - signature_matrix(g, s)


def lemma_counts_hold(g: GroupTable, d: SubsetMask) -> bool:
    """
    Para D reversible sin la identidad y T = D^c sin e, N_(D,T) es una
    constante a en D y a+1 en T
    """
    check_owner(g, d)
    if 0 in d:
        raise ValueError("D no debe contener la identidad")
    t = complement_set(g, d)
    if len(d) == 0 or len(t) == 0:
        return True
    counts = pair_counts(g, d, t)
    on_d = counts[d.as_array()]
    on_t = counts[t.as_array()]
    a = int(on_d[0])
    return bool((on_d == a).all() and (on_t == a + 1).all())


def sum_equals_difference_counts(g: GroupTable, d: SubsetMask) -> bool:
    return bool(np.array_equal(pair_counts(g, d, d), difference_counts(g, d)))


def signature_is_hadamard(g: GroupTable, s: SubsetMask) -> bool:
    return is_hadamard(hadamard_from_signature(g, s))

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Conjuntos de signatura y cuasi-signatura en grupos finitos: criterios de conteo,
construcción de matrices y la familia de subgrupos de índice 2.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from counting import (
    SubsetMask,
    check_owner,
    first_not_inverse_closed,
    pair_counts,
)
from exact_matrix import Reject, SeidelMatrixInt, border_standard, regrep_sum
from frame_params import QUASI, SIGNATURE, FrameParams, params_from_mu
from group_core import GroupTable, is_subgroup

logger = logging.getLogger(__name__)

CUBE_PAIR = "cube-pair"
CUBE_QUASI = "cube-quasi"


@dataclass(frozen=True)
class SignatureVerdict:
    """
    Conjunto aceptado (o par de conjuntos en los casos cúbicos) con sus parámetros de marco
    """
    kind: str
    params: FrameParams
    witness_mu: int
    set: SubsetMask
    matrix_dim: int
    t_set: Optional[SubsetMask] = None

    def __bool__(self):
        return True

    @property
    def is_trivial(self) -> bool:
        return self.params.k in (1, self.params.n - 1)

    def to_dict(self, g: GroupTable):
        data = {
            "group": g.name,
            "kind": self.kind,
            "valid": True,
            "set": self.set.labels(g),
            "matrix_dim": self.matrix_dim,
        }
        data.update(self.params.to_dict())
        if self.t_set is not None:
            data["t"] = self.t_set.labels(g)
        return data


def complement_set(g: GroupTable, s: SubsetMask) -> SubsetMask:
    """T = S^c sin la identidad"""
    check_owner(g, s)
    return SubsetMask.non_identity(g.order) - s.without_identity()


def signature_matrix(g: GroupTable, s: SubsetMask) -> np.ndarray:
    """
    Suma de lambda(x) sobre S menos la suma sobre T, como array int64
    """
    t = complement_set(g, s)
    coeffs = np.zeros(g.order, dtype=np.int64)
    coeffs[s.as_array()] = 1
    coeffs[t.as_array()] = -1
    return regrep_sum(g, coeffs.tolist())


def quasi_signature_matrix(g: GroupTable, s: SubsetMask) -> SeidelMatrixInt:
    return border_standard(SeidelMatrixInt(signature_matrix(g, s)))


def _inverse_closure_reject(g: GroupTable, s: SubsetMask, t: SubsetMask):
    for name, subset in (("S", s), ("T", t)):
        x = first_not_inverse_closed(g, subset)
        if x is not None:
            return Reject(
                f"{name} no es cerrado bajo inversos: {g.labels[x]} está pero "
                f"{g.labels[int(g.inv[x])]} no",
                clause=f"{name} = {name}⁻¹",
                witness=g.labels[x],
            )
    return None


def _first_violation(values: np.ndarray, members: np.ndarray, expected: int):
    bad = members[values[members] != expected]
    return int(bad[0]) if bad.size else None


def verify_signature_set(g: GroupTable, s: SubsetMask):
    """
    Acepta S si S y T son cerrados bajo inversos y N_(S,T) vale
    (n-2-mu)/4 en S y (n-2+mu)/4 en T. La forma con cuatro conteos
    N_SS - N_ST - N_TS + N_TT = +-mu se evalúa a la vez y debe coincidir.
    """
    check_owner(g, s)
    n = g.order
    if n < 2:
        return Reject("el grupo trivial no da marcos", clause="n >= 2", witness=n)
    t = complement_set(g, s)
    rejected = _inverse_closure_reject(g, s, t)
    if rejected:
        return rejected
    trivial = len(s) == 0 or len(t) == 0
    if not trivial and n % 2:
        return Reject(f"orden {n} impar: no hay conjuntos de signatura no triviales",
                      clause="n ≡ 0 (mod 2)", witness=n)

    s_idx, t_idx = s.as_array(), t.as_array()
    n_st = pair_counts(g, s, t)
    n_ts = pair_counts(g, t, s)
    n_ss = pair_counts(g, s, s)
    n_tt = pair_counts(g, t, t)

    if s_idx.size:
        mu = n - 2 - 4 * int(n_st[s_idx[0]])
    else:
        mu = 4 * int(n_st[t_idx[0]]) - n + 2

    single_s = _first_violation(4 * n_st, s_idx, n - 2 - mu)
    single_t = _first_violation(4 * n_st, t_idx, n - 2 + mu)
    triple = n_ss - n_st - n_ts + n_tt
    triple_s = _first_violation(triple, s_idx, mu)
    triple_t = _first_violation(triple, t_idx, -mu)

    single_ok = single_s is None and single_t is None
    triple_ok = triple_s is None and triple_t is None
    if single_ok != triple_ok:
        raise RuntimeError(
            f"Criterios de conteo en desacuerdo para {s.labels(g)} en {g.name}: "
            f"N_(S,T)={single_ok}, triple={triple_ok}"
        )
    if not single_ok:
        if single_s is not None:
            x, expected = single_s, f"(n-2-μ)/4 = {(n - 2 - mu) / 4:g}"
        else:
            x, expected = single_t, f"(n-2+μ)/4 = {(n - 2 + mu) / 4:g}"
        return Reject(
            f"N_(S,T) en {g.labels[x]} vale {int(n_st[x])}, se esperaba {expected} (μ={mu})",
            clause="N_(S,T)",
            witness=g.labels[x],
        )

    params = params_from_mu(n, mu)
    if not params:
        return Reject(params.message, clause="parámetros", witness=mu)
    logger.debug(f"✅ {s.labels(g)} es conjunto de signatura en {g.name}: ({n},{params.k}), μ={mu}")
    return SignatureVerdict(kind=SIGNATURE, params=params, witness_mu=mu, set=s, matrix_dim=n)


def verify_quasi_signature_set(g: GroupTable, s: SubsetMask):
    """
    Criterio con borde, n = |G|+1 y mu = |S|-|T|:
    N_(S,S) = (n+3mu-6)/4 en S y N_(T,T) = (n-3mu-6)/4 en T.
    """
    check_owner(g, s)
    n = g.order + 1
    t = complement_set(g, s)
    rejected = _inverse_closure_reject(g, s, t)
    if rejected:
        return rejected
    mu = len(s) - len(t)
    trivial = len(s) == 0 or len(t) == 0
    if not trivial and n % 2:
        return Reject(f"n = {n} impar: no hay conjuntos cuasi-signatura no triviales",
                      clause="n ≡ 0 (mod 2)", witness=n)

    s_idx, t_idx = s.as_array(), t.as_array()
    n_st = pair_counts(g, s, t)
    n_ts = pair_counts(g, t, s)
    n_ss = pair_counts(g, s, s)
    n_tt = pair_counts(g, t, t)

    single_s = _first_violation(4 * n_ss, s_idx, n + 3 * mu - 6)
    single_t = _first_violation(4 * n_tt, t_idx, n - 3 * mu - 6)
    triple = n_ss - n_st - n_ts + n_tt
    triple_s = _first_violation(triple, s_idx, mu - 1)
    triple_t = _first_violation(triple, t_idx, -mu - 1)

    single_ok = single_s is None and single_t is None
    triple_ok = triple_s is None and triple_t is None
    if single_ok != triple_ok:
        raise RuntimeError(
            f"Criterios cuasi en desacuerdo para {s.labels(g)} en {g.name}: "
            f"N_(S,S)/N_(T,T)={single_ok}, triple={triple_ok}"
        )
    if not single_ok:
        if single_s is not None:
            x = single_s
            detail = f"N_(S,S) vale {int(n_ss[x])}, se esperaba (n+3μ-6)/4 = {(n + 3 * mu - 6) / 4:g}"
        else:
            x = single_t
            detail = f"N_(T,T) vale {int(n_tt[x])}, se esperaba (n-3μ-6)/4 = {(n - 3 * mu - 6) / 4:g}"
        return Reject(f"{detail} en {g.labels[x]} (μ={mu})", clause="N cuasi", witness=g.labels[x])

    params = params_from_mu(n, mu)
    if not params:
        return Reject(params.message, clause="parámetros", witness=mu)
    logger.debug(f"✅ {s.labels(g)} es cuasi-signatura en {g.name}: ({n},{params.k}), μ={mu}")
    return SignatureVerdict(kind=QUASI, params=params, witness_mu=mu, set=s, matrix_dim=n)


def index2_subgroup_set(g: GroupTable, h: SubsetMask):
    """
    H sin la identidad para un subgrupo H; es de signatura justo cuando [G:H] = 2
    """
    check_owner(g, h)
    if not is_subgroup(g, h):
        raise ValueError(f"{h.labels(g)} no es un subgrupo de {g.name}")
    if 2 * len(h) != g.order:
        return Reject(
            f"H tiene índice {g.order / len(h):g} en {g.name}, se requiere índice 2",
            clause="índice 2",
            witness=len(h),
        )
    verdict = verify_signature_set(g, h.without_identity())
    if not verdict or verdict.witness_mu != g.order - 2:
        raise RuntimeError(f"El subgrupo de índice 2 {h.labels(g)} no dio μ = n-2 en {g.name}")
    return verdict


def coset_signature_set(g: GroupTable, h: SubsetMask, a: int):
    """
    La clase aH de un subgrupo de índice 2, conjunto de signatura para (n, n-1)
    """
    check_owner(g, h)
    a = int(a)
    if a in h:
        raise ValueError(f"{g.labels[a]} pertenece a H: la clase aH no es la otra clase")
    subgroup = index2_subgroup_set(g, h)
    if not subgroup:
        return subgroup
    coset = SubsetMask.from_indices(g.order, g.mul[a, h.as_array()])
    return verify_signature_set(g, coset)

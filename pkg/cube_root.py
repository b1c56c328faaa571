#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pares de signatura y cuasi-signatura con raíces cúbicas: matrices de Seidel de
Eisenstein construidas desde una partición S, T, V de los elementos distintos de e,
su verificación exacta, el contraste por conteo y las condiciones necesarias.
"""

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from config import COUNTING_ORACLE_MAX_ORDER
from counting import SubsetMask, check_owner, first_not_inverse_closed, inverse_set, pair_counts
from exact_matrix import (
    OMEGA,
    OMEGA2,
    ONE,
    EisensteinInt,
    EisensteinMatrix,
    Reject,
    SeidelMatrixEis,
    border_standard,
    certify_two_eigenvalue,
    regrep_sum,
)
from frame_params import exact_sqrt
from group_core import GroupTable
from real_signature import CUBE_PAIR, CUBE_QUASI, SignatureVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CubePartition:
    s: SubsetMask
    t: SubsetMask
    v: SubsetMask

    @classmethod
    def from_st(cls, g: GroupTable, s: SubsetMask, t: SubsetMask):
        """V es lo que S y T dejan de G sin la identidad"""
        check_owner(g, s, t)
        if not s.isdisjoint(t):
            raise ValueError(f"S y T no son disjuntos: {(s & t).labels(g)}")
        v = SubsetMask.non_identity(g.order) - s - t
        return cls(s, t, v)

    def check(self, g: GroupTable):
        check_owner(g, self.s, self.t, self.v)
        if not (self.s.isdisjoint(self.t) and self.s.isdisjoint(self.v) and self.t.isdisjoint(self.v)):
            raise ValueError("S, T y V deben ser disjuntos")
        if (self.s | self.t | self.v).bits != SubsetMask.non_identity(g.order).bits:
            raise ValueError("S ∪ T ∪ V debe cubrir G sin la identidad")

    def exponents(self, g: GroupTable) -> np.ndarray:
        """Potencia de omega de cada elemento: 0 en S, 1 en T, 2 en V, -1 en e"""
        exps = np.full(g.order, -1, dtype=np.int64)
        exps[self.s.as_array()] = 0
        exps[self.t.as_array()] = 1
        exps[self.v.as_array()] = 2
        return exps


def cube_regrep(g: GroupTable, p: CubePartition) -> EisensteinMatrix:
    """
    S + w T + w^2 V en la representación regular, sin comprobar que sea hermítica
    """
    p.check(g)
    coeffs = [EisensteinInt()] * g.order
    for subset, unit in ((p.s, ONE), (p.t, OMEGA), (p.v, OMEGA2)):
        for x in subset:
            coeffs[x] = unit
    return regrep_sum(g, coeffs)


def build_cube_matrix(g: GroupTable, p: CubePartition) -> SeidelMatrixEis:
    return SeidelMatrixEis(cube_regrep(g, p))


def _hermitian_reject(g: GroupTable, p: CubePartition):
    x = first_not_inverse_closed(g, p.s)
    if x is not None:
        return Reject(f"S no es cerrado bajo inversos en {g.labels[x]}", clause="S = S⁻¹", witness=g.labels[x])
    t_inv = inverse_set(g, p.t)
    if t_inv.bits != p.v.bits:
        missing = (t_inv - p.v) | (p.v - t_inv)
        x = missing.indices()[0]
        return Reject(f"T⁻¹ ≠ V en {g.labels[x]}", clause="T⁻¹ = V", witness=g.labels[x])
    return None


def _omega_coefficients(g: GroupTable, p: CubePartition):
    """
    Coeficiente de lambda(x) en Q^2 como pares enteros (a, b), es decir a + b w.
    cnt_r cuenta los pares cuyos exponentes de omega suman r mod 3.
    """
    parts = (p.s, p.t, p.v)
    cnt = np.zeros((3, g.order), dtype=np.int64)
    for i, first in enumerate(parts):
        for j, second in enumerate(parts):
            cnt[(i + j) % 3] += pair_counts(g, first, second)
    # cnt0 + cnt1 w + cnt2 w^2, con w^2 = -1 - w
    return cnt[0] - cnt[2], cnt[1] - cnt[2]


def counting_criterion(g: GroupTable, p: CubePartition, bordered: bool = False, mu=None):
    """
    Forma por elementos de la identidad de dos autovalores: el coeficiente de lambda(x)
    en Q^2 vale mu*c(x) en un par de signatura y mu*c(x) - 1 en un par cuasi.
    Devuelve (aceptado, mu).
    """
    coef_a, coef_b = _omega_coefficients(g, p)
    exps = p.exponents(g)
    shift = 1 if bordered else 0
    if g.order < 2:
        return bordered and mu is not None, mu
    if mu is None:
        # mu = (coef + shift) * conj(c(x)) en x = 1
        value = EisensteinInt(int(coef_a[1]) + shift, int(coef_b[1]))
        value = value * [ONE, OMEGA, OMEGA2][exps[1]].conjugate()
        if not value.is_rational():
            return False, None
        mu = value.a
    # valor esperado mu*c(x) - shift, para c = 1, w, w^2
    unit_a = np.array([1, 0, -1])[exps[1:]]
    unit_b = np.array([0, 1, -1])[exps[1:]]
    ok = np.array_equal(coef_a[1:], mu * unit_a - shift) and np.array_equal(coef_b[1:], mu * unit_b)
    return bool(ok), mu


def _cross_check(g: GroupTable, p: CubePartition, matrix_result, bordered: bool):
    if g.order > COUNTING_ORACLE_MAX_ORDER:
        return
    expected_mu = len(p.s) - len(p.t) if bordered else None
    ok, mu = counting_criterion(g, p, bordered=bordered, mu=expected_mu)
    matrix_ok = bool(matrix_result) or matrix_result.clause == "parámetros"
    if ok != matrix_ok or (matrix_result and mu != matrix_result.mu):
        raise RuntimeError(
            f"Criterio matricial ({matrix_ok}) y de conteo ({ok}) en desacuerdo para "
            f"S={p.s.labels(g)}, T={p.t.labels(g)} en {g.name}"
        )


def verify_signature_pair(g: GroupTable, s: SubsetMask, t: SubsetMask):
    """
    Comprobación exacta de Q^2 = (n-1)I + mu Q para Q = S + w T + w^2 V; en grupos
    pequeños se contrasta además con la forma por conteo
    """
    p = CubePartition.from_st(g, s, t)
    n = g.order
    if n < 2:
        return Reject("el grupo trivial no da marcos", clause="n >= 2", witness=n)
    rejected = _hermitian_reject(g, p)
    if rejected:
        return rejected
    q = build_cube_matrix(g, p)
    certificate = certify_two_eigenvalue(q)
    _cross_check(g, p, certificate, bordered=False)
    if not certificate:
        return certificate
    logger.debug(f"✅ Par de signatura S={s.labels(g)}, T={t.labels(g)} en {g.name}: μ={certificate.mu}")
    return SignatureVerdict(
        kind=CUBE_PAIR,
        params=certificate.params,
        witness_mu=certificate.mu,
        set=s,
        matrix_dim=n,
        t_set=t,
    )


def verify_quasi_signature_pair(g: GroupTable, s: SubsetMask, t: SubsetMask):
    """
    Versión con borde, n = |G|+1 y mu = |S|-|T|
    """
    p = CubePartition.from_st(g, s, t)
    n = g.order + 1
    mu = len(s) - len(t)
    rejected = _hermitian_reject(g, p)
    if rejected:
        return rejected
    q = border_standard(build_cube_matrix(g, p))
    certificate = certify_two_eigenvalue(q)
    _cross_check(g, p, certificate, bordered=True)
    if not certificate:
        return certificate
    if certificate.mu != mu:
        raise RuntimeError(f"μ certificado {certificate.mu} ≠ |S|-|T| = {mu} en {g.name}")
    logger.debug(f"✅ Par cuasi-signatura S={s.labels(g)}, T={t.labels(g)} en {g.name}: μ={mu}")
    return SignatureVerdict(
        kind=CUBE_QUASI,
        params=certificate.params,
        witness_mu=mu,
        set=s,
        matrix_dim=n,
        t_set=t,
    )


@dataclass(frozen=True)
class CubeConditionReport:
    n: int
    mu: int
    quasi: bool
    reasons: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.reasons

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"n": self.n, "mu": self.mu, "quasi": self.quasi, "passed": self.passed, "reasons": list(self.reasons)}


def cube_necessary_conditions(n: int, mu: int, quasi: bool = False) -> CubeConditionReport:
    """
    Pares: n ≡ 0 (mod 3), mu ≡ 1 (mod 3), 4(n-1)+mu^2 cuadrado divisible por 9.
    Pares cuasi: |S| = (n+2mu-2)/3 y |T| = (n-mu-2)/3 enteros no negativos
    y 4(n-1)+mu^2 cuadrado.
    """
    reasons = []
    disc = 4 * (n - 1) + mu * mu
    if exact_sqrt(disc) is None:
        reasons.append(f"4(n-1)+μ² = {disc} no es un cuadrado perfecto")
    if quasi:
        for name, numerator in (("|S|", n + 2 * mu - 2), ("|T|", n - mu - 2)):
            if numerator < 0 or numerator % 3:
                reasons.append(f"{name} = {numerator}/3 no es un entero no negativo")
    else:
        if n % 3:
            reasons.append(f"n = {n} no es múltiplo de 3")
        if mu % 3 != 1:
            reasons.append(f"μ = {mu} no es ≡ 1 (mod 3)")
        if disc % 9:
            reasons.append(f"4(n-1)+μ² = {disc} no es divisible por 9")
    return CubeConditionReport(n=n, mu=mu, quasi=quasi, reasons=reasons)


def unique_square_root(g: GroupTable, x: int) -> int:
    """
    El único h != e con h^2 = x en un grupo abeliano de orden impar
    """
    if not g.is_abelian or g.order % 2 == 0:
        raise ValueError(f"{g.name} debe ser abeliano de orden impar")
    x = int(x)
    if x == 0:
        raise ValueError("x no puede ser la identidad")
    h = g.power(x, (g.element_order(x) + 1) // 2)
    roots = np.nonzero(np.diag(g.mul) == x)[0]
    if roots.tolist() != [h]:
        raise RuntimeError(f"{g.labels[x]} no tiene raíz cuadrada única en {g.name}")
    return h


def nmu_excluded(n: int, mu: int, abelian: bool) -> bool:
    """No hay par de signatura en G abeliano con n ≡ 3 (mod 6) y mu ≡ 4 (mod 6)"""
    return bool(abelian and n % 6 == 3 and mu % 6 == 4)


def pair_identities_hold(g: GroupTable, s: SubsetMask, t: SubsetMask, mu: int) -> bool:
    """
    Identidades necesarias de un par de signatura aceptado:
    N_ST + N_TS + N_TT = (n-2-mu)/3 en S,
    N_VV + N_ST + N_SV = (mu+n-1)/3 en T,
    N_TT + N_ST + N_SV = (mu+n-1)/3 en V.
    """
    p = CubePartition.from_st(g, s, t)
    n = g.order
    n_st = pair_counts(g, p.s, p.t)
    n_ts = pair_counts(g, p.t, p.s)
    n_tt = pair_counts(g, p.t, p.t)
    n_vv = pair_counts(g, p.v, p.v)
    n_sv = pair_counts(g, p.s, p.v)
    checks = (
        (p.s, n_st + n_ts + n_tt, n - 2 - mu),
        (p.t, n_vv + n_st + n_sv, mu + n - 1),
        (p.v, n_tt + n_st + n_sv, mu + n - 1),
    )
    for subset, values, target in checks:
        members = subset.as_array()
        if members.size and not (3 * values[members] == target).all():
            return False
    return True

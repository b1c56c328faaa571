#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Relaciones exactas entre n, mu, k, los dos autovalores y c_{n,k}
para marcos (n,k) equiangulares, y los filtros de factibilidad que podan las búsquedas.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from config import FLOAT_DIGITS

logger = logging.getLogger(__name__)

SIGNATURE = "signature"
QUASI = "quasi"

# Códigos de inviabilidad
ODD_N_MU_ZERO = "odd_n_mu_zero"
NON_SQUARE_DISCRIMINANT = "non_square_discriminant"
NON_INTEGRAL_K = "non_integral_k"
K_OUT_OF_RANGE = "k_out_of_range"

_REASON_TEXT = {
    ODD_N_MU_ZERO: "mu = 0 requiere n par",
    NON_SQUARE_DISCRIMINANT: "mu² + 4(n-1) no es un cuadrado perfecto",
    NON_INTEGRAL_K: "k no es entero",
    K_OUT_OF_RANGE: "k fuera de 1..n-1",
}


def exact_sqrt(x: int) -> Optional[int]:
    """
    Raíz cuadrada entera de x si x es un cuadrado perfecto, si no None
    """
    if x < 0:
        return None
    r = math.isqrt(x)
    return r if r * r == x else None


def is_perfect_square(x: int) -> bool:
    return exact_sqrt(x) is not None


def is_prime(p: int) -> bool:
    """
    División por tentativa, determinista
    """
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def round_sig(x: float, digits: int = FLOAT_DIGITS) -> float:
    """Redondea a un número fijo de cifras significativas"""
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class FrameParams:
    n: int
    k: int
    mu: int
    discriminant: int
    c_value: float
    lambda1: float
    lambda2: float

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "mu": self.mu,
            "discriminant": self.discriminant,
            "c": round_sig(self.c_value),
            "lambda1": round_sig(self.lambda1),
            "lambda2": round_sig(self.lambda2),
        }


@dataclass(frozen=True)
class Infeasible:
    reason: str
    n: int
    mu: int

    def __bool__(self):
        return False

    @property
    def message(self):
        return f"(n={self.n}, mu={self.mu}) inviable: {_REASON_TEXT.get(self.reason, self.reason)}"


@dataclass(frozen=True)
class MuValue:
    value: float
    exact: bool
    fraction: Optional[Fraction] = None

    @property
    def is_integer(self):
        return self.exact and self.fraction.denominator == 1


def c_value(n: int, k: int) -> float:
    if not 1 <= k <= n - 1:
        raise ValueError(f"k debe estar en 1..n-1, se recibió n={n}, k={k}")
    return math.sqrt(k * (n - k) / (n * n * (n - 1)))


def params_from_mu(n: int, mu: int):
    """
    Parámetros del marco para (n, mu), o Infeasible con un código de motivo
    """
    if n < 2:
        raise ValueError(f"Se requiere n >= 2, se recibió n={n}")
    n = int(n)
    mu = int(mu)
    d = mu * mu + 4 * (n - 1)
    if mu == 0:
        if n % 2:
            return Infeasible(ODD_N_MU_ZERO, n, mu)
        k = n // 2
    else:
        s = exact_sqrt(d)
        if s is None:
            return Infeasible(NON_SQUARE_DISCRIMINANT, n, mu)
        numerator = n * (s - mu)
        if numerator % (2 * s):
            return Infeasible(NON_INTEGRAL_K, n, mu)
        k = numerator // (2 * s)
        if not 1 <= k <= n - 1:
            return Infeasible(K_OUT_OF_RANGE, n, mu)
    root = math.sqrt(d)
    return FrameParams(
        n=n,
        k=k,
        mu=mu,
        discriminant=d,
        c_value=c_value(n, k),
        lambda1=(mu - root) / 2,
        lambda2=(mu + root) / 2,
    )


def mu_from_k(n: int, k: int) -> MuValue:
    """
    mu = (n-2k) sqrt((n-1)/(k(n-k))), exacto cuando la raíz es racional
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"k debe estar en 1..n-1, se recibió n={n}, k={k}")
    ratio = Fraction(n - 1, k * (n - k))
    value = (n - 2 * k) * math.sqrt(ratio)
    num_root = exact_sqrt(ratio.numerator)
    den_root = exact_sqrt(ratio.denominator)
    if num_root is None or den_root is None:
        return MuValue(value=value, exact=False)
    fraction = (n - 2 * k) * Fraction(num_root, den_root)
    return MuValue(value=float(fraction), exact=True, fraction=fraction)


def mu_from_row_sum(n: int, s: int) -> Optional[int]:
    """
    Una matriz de signatura de grupo tiene al vector de unos como autovector con
    autovalor s = |S|-|T|, así que s^2 = (n-1) + mu*s. Devuelve ese mu, o None
    si ningún mu entero encaja.
    """
    if s == 0:
        return None
    numerator = s * s - (n - 1)
    if numerator % s:
        return None
    return numerator // s


def odd_prime_cofactor(n: int, factor: int) -> Optional[int]:
    """p cuando n = factor*p con p primo impar"""
    if n % factor:
        return None
    p = n // factor
    return p if p > 2 and is_prime(p) else None


def classify_signature(n: int, mu: int) -> Optional[str]:
    """
    Cláusulas de clasificación para conjuntos de signatura no triviales.
    Devuelve None si (n, mu) está permitido, si no la cláusula violada.
    """
    if n % 2:
        return "n impar"
    if mu % 2:
        return "mu impar"
    if abs(mu) > n - 2:
        return "|mu| > n-2"
    if mu == 0 and n % 4 != 2:
        return "mu = 0 requiere n ≡ 2 (mod 4)"
    if abs(mu) == 2 and not (n % 4 == 0 and is_perfect_square(n // 4)):
        return "mu = ±2 requiere n = 4a²"
    if odd_prime_cofactor(n, 2) is not None and mu not in (0, n - 2, 2 - n):
        return "n = 2p solo admite mu en {0, ±(n-2)}"
    if odd_prime_cofactor(n, 4) is not None and mu not in (n - 2, 2 - n):
        return "n = 4p solo admite mu = ±(n-2)"
    return None


def quasi_prime_screen(n: int):
    """
    k permitidos para conjuntos cuasi-signatura cuando n = 2p o n = 4p, si no None
    """
    p = odd_prime_cofactor(n, 2)
    if p is not None:
        return {p}
    if odd_prime_cofactor(n, 4) is not None:
        return set()
    return None


def quasi_range_ok(n: int, mu: int) -> bool:
    """2 - n/3 <= mu <= n/3 - 2 en enteros exactos"""
    return 6 - n <= 3 * mu <= n - 6


def feasible_mu_values(n: int, context: str):
    """
    Todos los mu pares del rango del contexto con parámetros factibles
    """
    if n < 2:
        raise ValueError(f"Se requiere n >= 2, se recibió n={n}")
    if context not in (SIGNATURE, QUASI):
        raise ValueError(f"Contexto desconocido: {context}")
    if n % 2:
        return []
    values = []
    for mu in range(-(n - 2), n - 1, 2):
        params = params_from_mu(n, mu)
        if not params:
            continue
        if context == SIGNATURE:
            if classify_signature(n, mu) is not None:
                continue
        else:
            if not quasi_range_ok(n, mu):
                continue
            if mu == 0 and n % 4 != 2:
                continue
            allowed_k = quasi_prime_screen(n)
            if allowed_k is not None and params.k not in allowed_k:
                continue
        values.append(mu)
    logger.debug(f"μ factibles para n={n} ({context}): {values}")
    return values

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Generadores de marcos (2k,k) a partir de primos.

thm59:  p = 8m+5 primo con 2 raíz primitiva; S = <4> en (Z_p, ·)
thm511: p = 8m+1 primo con <2> de índice 2; S = <2>

En ambos casos S, visto como subconjunto de (Z_p, +), es un conjunto
cuasi-signatura con μ = 0 y da un marco (p+1, (p+1)/2).
"""

import logging
import time
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import pandas as pd

from config import GENERATOR_TABLE_MAX_P
from counting import SubsetMask
from exact_matrix import SeidelMatrixInt, border_standard, is_conference
from frame_params import is_prime
from group_core import cyclic
from real_signature import verify_quasi_signature_set

logger = logging.getLogger(__name__)

THM59 = "thm59"
THM511 = "thm511"
ALGORITHMS = (THM59, THM511)


def _prime_factors(n: int) -> List[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def order_of_two(p: int) -> int:
    """
    Orden multiplicativo de 2 módulo p, reduciendo p-1 por sus factores primos
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p debe ser un primo impar, se recibió {p}")
    order = p - 1
    for q in _prime_factors(p - 1):
        while order % q == 0 and pow(2, order // q, p) == 1:
            order //= q
    return order


def _powers(base: int, p: int) -> Tuple[int, ...]:
    """Residuos del subgrupo cíclico <base> de (Z_p, ·), ordenados"""
    residues = set()
    x = 1
    while True:
        residues.add(x)
        x = x * base % p
        if x == 1:
            break
    return tuple(sorted(residues))


@dataclass(frozen=True)
class GeneratorHit:
    m: int
    p: int
    n: int
    k: int
    set: Tuple[int, ...]
    algorithm: str

    def to_dict(self, emit_set: bool = True):
        data = {
            "algorithm": self.algorithm,
            "m": self.m,
            "p": self.p,
            "n": self.n,
            "k": self.k,
        }
        if emit_set:
            data["set"] = list(self.set)
        return data


def _verify_with_table(hit: GeneratorHit) -> bool:
    g = cyclic(hit.p)
    verdict = verify_quasi_signature_set(g, SubsetMask.from_indices(hit.p, hit.set))
    return bool(verdict) and verdict.witness_mu == 0 and verdict.params.k == hit.k


def _verify_modular(hit: GeneratorHit) -> bool:
    """
    Mismo criterio con borde y mu = 0, contado directamente sobre residuos:
    4 N_(S,S) = p-5 en S y 4 N_(T,T) = p-5 en T
    """
    p = hit.p
    s = np.array(hit.set, dtype=np.int64)
    in_s = np.zeros(p, dtype=bool)
    in_s[s] = True
    if 2 * s.size != p - 1 or not in_s[(p - s) % p].all():
        return False
    t = np.nonzero(~in_s)[0][1:]
    n_ss = np.bincount(np.add.outer(s, s).ravel() % p, minlength=p)
    n_tt = np.bincount(np.add.outer(t, t).ravel() % p, minlength=p)
    return bool((4 * n_ss[s] == p - 5).all() and (4 * n_tt[t] == p - 5).all())


def _verify_hit(hit: GeneratorHit) -> GeneratorHit:
    ok = _verify_with_table(hit) if hit.p <= GENERATOR_TABLE_MAX_P else _verify_modular(hit)
    if not ok:
        raise RuntimeError(f"El conjunto generado para p={hit.p} ({hit.algorithm}) no es cuasi-signatura")
    return hit


def _check_max_m(max_m: int):
    if max_m < 0:
        raise ValueError(f"max_m debe ser >= 0, se recibió {max_m}")


def generate_thm59(max_m: int) -> List[GeneratorHit]:
    """
    p = 8m+5 primo con 2 raíz primitiva; S = {2^(2r) mod p}
    """
    _check_max_m(max_m)
    hits = []
    for m in range(max_m + 1):
        p = 8 * m + 5
        if not is_prime(p):
            continue
        if order_of_two(p) != p - 1:
            logger.debug(f"m={m}: 2 no es raíz primitiva módulo {p}")
            continue
        hit = GeneratorHit(m=m, p=p, n=p + 1, k=(p + 1) // 2, set=_powers(4, p), algorithm=THM59)
        hits.append(_verify_hit(hit))
    return hits


def generate_thm511(max_m: int) -> List[GeneratorHit]:
    """
    p = 8m+1 primo (p >= 17) con <2> de índice 2; S = <2>
    """
    _check_max_m(max_m)
    hits = []
    for m in range(2, max_m + 1):
        p = 8 * m + 1
        if not is_prime(p):
            continue
        if order_of_two(p) != (p - 1) // 2:
            logger.debug(f"m={m}: <2> no tiene índice 2 en (Z_{p}, ·)")
            continue
        hit = GeneratorHit(m=m, p=p, n=p + 1, k=(p + 1) // 2, set=_powers(2, p), algorithm=THM511)
        hits.append(_verify_hit(hit))
    return hits


def generate(algorithm: str, max_m: int) -> List[GeneratorHit]:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"Algoritmo desconocido '{algorithm}', opciones: {', '.join(ALGORITHMS)}")
    start = time.time()
    hits = generate_thm59(max_m) if algorithm == THM59 else generate_thm511(max_m)
    logger.info(f"📊 {algorithm}: {len(hits)} marcos para m <= {max_m} ({time.time() - start:.2f} s)")
    return hits


def find_hit(hits: List[GeneratorHit], m: int) -> GeneratorHit:
    for hit in hits:
        if hit.m == m:
            return hit
    raise ValueError(f"m={m} no produce un marco con este algoritmo")


def generator_table(hits: List[GeneratorHit], emit_sets: bool = False) -> pd.DataFrame:
    """
    Filas (m, (n,k)); con emit_sets también el primo y los residuos de S
    """
    rows = []
    for hit in sorted(hits, key=lambda h: h.m):
        row = {"m": hit.m, "(n,k)": f"({hit.n},{hit.k})"}
        if emit_sets:
            row["p"] = hit.p
            row["S"] = ",".join(str(r) for r in hit.set)
        rows.append(row)
    columns = ["m", "(n,k)"] + (["p", "S"] if emit_sets else [])
    return pd.DataFrame(rows, columns=columns)


def format_table(df: pd.DataFrame) -> str:
    return df.to_string(index=False)


def conference_matrix(hit: GeneratorHit) -> SeidelMatrixInt:
    """
    Circulante con borde: la entrada (r, c) vale +1 si r-c está en S, -1 si no
    """
    p = hit.p
    in_s = np.zeros(p, dtype=bool)
    in_s[list(hit.set)] = True
    idx = np.arange(p)
    diff = (idx[:, None] - idx[None, :]) % p
    q = np.where(in_s[diff], 1, -1).astype(np.int64)
    np.fill_diagonal(q, 0)
    bordered = border_standard(SeidelMatrixInt(q))
    if not is_conference(bordered.entries):
        raise RuntimeError(f"La matriz de p={p} no es de conferencia")
    return bordered

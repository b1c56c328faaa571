#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Enumeración exhaustiva con poda de conjuntos de signatura, cuasi-signatura y
pares (cuasi) cúbicos en grupos pequeños. La salida va ordenada y no depende
del número de procesos.
"""

import itertools
import logging
from dataclasses import dataclass
from multiprocessing import Pool, cpu_count
from typing import Iterator, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from config import CUBE_SEARCH_MAX_ORDER, SEARCH_MAX_ORDER, SHOW_DETAILED_PROGRESS, THREADS
from counting import SubsetMask
from cube_root import cube_necessary_conditions, nmu_excluded, verify_quasi_signature_pair, verify_signature_pair
from frame_params import QUASI, SIGNATURE, mu_from_row_sum, params_from_mu, quasi_prime_screen, quasi_range_ok
from group_core import GroupTable, conjugate_subset
from real_signature import (
    CUBE_PAIR,
    CUBE_QUASI,
    SignatureVerdict,
    verify_quasi_signature_set,
    verify_signature_set,
)

logger = logging.getLogger(__name__)

KINDS = (SIGNATURE, QUASI, CUBE_PAIR, CUBE_QUASI)
CUBE_KINDS = (CUBE_PAIR, CUBE_QUASI)


@dataclass(frozen=True)
class SearchSpec:
    group: GroupTable
    kind: str
    mu_filter: Optional[int] = None
    dedupe_conjugates: bool = False
    limit: Optional[int] = None
    include_trivial: bool = False
    force: bool = False
    threads: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Tipo de búsqueda desconocido: '{self.kind}' (opciones: {', '.join(KINDS)})")
        if self.limit is not None and self.limit < 0:
            raise ValueError(f"El límite debe ser >= 0, se recibió {self.limit}")
        if self.threads is not None and self.threads < 1:
            raise ValueError(f"El número de procesos debe ser >= 1, se recibió {self.threads}")

    @property
    def max_order(self) -> int:
        return CUBE_SEARCH_MAX_ORDER if self.kind in CUBE_KINDS else SEARCH_MAX_ORDER

    @property
    def workers(self) -> int:
        return self.threads or THREADS or cpu_count()


@dataclass(frozen=True)
class SearchHit:
    verdict: SignatureVerdict
    canonical_key: Tuple[Tuple[str, ...], Tuple[str, ...]]

    def to_dict(self, g: GroupTable):
        return self.verdict.to_dict(g)


def inverse_orbits(g: GroupTable) -> List[Tuple[int, ...]]:
    """
    Órbitas {x, x^-1} de G sin e, ordenadas por su menor elemento
    """
    orbits = []
    for x in range(1, g.order):
        y = int(g.inv[x])
        if x == y:
            orbits.append((x,))
        elif x < y:
            orbits.append((x, y))
    return orbits


def _bits(elements) -> int:
    bits = 0
    for x in elements:
        bits |= 1 << x
    return bits


def enumerate_inverse_closed(g: GroupTable) -> Iterator[SubsetMask]:
    """
    Todos los subconjuntos de G sin e cerrados bajo inversos; el bit i del contador elige la órbita i
    """
    orbit_bits = [_bits(orbit) for orbit in inverse_orbits(g)]
    for counter in range(1 << len(orbit_bits)):
        bits = 0
        for i, ob in enumerate(orbit_bits):
            if counter >> i & 1:
                bits |= ob
        yield SubsetMask(g.order, bits)


def _cube_layout(g: GroupTable):
    """Involuciones (siempre en S) y los pares {x, x^-1} con x < x^-1"""
    orbits = inverse_orbits(g)
    involutions = _bits(orbit[0] for orbit in orbits if len(orbit) == 1)
    pairs = [orbit for orbit in orbits if len(orbit) == 2]
    return involutions, pairs


def _cube_choice(pairs, digits, s_bits=0, t_bits=0):
    """
    dígito 0: el par va a S; 1: x va a T; 2: x^-1 va a T
    """
    for (x, y), digit in zip(pairs, digits):
        if digit == 0:
            s_bits |= 1 << x | 1 << y
        elif digit == 1:
            t_bits |= 1 << x
        else:
            t_bits |= 1 << y
    return s_bits, t_bits


def cube_candidates(g: GroupTable) -> Iterator[Tuple[SubsetMask, SubsetMask]]:
    """
    Candidatos (S, T) con S = S^-1, todas las involuciones en S y V = T^-1
    """
    involutions, pairs = _cube_layout(g)
    for digits in itertools.product(range(3), repeat=len(pairs)):
        s_bits, t_bits = _cube_choice(pairs, digits, s_bits=involutions)
        yield SubsetMask(g.order, s_bits), SubsetMask(g.order, t_bits)


# ===== Filtros previos a la verificación =====

def _plausible(kind: str, g: GroupTable, s_size: int, t_size: int, mu_filter, include_trivial) -> bool:
    """
    Condiciones necesarias que solo dependen de |S| y |T|
    """
    if kind == SIGNATURE:
        n = g.order
        trivial = s_size == 0 or t_size == 0
        # |S|-|T| es el autovalor de Q sobre el vector de unos
        mu = mu_from_row_sum(n, s_size - t_size)
        if trivial:
            return include_trivial and (mu_filter is None or mu == mu_filter)
        if n % 2 or mu is None or (n - 2 - mu) % 4:
            return False
    elif kind == QUASI:
        n = g.order + 1
        trivial = s_size == 0 or t_size == 0
        mu = s_size - t_size
        if trivial:
            return include_trivial and (mu_filter is None or mu == mu_filter)
        if n % 2 or (n + 3 * mu - 6) % 4 or (n - 3 * mu - 6) % 4 or not quasi_range_ok(n, mu):
            return False
    elif kind == CUBE_PAIR:
        n = g.order
        mu = mu_from_row_sum(n, s_size - t_size)
        if t_size == 0:
            return include_trivial and (mu_filter is None or mu == mu_filter)
        if mu is None:
            return False
        if s_size and not cube_necessary_conditions(n, mu):
            return False
        if s_size and nmu_excluded(n, mu, g.is_abelian):
            return False
    else:
        n = g.order + 1
        mu = s_size - t_size
        if t_size == 0:
            return include_trivial and (mu_filter is None or mu == mu_filter)
        if not cube_necessary_conditions(n, mu, quasi=True):
            return False

    if mu_filter is not None and mu != mu_filter:
        return False
    params = params_from_mu(n, mu)
    if not params:
        return False
    if kind == QUASI:
        allowed_k = quasi_prime_screen(n)
        if allowed_k is not None and params.k not in allowed_k:
            return False
    return True


def _verify(kind: str, g: GroupTable, s: SubsetMask, t: SubsetMask):
    if kind == SIGNATURE:
        return verify_signature_set(g, s)
    if kind == QUASI:
        return verify_quasi_signature_set(g, s)
    if kind == CUBE_PAIR:
        return verify_signature_pair(g, s, t)
    return verify_quasi_signature_pair(g, s, t)


def _is_trivial(kind: str, s: SubsetMask, t_size: int) -> bool:
    if kind in CUBE_KINDS:
        return t_size == 0
    return len(s) == 0 or t_size == 0


def label_key(g: GroupTable, kind: str, s: SubsetMask, t: SubsetMask) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Etiquetas de S (y de T en los casos cúbicos) ordenadas como texto"""
    t_key = tuple(sorted(t.labels(g))) if kind in CUBE_KINDS else ()
    return tuple(sorted(s.labels(g))), t_key


def _hit(g: GroupTable, kind, s: SubsetMask, t: SubsetMask, verdict) -> SearchHit:
    return SearchHit(verdict=verdict, canonical_key=label_key(g, kind, s, t))


def _search_partition(job) -> List[SearchHit]:
    """
    Proceso de trabajo: candidatos cuyas primeras órbitas siguen `prefix`
    """
    g, kind, prefix, mu_filter, include_trivial = job
    n = g.order
    hits = []
    if kind in CUBE_KINDS:
        involutions, pairs = _cube_layout(g)
        head, tail = pairs[:len(prefix)], pairs[len(prefix):]
        base_s, base_t = _cube_choice(head, prefix, s_bits=involutions)
        for digits in itertools.product(range(3), repeat=len(tail)):
            s_bits, t_bits = _cube_choice(tail, digits, base_s, base_t)
            s_size, t_size = bin(s_bits).count("1"), bin(t_bits).count("1")
            if not _plausible(kind, g, s_size, t_size, mu_filter, include_trivial):
                continue
            s, t = SubsetMask(n, s_bits), SubsetMask(n, t_bits)
            verdict = _verify(kind, g, s, t)
            if verdict:
                hits.append(_hit(g, kind, s, t, verdict))
            else:
                logger.debug(f"❌ S={s.labels(g)}, T={t.labels(g)}: {verdict.reason}")
        return hits

    orbit_bits = [_bits(orbit) for orbit in inverse_orbits(g)]
    head, tail = orbit_bits[:len(prefix)], orbit_bits[len(prefix):]
    base = sum(ob for ob, bit in zip(head, prefix) if bit)
    for digits in itertools.product(range(2), repeat=len(tail)):
        s_bits = base + sum(ob for ob, bit in zip(tail, digits) if bit)
        s_size = bin(s_bits).count("1")
        t_size = n - 1 - s_size
        if not _plausible(kind, g, s_size, t_size, mu_filter, include_trivial):
            continue
        s = SubsetMask(n, s_bits)
        verdict = _verify(kind, g, s, s)
        if verdict:
            hits.append(_hit(g, kind, s, s, verdict))
        else:
            logger.debug(f"❌ S={s.labels(g)}: {verdict.reason}")
    return hits


def _conjugation_key(g: GroupTable, kind: str, hit: SearchHit):
    s = hit.verdict.set
    t = hit.verdict.t_set if kind in CUBE_KINDS else s
    return min(
        label_key(g, kind, conjugate_subset(g, s, x), conjugate_subset(g, t, x))
        for x in range(g.order)
    )


def _finalize(spec: SearchSpec, hits: List[SearchHit]) -> List[SearchHit]:
    hits = sorted(hits, key=lambda hit: hit.canonical_key)
    if spec.dedupe_conjugates:
        hits = [hit for hit in hits if _conjugation_key(spec.group, spec.kind, hit) == hit.canonical_key]
    if spec.limit is not None:
        hits = hits[:spec.limit]
    return hits


def _check_bounds(spec: SearchSpec):
    g = spec.group
    if g.order <= spec.max_order:
        return
    if not spec.force:
        raise ValueError(
            f"{g.name} tiene orden {g.order} > {spec.max_order} para búsquedas '{spec.kind}'; usa --force"
        )
    logger.warning(f"⚠️ Búsqueda '{spec.kind}' en {g.name} (orden {g.order}) supera el límite {spec.max_order}")


def search(spec: SearchSpec) -> List[SearchHit]:
    _check_bounds(spec)
    g = spec.group
    radix = 3 if spec.kind in CUBE_KINDS else 2
    if spec.kind in CUBE_KINDS:
        n_orbits = len(_cube_layout(g)[1])
    else:
        n_orbits = len(inverse_orbits(g))

    workers = spec.workers
    width = 0
    while radix ** width < 4 * workers and width < n_orbits:
        width += 1
    jobs = [
        (g, spec.kind, prefix, spec.mu_filter, spec.include_trivial)
        for prefix in itertools.product(range(radix), repeat=width)
    ]
    logger.info(
        f"🔍 Buscando '{spec.kind}' en {g.name} (orden {g.order}): "
        f"{radix ** n_orbits} candidatos en {len(jobs)} particiones, {workers} procesos"
    )

    hits = []
    if workers == 1:
        results = map(_search_partition, jobs)
        if SHOW_DETAILED_PROGRESS:
            results = tqdm(results, total=len(jobs), desc="Buscando...")
        for partial in results:
            hits.extend(partial)
    else:
        with Pool(processes=min(workers, len(jobs))) as pool:
            results = pool.imap(_search_partition, jobs)
            if SHOW_DETAILED_PROGRESS:
                results = tqdm(results, total=len(jobs), desc="Buscando...")
            for partial in results:
                hits.extend(partial)

    hits = _finalize(spec, hits)
    logger.info(f"📊 {len(hits)} resultados para '{spec.kind}' en {g.name}")
    return hits


def brute_force_search(spec: SearchSpec) -> List[SearchHit]:
    """
    Referencia sin poda: todo subconjunto (o toda asignación S/T/V) de G sin e
    pasa por el verificador
    """
    g = spec.group
    n = g.order
    hits = []
    if spec.kind in CUBE_KINDS:
        for assignment in itertools.product(range(3), repeat=n - 1):
            s_bits = _bits(x for x, part in enumerate(assignment, start=1) if part == 0)
            t_bits = _bits(x for x, part in enumerate(assignment, start=1) if part == 1)
            s, t = SubsetMask(n, s_bits), SubsetMask(n, t_bits)
            verdict = _verify(spec.kind, g, s, t)
            if verdict:
                hits.append((s, t, verdict))
    else:
        for bits in range(0, 1 << n, 2):
            s = SubsetMask(n, bits)
            verdict = _verify(spec.kind, g, s, s)
            if verdict:
                hits.append((s, s, verdict))

    kept = []
    for s, t, verdict in hits:
        t_size = len(t) if spec.kind in CUBE_KINDS else n - 1 - len(s)
        if _is_trivial(spec.kind, s, t_size) and not spec.include_trivial:
            continue
        if spec.mu_filter is not None and verdict.witness_mu != spec.mu_filter:
            continue
        kept.append(_hit(g, spec.kind, s, t, verdict))
    return _finalize(spec, kept)


def hits_to_dataframe(g: GroupTable, hits: List[SearchHit]) -> pd.DataFrame:
    """
    Una fila por resultado: S (y T en los casos cúbicos) como etiquetas, n, k, mu
    """
    cube = any(hit.verdict.t_set is not None for hit in hits)
    rows = []
    for hit in hits:
        data = hit.to_dict(g)
        row = {"S": ",".join(data["set"])}
        if cube:
            row["T"] = ",".join(data["t"])
        row.update({"n": data["n"], "k": data["k"], "mu": data["mu"]})
        rows.append(row)
    columns = ["S", "T", "n", "k", "mu"] if cube else ["S", "n", "k", "mu"]
    return pd.DataFrame(rows, columns=columns)

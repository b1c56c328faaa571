#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Máscaras de subconjuntos sobre los elementos de un grupo y conteos de pares N_(A,B)^g
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator, Tuple

import numpy as np

if TYPE_CHECKING:
    from group_core import GroupTable


@dataclass(frozen=True)
class SubsetMask:
    """
    Subconjunto de índices 0..owner_order-1 guardado como máscara de bits entera.
    La identidad (índice 0) solo se admite con allow_identity
    (conjuntos de diferencias y subgrupos).
    """
    owner_order: int
    bits: int = 0
    allow_identity: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.owner_order < 1:
            raise ValueError(f"Orden de grupo inválido para un subconjunto: {self.owner_order}")
        if self.bits < 0 or self.bits >> self.owner_order:
            raise ValueError(f"El subconjunto tiene elementos fuera de 0..{self.owner_order - 1}")
        if self.bits & 1 and not self.allow_identity:
            raise ValueError("El subconjunto no puede contener la identidad")

    @classmethod
    def from_indices(cls, owner_order: int, indices: Iterable[int], allow_identity: bool = False):
        bits = 0
        for idx in indices:
            idx = int(idx)
            if idx < 0 or idx >= owner_order:
                raise ValueError(f"Índice de elemento fuera de rango: {idx}")
            bits |= 1 << idx
        return cls(owner_order, bits, allow_identity)

    @classmethod
    def empty(cls, owner_order: int):
        return cls(owner_order, 0)

    @classmethod
    def non_identity(cls, owner_order: int):
        """G sin la identidad"""
        return cls(owner_order, ((1 << owner_order) - 1) & ~1)

    def indices(self) -> Tuple[int, ...]:
        bits = self.bits
        return tuple(i for i in range(self.owner_order) if bits >> i & 1)

    def as_array(self) -> np.ndarray:
        return np.array(self.indices(), dtype=np.intp)

    def indicator(self) -> np.ndarray:
        flags = np.zeros(self.owner_order, dtype=bool)
        flags[list(self.indices())] = True
        return flags

    def labels(self, g: "GroupTable"):
        return [g.labels[i] for i in self.indices()]

    def with_identity_allowed(self):
        return SubsetMask(self.owner_order, self.bits, allow_identity=True)

    def without_identity(self):
        return SubsetMask(self.owner_order, self.bits & ~1)

    def _same_owner(self, other: "SubsetMask"):
        if self.owner_order != other.owner_order:
            raise ValueError(
                f"Subconjuntos de grupos distintos: orden {self.owner_order} vs {other.owner_order}"
            )

    def __or__(self, other: "SubsetMask"):
        self._same_owner(other)
        return SubsetMask(self.owner_order, self.bits | other.bits,
                          self.allow_identity or other.allow_identity)

    def __and__(self, other: "SubsetMask"):
        self._same_owner(other)
        return SubsetMask(self.owner_order, self.bits & other.bits,
                          self.allow_identity or other.allow_identity)

    def __sub__(self, other: "SubsetMask"):
        self._same_owner(other)
        return SubsetMask(self.owner_order, self.bits & ~other.bits, self.allow_identity)

    def isdisjoint(self, other: "SubsetMask") -> bool:
        self._same_owner(other)
        return not self.bits & other.bits

    def __len__(self):
        return bin(self.bits).count("1")

    def __contains__(self, idx) -> bool:
        idx = int(idx)
        return 0 <= idx < self.owner_order and bool(self.bits >> idx & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())


def check_owner(g: "GroupTable", *masks: SubsetMask):
    for mask in masks:
        if mask.owner_order != g.order:
            raise ValueError(
                f"El subconjunto pertenece a un grupo de orden {mask.owner_order}, "
                f"no a {g.name} (orden {g.order})"
            )


def count_pair(g: "GroupTable", a: SubsetMask, b: SubsetMask, target: int) -> int:
    """
    Número de pares ordenados (x, y) en A x B con x*y = target,
    calculado como |A ∩ target*B^-1|
    """
    check_owner(g, a, b)
    target = int(target)
    if target < 0 or target >= g.order:
        raise ValueError(f"Elemento objetivo fuera de rango: {target}")
    b_idx = b.as_array()
    if len(a) == 0 or b_idx.size == 0:
        return 0
    shifted = g.mul[target, g.inv[b_idx]]
    return int(np.count_nonzero(a.indicator()[shifted]))


def pair_counts(g: "GroupTable", a: SubsetMask, b: SubsetMask) -> np.ndarray:
    """
    N_(A,B)^t para todos los t a la vez
    """
    check_owner(g, a, b)
    a_idx = a.as_array()
    b_idx = b.as_array()
    if a_idx.size == 0 or b_idx.size == 0:
        return np.zeros(g.order, dtype=np.int64)
    products = g.mul[np.ix_(a_idx, b_idx)].ravel()
    return np.bincount(products, minlength=g.order).astype(np.int64)


def inverse_set(g: "GroupTable", s: SubsetMask) -> SubsetMask:
    check_owner(g, s)
    return SubsetMask.from_indices(g.order, g.inv[s.as_array()], allow_identity=s.allow_identity)


def is_inverse_closed(g: "GroupTable", s: SubsetMask) -> bool:
    return inverse_set(g, s).bits == s.bits


def first_not_inverse_closed(g: "GroupTable", s: SubsetMask):
    """
    Primer x de S cuyo inverso no está en S, o None
    """
    check_owner(g, s)
    for x in s.indices():
        if int(g.inv[x]) not in s:
            return x
    return None

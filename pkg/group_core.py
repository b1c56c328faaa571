#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Grupos finitos como tablas de Cayley explícitas: constructores, validación,
subgrupos generados y conjugación de subconjuntos.
El elemento 0 es siempre la identidad.
"""

import functools
import logging
import re
from typing import Iterable, List, Sequence

import numpy as np

from config import ASSOC_EXHAUSTIVE_LIMIT, ASSOC_SAMPLES, MAX_GROUP_ORDER, SEED
from counting import SubsetMask, check_owner
from frame_params import is_prime

logger = logging.getLogger(__name__)


class GroupTable:
    """
    Tabla de multiplicación inmutable de un grupo finito.
    mul[a, b] es el índice de a*b, inv[a] el índice de a^-1.
    """

    identity = 0

    def __init__(self, name: str, mul, labels: Sequence[str]):
        mul = np.array(mul, dtype=np.intp)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] < 1:
            raise ValueError(f"La tabla de {name} debe ser cuadrada y no vacía")
        n = mul.shape[0]
        if n > MAX_GROUP_ORDER:
            raise ValueError(f"Orden {n} excede el máximo configurado ({MAX_GROUP_ORDER})")
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise ValueError(f"Se esperaban {n} etiquetas para {name}, se recibieron {len(labels)}")
        if len(set(labels)) != n:
            raise ValueError(f"Las etiquetas de {name} no son únicas")

        self.name = name
        self.mul = mul
        self.labels = labels
        self._label_index = {label: i for i, label in enumerate(labels)}
        self._validate()
        self.inv = np.nonzero(mul == 0)[1].astype(np.intp)
        self.mul.flags.writeable = False
        self.inv.flags.writeable = False

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def __repr__(self):
        return f"GroupTable({self.name}, order={self.order})"

    def _validate(self):
        n = self.order
        mul = self.mul
        expected = np.arange(n)
        if mul.min() < 0 or mul.max() >= n:
            raise ValueError(f"{self.name}: la tabla tiene índices fuera de rango")
        if not (np.sort(mul, axis=1) == expected).all():
            raise ValueError(f"{self.name}: alguna fila no es una permutación (no es cuadrado latino)")
        if not (np.sort(mul, axis=0) == expected[:, None]).all():
            raise ValueError(f"{self.name}: alguna columna no es una permutación (no es cuadrado latino)")
        if not ((mul[0] == expected).all() and (mul[:, 0] == expected).all()):
            raise ValueError(f"{self.name}: el elemento 0 no es la identidad")
        if n <= ASSOC_EXHAUSTIVE_LIMIT:
            for a in range(n):
                # (a*b)*c contra a*(b*c) para todo b, c
                left = mul[mul[a]]
                right = mul[a][mul]
                if not np.array_equal(left, right):
                    b, c = np.argwhere(left != right)[0]
                    raise ValueError(f"{self.name}: no es asociativa en ({a}, {b}, {c})")
        else:
            rng = np.random.default_rng(SEED)
            a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
            bad = mul[mul[a, b], c] != mul[a, mul[b, c]]
            if bad.any():
                i = int(np.argmax(bad))
                raise ValueError(f"{self.name}: no es asociativa en ({a[i]}, {b[i]}, {c[i]})")

    def mult(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, x: int, exponent: int) -> int:
        if exponent < 0:
            x = int(self.inv[x])
            exponent = -exponent
        result = 0
        base = int(x)
        while exponent:
            if exponent & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            exponent >>= 1
        return result

    def element_order(self, x: int) -> int:
        k = 1
        y = int(x)
        while y != 0:
            y = int(self.mul[y, x])
            k += 1
        return k

    @functools.cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def involutions(self) -> List[int]:
        return [x for x in range(1, self.order) if int(self.inv[x]) == x]

    def index_of(self, label: str) -> int:
        label = str(label).strip()
        if label not in self._label_index:
            raise ValueError(f"'{label}' no es un elemento de {self.name}")
        return self._label_index[label]


def cyclic(n: int) -> GroupTable:
    """
    (Z_n, +), el elemento i se etiqueta con su residuo
    """
    if n < 1:
        raise ValueError(f"El orden de un grupo cíclico debe ser >= 1, se recibió {n}")
    idx = np.arange(n)
    return GroupTable(f"C{n}", np.add.outer(idx, idx) % n, [str(i) for i in range(n)])


def _strip_parens(label: str) -> str:
    if label.startswith("(") and label.endswith(")"):
        return label[1:-1]
    return label


def direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """
    Producto componente a componente; (i, j) va en el índice i*n2 + j
    """
    n1, n2 = g1.order, g2.order
    if n1 * n2 > MAX_GROUP_ORDER:
        raise ValueError(f"El producto {g1.name}x{g2.name} tiene orden {n1 * n2} > {MAX_GROUP_ORDER}")
    left = np.repeat(np.repeat(g1.mul, n2, axis=0), n2, axis=1)
    right = np.tile(g2.mul, (n1, n1))
    labels = [
        f"({_strip_parens(a)},{_strip_parens(b)})"
        for a in g1.labels
        for b in g2.labels
    ]
    return GroupTable(f"{g1.name}x{g2.name}", left * n2 + right, labels)


def units_mod(p: int) -> GroupTable:
    """
    Grupo multiplicativo (Z_p, *); el residuo r va en el índice r-1
    """
    if not is_prime(p):
        raise ValueError(f"{p} no es primo")
    residues = np.arange(1, p)
    mul = np.multiply.outer(residues, residues) % p - 1
    return GroupTable(f"Zmult{p}", mul, [str(r) for r in residues])


def residue_index(g: GroupTable, residue: int) -> int:
    return g.index_of(str(residue))


# Unidades 1, i, j, k: producto (unidad, signo)
_QUATERNION_UNITS = {
    (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
    (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
    (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
    (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
}


def quaternion8() -> GroupTable:
    """
    Grupo de cuaterniones en el orden 1, -1, i, -i, j, -j, k, -k
    """
    names = ["1", "i", "j", "k"]
    labels = []
    for unit in range(4):
        labels.extend([names[unit], "-" + names[unit]])
    mul = np.zeros((8, 8), dtype=np.intp)
    for x in range(8):
        for y in range(8):
            unit, sign = _QUATERNION_UNITS[(x // 2, y // 2)]
            mul[x, y] = 2 * unit + (sign + x % 2 + y % 2) % 2
    return GroupTable("Q8", mul, labels)


def dihedral(n: int) -> GroupTable:
    """
    Grupo diédrico de orden 2n; r^a s^b va en el índice a + n*b
    """
    if n < 1:
        raise ValueError(f"El grupo diédrico requiere n >= 1, se recibió {n}")
    mul = np.zeros((2 * n, 2 * n), dtype=np.intp)
    for x in range(2 * n):
        a, b = x % n, x // n
        for y in range(2 * n):
            c, d = y % n, y // n
            mul[x, y] = (a + (-c if b else c)) % n + n * ((b + d) % 2)
    labels = []
    for b in range(2):
        for a in range(n):
            rotation = f"r{a}" if a else ""
            if b:
                labels.append(rotation + "s")
            else:
                labels.append(rotation or "e")
    return GroupTable(f"D{n}", mul, labels)


@functools.lru_cache(maxsize=32)
def parse_group(descriptor: str) -> GroupTable:
    """
    Construye un grupo a partir de "C<n>", "C<a>xC<b>[xC<c>...]", "Zmult<p>", "Q8" o "D<n>"
    """
    text = descriptor.replace(" ", "")
    if text.upper() == "Q8":
        return quaternion8()
    match = re.fullmatch(r"Zmult(\d+)", text, flags=re.IGNORECASE)
    if match:
        return units_mod(int(match.group(1)))
    match = re.fullmatch(r"D(\d+)", text, flags=re.IGNORECASE)
    if match:
        return dihedral(int(match.group(1)))
    factors = re.split(r"[xX]", text)
    orders = []
    for factor in factors:
        match = re.fullmatch(r"[Cc](\d+)", factor)
        if not match:
            raise ValueError(f"Descriptor de grupo inválido: '{descriptor}'")
        orders.append(int(match.group(1)))
    group = cyclic(orders[0])
    for order in orders[1:]:
        group = direct_product(group, cyclic(order))
    return group


def split_labels(text: str) -> List[str]:
    """
    Separa una lista de etiquetas por comas, respetando las comas entre paréntesis
    """
    labels = []
    depth = 0
    current = ""
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"Paréntesis desbalanceados en '{text}'")
        if char == "," and depth == 0:
            labels.append(current.strip())
            current = ""
        else:
            current += char
    if depth:
        raise ValueError(f"Paréntesis desbalanceados en '{text}'")
    if current.strip():
        labels.append(current.strip())
    return [label.replace(" ", "") for label in labels if label]


def subset_from_labels(g: GroupTable, labels, allow_identity: bool = False) -> SubsetMask:
    if isinstance(labels, str):
        labels = split_labels(labels)
    indices = [g.index_of(label) for label in labels]
    if 0 in indices and not allow_identity:
        raise ValueError(f"El conjunto no puede contener la identidad '{g.labels[0]}'")
    return SubsetMask.from_indices(g.order, indices, allow_identity=allow_identity)


def subgroup_generated(g: GroupTable, gens: Iterable[int]) -> SubsetMask:
    """
    Clausura de los generadores bajo el producto, con la identidad
    """
    gens = [int(x) for x in gens]
    for x in gens:
        if x < 0 or x >= g.order:
            raise ValueError(f"Generador fuera de rango: {x}")
    members = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for x in frontier:
            for gen in gens:
                y = int(g.mul[x, gen])
                if y not in members:
                    members.add(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return SubsetMask.from_indices(g.order, members, allow_identity=True)


def is_subgroup(g: GroupTable, h: SubsetMask) -> bool:
    check_owner(g, h)
    if 0 not in h:
        return False
    idx = h.as_array()
    flags = h.indicator()
    return bool(flags[g.mul[np.ix_(idx, idx)]].all())


def conjugate_subset(g: GroupTable, s: SubsetMask, t: int) -> SubsetMask:
    """
    t S t^-1
    """
    check_owner(g, s)
    t = int(t)
    conj = g.mul[g.mul[t, s.as_array()], g.inv[t]]
    return SubsetMask.from_indices(g.order, conj, allow_identity=s.allow_identity)

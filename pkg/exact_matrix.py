#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrices densas exactas sobre los enteros y los enteros de Eisenstein Z[w]:
suma en la representación regular, certificado de dos autovalores y conmutación.
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from frame_params import FrameParams, params_from_mu

logger = logging.getLogger(__name__)

# Por debajo de este valor las sumas son exactas en float64
_FLOAT_EXACT_LIMIT = 2 ** 53


@dataclass(frozen=True)
class EisensteinInt:
    """
    a + b*w con w = -1/2 + i*sqrt(3)/2, luego w^2 = -1 - w
    """
    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, value):
        if isinstance(value, EisensteinInt):
            return value
        return cls(int(value), 0)

    def __add__(self, other):
        other = EisensteinInt.coerce(other)
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-EisensteinInt.coerce(other))

    def __rsub__(self, other):
        return EisensteinInt.coerce(other) - self

    def __mul__(self, other):
        other = EisensteinInt.coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self):
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def is_cube_root(self) -> bool:
        return (self.a, self.b) in _UNIT_LABELS

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2, self.b * np.sqrt(3) / 2)

    def label(self) -> str:
        if (self.a, self.b) in _UNIT_LABELS:
            return _UNIT_LABELS[(self.a, self.b)]
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+d}w"

    def __str__(self):
        return self.label()


_UNIT_LABELS = {(0, 0): "0", (1, 0): "1", (0, 1): "w", (-1, -1): "w2"}

ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
CUBE_ROOTS = (ONE, OMEGA, OMEGA2)


def parse_cell(text: str):
    text = str(text).strip()
    if text == "w":
        return OMEGA
    if text == "w2":
        return OMEGA2
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"Celda de matriz inválida: '{text}'")


def _exact_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """
    Producto de matrices enteras. Usa BLAS en float64 cuando toda suma parcial
    es un entero menor que 2**53, e int64 en otro caso.
    """
    if x.size == 0 or y.size == 0:
        return np.zeros((x.shape[0], y.shape[1]), dtype=np.int64)
    bound = int(np.abs(x).max()) * int(np.abs(y).max()) * x.shape[1]
    if bound < _FLOAT_EXACT_LIMIT:
        product = x.astype(np.float64) @ y.astype(np.float64)
        return np.rint(product).astype(np.int64)
    return x.astype(np.int64) @ y.astype(np.int64)


def _eis_mul(a1, b1, a2, b2):
    """(a1 + b1 w)(a2 + b2 w) entrada a entrada"""
    return a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 - b1 * b2


class EisensteinMatrix:
    """
    Matriz cuadrada A + B*w con A y B enteras
    """

    def __init__(self, a, b):
        a = np.array(a, dtype=np.int64)
        b = np.array(b, dtype=np.int64)
        if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("Las partes de una matriz de Eisenstein deben ser cuadradas y del mismo tamaño")
        self.a = a
        self.b = b

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @classmethod
    def identity(cls, n: int):
        return cls(np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    def __matmul__(self, other):
        # (A + Bw)(C + Dw) = (AC - BD) + (AD + BC - BD)w
        ac = _exact_matmul(self.a, other.a)
        bd = _exact_matmul(self.b, other.b)
        ad = _exact_matmul(self.a, other.b)
        bc = _exact_matmul(self.b, other.a)
        return EisensteinMatrix(ac - bd, ad + bc - bd)

    def __add__(self, other):
        return EisensteinMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return EisensteinMatrix(self.a - other.a, self.b - other.b)

    def scale(self, value):
        value = EisensteinInt.coerce(value)
        a, b = _eis_mul(self.a, self.b, value.a, value.b)
        return EisensteinMatrix(a, b)

    def conjugate(self):
        return EisensteinMatrix(self.a - self.b, -self.b)

    def transpose(self):
        return EisensteinMatrix(self.a.T, self.b.T)

    def conjugate_transpose(self):
        return self.conjugate().transpose()

    def entry(self, i: int, j: int) -> EisensteinInt:
        return EisensteinInt(int(self.a[i, j]), int(self.b[i, j]))

    def to_complex(self) -> np.ndarray:
        return self.a - self.b / 2 + 1j * (np.sqrt(3) / 2) * self.b

    def __eq__(self, other):
        if not isinstance(other, EisensteinMatrix):
            return NotImplemented
        return np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)

    def __repr__(self):
        return f"EisensteinMatrix(n={self.n})"


class SeidelMatrixInt:
    """
    Matriz simétrica con diagonal nula y +-1 fuera de ella
    """
    kind = "int"

    def __init__(self, entries):
        entries = np.array(entries, dtype=np.int64)
        if entries.size == 0:
            entries = entries.reshape(0, 0)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("Una matriz de Seidel debe ser cuadrada")
        n = entries.shape[0]
        if (np.diag(entries) != 0).any():
            raise ValueError("La diagonal de una matriz de Seidel debe ser cero")
        off = ~np.eye(n, dtype=bool)
        if (np.abs(entries[off]) != 1).any():
            raise ValueError("Las entradas fuera de la diagonal deben ser +1 o -1")
        if not np.array_equal(entries, entries.T):
            raise ValueError("La matriz de Seidel real debe ser simétrica")
        entries.flags.writeable = False
        self.entries = entries

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def square(self) -> np.ndarray:
        return _exact_matmul(self.entries, self.entries)

    def entry(self, i: int, j: int) -> int:
        return int(self.entries[i, j])

    def cells(self):
        return [[str(int(x)) for x in row] for row in self.entries]

    def to_complex(self) -> np.ndarray:
        return self.entries.astype(np.complex128)

    def __eq__(self, other):
        if not isinstance(other, SeidelMatrixInt):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"SeidelMatrixInt(n={self.n})"


class SeidelMatrixEis:
    """
    Matriz hermítica con diagonal nula y raíces cúbicas de la unidad fuera de ella
    """
    kind = "eis"

    def __init__(self, entries: EisensteinMatrix):
        n = entries.n
        diag_zero = (np.diag(entries.a) == 0) & (np.diag(entries.b) == 0)
        if not diag_zero.all():
            raise ValueError("La diagonal de una matriz de Seidel debe ser cero")
        off = ~np.eye(n, dtype=bool)
        a, b = entries.a[off], entries.b[off]
        unit = ((a == 1) & (b == 0)) | ((a == 0) & (b == 1)) | ((a == -1) & (b == -1))
        if not unit.all():
            raise ValueError("Las entradas fuera de la diagonal deben ser raíces cúbicas de la unidad")
        if not entries == entries.conjugate_transpose():
            raise ValueError("La matriz de Seidel cúbica debe ser hermítica")
        entries.a.flags.writeable = False
        entries.b.flags.writeable = False
        self.entries = entries

    @property
    def n(self) -> int:
        return self.entries.n

    def square(self) -> EisensteinMatrix:
        return self.entries @ self.entries

    def entry(self, i: int, j: int) -> EisensteinInt:
        return self.entries.entry(i, j)

    def cells(self):
        return [[self.entries.entry(i, j).label() for j in range(self.n)] for i in range(self.n)]

    def to_complex(self) -> np.ndarray:
        return self.entries.to_complex()

    def __eq__(self, other):
        if not isinstance(other, SeidelMatrixEis):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"SeidelMatrixEis(n={self.n})"


SeidelMatrix = Union[SeidelMatrixInt, SeidelMatrixEis]


def as_seidel(matrix) -> SeidelMatrix:
    """Envuelve una matriz exacta validando las condiciones de Seidel"""
    if isinstance(matrix, (SeidelMatrixInt, SeidelMatrixEis)):
        return matrix
    if isinstance(matrix, EisensteinMatrix):
        return SeidelMatrixEis(matrix)
    return SeidelMatrixInt(matrix)


@dataclass(frozen=True)
class Reject:
    """
    Resultado negativo de una verificación; se evalúa como False
    """
    reason: str
    clause: str = ""
    witness: Any = None

    def __bool__(self):
        return False

    def to_dict(self):
        data = {"valid": False, "reason": self.reason, "clause": self.clause}
        if self.witness is not None:
            data["witness"] = list(self.witness) if isinstance(self.witness, tuple) else self.witness
        return data


@dataclass(frozen=True)
class TwoEigenvalueCertificate:
    mu: int
    params: FrameParams
    kind: str


def regrep_sum(g, coeffs: Union[Mapping[int, Any], Sequence[Any]]):
    """
    Suma de coeffs[x] * lambda(x) sobre el grupo, con lambda(x) e_h = e_{xh}:
    la entrada (fila x*h, columna h) es coeffs[x]. Con coeficientes enteros se
    obtiene un array int64; con coeficientes de Eisenstein, una EisensteinMatrix.
    """
    n = g.order
    if isinstance(coeffs, Mapping):
        values = [coeffs.get(x, 0) for x in range(n)]
    else:
        values = list(coeffs)
        if len(values) != n:
            raise ValueError(f"Se esperaban {n} coeficientes, se recibieron {len(values)}")
    eisenstein = any(isinstance(v, EisensteinInt) for v in values)
    values = [EisensteinInt.coerce(v) for v in values]
    if values[0] != ZERO:
        raise ValueError("El coeficiente de la identidad debe ser 0")
    coef_a = np.array([v.a for v in values], dtype=np.int64)
    coef_b = np.array([v.b for v in values], dtype=np.int64)
    cols = np.broadcast_to(np.arange(n), (n, n))
    mat_a = np.zeros((n, n), dtype=np.int64)
    mat_a[g.mul, cols] = np.broadcast_to(coef_a[:, None], (n, n))
    if not eisenstein:
        return mat_a
    mat_b = np.zeros((n, n), dtype=np.int64)
    mat_b[g.mul, cols] = np.broadcast_to(coef_b[:, None], (n, n))
    return EisensteinMatrix(mat_a, mat_b)


def certify_two_eigenvalue(q: SeidelMatrix):
    """
    Comprueba Q^2 = (n-1)I + mu*Q de forma exacta; mu se lee en la entrada (0, 1)
    """
    n = q.n
    if n < 2:
        return Reject("dimensión menor que 2: no hay marco", clause="dimension", witness=n)
    square = q.square()
    if q.kind == "int":
        mu = int(square[0, 1]) * q.entry(0, 1)
        residual = square - mu * q.entries - (n - 1) * np.eye(n, dtype=np.int64)
        bad = np.argwhere(residual != 0)
        if bad.size:
            i, j = (int(x) for x in bad[0])
            expected = (n - 1) * (i == j) + mu * q.entry(i, j)
            return Reject(
                f"Q² en ({i},{j}) vale {int(square[i, j])}, se esperaba {expected}",
                clause="Q² = (n-1)I + μQ",
                witness=(i, j),
            )
    else:
        mu_eis = square.entry(0, 1) * q.entry(0, 1).conjugate()
        if not mu_eis.is_rational():
            return Reject(f"μ = {mu_eis} no es real", clause="μ real", witness=(0, 1))
        mu = mu_eis.a
        residual = square - q.entries.scale(mu) - EisensteinMatrix.identity(n).scale(n - 1)
        bad = np.argwhere((residual.a != 0) | (residual.b != 0))
        if bad.size:
            i, j = (int(x) for x in bad[0])
            expected = EisensteinInt(n - 1 if i == j else 0) + q.entry(i, j) * mu
            return Reject(
                f"Q² en ({i},{j}) vale {square.entry(i, j)}, se esperaba {expected}",
                clause="Q² = (n-1)I + μQ",
                witness=(i, j),
            )
    params = params_from_mu(n, mu)
    if not params:
        return Reject(params.message, clause="parámetros", witness=mu)
    return TwoEigenvalueCertificate(mu=mu, params=params, kind=q.kind)


def border_standard(q: SeidelMatrix) -> SeidelMatrix:
    """
    Antepone una fila y una columna de unos con 0 en la esquina
    """
    n = q.n
    if q.kind == "int":
        bordered = np.ones((n + 1, n + 1), dtype=np.int64)
        bordered[0, 0] = 0
        bordered[1:, 1:] = q.entries
        return SeidelMatrixInt(bordered)
    a = np.ones((n + 1, n + 1), dtype=np.int64)
    a[0, 0] = 0
    a[1:, 1:] = q.entries.a
    b = np.zeros((n + 1, n + 1), dtype=np.int64)
    b[1:, 1:] = q.entries.b
    return SeidelMatrixEis(EisensteinMatrix(a, b))


def _check_permutation(perm, n):
    perm = np.arange(n) if perm is None else np.array(perm, dtype=np.intp)
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise ValueError(f"La permutación no es válida para dimensión {n}")
    return perm


def switch(q: SeidelMatrix, d, perm=None) -> SeidelMatrix:
    """
    U P Q P^t U* con U = diag(d); la entrada (i, j) pasa a d[i] * Q[perm[i], perm[j]] * conj(d[j])
    """
    n = q.n
    perm = _check_permutation(perm, n)
    if len(d) != n:
        raise ValueError(f"La diagonal debe tener {n} entradas")
    if q.kind == "int":
        signs = np.array([int(x) for x in d], dtype=np.int64)
        if (np.abs(signs) != 1).any():
            raise ValueError("La diagonal de conmutación debe tener entradas ±1")
        permuted = q.entries[np.ix_(perm, perm)]
        return SeidelMatrixInt(signs[:, None] * permuted * signs[None, :])
    units = [EisensteinInt.coerce(x) for x in d]
    if not all(u.is_cube_root() and u != ZERO for u in units):
        raise ValueError("La diagonal de conmutación debe tener raíces cúbicas de la unidad")
    da = np.array([u.a for u in units], dtype=np.int64)
    db = np.array([u.b for u in units], dtype=np.int64)
    conj_a, conj_b = da - db, -db
    pa = q.entries.a[np.ix_(perm, perm)]
    pb = q.entries.b[np.ix_(perm, perm)]
    a, b = _eis_mul(da[:, None], db[:, None], pa, pb)
    a, b = _eis_mul(a, b, conj_a[None, :], conj_b[None, :])
    return SeidelMatrixEis(EisensteinMatrix(a, b))


def to_standard_form(q: SeidelMatrix) -> SeidelMatrix:
    """
    Conmuta para que la primera fila y columna sean unos fuera de la diagonal.
    Con la convención U Q U* la diagonal es la propia primera fila.
    """
    if q.n < 2:
        raise ValueError("La forma estándar requiere n >= 2")
    if q.kind == "int":
        d = [1] + [q.entry(0, i) for i in range(1, q.n)]
    else:
        d = [ONE] + [q.entry(0, i) for i in range(1, q.n)]
    return switch(q, d)


def is_hadamard(m) -> bool:
    m = np.asarray(m, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    n = m.shape[0]
    if (np.abs(m) != 1).any():
        return False
    return bool(np.array_equal(_exact_matmul(m.T, m), n * np.eye(n, dtype=np.int64)))


def is_conference(m) -> bool:
    m = np.asarray(m, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    n = m.shape[0]
    if (np.diag(m) != 0).any():
        return False
    if (np.abs(m[~np.eye(n, dtype=bool)]) != 1).any():
        return False
    return bool(np.array_equal(_exact_matmul(m.T, m), (n - 1) * np.eye(n, dtype=np.int64)))


# ===== Exportación =====

def matrix_to_dict(q: SeidelMatrix, mu: Optional[int] = None):
    data = {"n": q.n, "entries": q.cells()}
    if mu is not None:
        data["mu"] = int(mu)
    return data


def write_matrix_csv(q: SeidelMatrix, output_file: str) -> bool:
    """
    Una fila por línea, celdas separadas por comas, sin cabecera
    """
    try:
        pd.DataFrame(q.cells()).to_csv(output_file, header=False, index=False)
        logger.info(f"💾 Matriz {q.n}x{q.n} exportada a {output_file}")
        return True
    except OSError as e:
        logger.error(f"❌ Error exportando la matriz a {output_file}: {e}")
        return False


def write_matrix_json(q: SeidelMatrix, output_file: str, mu: Optional[int] = None) -> bool:
    try:
        with open(output_file, "w", encoding="utf-8") as f:
            json.dump(matrix_to_dict(q, mu), f, sort_keys=True)
        logger.info(f"💾 Matriz {q.n}x{q.n} exportada a {output_file}")
        return True
    except OSError as e:
        logger.error(f"❌ Error exportando la matriz a {output_file}: {e}")
        return False


def matrix_from_cells(cells) -> SeidelMatrix:
    parsed = [[parse_cell(c) for c in row] for row in cells]
    if any(isinstance(c, EisensteinInt) for row in parsed for c in row):
        a = [[EisensteinInt.coerce(c).a for c in row] for row in parsed]
        b = [[EisensteinInt.coerce(c).b for c in row] for row in parsed]
        return SeidelMatrixEis(EisensteinMatrix(a, b))
    return SeidelMatrixInt(parsed)


def read_matrix_json(input_file: str):
    """
    Lee una matriz escrita por write_matrix_json; devuelve (matriz, mu o None)
    """
    with open(input_file, "r", encoding="utf-8") as f:
        data = json.load(f)
    if "entries" not in data:
        raise ValueError(f"{input_file} no contiene la clave 'entries'")
    matrix = matrix_from_cells(data["entries"])
    if "n" in data and int(data["n"]) != matrix.n:
        raise ValueError(f"{input_file}: n={data['n']} no coincide con la matriz {matrix.n}x{matrix.n}")
    return matrix, data.get("mu")

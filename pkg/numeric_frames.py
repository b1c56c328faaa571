#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Realización numérica de una matriz de signatura certificada: matriz de Gram,
vectores del marco y comprobaciones de ajuste, norma uniforme y equiangularidad.
"""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from config import PARSEVAL_SAMPLES, SEED, TOLERANCE
from exact_matrix import Reject, SeidelMatrix, certify_two_eigenvalue
from frame_params import FrameParams, round_sig
from table_export import export_to_csv

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrameVectors:
    """
    La fila i de `vectors` guarda los coeficientes del vector f_i del marco
    """
    n: int
    k: int
    vectors: np.ndarray

    def gram(self) -> np.ndarray:
        return self.vectors @ self.vectors.conj().T


@dataclass(frozen=True)
class FrameReport:
    n: int
    k: int
    tol: float
    tightness: float
    uniformity: float
    equiangularity: float
    parseval: float

    @property
    def tight(self) -> bool:
        return self.tightness < self.tol

    @property
    def uniform(self) -> bool:
        return self.uniformity < self.tol

    @property
    def equiangular(self) -> bool:
        return self.equiangularity < self.tol

    @property
    def passed(self) -> bool:
        return self.tight and self.uniform and self.equiangular

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "tol": self.tol,
            "passed": self.passed,
            "tight": self.tight,
            "uniform": self.uniform,
            "equiangular": self.equiangular,
            "max_deviation": {
                "tightness": round_sig(self.tightness),
                "uniformity": round_sig(self.uniformity),
                "equiangularity": round_sig(self.equiangularity),
                "parseval": round_sig(self.parseval),
            },
        }


def gram_from_certificate(q: SeidelMatrix, params: FrameParams) -> np.ndarray:
    """
    P = (k/n) I + c_{n,k} Q, tras volver a certificar Q frente a params
    """
    certificate = certify_two_eigenvalue(q)
    if not certificate:
        raise ValueError(f"La matriz no tiene dos autovalores: {certificate.reason}")
    if (certificate.mu, certificate.params.n, certificate.params.k) != (params.mu, params.n, params.k):
        raise ValueError(
            f"El certificado (n={certificate.params.n}, k={certificate.params.k}, μ={certificate.mu}) "
            f"no coincide con (n={params.n}, k={params.k}, μ={params.mu})"
        )
    n = q.n
    return (params.k / n) * np.eye(n, dtype=np.complex128) + params.c_value * q.to_complex()


def _normalize_phase(vectors: np.ndarray, tol: float) -> np.ndarray:
    """La primera componente de cada autovector por encima de tol pasa a ser real positiva"""
    out = vectors.copy()
    for j in range(out.shape[1]):
        column = out[:, j]
        nonzero = np.nonzero(np.abs(column) > tol)[0]
        if nonzero.size:
            pivot = column[nonzero[0]]
            out[:, j] = column * (np.conj(pivot) / abs(pivot))
    return out


def factor_gram(p: np.ndarray, k: int, tol: float = TOLERANCE):
    """
    V con V V* = P para una proyección ortogonal P de rango k, o un Reject
    con el espectro
    """
    p = np.asarray(p, dtype=np.complex128)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError("El Gram debe ser una matriz cuadrada")
    n = p.shape[0]
    if np.abs(p - p.conj().T).max(initial=0.0) > tol:
        return Reject("el Gram no es hermítico", clause="P = P*")

    eigenvalues, eigenvectors = np.linalg.eigh(p)
    ones = np.abs(eigenvalues - 1) <= tol
    zeros = np.abs(eigenvalues) <= tol
    spectrum = [round_sig(float(x)) for x in eigenvalues]
    if not (ones | zeros).all() or int(ones.sum()) != k:
        return Reject(
            f"espectro {spectrum} no es {k} unos y {n - k} ceros",
            clause="espectro",
            witness=spectrum,
        )

    basis = _normalize_phase(eigenvectors[:, ones], tol)
    vectors = basis * np.sqrt(eigenvalues[ones])[None, :]
    frame = FrameVectors(n=n, k=k, vectors=vectors)
    deviation = np.abs(frame.gram() - p).max(initial=0.0)
    if deviation > 10 * tol:
        return Reject(f"V V* difiere de P en {deviation:.3g}", clause="V V* = P", witness=round_sig(float(deviation)))
    return frame


def parseval_deviation(v: FrameVectors, samples: int = PARSEVAL_SAMPLES, seed: int = SEED) -> float:
    """
    Mayor desviación relativa entre sum_j |<x, f_j>|^2 y |x|^2 sobre x aleatorios
    """
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((v.k, samples)) + 1j * rng.standard_normal((v.k, samples))
    energy = (np.abs(v.vectors.conj() @ x) ** 2).sum(axis=0)
    norms = (np.abs(x) ** 2).sum(axis=0)
    return float(np.abs(energy / norms - 1).max(initial=0.0))


def verify_frame(v: FrameVectors, params: FrameParams, tol: float = TOLERANCE) -> FrameReport:
    if v.vectors.shape != (params.n, params.k):
        raise ValueError(f"Los vectores tienen forma {v.vectors.shape}, se esperaba ({params.n}, {params.k})")
    frame_operator = v.vectors.conj().T @ v.vectors
    tightness = np.abs(frame_operator - np.eye(v.k)).max(initial=0.0)

    gram = v.gram()
    norms = np.real(np.diag(gram))
    uniformity = np.abs(norms - params.k / params.n).max(initial=0.0)

    off = ~np.eye(v.n, dtype=bool)
    equiangularity = np.abs(np.abs(gram[off]) - params.c_value).max(initial=0.0)

    report = FrameReport(
        n=v.n,
        k=v.k,
        tol=tol,
        tightness=float(tightness),
        uniformity=float(uniformity),
        equiangularity=float(equiangularity),
        parseval=parseval_deviation(v),
    )
    if report:
        logger.info(f"✅ Marco ({v.n},{v.k}) verificado numéricamente")
    else:
        logger.warning(f"⚠️ Marco ({v.n},{v.k}) no pasa la verificación: {report.to_dict()['max_deviation']}")
    return report


def frame_from_matrix(q: SeidelMatrix, tol: float = TOLERANCE):
    """
    Certifica, construye la matriz de Gram y la factoriza; devuelve
    (vectores, informe) o un Reject
    """
    certificate = certify_two_eigenvalue(q)
    if not certificate:
        return certificate
    params = certificate.params
    vectors = factor_gram(gram_from_certificate(q, params), params.k, tol)
    if not vectors:
        return vectors
    return vectors, verify_frame(vectors, params, tol)


def vectors_to_dataframe(v: FrameVectors) -> pd.DataFrame:
    """
    Una fila por vector del marco, columnas re_j, im_j por componente
    """
    data = {}
    for j in range(v.k):
        data[f"re_{j}"] = np.real(v.vectors[:, j])
        data[f"im_{j}"] = np.imag(v.vectors[:, j])
    return pd.DataFrame(data)


def write_vectors_csv(v: FrameVectors, output_file: str) -> bool:
    return export_to_csv(vectors_to_dataframe(v), output_file, header=False)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuración de frameforge
Los valores pueden sobrescribirse con variables de entorno o con un archivo .env
(ver .env.example)
"""

import logging
import os

from dotenv import load_dotenv

# Cargar variables de entorno desde .env si existe
load_dotenv()


def _env_int(name, default):
    value = os.getenv(name, "")
    if not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"La variable {name} debe ser un entero, se recibió '{value}'")


def _env_float(name, default):
    value = os.getenv(name, "")
    if not value.strip():
        return default
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"La variable {name} debe ser un número, se recibió '{value}'")


def _env_bool(name, default):
    value = os.getenv(name, "")
    if not value.strip():
        return default
    return value.strip().lower() in ("1", "true", "yes", "si", "sí")


# =============================================================================
# CONFIGURACIÓN DE GRUPOS
# =============================================================================
# Orden máximo de un grupo representado por su tabla de Cayley
MAX_GROUP_ORDER = _env_int("FRAMEFORGE_MAX_GROUP_ORDER", 4096)

# Hasta este orden la asociatividad se verifica con todas las ternas
ASSOC_EXHAUSTIVE_LIMIT = _env_int("FRAMEFORGE_ASSOC_EXHAUSTIVE_LIMIT", 512)

# Ternas aleatorias revisadas por encima del límite anterior
ASSOC_SAMPLES = _env_int("FRAMEFORGE_ASSOC_SAMPLES", 1_000_000)

# Semilla para todo lo que sea aleatorio (muestreo, pruebas de Parseval)
SEED = _env_int("FRAMEFORGE_SEED", 20240101)

# =============================================================================
# CONFIGURACIÓN DE BÚSQUEDA
# =============================================================================
# Orden máximo para búsqueda exhaustiva de conjuntos de signatura / cuasi-signatura
SEARCH_MAX_ORDER = _env_int("FRAMEFORGE_SEARCH_MAX_ORDER", 36)

# Orden máximo para búsqueda de pares con raíces cúbicas
CUBE_SEARCH_MAX_ORDER = _env_int("FRAMEFORGE_CUBE_SEARCH_MAX_ORDER", 16)

# Número de procesos para la búsqueda (None = todos los núcleos)
THREADS = _env_int("FRAMEFORGE_THREADS", 0) or None

# Orden máximo en el que se recalcula el criterio de conteo para pares cúbicos
COUNTING_ORACLE_MAX_ORDER = _env_int("FRAMEFORGE_COUNTING_ORACLE_MAX_ORDER", 64)

# Primos hasta este valor se reverifican con la tabla de Cayley completa de Z_p
GENERATOR_TABLE_MAX_P = _env_int("FRAMEFORGE_GENERATOR_TABLE_MAX_P", 64)

# =============================================================================
# CONFIGURACIÓN NUMÉRICA
# =============================================================================
# Tolerancia para la factorización del Gram y la verificación de marcos
TOLERANCE = _env_float("FRAMEFORGE_TOL", 1e-9)

# Dígitos significativos al escribir flotantes
FLOAT_DIGITS = _env_int("FRAMEFORGE_FLOAT_DIGITS", 12)

# Vectores aleatorios usados en la prueba de Parseval
PARSEVAL_SAMPLES = _env_int("FRAMEFORGE_PARSEVAL_SAMPLES", 100)

# =============================================================================
# CONFIGURACIÓN DE ARCHIVOS DE SALIDA
# =============================================================================
OUTPUT_DIR = os.getenv("FRAMEFORGE_OUTPUT_DIR", "resultados")

# Nombre de las hojas de Excel
TABLES_SHEET_NAME = "Tablas de marcos"
SEARCH_SHEET_NAME = "Resultados de búsqueda"

# =============================================================================
# CONFIGURACIÓN DE LOGGING
# =============================================================================
# Nivel de logging (DEBUG, INFO, WARNING, ERROR)
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Mostrar barra de progreso durante la búsqueda
SHOW_DETAILED_PROGRESS = _env_bool("SHOW_DETAILED_PROGRESS", False)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


def setup_logging(level=None):
    """
    Configura el logging raíz en stderr
    """
    level_name = (level or LOG_LEVEL).upper()
    numeric_level = getattr(logging, level_name, None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Nivel de logging inválido: {level_name}")
    logging.basicConfig(level=numeric_level, format=LOG_FORMAT, force=True)
    return numeric_level

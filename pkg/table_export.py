#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exportación de resultados tabulares (tablas de generadores, resultados de búsqueda,
vectores de marcos) a Excel y CSV
"""

import logging
import os
import sys

import pandas as pd

from config import FLOAT_DIGITS, OUTPUT_DIR

logger = logging.getLogger(__name__)

MAX_COLUMN_WIDTH = 50


def _ensure_parent(output_file: str):
    parent = os.path.dirname(output_file)
    if parent:
        os.makedirs(parent, exist_ok=True)


def default_output_path(filename: str) -> str:
    """Coloca un nombre de archivo simple dentro de OUTPUT_DIR"""
    if os.path.dirname(filename):
        return filename
    return os.path.join(OUTPUT_DIR, filename)


def export_to_excel(df: pd.DataFrame, output_file: str, sheet_name: str) -> bool:
    """
    Exporta el DataFrame a Excel ajustando el ancho de las columnas
    """
    try:
        _ensure_parent(output_file)
        with pd.ExcelWriter(output_file, engine="openpyxl") as writer:
            df.to_excel(writer, sheet_name=sheet_name, index=False)
            worksheet = writer.sheets[sheet_name]

            # Ajustar el ancho de las columnas
            for column in worksheet.columns:
                max_length = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
                column_letter = column[0].column_letter
                worksheet.column_dimensions[column_letter].width = min(max_length + 2, MAX_COLUMN_WIDTH)

        logger.info(f"💾 {len(df)} filas exportadas a {output_file}")
        return True

    except (OSError, ValueError) as e:
        logger.error(f"❌ Error exportando a Excel: {e}")
        return False


def export_to_csv(df: pd.DataFrame, output_file: str, header: bool = True) -> bool:
    try:
        _ensure_parent(output_file)
        df.to_csv(output_file, index=False, header=header, encoding="utf-8", float_format=f"%.{FLOAT_DIGITS}g")
        logger.info(f"💾 {len(df)} filas exportadas a {output_file}")
        return True
    except OSError as e:
        logger.error(f"❌ Error exportando a CSV: {e}")
        return False


def display_dataframe_info(df: pd.DataFrame, title: str = "DataFrame", stream=None):
    """
    Resumen de un DataFrame de resultados en stderr
    """
    stream = stream or sys.stderr
    if df is None or df.empty:
        print(f"❌ {title} está vacío o no disponible", file=stream)
        return

    print(f"\n📊 INFORMACIÓN DE {title.upper()}", file=stream)
    print("=" * 60, file=stream)
    print(f"📏 Dimensiones: {df.shape[0]} filas x {df.shape[1]} columnas", file=stream)
    print(f"📋 Columnas: {list(df.columns)}", file=stream)

    print("\n🔍 Primeras 5 filas:", file=stream)
    print(df.head().to_string(index=False), file=stream)

    if len(df) > 5:
        print("\n🔍 Últimas 3 filas:", file=stream)
        print(df.tail(3).to_string(index=False), file=stream)

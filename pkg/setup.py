#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Prepara el entorno de frameforge: venv, dependencias, .env y scripts de arranque
"""

import os
import shutil
import subprocess
import sys

VENV_DIR = "venv"
MIN_PYTHON = (3, 8)

RUN_SCRIPTS = {
    "nt": ("run.bat", "@echo off\ncall venv\\Scripts\\activate\npython frameforge.py %*\n"),
    "posix": ("run.sh", '#!/bin/bash\nsource venv/bin/activate\npython frameforge.py "$@"\n'),
}


def venv_tool(tool):
    folder = "Scripts" if os.name == "nt" else "bin"
    return os.path.join(VENV_DIR, folder, tool)


def run_step(args, description):
    """Ejecuta un paso de instalación sin shell; devuelve True si terminó bien"""
    print(f"🔄 {description}...")
    result = subprocess.run(args, capture_output=True, text=True)
    if result.returncode != 0:
        print(f"❌ Error en {description} (código {result.returncode})")
        if result.stderr.strip():
            print(f"   {result.stderr.strip().splitlines()[-1]}")
        return False
    print(f"✅ {description}")
    return True


def python_ok():
    current = sys.version_info[:3]
    if current < MIN_PYTHON:
        print(f"❌ Se requiere Python {MIN_PYTHON[0]}.{MIN_PYTHON[1]}+ (detectado {'.'.join(map(str, current))})")
        return False
    print(f"🐍 Python {'.'.join(map(str, current))}")
    return True


def ensure_venv():
    if os.path.isdir(VENV_DIR):
        print(f"📁 Usando el entorno existente en {VENV_DIR}/")
        return True
    return run_step([sys.executable, "-m", "venv", VENV_DIR], "Entorno virtual creado")


def install_requirements():
    pip = venv_tool("pip")
    run_step([pip, "install", "--upgrade", "pip"], "pip actualizado")
    return run_step([pip, "install", "-r", "requirements.txt"], "Dependencias instaladas")


def smoke_test():
    """Comprueba el stack numérico y genera la primera fila de la tabla p = 8m+5"""
    python = venv_tool("python")
    if not run_step([python, "-c", "import numpy, pandas, openpyxl, dotenv, tqdm"], "Paquetes importables"):
        return False
    return run_step(
        [python, "frameforge.py", "tables", "--algorithm", "thm59", "--max-m", "0", "--json"],
        "Marco (6,3) generado",
    )


def write_env_file():
    if os.path.exists(".env"):
        return
    if not os.path.exists(".env.example"):
        print("⚠️ No hay .env.example; se usarán los valores por defecto")
        return
    shutil.copyfile(".env.example", ".env")
    print("✅ .env creado desde .env.example")


def write_run_script():
    name, body = RUN_SCRIPTS["nt" if os.name == "nt" else "posix"]
    with open(name, "w", encoding="utf-8") as f:
        f.write(body)
    if os.name != "nt":
        os.chmod(name, 0o755)
    print(f"✅ Script de arranque: {name}")
    return name


def main():
    print("🚀 INSTALACIÓN DE FRAMEFORGE")
    print("=" * 70)

    for step in (python_ok, ensure_venv, install_requirements):
        if not step():
            return False
    write_env_file()
    script = write_run_script()
    if not smoke_test():
        print("⚠️ La instalación terminó pero la prueba rápida falló")
        return False

    launcher = script if os.name == "nt" else f"./{script}"
    print("\n📋 Para empezar:")
    print(f'   {launcher} verify --group C4xC4 --set "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)"')
    print(f"   {launcher} tables --algorithm thm511 --max-m 299")
    print(f"   {venv_tool('pytest')}")
    return True


if __name__ == "__main__":
    sys.exit(0 if main() else 1)

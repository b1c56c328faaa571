#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
frameforge: marcos equiangulares ajustados a partir de conjuntos de signatura,
conjuntos cuasi-signatura, conjuntos de diferencias y pares de raíces cúbicas.

Uso:
    python frameforge.py verify --group C4xC4 --set "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)"
    python frameforge.py search --group C5 --kind quasi
    python frameforge.py tables --algorithm thm59 --max-m 99

Códigos de salida: 0 verificado, 1 rechazado o sin resultado, 2 error de uso.
"""

import argparse
import json
import logging
import sys

import pandas as pd

from config import (
    LOG_LEVEL,
    SEARCH_SHEET_NAME,
    TABLES_SHEET_NAME,
    TOLERANCE,
    setup_logging,
)
from cube_root import (
    CubePartition,
    build_cube_matrix,
    cube_necessary_conditions,
    pair_identities_hold,
    verify_quasi_signature_pair,
    verify_signature_pair,
)
from difference_sets import diffset_to_signature, signature_is_hadamard, verify_difference_set
from exact_matrix import (
    SeidelMatrixInt,
    border_standard,
    certify_two_eigenvalue,
    read_matrix_json,
    write_matrix_csv,
    write_matrix_json,
)
from frame_params import round_sig
from group_core import parse_group, subset_from_labels
from numeric_frames import frame_from_matrix, write_vectors_csv
from prime_generators import ALGORITHMS, conference_matrix, find_hit, format_table, generate, generator_table
from real_signature import quasi_signature_matrix, signature_matrix, verify_quasi_signature_set, verify_signature_set
from search_engine import KINDS, SearchSpec, hits_to_dataframe, search
from table_export import default_output_path, display_dataframe_info, export_to_excel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2


def emit_json(data):
    print(json.dumps(data, sort_keys=True, ensure_ascii=False))


def _verdict_line(verdict) -> str:
    params = verdict.params
    return f"✅ {verdict.kind}: marco ({params.n},{params.k}) con μ={verdict.witness_mu}, c={round_sig(params.c_value)}"


def _report(args, verdict, g, extra=None) -> int:
    """Imprime un veredicto o un Reject y devuelve el código de salida"""
    if verdict:
        data = verdict.to_dict(g)
    else:
        data = verdict.to_dict()
        data["group"] = g.name
    data.update(extra or {})
    if args.json:
        emit_json(data)
    elif verdict:
        print(_verdict_line(verdict))
        for key, value in sorted((extra or {}).items()):
            print(f"   • {key}: {value}")
    else:
        print(f"❌ Rechazado ({verdict.clause}): {verdict.reason}")
    return EXIT_OK if verdict else EXIT_REJECTED


# ===== Subcomandos =====

def cmd_verify(args) -> int:
    g = parse_group(args.group)
    s = subset_from_labels(g, args.set)
    verdict = verify_quasi_signature_set(g, s) if args.quasi else verify_signature_set(g, s)
    return _report(args, verdict, g)


def cmd_search(args) -> int:
    g = parse_group(args.group)
    spec = SearchSpec(
        group=g,
        kind=args.kind,
        mu_filter=args.mu,
        dedupe_conjugates=args.dedupe,
        limit=args.limit,
        include_trivial=args.include_trivial,
        force=args.force,
        threads=args.threads,
    )
    hits = search(spec)
    df = hits_to_dataframe(g, hits)
    if args.excel:
        display_dataframe_info(df, f"resultados {args.kind}")
        if not export_to_excel(df, default_output_path(args.excel), SEARCH_SHEET_NAME):
            return EXIT_REJECTED

    if args.json:
        # una línea JSON por resultado
        for hit in hits:
            emit_json(hit.to_dict(g))
    elif hits:
        print(f"📊 {len(hits)} resultados '{args.kind}' en {g.name}")
        print(df.to_string(index=False))
    else:
        print(f"📊 Sin resultados '{args.kind}' en {g.name}")
    return EXIT_OK


def cmd_diffset(args) -> int:
    g = parse_group(args.group)
    d = subset_from_labels(g, args.set, allow_identity=True)
    report = verify_difference_set(g, d)
    if not report or not args.to_signature:
        if not report:
            return _report(args, report, g)
        if args.json:
            emit_json(report.to_dict(g))
        else:
            print(f"✅ Conjunto de diferencias ({report.n},{report.k},{report.lam})")
            print(f"   • reversible: {report.reversible}")
            print(f"   • familia de Hadamard: {report.hadamard_family}")
        return EXIT_OK

    verdict = diffset_to_signature(g, d)
    extra = {"lambda": report.lam, "reversible": report.reversible}
    if verdict:
        extra["hadamard"] = signature_is_hadamard(g, verdict.set)
    return _report(args, verdict, g, extra)


def _cube_sets(args, g):
    s = subset_from_labels(g, args.s or "")
    t = subset_from_labels(g, args.t or "")
    return s, t


def cmd_cube_verify(args) -> int:
    g = parse_group(args.group)
    s, t = _cube_sets(args, g)
    if args.quasi:
        verdict = verify_quasi_signature_pair(g, s, t)
        n, mu = g.order + 1, len(s) - len(t)
    else:
        verdict = verify_signature_pair(g, s, t)
        n, mu = g.order, verdict.witness_mu if verdict else None
    extra = {}
    if mu is not None:
        extra["conditions"] = cube_necessary_conditions(n, mu, quasi=args.quasi).to_dict()
    if verdict and not args.quasi:
        extra["identities"] = pair_identities_hold(g, s, t, verdict.witness_mu)
    return _report(args, verdict, g, extra)


def cmd_tables(args) -> int:
    hits = generate(args.algorithm, args.max_m)
    df = generator_table(hits, emit_sets=args.emit_sets)
    if args.excel:
        display_dataframe_info(df, f"tabla {args.algorithm}")
        if not export_to_excel(df, default_output_path(args.excel), TABLES_SHEET_NAME):
            return EXIT_REJECTED

    matrix = None
    if args.emit_matrix is not None:
        matrix = conference_matrix(find_hit(hits, args.emit_matrix))

    if args.json:
        data = {
            "algorithm": args.algorithm,
            "max_m": args.max_m,
            "count": len(hits),
            "rows": [hit.to_dict(emit_set=args.emit_sets) for hit in hits],
        }
        if matrix is not None:
            data["matrix"] = matrix.cells()
        emit_json(data)
    else:
        print(format_table(df))
        if matrix is not None:
            print()
            print(pd.DataFrame(matrix.cells()).to_string(index=False, header=False))
    return EXIT_OK if hits else EXIT_REJECTED


def cmd_matrix(args) -> int:
    g = parse_group(args.group)
    if args.cube:
        s, t = _cube_sets(args, g)
        verdict = verify_quasi_signature_pair(g, s, t) if args.quasi else verify_signature_pair(g, s, t)
        if verdict:
            q = build_cube_matrix(g, CubePartition.from_st(g, s, t))
            if args.quasi:
                q = border_standard(q)
    else:
        if args.set is None:
            raise ValueError("matrix requiere --set, o --cube con --s/--t")
        s = subset_from_labels(g, args.set)
        verdict = verify_quasi_signature_set(g, s) if args.quasi else verify_signature_set(g, s)
        if verdict:
            q = quasi_signature_matrix(g, s) if args.quasi else SeidelMatrixInt(signature_matrix(g, s))
    if not verdict:
        return _report(args, verdict, g)

    ok = True
    if args.out:
        ok = write_matrix_csv(q, args.out) and ok
    if args.json_out:
        ok = write_matrix_json(q, args.json_out, mu=verdict.witness_mu) and ok
    if args.json:
        emit_json({"n": q.n, "mu": verdict.witness_mu, "entries": q.cells()})
    elif not args.out:
        print(pd.DataFrame(q.cells()).to_string(index=False, header=False))
    return EXIT_OK if ok else EXIT_REJECTED


def cmd_frame(args) -> int:
    q, mu = read_matrix_json(args.source)
    certificate = certify_two_eigenvalue(q)
    if certificate and mu is not None and int(mu) != certificate.mu:
        raise ValueError(f"{args.source} declara μ={mu} pero la matriz certifica μ={certificate.mu}")
    result = frame_from_matrix(q, args.tol)
    if not result:
        if args.json:
            emit_json(result.to_dict())
        else:
            print(f"❌ Rechazado ({result.clause}): {result.reason}")
        return EXIT_REJECTED
    vectors, report = result
    data = report.to_dict()
    data["mu"] = certificate.mu

    ok = report.passed
    if args.out:
        ok = write_vectors_csv(vectors, args.out) and ok
    if args.json:
        emit_json(data)
    else:
        status = "✅" if data["passed"] else "❌"
        print(f"{status} Marco ({report.n},{report.k}): {data['max_deviation']}")
    return EXIT_OK if ok else EXIT_REJECTED


# ===== Parser =====

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="salida JSON en stdout")
    common.add_argument("--log-level", default=LOG_LEVEL, help="nivel de logging (DEBUG, INFO, ...)")

    parser = argparse.ArgumentParser(prog="frameforge", description="Marcos equiangulares ajustados desde grupos finitos")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="verificar un conjunto de signatura o cuasi-signatura")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--quasi", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="búsqueda exhaustiva en un grupo")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=KINDS, default=KINDS[0])
    p.add_argument("--mu", type=int)
    p.add_argument("--dedupe", action="store_true", help="un representante por clase de conjugación")
    p.add_argument("--limit", type=int)
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--force", action="store_true", help="permitir órdenes sobre el límite configurado")
    p.add_argument("--threads", type=int)
    p.add_argument("--excel")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("diffset", parents=[common], help="verificar un conjunto de diferencias")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--to-signature", action="store_true")
    p.set_defaults(handler=cmd_diffset)

    p = sub.add_parser("cube-verify", parents=[common], help="verificar un par con raíces cúbicas")
    p.add_argument("--group", required=True)
    p.add_argument("--s", default="")
    p.add_argument("--t", default="")
    p.add_argument("--quasi", action="store_true")
    p.set_defaults(handler=cmd_cube_verify)

    p = sub.add_parser("tables", parents=[common], help="tablas de marcos (2k,k) a partir de primos")
    p.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--emit-sets", action="store_true")
    p.add_argument("--emit-matrix", type=int, metavar="M")
    p.add_argument("--excel")
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("matrix", parents=[common], help="exportar la matriz de signatura certificada")
    p.add_argument("--group", required=True)
    p.add_argument("--set")
    p.add_argument("--quasi", action="store_true")
    p.add_argument("--cube", action="store_true")
    p.add_argument("--s", default="")
    p.add_argument("--t", default="")
    p.add_argument("--out")
    p.add_argument("--json-out")
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("frame", parents=[common], help="factorizar el Gram de una matriz exportada")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--out")
    p.add_argument("--tol", type=float, default=TOLERANCE)
    p.set_defaults(handler=cmd_frame)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        setup_logging(args.log_level)
        return args.handler(args)
    except ValueError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"❌ Error de archivo: {e}")
        return EXIT_REJECTED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
Subcomandos de álgebra lineal: det, adj y vandermonde.
"""

import argparse
from typing import Any, Dict

from commands.common import elems_arg, json_arg, ok, resolve_system
from services.linalg_service import linalg_service
from utils.codecs import load_json, parse_matrix


def register_linalg_commands(subparsers: argparse._SubParsersAction) -> None:
    def det(args: argparse.Namespace) -> Dict[str, Any]:
        """(−)-determinante; con --row compara además la expansión de Laplace."""
        sd = resolve_system(args.system)
        A = parse_matrix(sd, load_json(args.matrix))
        if args.row is None:
            return ok(linalg_service.neg_det(sd, A), sd)
        return ok(linalg_service.laplace_expansion_check(sd, A, args.row), sd)

    def adj(args: argparse.Namespace) -> Dict[str, Any]:
        """(−)-adjunta."""
        sd = resolve_system(args.system)
        A = parse_matrix(sd, load_json(args.matrix))
        return ok(linalg_service.neg_adjoint(sd, A), sd)

    def minors(args: argparse.Namespace) -> Dict[str, Any]:
        """Determinantes de los menores, sin signo."""
        sd = resolve_system(args.system)
        A = parse_matrix(sd, load_json(args.matrix))
        return ok(linalg_service.minors(sd, A), sd)

    def vandermonde(args: argparse.Namespace) -> Dict[str, Any]:
        """Matriz de Vandermonde y la identidad de su determinante."""
        sd = resolve_system(args.system)
        a = elems_arg(sd, args.elems)
        report = linalg_service.vandermonde_identity_check(sd, a)
        report['matrix'] = linalg_service.vandermonde(sd, a)
        return ok(report, sd)

    def sym_det(args: argparse.Namespace) -> Dict[str, Any]:
        """Determinante en el simetrizado frente al de la base."""
        sd = resolve_system(args.system)
        A = parse_matrix(sd, load_json(args.matrix))
        report = linalg_service.symmetrized_det_consistency(sd, A)
        return ok(report, sd)

    parser = subparsers.add_parser('det', help='(−)-determinante')
    json_arg(parser, 'matrix', 'Matriz {"n", "rows"}')
    parser.add_argument('--row', type=int, default=None, help='Fila para la expansión de Laplace')
    parser.set_defaults(handler=det)

    parser = subparsers.add_parser('adj', help='(−)-adjunta')
    json_arg(parser, 'matrix', 'Matriz {"n", "rows"}')
    parser.set_defaults(handler=adj)

    parser = subparsers.add_parser('minors', help='Determinantes de los menores')
    json_arg(parser, 'matrix', 'Matriz {"n", "rows"}')
    parser.set_defaults(handler=minors)

    parser = subparsers.add_parser('vandermonde', help='Identidad de Vandermonde')
    json_arg(parser, 'elems', 'Lista de elementos')
    parser.set_defaults(handler=vandermonde)

    parser = subparsers.add_parser('sym-det', help='Determinante simetrizado frente al de la base')
    json_arg(parser, 'matrix', 'Matriz {"n", "rows"}')
    parser.set_defaults(handler=sym_det)

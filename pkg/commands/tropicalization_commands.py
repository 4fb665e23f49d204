"""
Subcomandos de tropicalización: trop, matroid-check, ideal-pair-check y
valuation-check.
"""

import argparse
from typing import Any, Dict, List

from commands.common import json_arg, make_rng, ok
from models.polynomial import Polynomial
from models.puiseux import PuiseuxSeries
from services.core_systems_service import core_systems_service
from services.tropicalization_service import tropicalization_service
from utils.codecs import CodecError, load_json, parse_matroid, parse_polynomial, parse_series


def _gamma_polynomial(raw: Any, puiseux: bool) -> Polynomial:
    """Polinomio sobre Γ (min-plus) o, con puiseux, tropicalizado desde Puiseux."""
    data = load_json(raw) if isinstance(raw, str) else raw
    if puiseux:
        P = parse_polynomial(tropicalization_service.make_puiseux(), data)
        return tropicalization_service.trop(P)
    return parse_polynomial(core_systems_service.make_minplus(), data)


def _series_columns(data: Any) -> List[List[Any]]:
    if not isinstance(data, list) or not data:
        raise CodecError("Las columnas deben ser una lista JSON no vacía")
    return [
        [parse_series(x) if isinstance(x, dict) else PuiseuxSeries.constant(x) for x in col]
        for col in data
    ]


def register_tropicalization_commands(subparsers: argparse._SubParsersAction) -> None:
    def trop(args: argparse.Namespace) -> Dict[str, Any]:
        """trop de un polinomio de Puiseux y sus generadores bend."""
        sd = tropicalization_service.make_puiseux()
        P = parse_polynomial(sd, load_json(args.poly))
        tP = tropicalization_service.trop(P)
        result: Dict[str, Any] = {'source': P, 'trop': tP}
        if args.bend:
            result['bend'] = [
                {'left': f, 'right': g}
                for f, g in tropicalization_service.trop_ideal_to_bend([P])
            ]
        return ok(result, sd)

    def matroid_check(args: argparse.Namespace) -> Dict[str, Any]:
        """Axiomas de matroide valuado para un candidato dado o construido."""
        if args.uniform is not None:
            try:
                rank, size = (int(x) for x in args.uniform.split(','))
            except ValueError:
                raise CodecError(f"--uniform espera 'rango,tamaño': {args.uniform}")
            candidate = tropicalization_service.uniform_matroid(rank, size)
        elif args.linear is not None:
            candidate = tropicalization_service.linear_matroid(load_json(args.linear))
        elif args.puiseux is not None:
            columns = _series_columns(load_json(args.puiseux))
            candidate = tropicalization_service.puiseux_matroid(columns)
        elif args.candidate is not None:
            candidate = parse_matroid(load_json(args.candidate))
        else:
            raise CodecError("matroid-check requiere un candidato, --uniform, --linear o --puiseux")
        report = tropicalization_service.valuated_matroid_check(candidate)
        report['candidate'] = candidate
        return ok(report)

    def ideal_pair_check(args: argparse.Namespace) -> Dict[str, Any]:
        """Eliminación del monomio común de f y g en el ideal tropical."""
        gamma = core_systems_service.make_minplus()
        f = _gamma_polynomial(args.f, args.puiseux)
        g = _gamma_polynomial(args.g, args.puiseux)
        candidates = [_gamma_polynomial(raw, False) for raw in args.candidate]
        monomial = None
        if args.monomial is not None:
            monomial = tuple(int(k) for k in load_json(args.monomial))
        report = tropicalization_service.tropical_ideal_pair_check(f, g, candidates, monomial)
        report['f'], report['g'] = f, g
        return ok(report, gamma)

    def valuation_check(args: argparse.Namespace) -> Dict[str, Any]:
        """ν = −val como valoración y val en productos y sumas muestreados."""
        sd = tropicalization_service.make_puiseux()
        return ok({
            'valuation': tropicalization_service.puiseux_valuation_check(
                make_rng(args), args.elements
            ),
            'arithmetic': tropicalization_service.val_arith_scan(make_rng(args), args.samples),
        }, sd)

    parser = subparsers.add_parser('trop', help='Tropicalización de un polinomio de Puiseux')
    json_arg(parser, 'poly', 'Polinomio con coeficientes de Puiseux')
    parser.add_argument('--bend', action='store_true', help='Incluye los generadores bend')
    parser.set_defaults(handler=trop)

    parser = subparsers.add_parser('matroid-check', help='Axiomas de matroide valuado')
    parser.add_argument('candidate', nargs='?', default=None, help='Candidato (JSON o ruta)')
    parser.add_argument('--uniform', default=None, help="U_{r,n} como 'r,n'")
    parser.add_argument('--linear', default=None, help='Columnas racionales (JSON)')
    parser.add_argument('--puiseux', default=None, help='Columnas de series de Puiseux (JSON)')
    parser.set_defaults(handler=matroid_check)

    parser = subparsers.add_parser('ideal-pair-check', help='Eliminación en un ideal tropical')
    json_arg(parser, 'f', 'Polinomio f sobre Γ')
    json_arg(parser, 'g', 'Polinomio g sobre Γ')
    parser.add_argument('--monomial', default=None, help='Exponente común (JSON)')
    parser.add_argument('--candidate', action='append', default=[],
                        help='Candidato h (JSON); repetible')
    parser.add_argument('--puiseux', action='store_true',
                        help='f y g tienen coeficientes de Puiseux')
    parser.set_defaults(handler=ideal_pair_check)

    parser = subparsers.add_parser('valuation-check', help='Valoración de Puiseux')
    parser.add_argument('--samples', type=int, default=1000, help='Pares para val(pq) y val(p + q)')
    parser.add_argument('--elements', type=int, default=40, help='Series para los axiomas')
    parser.set_defaults(handler=valuation_check)

"""
Subcomandos de sistemas: info, sys-check, classify-char, height y surpass-check.
"""

import argparse
import logging
from typing import Any, Dict

from commands.common import (
    builtin_names,
    elem_arg,
    json_arg,
    make_rng,
    ok,
    resolve_finsys,
    resolve_system,
)
from config import config
from services.core_systems_service import core_systems_service
from utils.codecs import load_json, parse_finsys

logger = logging.getLogger(__name__)


def register_core_commands(subparsers: argparse._SubParsersAction) -> None:
    def info(args: argparse.Namespace) -> Dict[str, Any]:
        """Configuración efectiva y sistemas integrados."""
        return ok({'config': config.to_dict(), 'builtins': builtin_names()})

    def sys_check(args: argparse.Namespace) -> Dict[str, Any]:
        """Valida un FinSys y reporta sus propiedades estructurales."""
        fs = parse_finsys(load_json(args.file))
        validation = core_systems_service.validate_finsys(fs)
        sd = fs.to_descriptor()
        laws = core_systems_service.check_system_laws(sd)
        surpass = core_systems_service.check_surpassing_axioms(sd)
        report = {
            'validation': validation,
            'laws': laws,
            'surpassing': {
                'holds': surpass['holds'],
                'partial_order': surpass['partial_order'],
                't_surpassing': surpass['t_surpassing'],
                'failed': sorted(k for k, v in surpass['axioms'].items() if not v['holds']),
            },
            'triple': core_systems_service.check_triple(sd),
            'unique_negation': core_systems_service.check_unique_negation(sd),
            'meta_tangible': core_systems_service.check_meta_tangible(sd),
            'bipotent': core_systems_service.check_bipotent(sd),
            'null_set': core_systems_service.check_null_set_consistency(sd),
            'precpr': core_systems_service.check_precpr_coincidence(sd),
        }
        logger.info(f"sys-check completado para {fs.name}")
        return ok(report, sd)

    def classify_char(args: argparse.Namespace) -> Dict[str, Any]:
        """Sub-triple característico del sistema."""
        sd = resolve_system(args.system)
        result = core_systems_service.characteristic_subtriple(sd)
        return ok(
            {
                'tag': result['tag'],
                'elements': result['elements'],
                'subsystem': result['subsystem'],
            },
            sd,
        )

    def height(args: argparse.Namespace) -> Dict[str, Any]:
        """Mínimo número de tangibles que suman el elemento."""
        sd = resolve_system(args.system)
        b = elem_arg(sd, args.elem)
        value = core_systems_service.height(sd, b, args.bound)
        return ok({'element': b, 'height': value}, sd)

    def surpass_check(args: argparse.Namespace) -> Dict[str, Any]:
        """Axiomas de sobrepaso, exhaustivos o muestreados."""
        sd = resolve_system(args.system)
        report = core_systems_service.check_surpassing_axioms(
            sd, rng=make_rng(args), samples=args.samples
        )
        return ok(report, sd)

    def product(args: argparse.Namespace) -> Dict[str, Any]:
        """Producto directo de dos sistemas finitos."""
        fs = core_systems_service.make_product(
            resolve_finsys(args.left), resolve_finsys(args.right)
        )
        return ok({'system': fs, 'is_triple': fs.is_triple})

    parser = subparsers.add_parser('info', help='Configuración y sistemas integrados')
    parser.set_defaults(handler=info)

    parser = subparsers.add_parser('sys-check', help='Valida un FinSys JSON')
    json_arg(parser, 'file', 'Sistema finito')
    parser.set_defaults(handler=sys_check)

    parser = subparsers.add_parser('classify-char', help='Sub-triple característico')
    parser.set_defaults(handler=classify_char)

    parser = subparsers.add_parser('height', help='Altura de un elemento')
    parser.add_argument('elem', help='Literal del elemento (nombre, "p/q", "p/q°" o JSON)')
    parser.set_defaults(handler=height)

    parser = subparsers.add_parser('surpass-check', help='Axiomas de la relación de sobrepaso')
    parser.add_argument('--samples', type=int, default=0, help='Ternas muestreadas')
    parser.set_defaults(handler=surpass_check)

    parser = subparsers.add_parser('product', help='Producto directo de sistemas finitos')
    parser.add_argument('left', help='Primer factor (nombre integrado o JSON)')
    parser.add_argument('right', help='Segundo factor (nombre integrado o JSON)')
    parser.set_defaults(handler=product)

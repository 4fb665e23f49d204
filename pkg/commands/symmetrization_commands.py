"""
Subcomandos del simetrizado: sym twist|switch|inverse|roots|action.

Los elementos se dan como pares {"kind": "pair", "pos": ..., "neg": ...}
sobre el sistema base indicado con --system.
"""

import argparse
from typing import Any, Dict

from commands.common import elem_arg, elems_arg, json_arg, ok, resolve_system
from services.symmetrization_service import symmetrization_service
from utils.codecs import load_json, parse_polynomial


def register_symmetrization_commands(subparsers: argparse._SubParsersAction) -> None:
    def twist(args: argparse.Namespace) -> Dict[str, Any]:
        """Producto twist de dos pares."""
        sym = symmetrization_service.symmetrize(resolve_system(args.system))
        x, y = elem_arg(sym, args.x), elem_arg(sym, args.y)
        return ok(symmetrization_service.twist_mul(sym, x, y), sym)

    def switch(args: argparse.Namespace) -> Dict[str, Any]:
        sym = symmetrization_service.symmetrize(resolve_system(args.system))
        return ok(symmetrization_service.switch(sym, elem_arg(sym, args.x)), sym)

    def inverse(args: argparse.Namespace) -> Dict[str, Any]:
        """Inverso twist en 𝒯̂."""
        sym = symmetrization_service.symmetrize(resolve_system(args.system))
        return ok(symmetrization_service.twist_inverse(sym, elem_arg(sym, args.x)), sym)

    def roots(args: argparse.Namespace) -> Dict[str, Any]:
        """Puntos del dominio donde (f, g) se anula en el simetrizado."""
        base = resolve_system(args.system)
        sym = symmetrization_service.symmetrize(base)
        f = parse_polynomial(base, load_json(args.f))
        g = parse_polynomial(base, load_json(args.g))
        domain = elems_arg(sym, args.domain)
        found = [b for b in domain if symmetrization_service.is_symmetrized_root(sym, f, g, b)]
        return ok({'roots': found, 'count': len(found)}, sym)

    def action(args: argparse.Namespace) -> Dict[str, Any]:
        """Acción (a₀, a₁)·x = a₀x (−) a₁x y su verificación."""
        base = resolve_system(args.system)
        sym = symmetrization_service.symmetrize(base)
        report = symmetrization_service.check_pair_action(base)
        if args.pair is not None and args.x is not None:
            report['value'] = symmetrization_service.pair_action(
                base, elem_arg(sym, args.pair), elem_arg(base, args.x)
            )
        return ok(report, sym)

    sym = subparsers.add_parser('sym', help='Simetrizado y producto twist')
    actions = sym.add_subparsers(dest='action', required=True)

    parser = actions.add_parser('twist', help='Producto twist')
    json_arg(parser, 'x', 'Par')
    json_arg(parser, 'y', 'Par')
    parser.set_defaults(handler=twist)

    parser = actions.add_parser('switch', help='Negación switch')
    json_arg(parser, 'x', 'Par')
    parser.set_defaults(handler=switch)

    parser = actions.add_parser('inverse', help='Inverso en 𝒯̂')
    json_arg(parser, 'x', 'Par')
    parser.set_defaults(handler=inverse)

    parser = actions.add_parser('roots', help='Raíces de (f, g) en el simetrizado')
    json_arg(parser, 'f', 'Polinomio f')
    json_arg(parser, 'g', 'Polinomio g')
    json_arg(parser, 'domain', 'Lista de pares')
    parser.set_defaults(handler=roots)

    parser = actions.add_parser('action', help='Acción de Â sobre el sistema base')
    parser.add_argument('--pair', default=None, help='Par (JSON)')
    parser.add_argument('--x', default=None, help='Elemento del sistema base')
    parser.set_defaults(handler=action)

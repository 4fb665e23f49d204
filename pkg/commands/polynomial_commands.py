"""
Subcomandos de polinomios: eval, roots, root-bound, bend-equiv, circ-equiv,
tangibility y rewrite.
"""

import argparse
from typing import Any, Dict, List, Tuple

from commands.common import elems_arg, json_arg, make_rng, ok, resolve_system
from models.elem import Elem
from models.system import SystemDescriptor
from services.polynomial_service import polynomial_service
from utils.codecs import CodecError, load_json, parse_elem, parse_polynomial

BEND_DEFAULT_SYSTEM = 'maxplus'


def points_arg(sd: SystemDescriptor, raw: str) -> List[Tuple[Elem, ...]]:
    """Lista de puntos: cada entrada es un elemento o una lista de coordenadas."""
    data = load_json(raw)
    if not isinstance(data, list):
        raise CodecError("Se esperaba una lista JSON de puntos")
    return [
        tuple(parse_elem(sd, x) for x in p) if isinstance(p, list) else (parse_elem(sd, p),)
        for p in data
    ]


def register_polynomial_commands(subparsers: argparse._SubParsersAction) -> None:
    def evaluate(args: argparse.Namespace) -> Dict[str, Any]:
        """f(b) en un punto."""
        sd = resolve_system(args.system)
        f = parse_polynomial(sd, load_json(args.poly))
        point = elems_arg(sd, args.point)
        return ok(polynomial_service.eval(sd, f, point), sd)

    def roots(args: argparse.Namespace) -> Dict[str, Any]:
        """∘-raíces en un dominio finito."""
        sd = resolve_system(args.system)
        f = parse_polynomial(sd, load_json(args.poly))
        found = polynomial_service.circ_roots(sd, f, elems_arg(sd, args.domain))
        return ok({'roots': found, 'count': len(found), 'degree': f.degree()}, sd)

    def root_bound(args: argparse.Namespace) -> Dict[str, Any]:
        """Enumeración exhaustiva de la cota de ∘-raíces."""
        sd = resolve_system(args.system)
        report = polynomial_service.check_root_bound(
            sd, args.degree, elems_arg(sd, args.pool), elems_arg(sd, args.domain)
        )
        return ok(report, sd)

    def bend_equiv(args: argparse.Namespace) -> Dict[str, Any]:
        """Equivalencia en la congruencia bend, con cota de pasos --bound."""
        sd = resolve_system(args.system or BEND_DEFAULT_SYSTEM)
        f = parse_polynomial(sd, load_json(args.f))
        g = parse_polynomial(sd, load_json(args.g))
        result = polynomial_service.bend_equiv(sd, f, g, args.bound)
        return ok({'equiv': result['equivalent'], 'steps': result['steps']}, sd)

    def circ_equiv(args: argparse.Namespace) -> Dict[str, Any]:
        """f(b)^∘ = g(b)^∘ en cada punto del dominio."""
        sd = resolve_system(args.system)
        f = parse_polynomial(sd, load_json(args.f))
        g = parse_polynomial(sd, load_json(args.g))
        domain = points_arg(sd, args.domain)
        return ok({'equiv': polynomial_service.circ_equiv(sd, f, g, domain),
                   'points': len(domain)}, sd)

    def tangibility(args: argparse.Namespace) -> Dict[str, Any]:
        """Tangibilidad funcional sobre una muestra de puntos."""
        sd = resolve_system(args.system)
        f = parse_polynomial(sd, load_json(args.poly))
        report = polynomial_service.is_functionally_tangible(sd, f, points_arg(sd, args.sample))
        return ok(report, sd)

    def rewrite(args: argparse.Namespace) -> Dict[str, Any]:
        """Reescritura aleatoria que conserva la clase bend."""
        sd = resolve_system(args.system or BEND_DEFAULT_SYSTEM)
        f = parse_polynomial(sd, load_json(args.poly))
        g = polynomial_service.forward_rewrite(sd, f, make_rng(args), args.steps)
        return ok({'source': f, 'rewritten': g}, sd)

    parser = subparsers.add_parser('eval', help='Evalúa un polinomio')
    json_arg(parser, 'poly', 'Polinomio')
    json_arg(parser, 'point', 'Lista de coordenadas')
    parser.set_defaults(handler=evaluate)

    parser = subparsers.add_parser('roots', help='∘-raíces en un dominio')
    json_arg(parser, 'poly', 'Polinomio univariado')
    json_arg(parser, 'domain', 'Lista de elementos')
    parser.set_defaults(handler=roots)

    parser = subparsers.add_parser('root-bound', help='Cota de ∘-raíces por enumeración')
    parser.add_argument('--degree', type=int, required=True, help='Grado n')
    json_arg(parser, 'pool', 'Coeficientes tangibles')
    json_arg(parser, 'domain', 'Dominio tangible')
    parser.set_defaults(handler=root_bound)

    parser = subparsers.add_parser('bend-equiv', help='Equivalencia bend')
    json_arg(parser, 'f', 'Polinomio f')
    json_arg(parser, 'g', 'Polinomio g')
    parser.set_defaults(handler=bend_equiv)

    parser = subparsers.add_parser('circ-equiv', help='∘-equivalencia en un dominio')
    json_arg(parser, 'f', 'Polinomio f')
    json_arg(parser, 'g', 'Polinomio g')
    json_arg(parser, 'domain', 'Lista de puntos')
    parser.set_defaults(handler=circ_equiv)

    parser = subparsers.add_parser('tangibility', help='Tangibilidad funcional')
    json_arg(parser, 'poly', 'Polinomio')
    json_arg(parser, 'sample', 'Lista de puntos')
    parser.set_defaults(handler=tangibility)

    parser = subparsers.add_parser('rewrite', help='Reescritura bend aleatoria')
    json_arg(parser, 'poly', 'Polinomio')
    parser.add_argument('--steps', type=int, default=4, help='Pasos de reescritura')
    parser.set_defaults(handler=rewrite)

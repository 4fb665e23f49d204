"""
Subcomandos de hipercuerpos: hyper s-of-h|check|functor-t|functor-c|morphism|iso.
"""

import argparse
import logging
from typing import Any, Dict

from commands.common import json_arg, make_rng, ok, resolve_hyperfield, resolve_system
from services.core_systems_service import core_systems_service
from services.hyperfield_service import hyperfield_service
from utils.codecs import CodecError, load_json

logger = logging.getLogger(__name__)


def _describe(sd) -> Dict[str, Any]:
    """Tablas del sistema si es finito; descriptor si es paramétrico."""
    if sd.is_finite:
        fs = core_systems_service.tabulate(sd)
        return {'system': fs, 'is_triple': fs.is_triple, 'size': fs.size}
    return {'system': sd.to_dict(), 'is_triple': sd.is_triple, 'size': None}


def register_hyperfield_commands(subparsers: argparse._SubParsersAction) -> None:
    def s_of_h(args: argparse.Namespace) -> Dict[str, Any]:
        """S(H) como sistema de semianillo."""
        h = resolve_hyperfield(args.hyperfield)
        sd = hyperfield_service.build_S_of_H(h)
        result = _describe(sd)
        if not h.is_finite:
            result['isomorphism'] = hyperfield_service.check_tropical_isomorphism(
                make_rng(args), args.samples
            )
        return ok(result, sd)

    def check(args: argparse.Namespace) -> Dict[str, Any]:
        """Axiomas de hipercuerpo."""
        h = resolve_hyperfield(args.hyperfield)
        sd = hyperfield_service.build_S_of_H(h)
        report = hyperfield_service.check_hyperfield(h, make_rng(args), args.samples)
        return ok(report, sd)

    def functor_t(args: argparse.Namespace) -> Dict[str, Any]:
        """t(𝒜) = (𝒜, 𝒜 ∖ {𝟘}) para semidominios."""
        sd = resolve_system(args.system)
        return ok(hyperfield_service.functor_t(sd), sd)

    def functor_c(args: argparse.Namespace) -> Dict[str, Any]:
        """c(H) = (S(H), H, −, ⊆)."""
        h = resolve_hyperfield(args.hyperfield)
        sd = hyperfield_service.functor_c(h)
        return ok(_describe(sd), sd)

    def morphism(args: argparse.Namespace) -> Dict[str, Any]:
        """a(f): S(H₁) → S(H₂) para un homomorfismo de hipercuerpos."""
        h1 = resolve_hyperfield(args.source)
        h2 = resolve_hyperfield(args.target)
        fmap = load_json(args.map)
        if not isinstance(fmap, dict):
            raise CodecError("El mapa debe ser un objeto {nombre: nombre}")
        result = hyperfield_service.hyperfield_morphism_map(
            {str(k): str(v) for k, v in fmap.items()}, h1, h2
        )
        s1 = hyperfield_service.build_S_of_H(h1)
        s2 = hyperfield_service.build_S_of_H(h2)
        result['map'] = {s1.label(x): s2.label(y) for x, y in result['map'].items()}
        return ok(result)

    def iso(args: argparse.Namespace) -> Dict[str, Any]:
        """S(tropical) frente al supertropical en pares muestreados."""
        sd = core_systems_service.make_supertropical()
        return ok(hyperfield_service.check_tropical_isomorphism(make_rng(args), args.samples), sd)

    hyper = subparsers.add_parser('hyper', help='Hipercuerpos y sus funtores')
    actions = hyper.add_subparsers(dest='action', required=True)

    parser = actions.add_parser('s-of-h', help='Sistema S(H)')
    parser.add_argument('hyperfield', help='krasner, signs, tropical o Hyperfield JSON')
    parser.add_argument('--samples', type=int, default=1000, help='Muestras (caso tropical)')
    parser.set_defaults(handler=s_of_h)

    parser = actions.add_parser('check', help='Axiomas de hipercuerpo')
    parser.add_argument('hyperfield', help='krasner, signs, tropical o Hyperfield JSON')
    parser.add_argument('--samples', type=int, default=2000, help='Ternas (caso tropical)')
    parser.set_defaults(handler=check)

    parser = actions.add_parser('functor-t', help='Funtor t sobre --system')
    parser.set_defaults(handler=functor_t)

    parser = actions.add_parser('functor-c', help='Funtor c')
    parser.add_argument('hyperfield', help='krasner, signs, tropical o Hyperfield JSON')
    parser.set_defaults(handler=functor_c)

    parser = actions.add_parser('morphism', help='a(f) para un homomorfismo')
    parser.add_argument('source', help='Hipercuerpo de partida')
    parser.add_argument('target', help='Hipercuerpo de llegada')
    json_arg(parser, 'map', 'Mapa por nombres')
    parser.set_defaults(handler=morphism)

    parser = actions.add_parser('iso', help='S(tropical) ≅ supertropical')
    parser.add_argument('--samples', type=int, default=1000, help='Pares muestreados')
    parser.set_defaults(handler=iso)

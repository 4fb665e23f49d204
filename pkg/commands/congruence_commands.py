"""
Subcomandos de congruencias sobre un sistema finito (--system):
cong closure|quotient|prime|radical|spectrum|height|twist|galois|localize|annihilator.

Las congruencias se dan como lista de pares [["a", "b"], ...] o como
{"pairs": [...]}; siempre se cierran antes de operar.
"""

import argparse
import logging
from typing import Any, Dict, List

from commands.common import indices, json_arg, ok, resolve_finsys, resolve_module
from models.congruence import Congruence
from models.system import FinSys
from services.congruence_service import congruence_service
from services.localization_service import localization_service
from utils.codecs import CodecError, load_json, parse_congruence

logger = logging.getLogger(__name__)


def congruence_arg(fs: FinSys, raw: str) -> Congruence:
    """Congruencia generada por los pares dados."""
    data = load_json(raw)
    if isinstance(data, list):
        data = {'pairs': data}
    seed = parse_congruence(data, fs)
    return congruence_service.generate(fs, seed.generators or ())


def names_arg(raw: str) -> List[str]:
    data = load_json(raw)
    if not isinstance(data, list):
        raise CodecError("Se esperaba una lista JSON de nombres")
    return [str(x) for x in data]


def register_congruence_commands(subparsers: argparse._SubParsersAction) -> None:
    def closure(args: argparse.Namespace) -> Dict[str, Any]:
        """Cierre de congruencia de los pares dados."""
        fs = resolve_finsys(args.system)
        C = congruence_arg(fs, args.pairs)
        report = congruence_service.verify_congruence(C)
        return ok({
            'congruence': C,
            'tangible': congruence_service.is_T_congruence(C),
            'classes': len(C.classes),
            'verified': report,
        })

    def quotient(args: argparse.Namespace) -> Dict[str, Any]:
        """Sistema cociente 𝒜/C y la proyección por nombres."""
        fs = resolve_finsys(args.system)
        C = congruence_arg(fs, args.pairs)
        q, projection = congruence_service.quotient(C)
        return ok({
            'system': q,
            'projection': {fs.names[i]: q.names[j] for i, j in enumerate(projection)},
        })

    def prime(args: argparse.Namespace) -> Dict[str, Any]:
        """Clasificación de una congruencia."""
        fs = resolve_finsys(args.system)
        C = congruence_arg(fs, args.pairs)
        tangible = congruence_service.is_T_congruence(C)
        return ok({
            'congruence': C,
            'tangible': tangible,
            'prime': congruence_service.is_prime(C),
            't_prime': congruence_service.is_T_prime(C),
            'semiprime': congruence_service.is_semiprime(C),
            'irreducible': congruence_service.is_irreducible(C),
            'maximal': congruence_service.is_maximal(C) if tangible else None,
            'prime_criterion': congruence_service.prime_criterion(C),
            'semiprime_criterion': congruence_service.semiprime_criterion(C),
        })

    def radical(args: argparse.Namespace) -> Dict[str, Any]:
        """√C frente a la intersección de las primas que lo contienen."""
        fs = resolve_finsys(args.system)
        return ok(congruence_service.check_radical_decomposition(congruence_arg(fs, args.pairs)))

    def spectrum(args: argparse.Namespace) -> Dict[str, Any]:
        """Retículo con su clasificación y la comprobación de maximales primas."""
        fs = resolve_finsys(args.system)
        report = congruence_service.check_prime_characterization(fs, args.tangible)
        report['maximal_primes'] = congruence_service.check_maximal_primes(fs)
        report['size'] = len(report['rows'])
        return ok(report)

    def height(args: argparse.Namespace) -> Dict[str, Any]:
        fs = resolve_finsys(args.system)
        return ok({'system': fs.name, 'height': congruence_service.chain_height(fs)})

    def twist(args: argparse.Namespace) -> Dict[str, Any]:
        """C₁⊙C₂ por miembros y por generadores; con --power, C₁ elevado a k."""
        fs = resolve_finsys(args.system)
        C1 = congruence_arg(fs, args.left)
        C2 = congruence_arg(fs, args.right)
        report = congruence_service.compare_twist_modes(C1, C2)
        if args.power is not None:
            report['power'] = congruence_service.power(C1, args.power)
        return ok(report)

    def galois(args: argparse.Namespace) -> Dict[str, Any]:
        """Correspondencia 𝒯-congruencias ⇄ 𝒯-submódulos y cancelatividad."""
        fs = resolve_finsys(args.system)
        report = congruence_service.galois_check(fs)
        cancellative = congruence_service.is_cancellative(fs)
        report['cancellative'] = {
            'additive': cancellative['additive'],
            'multiplicative': cancellative['multiplicative'],
            'witness': {
                kind: None if w is None else [fs.names[i] for i in w]
                for kind, w in cancellative['witness'].items()
            },
        }
        report['failures'] = [
            {
                key: [fs.names[i] for i in value] if key in ('submodule', 'image')
                and isinstance(value, list) else value
                for key, value in failure.items()
            }
            for failure in report['failures']
        ]
        return ok(report)

    def localize(args: argparse.Namespace) -> Dict[str, Any]:
        """S⁻¹𝒜, el núcleo del mapa canónico y, con --congruence, S⁻¹C."""
        fs = resolve_finsys(args.system)
        S = indices(fs, names_arg(args.denominators))
        localized = localization_service.localize(fs, S)
        target: FinSys = localized['system']
        kernel = localization_service.check_kernel(fs, S)
        result: Dict[str, Any] = {
            'system': target,
            'canonical': {
                fs.names[b]: target.names[k] for b, k in enumerate(localized['canonical'])
            },
            'fractions': [fr.to_dict(fs) for fr in localized['fractions']],
            'denominators': [fs.names[s] for s in localized['denominators']],
            'kernel': kernel,
            'regular': localization_service.is_regular(fs, S),
        }
        if args.congruence is not None:
            C = congruence_arg(fs, args.congruence)
            image = localization_service.localize_congruence(C, S, localized)
            result['congruence'] = {
                'source': C,
                'localized': image,
                'c_regular': congruence_service.is_c_regular(C, localized['denominators']),
                'source_prime': congruence_service.is_prime(C),
                'localized_prime': congruence_service.is_prime(image),
            }
        return ok(result)

    def annihilator(args: argparse.Namespace) -> Dict[str, Any]:
        """Ann(S) en un módulo; con un único elemento, además la simplicidad de 𝒜s."""
        fs = resolve_finsys(args.system)
        module = resolve_module(args.module, fs)
        S = indices(module, names_arg(args.elements))
        result: Dict[str, Any] = {'annihilator': congruence_service.annihilator(fs, module, S)}
        if len(S) == 1:
            check = congruence_service.annihilator_simplicity_check(fs, module, S[0])
            result.update({k: v for k, v in check.items() if k != 'annihilator'})
        return ok(result)

    cong = subparsers.add_parser('cong', help='Congruencias de un sistema finito')
    actions = cong.add_subparsers(dest='action', required=True)

    for name, handler, help_text in (
        ('closure', closure, 'Congruencia generada'),
        ('quotient', quotient, 'Sistema cociente'),
        ('prime', prime, 'Clasificación prima / semiprima / maximal'),
        ('radical', radical, 'Radical y descomposición'),
    ):
        parser = actions.add_parser(name, help=help_text)
        json_arg(parser, 'pairs', 'Pares generadores')
        parser.set_defaults(handler=handler)

    parser = actions.add_parser('spectrum', help='Retículo clasificado')
    parser.add_argument('--tangible', action='store_true', help='Sólo 𝒯-congruencias')
    parser.set_defaults(handler=spectrum)

    parser = actions.add_parser('height', help='Altura de cadenas de 𝒯-primas')
    parser.set_defaults(handler=height)

    parser = actions.add_parser('twist', help='Producto twist de congruencias')
    json_arg(parser, 'left', 'Pares de C₁')
    json_arg(parser, 'right', 'Pares de C₂')
    parser.add_argument('--power', type=int, default=None, help='Potencia twist de C₁')
    parser.set_defaults(handler=twist)

    parser = actions.add_parser('galois', help='Congruencias frente a submódulos')
    parser.set_defaults(handler=galois)

    parser = actions.add_parser('localize', help='Localización S⁻¹𝒜')
    json_arg(parser, 'denominators', 'Lista de denominadores')
    parser.add_argument('--congruence', default=None, help='Pares de C a localizar')
    parser.set_defaults(handler=localize)

    parser = actions.add_parser('annihilator', help='Anulador de un subconjunto')
    json_arg(parser, 'elements', 'Lista de elementos del módulo')
    parser.add_argument('--module', default='regular', help="'regular', 'free:n' o ModSys JSON")
    parser.set_defaults(handler=annihilator)

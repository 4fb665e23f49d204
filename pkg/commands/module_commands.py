"""
Subcomandos de sistemas de módulos sobre un base finito (--system):
mod laws|hom|dual|tensor|tensor-map|nonmonoidal|adjoint|classify|kernel|
image|exact|span|quotient.

Los módulos se indican como 'regular', 'free:n', 'nonmonoidal' o ModSys
JSON; los morfismos como {"source", "target", "map"} o 'nonmonoidal'.
"""

import argparse
import logging
from typing import Any, Dict, List, Mapping

from commands.common import (
    indices,
    json_arg,
    ok,
    resolve_finsys,
    resolve_module,
    resolve_morphism,
)
from commands.congruence_commands import names_arg
from models.module_system import ModSys, MorphismTable
from models.system import FinSys
from services.module_system_service import module_system_service
from services.tensor_service import tensor_service
from utils.codecs import CodecError, load_json, parse_morphism

logger = logging.getLogger(__name__)

MODULE_DEFAULT_SYSTEM = 'boolean'


def _names(M: ModSys, items) -> List[str]:
    return [M.names[i] for i in items]


def chain_arg(raw: str, ground: FinSys) -> List[MorphismTable]:
    """
    Cadena {"modules": {clave: módulo}, "morphisms": [{source, target, map}]}
    donde source y target nombran claves de "modules".
    """
    data = load_json(raw)
    if not isinstance(data, Mapping) or 'morphisms' not in data:
        raise CodecError("La cadena requiere el campo morphisms")
    modules = {
        key: resolve_module(spec, ground) for key, spec in data.get('modules', {}).items()
    }
    chain = []
    for entry in data['morphisms']:
        source = modules.get(entry.get('source'), None)
        target = modules.get(entry.get('target'), None)
        if source is None or target is None:
            raise CodecError(
                f"Módulos no declarados en la cadena: {entry.get('source')}, {entry.get('target')}"
            )
        chain.append(parse_morphism(entry, source, target))
    return chain


def tensor_report(result: Dict[str, Any]) -> Dict[str, Any]:
    """Resultado de tensor con tensores simples y representantes por nombre."""
    M1, M2, module = result['left'], result['right'], result['module']
    return {
        'module': module,
        'size': module.size,
        'free_size': result['free_size'],
        'bilinear': {
            f"{M1.names[x]}⊗{M2.names[y]}": module.names[result['bilinear'][x][y]]
            for x in M1.elements for y in M2.elements
        },
        'representatives': {
            module.names[k]: rep.to_dict(M1, M2)
            for k, rep in enumerate(result['representatives'])
        },
        'negation_balanced': tensor_service.negation_balanced(result),
    }


def register_module_commands(subparsers: argparse._SubParsersAction) -> None:
    def laws(args: argparse.Namespace) -> Dict[str, Any]:
        """Leyes de módulo, negación única, ℳ_Null y la acción de pares."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        M = resolve_module(args.module, ground)
        return ok({
            'module': M,
            'laws': module_system_service.check_module_laws(M),
            'unique_negation': module_system_service.check_unique_negation(M),
            'null_set': _names(M, sorted(M.null_set)),
            'is_triple': M.is_triple,
            'pair_action': module_system_service.pair_action_check(M),
        })

    def hom(args: argparse.Namespace) -> Dict[str, Any]:
        """Hom(M, N) como módulo y la búsqueda de isomorfismo."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        M = resolve_module(args.source, ground)
        N = resolve_module(args.target, ground)
        result = module_system_service.hom_triple(M, N)
        iso = module_system_service.check_isomorphism(M, N)
        if iso['map'] is not None:
            iso['map'] = {M.names[i]: N.names[v] for i, v in enumerate(iso['map'])}
        return ok({
            'module': result['module'],
            'count': len(result['morphisms']),
            'morphisms': result['morphisms'],
            'isomorphism': iso,
        })

    def dual(args: argparse.Namespace) -> Dict[str, Any]:
        """𝒮* para 𝒮 = 𝒜^(n) con el emparejamiento a ↦ a*."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        result = module_system_service.dual_system(args.rank, ground)
        S, D = result['source'], result['dual']
        return ok({
            'source': S.name,
            'dual': D,
            'pairing': {
                S.names[a]: None if k is None else D.names[k]
                for a, k in enumerate(result['pairing'])
            },
            'onto': result['onto'],
            'injective': result['injective'],
        })

    def tensor(args: argparse.Namespace) -> Dict[str, Any]:
        """M₁ ⊗ M₂; con --power k, la potencia y el álgebra truncada de M₁."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        M1 = resolve_module(args.left, ground)
        if args.power is not None:
            power = tensor_service.tensor_power(M1, args.power)
            algebra = tensor_service.tensor_algebra(M1, args.power)
            return ok({'power': power, 'algebra_size': algebra.size, 'algebra': algebra})
        if args.right is None:
            raise CodecError("tensor requiere dos módulos o --power")
        M2 = resolve_module(args.right, ground)
        return ok(tensor_report(tensor_service.tensor(M1, M2, negated=not args.plain)))

    def tensor_map(args: argparse.Namespace) -> Dict[str, Any]:
        """f₁ ⊗ f₂ sobre las clases del tensor."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        f1 = resolve_morphism(args.f1, ground)
        f2 = resolve_morphism(args.f2, ground)
        return ok(tensor_service.tensor_of_homomorphisms(f1, f2))

    def nonmonoidal(args: argparse.Namespace) -> Dict[str, Any]:
        """Dos agrupaciones de un tensor con imágenes distintas bajo f ⊗ f."""
        return ok(tensor_service.nonfunctoriality_witness())

    def adjoint(args: argparse.Namespace) -> Dict[str, Any]:
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        mods = [resolve_module(spec, ground) for spec in (args.m1, args.m2, args.m3)]
        return ok(tensor_service.adjoint_bijection_check(*mods))

    def classify(args: argparse.Namespace) -> Dict[str, Any]:
        """Clase del morfismo y las leyes derivadas de un ⪯-morfismo."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        f = resolve_morphism(args.morphism, ground)
        report = module_system_service.classify_morphism(f)
        report['derived'] = module_system_service.derived_morphism_laws(f)
        return ok(report)

    def kernel(args: argparse.Namespace) -> Dict[str, Any]:
        """𝒯-núcleo, Null-mónico, Null-sobre y la factorización por el núcleo."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        f = resolve_morphism(args.morphism, ground)
        M = f.source
        result: Dict[str, Any] = {
            't_kernel': _names(M, module_system_service.t_kernel(f)),
            'null_morphism': module_system_service.is_null_morphism(f),
            'null_monic': module_system_service.null_monic(f),
            't_image': _names(f.target, sorted(module_system_service.t_image(f))),
            'null_onto': module_system_service.null_onto(f),
            'epic': module_system_service.null_onto_epic_check(f),
            'congruence_kernel': module_system_service.congruence_kernel(f),
        }
        if module_system_service.is_homomorphism(f):
            projection, monic = module_system_service.factor_through(f)
            result['factorization'] = {'projection': projection, 'monic': monic}
        return ok(result)

    def image(args: argparse.Namespace) -> Dict[str, Any]:
        """Imagen de una congruencia del módulo de partida."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        f = resolve_morphism(args.morphism, ground)
        pairs = load_json(args.pairs)
        gens = [(f.source.index(str(a)), f.source.index(str(b))) for a, b in pairs]
        C = module_system_service.generate_module_congruence(f.source, gens)
        return ok({'congruence': C, 'image': module_system_service.congruence_image(f, C)})

    def exact(args: argparse.Namespace) -> Dict[str, Any]:
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        return ok(module_system_service.exactness(chain_arg(args.chain, ground)))

    def span(args: argparse.Namespace) -> Dict[str, Any]:
        """⪯-span, ⪯-independencia y ⪯-base de una familia de vectores."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        M = resolve_module(args.module, ground)
        vs = indices(M, names_arg(args.vectors))
        targets = None if args.targets is None else indices(M, names_arg(args.targets))
        witness = module_system_service.independence_witness(vs, M)
        symmetric = module_system_service.symmetric_base(vs, M)
        return ok({
            'spans': module_system_service.span_check(vs, M, targets),
            'independent': witness is None,
            'witness': None if witness is None else [ground.names[b] for b in witness],
            'base': module_system_service.is_base(vs, M),
            'symmetric': {k: v for k, v in symmetric.items() if k != 'module'},
        })

    def quotient(args: argparse.Namespace) -> Dict[str, Any]:
        """ℳ/C para la congruencia de módulo generada por los pares."""
        ground = resolve_finsys(args.system or MODULE_DEFAULT_SYSTEM)
        M = resolve_module(args.module, ground)
        pairs = load_json(args.pairs)
        C = module_system_service.generate_module_congruence(
            M, [(M.index(str(a)), M.index(str(b))) for a, b in pairs]
        )
        Q, projection = module_system_service.quotient_module(C)
        return ok({'congruence': C, 'module': Q, 'projection': projection})

    mod = subparsers.add_parser('mod', help='Sistemas de módulos, Hom y tensor')
    actions = mod.add_subparsers(dest='action', required=True)

    parser = actions.add_parser('laws', help='Leyes de módulo')
    parser.add_argument('module', help="'regular', 'free:n', 'nonmonoidal' o ModSys JSON")
    parser.set_defaults(handler=laws)

    parser = actions.add_parser('hom', help='Hom(M, N)')
    parser.add_argument('source', help='Módulo de partida')
    parser.add_argument('target', help='Módulo de llegada')
    parser.set_defaults(handler=hom)

    parser = actions.add_parser('dual', help='Sistema dual de 𝒜^(n)')
    parser.add_argument('--rank', type=int, default=2, help='Rango n')
    parser.set_defaults(handler=dual)

    parser = actions.add_parser('tensor', help='Producto tensorial')
    parser.add_argument('left', help='Primer factor')
    parser.add_argument('right', nargs='?', default=None, help='Segundo factor')
    parser.add_argument('--plain', action='store_true', help='Tensor sin balance de (−)')
    parser.add_argument('--power', type=int, default=None, help='Potencia tensorial (1-3)')
    parser.set_defaults(handler=tensor)

    parser = actions.add_parser('tensor-map', help='f₁ ⊗ f₂')
    json_arg(parser, 'f1', 'Morfismo f₁')
    json_arg(parser, 'f2', 'Morfismo f₂')
    parser.set_defaults(handler=tensor_map)

    parser = actions.add_parser('nonmonoidal', help='Testigo de no funtorialidad')
    parser.set_defaults(handler=nonmonoidal)

    parser = actions.add_parser('adjoint', help='Adjunción tensor-Hom')
    for name in ('m1', 'm2', 'm3'):
        parser.add_argument(name, help='Módulo')
    parser.set_defaults(handler=adjoint)

    parser = actions.add_parser('classify', help='Clasificación de un morfismo')
    json_arg(parser, 'morphism', "Morfismo o 'nonmonoidal'")
    parser.set_defaults(handler=classify)

    parser = actions.add_parser('kernel', help='Núcleos, imagen y factorización')
    json_arg(parser, 'morphism', "Morfismo o 'nonmonoidal'")
    parser.set_defaults(handler=kernel)

    parser = actions.add_parser('image', help='Imagen de una congruencia')
    json_arg(parser, 'morphism', 'Homomorfismo')
    json_arg(parser, 'pairs', 'Pares generadores en el módulo de partida')
    parser.set_defaults(handler=image)

    parser = actions.add_parser('exact', help='Exactitud de una cadena')
    json_arg(parser, 'chain', 'Cadena {"modules", "morphisms"}')
    parser.set_defaults(handler=exact)

    parser = actions.add_parser('span', help='⪯-span, independencia y base')
    parser.add_argument('module', help='Módulo')
    json_arg(parser, 'vectors', 'Lista de vectores')
    parser.add_argument('--targets', default=None, help='Subconjunto a cubrir (JSON)')
    parser.set_defaults(handler=span)

    parser = actions.add_parser('quotient', help='Módulo cociente')
    parser.add_argument('module', help='Módulo')
    json_arg(parser, 'pairs', 'Pares generadores')
    parser.set_defaults(handler=quotient)

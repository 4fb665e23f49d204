"""
Utilidades compartidas por los subcomandos.

Resuelve sistemas, hipercuerpos y módulos desde nombres integrados o
archivos JSON, y construye el generador aleatorio sembrado.
"""

import argparse
from functools import lru_cache
from typing import Any, Callable, Dict, List, Mapping, Optional

import numpy as np

from config import config
from models.hyperfield import Hyperfield
from models.module_system import ModSys, MorphismTable
from models.system import FinSys, SystemDescriptor
from services.core_systems_service import core_systems_service
from services.hyperfield_service import hyperfield_service
from services.module_system_service import module_system_service
from services.symmetrization_service import symmetrization_service
from services.tropicalization_service import tropicalization_service
from utils.codecs import (
    CodecError,
    Encoder,
    load_json,
    parse_elem,
    parse_finsys,
    parse_hyperfield,
    parse_modsys,
    parse_morphism,
)

Handler = Callable[[argparse.Namespace], Dict[str, Any]]


def _chain3() -> FinSys:
    return core_systems_service.tabulate(
        core_systems_service.make_supertropical([0]), name='chain3'
    )


def _sym_finite(fs: FinSys, name: str) -> FinSys:
    return core_systems_service.tabulate(
        symmetrization_service.symmetrize(fs.to_descriptor()), name=name
    )


FINITE_SYSTEMS: Dict[str, Callable[[], FinSys]] = {
    'boolean': core_systems_service.boolean_finsys,
    'chain3': _chain3,
    'sym-boolean': lambda: _sym_finite(core_systems_service.boolean_finsys(), 'sym-boolean'),
    'sym-chain3': lambda: _sym_finite(_chain3(), 'sym-chain3'),
    's-krasner': lambda: core_systems_service.tabulate(
        hyperfield_service.build_S_of_H(hyperfield_service.make_krasner()), name='s-krasner'
    ),
    's-signs': lambda: core_systems_service.tabulate(
        hyperfield_service.build_S_of_H(hyperfield_service.make_signs()), name='s-signs'
    ),
}

PARAMETRIC_SYSTEMS: Dict[str, Callable[[], SystemDescriptor]] = {
    'supertropical': core_systems_service.make_supertropical,
    'maxplus': core_systems_service.make_maxplus,
    'minplus': core_systems_service.make_minplus,
    'nat': core_systems_service.make_nat,
    'puiseux': tropicalization_service.make_puiseux,
    'sym-supertropical': lambda: symmetrization_service.symmetrize(
        core_systems_service.make_supertropical()
    ),
    's-tropical': lambda: hyperfield_service.build_S_of_H(
        hyperfield_service.make_tropical_hyperfield()
    ),
}

HYPERFIELDS: Dict[str, Callable[[], Hyperfield]] = {
    'krasner': hyperfield_service.make_krasner,
    'signs': hyperfield_service.make_signs,
    'tropical': hyperfield_service.make_tropical_hyperfield,
}

DEFAULT_SYSTEM = 'supertropical'


def builtin_names() -> Dict[str, List[str]]:
    return {
        'finite': sorted(FINITE_SYSTEMS),
        'parametric': sorted(PARAMETRIC_SYSTEMS),
        'hyperfields': sorted(HYPERFIELDS),
    }


@lru_cache(maxsize=None)
def _finite_builtin(name: str) -> FinSys:
    return FINITE_SYSTEMS[name]()


def resolve_finsys(spec: Optional[str]) -> FinSys:
    """
    Sistema finito por nombre integrado o archivo JSON.

    Raises:
        CodecError: Si el nombre es paramétrico o el archivo es inválido
    """
    if spec is None:
        raise CodecError("La operación requiere --system con un sistema finito")
    if spec in FINITE_SYSTEMS:
        return _finite_builtin(spec)
    if spec in PARAMETRIC_SYSTEMS:
        raise CodecError(f"{spec} no es un sistema finito")
    return parse_finsys(load_json(spec))


def resolve_system(spec: Optional[str]) -> SystemDescriptor:
    """Descriptor por nombre integrado (finito o paramétrico) o archivo FinSys JSON."""
    spec = spec or DEFAULT_SYSTEM
    if spec in PARAMETRIC_SYSTEMS:
        return PARAMETRIC_SYSTEMS[spec]()
    return resolve_finsys(spec).to_descriptor()


def resolve_hyperfield(spec: str) -> Hyperfield:
    if spec in HYPERFIELDS:
        return HYPERFIELDS[spec]()
    return parse_hyperfield(load_json(spec))


def resolve_module(spec: Any, ground: FinSys) -> ModSys:
    """
    Módulo desde 'regular', 'free:n', un archivo o un diccionario ModSys.

    Los nombres integrados se construyen sobre el sistema base dado.
    """
    if isinstance(spec, str):
        if spec == 'regular':
            return module_system_service.regular_module(ground)
        if spec.startswith('free:'):
            try:
                n = int(spec.split(':', 1)[1])
            except ValueError:
                raise CodecError(f"Rango libre inválido: {spec}")
            return module_system_service.free_module(ground, n)
        if spec == 'nonmonoidal':
            return module_system_service.nonmonoidal_fragment()[0]
        spec = load_json(spec)
    if not isinstance(spec, Mapping):
        raise CodecError("Un módulo debe ser un nombre integrado o un objeto JSON")
    return parse_modsys(spec, None if 'ground' in spec else ground)


def resolve_morphism(spec: Any, ground: FinSys) -> MorphismTable:
    """
    Morfismo {"source": módulo, "target": módulo, "map": {...}} o el
    colapso integrado 'nonmonoidal'.
    """
    if spec == 'nonmonoidal':
        return module_system_service.nonmonoidal_fragment()[1]
    data = load_json(spec) if isinstance(spec, str) else spec
    missing = [k for k in ('source', 'target', 'map') if k not in data]
    if missing:
        raise CodecError(f"Campos requeridos faltantes: {', '.join(missing)}")
    source = resolve_module(data['source'], ground)
    target = resolve_module(data['target'], ground)
    return parse_morphism(data, source, target)


def indices(fs: Any, names: List[str]) -> List[int]:
    """Índices de nombres en un FinSys o ModSys."""
    return [fs.index(str(x)) for x in names]


def make_rng(args: argparse.Namespace) -> np.random.Generator:
    seed = args.seed if getattr(args, 'seed', None) is not None else config.DEFAULT_SEED
    return np.random.default_rng(seed)


def ok(data: Any, sd: Optional[SystemDescriptor] = None) -> Dict[str, Any]:
    return {'success': True, 'data': Encoder(sd).encode(data)}


def json_arg(parser: argparse.ArgumentParser, name: str, help_text: str, **kwargs) -> None:
    parser.add_argument(name, help=f"{help_text} (JSON en línea o ruta)", **kwargs)


def elem_arg(sd: SystemDescriptor, raw: str):
    """Elemento desde un literal de línea de comandos: JSON si empieza por '{'."""
    return parse_elem(sd, load_json(raw) if raw.lstrip().startswith('{') else raw)


def elems_arg(sd: SystemDescriptor, raw: str) -> list:
    data = load_json(raw)
    if not isinstance(data, list):
        raise CodecError("Se esperaba una lista JSON de elementos")
    return [parse_elem(sd, x) for x in data]

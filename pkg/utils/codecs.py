"""
Conversión entre JSON y los modelos de la librería.

Los elementos se leen siempre en el contexto de un sistema: los nombres
de un FinSys se resuelven a símbolos, los pares se leen sobre el sistema
base del simetrizado y los conjuntos de S(H) sobre los nombres del
hipercuerpo. La salida es canónica (claves ordenadas, racionales "p/q").
"""

import dataclasses
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence, Union

import numpy as np

from models.congruence import Carrier, Congruence, LocalizedFraction
from models.elem import Elem, ElemKind, EMPTY_KINDS, pair
from models.hyperfield import Hyperfield, SemiringMonoidPair
from models.matrix import Matrix
from models.matroid import ValuatedMatroidCandidate
from models.module_system import ModSys, MorphismTable, TensorElem
from models.polynomial import Polynomial
from models.puiseux import PuiseuxSeries
from models.system import FinSys, SystemDescriptor
from utils.rationals import format_rational, parse_rational


class CodecError(ValueError):
    """JSON que no describe un objeto válido del sistema."""
    pass


# ========================================================================
# LECTURA
# ========================================================================

def load_json(source: Union[str, Path]) -> Any:
    """
    Lee JSON en línea (si empieza por '{' o '[') o desde un archivo.

    Raises:
        CodecError: Si el archivo no existe o el JSON es inválido
    """
    text = str(source).strip()
    if not text.startswith(('{', '[')):
        path = Path(text)
        if not path.is_file():
            raise CodecError(f"No existe el archivo JSON: {text}")
        text = path.read_text(encoding='utf-8')
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CodecError(f"JSON inválido: {e.msg} (línea {e.lineno})")


def _finsys_of(sd: SystemDescriptor) -> Optional[FinSys]:
    return sd.params.get('finsys')


def parse_elem(sd: SystemDescriptor, data: Any) -> Elem:
    """
    Convierte un literal en un Elem del sistema sd.

    Se aceptan el formato {"kind": ..., "value": ...}, un nombre en los
    sistemas finitos y, en portadores racionales, las formas abreviadas
    "p/q" (tangible), "p/q°" (fantasma) y "zero".
    """
    cid = sd.carrier_id
    fs = _finsys_of(sd)
    try:
        if isinstance(data, str):
            if fs is not None:
                return fs.elem(fs.index(data))
            if data == 'zero':
                return Elem(cid, ElemKind.ZERO)
            if data == '-inf':
                return Elem(cid, ElemKind.NEGINF)
            if data.endswith('°'):
                return Elem(cid, ElemKind.GHOST, parse_rational(data[:-1]))
            return Elem(cid, ElemKind.TANGIBLE, parse_rational(data))
        if not isinstance(data, Mapping):
            raise CodecError(f"Literal de elemento inválido: {data!r}")
        if 'terms' in data and 'kind' not in data:
            return Elem(cid, ElemKind.SERIES, PuiseuxSeries.from_dict(data))
        if 'kind' not in data:
            raise CodecError("El literal de elemento requiere 'kind'")
        kind = ElemKind(data['kind'])
        if kind == ElemKind.SYMBOL:
            if fs is None:
                raise CodecError(f"{sd.name} no es un sistema finito con nombres")
            raw = data.get('value')
            return fs.elem(raw if isinstance(raw, int) else fs.index(str(raw)))
        if kind == ElemKind.PAIR:
            if sd.base is None:
                raise CodecError(f"{sd.name} no es un simetrizado")
            return pair(cid, parse_elem(sd.base, data['pos']), parse_elem(sd.base, data['neg']))
        if kind == ElemKind.SET:
            h: Optional[Hyperfield] = sd.params.get('hyperfield')
            raw = data.get('value', [])
            if h is not None:
                members = frozenset(x if isinstance(x, int) else h.index(str(x)) for x in raw)
            else:
                members = frozenset(int(x) for x in raw)
            return Elem(cid, ElemKind.SET, members)
        if kind == ElemKind.SERIES:
            return Elem(cid, ElemKind.SERIES, PuiseuxSeries.from_dict(data['value']))
        if kind in EMPTY_KINDS:
            return Elem(cid, kind)
        return Elem(cid, kind, data.get('value'))
    except CodecError:
        raise
    except (KeyError, ValueError, TypeError) as e:
        raise CodecError(f"Elemento inválido para {sd.name}: {e}")


def parse_elems(sd: SystemDescriptor, data: Sequence[Any]) -> list:
    return [parse_elem(sd, x) for x in data]


def parse_polynomial(sd: SystemDescriptor, data: Mapping[str, Any]) -> Polynomial:
    """Polinomio {"nvars": n, "laurent": false, "terms": [{"exp": [...], "coef": ...}]}."""
    if 'terms' not in data:
        raise CodecError("El polinomio requiere 'terms'")
    terms = []
    for term in data['terms']:
        if 'exp' not in term or 'coef' not in term:
            raise CodecError("Cada término requiere 'exp' y 'coef'")
        terms.append((tuple(int(k) for k in term['exp']), parse_elem(sd, term['coef'])))
    nvars = data.get('nvars', len(terms[0][0]) if terms else None)
    if nvars is None:
        raise CodecError("No se puede deducir nvars de un polinomio vacío")
    acc: Dict[tuple, Elem] = {}
    for exp, coef in terms:
        acc[exp] = sd.add(acc[exp], coef) if exp in acc else coef
    try:
        return Polynomial(
            sd.carrier_id,
            int(nvars),
            tuple((e, c) for e, c in acc.items() if c != sd.zero),
            bool(data.get('laurent', False)),
        )
    except ValueError as e:
        raise CodecError(str(e))


def parse_matrix(sd: SystemDescriptor, data: Mapping[str, Any]) -> Matrix:
    """Matriz {"n": k, "rows": [[elem, ...], ...]}."""
    if 'rows' not in data:
        raise CodecError("La matriz requiere 'rows'")
    rows = tuple(tuple(parse_elem(sd, x) for x in row) for row in data['rows'])
    if 'n' in data and int(data['n']) != len(rows):
        raise CodecError(f"n = {data['n']} no coincide con {len(rows)} filas")
    try:
        return Matrix(sd.carrier_id, rows)
    except ValueError as e:
        raise CodecError(str(e))


def _wrap(loader, *args):
    try:
        return loader(*args)
    except CodecError:
        raise
    except (KeyError, ValueError, TypeError) as e:
        raise CodecError(str(e))


def parse_finsys(data: Mapping[str, Any]) -> FinSys:
    return _wrap(FinSys.from_dict, data)


def parse_hyperfield(data: Mapping[str, Any]) -> Hyperfield:
    return _wrap(Hyperfield.from_dict, data)


def parse_modsys(data: Mapping[str, Any], ground: Optional[FinSys] = None) -> ModSys:
    return _wrap(ModSys.from_dict, data, ground)


def parse_morphism(data: Mapping[str, Any], source: ModSys, target: ModSys) -> MorphismTable:
    return _wrap(MorphismTable.from_dict, data, source, target)


def parse_congruence(data: Mapping[str, Any], system: Carrier) -> Congruence:
    return _wrap(Congruence.from_dict, data, system)


def parse_series(data: Mapping[str, Any]) -> PuiseuxSeries:
    return _wrap(PuiseuxSeries.from_dict, data)


def parse_matroid(data: Mapping[str, Any]) -> ValuatedMatroidCandidate:
    return _wrap(ValuatedMatroidCandidate.from_dict, data)


# ========================================================================
# ESCRITURA
# ========================================================================

class Encoder:
    """
    Serializa resultados de servicios a JSON canónico.

    Los elementos se nombran con el sistema de contexto (y sus bases,
    para los pares del simetrizado).
    """

    def __init__(self, sd: Optional[SystemDescriptor] = None):
        self.systems: Dict[str, SystemDescriptor] = {}
        while sd is not None:
            self.systems.setdefault(sd.carrier_id, sd)
            sd = sd.base

    def elem(self, e: Elem) -> Dict[str, Any]:
        sd = self.systems.get(e.carrier_id)
        if e.kind == ElemKind.SYMBOL:
            name = sd.label(e) if sd is not None else e.value
            return {'kind': 'symbol', 'value': name}
        if e.kind == ElemKind.PAIR:
            return {'kind': 'pair', 'pos': self.elem(e.pos), 'neg': self.elem(e.neg)}
        if e.kind == ElemKind.SET and sd is not None and 'hyperfield' in sd.params:
            h = sd.params['hyperfield']
            return {'kind': 'set', 'value': [h.names[i] for i in sorted(e.value)]}
        return e.to_dict()

    def polynomial(self, f: Polynomial) -> Dict[str, Any]:
        return {
            'nvars': f.nvars,
            'laurent': f.laurent,
            'terms': [{'exp': list(exp), 'coef': self.elem(c)} for exp, c in f.terms],
        }

    def matrix(self, A: Matrix) -> Dict[str, Any]:
        return {'n': A.n, 'rows': [[self.elem(e) for e in row] for row in A.rows]}

    def encode(self, obj: Any) -> Any:
        """Convierte recursivamente un resultado en tipos JSON."""
        if obj is None or isinstance(obj, (bool, str)):
            return obj
        if isinstance(obj, (np.bool_,)):
            return bool(obj)
        if isinstance(obj, (int, np.integer)):
            return int(obj)
        if isinstance(obj, Fraction):
            return format_rational(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Elem):
            return self.elem(obj)
        if isinstance(obj, Polynomial):
            return self.polynomial(obj)
        if isinstance(obj, Matrix):
            return self.matrix(obj)
        if isinstance(obj, (FinSys, ModSys, Hyperfield, Congruence, MorphismTable,
                            PuiseuxSeries, ValuatedMatroidCandidate, SystemDescriptor,
                            SemiringMonoidPair)):
            return self.encode(obj.to_dict())
        if isinstance(obj, (TensorElem, LocalizedFraction)):
            raise CodecError(f"{type(obj).__name__} requiere su sistema para serializarse")
        if isinstance(obj, Mapping):
            return {str(self._key(k)): self.encode(v) for k, v in obj.items()}
        if isinstance(obj, (set, frozenset)):
            items = [self.encode(x) for x in obj]
            return sorted(items, key=lambda x: json.dumps(x, sort_keys=True, ensure_ascii=False))
        if isinstance(obj, (list, tuple, range)):
            return [self.encode(x) for x in obj]
        if dataclasses.is_dataclass(obj):
            return self.encode(dataclasses.asdict(obj))
        raise CodecError(f"Tipo no serializable: {type(obj).__name__}")

    def _key(self, key: Any) -> Any:
        if isinstance(key, Elem):
            sd = self.systems.get(key.carrier_id)
            return sd.label(key) if sd is not None else key.label()
        if isinstance(key, Fraction):
            return format_rational(key)
        if isinstance(key, tuple):
            return ','.join(str(self._key(k)) for k in key)
        return key


def dumps(payload: Any) -> str:
    """JSON canónico: claves ordenadas, sangría fija y salto de línea final."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + '\n'

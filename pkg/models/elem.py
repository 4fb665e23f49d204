"""
Modelo de elementos etiquetados de un portador.

Un Elem es un valor inmutable de un portador concreto: tangible, fantasma
o cero sobre racionales exactos, símbolo de un sistema finito, par del
simetrizado, subconjunto de un hipercuerpo o serie de Puiseux.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Tuple

from utils.rationals import format_rational, parse_rational


class ElemKind(Enum):
    """Etiqueta del valor de un elemento."""
    TANGIBLE = 'tangible'
    GHOST = 'ghost'
    ZERO = 'zero'
    SYMBOL = 'symbol'
    PAIR = 'pair'
    SET = 'set'
    VAL = 'val'
    INTERVAL = 'interval'
    NEGINF = 'neginf'
    SERIES = 'series'


RATIONAL_KINDS = (ElemKind.TANGIBLE, ElemKind.GHOST, ElemKind.VAL, ElemKind.INTERVAL)
EMPTY_KINDS = (ElemKind.ZERO, ElemKind.NEGINF)
_KIND_ORDER = {kind: pos for pos, kind in enumerate(ElemKind)}


@dataclass(frozen=True)
class Elem:
    """
    Elemento de un portador.

    Attributes:
        carrier_id: Identificador del portador dueño del elemento
        kind: Etiqueta del valor
        value: Racional exacto, índice de símbolo, par de Elem,
            frozenset de índices o serie, según kind
    """
    carrier_id: str
    kind: ElemKind
    value: Any = None

    def __post_init__(self):
        if self.kind in RATIONAL_KINDS:
            if isinstance(self.value, float):
                raise ValueError("No se admiten flotantes en los portadores")
            object.__setattr__(self, 'value', parse_rational(self.value))
        elif self.kind in EMPTY_KINDS:
            if self.value is not None:
                raise ValueError(f"El elemento {self.kind.value} no lleva valor")
        elif self.kind == ElemKind.SYMBOL:
            if not isinstance(self.value, int) or self.value < 0:
                raise ValueError(f"Índice de símbolo inválido: {self.value!r}")
        elif self.kind == ElemKind.PAIR:
            if (
                not isinstance(self.value, tuple)
                or len(self.value) != 2
                or not all(isinstance(x, Elem) for x in self.value)
            ):
                raise ValueError("Un par requiere exactamente dos Elem")
            if self.value[0].carrier_id != self.value[1].carrier_id:
                raise ValueError("Las componentes de un par deben compartir portador")
        elif self.kind == ElemKind.SET:
            if not isinstance(self.value, frozenset):
                object.__setattr__(self, 'value', frozenset(self.value))

    @property
    def pos(self) -> 'Elem':
        return self.value[0]

    @property
    def neg(self) -> 'Elem':
        return self.value[1]

    def sort_key(self) -> Tuple:
        """Clave total y determinista para ordenar elementos del mismo portador."""
        order = _KIND_ORDER[self.kind]
        if self.kind in RATIONAL_KINDS:
            return (order, self.value)
        if self.kind in EMPTY_KINDS:
            return (order,)
        if self.kind == ElemKind.SYMBOL:
            return (order, self.value)
        if self.kind == ElemKind.PAIR:
            return (order, self.value[0].sort_key(), self.value[1].sort_key())
        if self.kind == ElemKind.SET:
            return (order, len(self.value), tuple(sorted(self.value)))
        return (order, self.value.terms)

    def label(self) -> str:
        """Etiqueta corta por defecto (los sistemas finitos usan sus nombres)."""
        if self.kind == ElemKind.TANGIBLE or self.kind == ElemKind.VAL:
            return format_rational(self.value)
        if self.kind == ElemKind.GHOST:
            return f"{format_rational(self.value)}°"
        if self.kind == ElemKind.INTERVAL:
            return f"[-inf,{format_rational(self.value)}]"
        if self.kind == ElemKind.ZERO:
            return 'zero'
        if self.kind == ElemKind.NEGINF:
            return '-inf'
        if self.kind == ElemKind.SYMBOL:
            return f"s{self.value}"
        if self.kind == ElemKind.PAIR:
            return f"({self.value[0].label()},{self.value[1].label()})"
        if self.kind == ElemKind.SET:
            return '{' + ','.join(str(x) for x in sorted(self.value)) + '}'
        return str(self.value)

    def to_dict(self) -> Dict[str, Any]:
        """Convierte el elemento al literal JSON (sin resolver nombres de símbolos)."""
        if self.kind in RATIONAL_KINDS:
            return {'kind': self.kind.value, 'value': format_rational(self.value)}
        if self.kind in EMPTY_KINDS:
            return {'kind': self.kind.value}
        if self.kind == ElemKind.PAIR:
            return {
                'kind': 'pair',
                'pos': self.value[0].to_dict(),
                'neg': self.value[1].to_dict(),
            }
        if self.kind == ElemKind.SET:
            return {'kind': 'set', 'value': sorted(self.value)}
        if self.kind == ElemKind.SERIES:
            return {'kind': 'series', 'value': self.value.to_dict()}
        return {'kind': self.kind.value, 'value': self.value}

    def __repr__(self) -> str:
        return f"Elem({self.carrier_id}:{self.label()})"


def tangible(carrier_id: str, value) -> Elem:
    return Elem(carrier_id, ElemKind.TANGIBLE, value)


def ghost(carrier_id: str, value) -> Elem:
    return Elem(carrier_id, ElemKind.GHOST, value)


def zero(carrier_id: str) -> Elem:
    return Elem(carrier_id, ElemKind.ZERO)


def symbol(carrier_id: str, index: int) -> Elem:
    return Elem(carrier_id, ElemKind.SYMBOL, index)


def pair(carrier_id: str, pos: Elem, neg: Elem) -> Elem:
    return Elem(carrier_id, ElemKind.PAIR, (pos, neg))


def rational_value(elem: Elem) -> Fraction:
    if elem.kind not in RATIONAL_KINDS:
        raise ValueError(f"El elemento {elem!r} no tiene valor racional")
    return elem.value

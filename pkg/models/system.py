"""
Modelos de sistemas con negación.

Define SystemDescriptor, la cuádrupla (𝒜, 𝒯, (−), ⪯) con operaciones
como funciones puras, y FinSys, su forma tabular finita con el formato
JSON de intercambio.
"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from models.elem import Elem, ElemKind, symbol


class SystemKind(Enum):
    """Tipo de sistema: multiplicación total o sólo acción de 𝒯."""
    SEMIRING_SYSTEM = 'semiring-system'
    MODULE_TRIPLE = 'monoid-module-triple'


BinaryOp = Callable[[Elem, Elem], Elem]
Predicate = Callable[[Elem], bool]


@dataclass(frozen=True, eq=False)
class SystemDescriptor:
    """
    Portador con suma, multiplicación (o acción), cero, unidad, conjunto
    tangible, negación y relación de sobrepaso.

    Attributes:
        carrier_id: Identificador del portador
        name: Nombre legible
        add: Suma total
        mul: Multiplicación total, o acción 𝒯×𝒜 si kind es MODULE_TRIPLE
        zero: Elemento 𝟘
        one: Elemento 𝟙 (opcional)
        is_tangible: Predicado de 𝒯
        negate: Mapa de negación (−)
        surpass: Relación ⪯ como predicado binario
        kind: Tipo de sistema
        elements: Enumeración finita (portador o fragmento)
        closed: True si elements es cerrado bajo + y ·
        sample: Generador de elementos para portadores paramétricos
        is_quasi_zero: Predicado de 𝒜^∘ en forma cerrada
        invert: Inverso multiplicativo (None si no existe)
        is_triple: False para pseudo-triples (𝒯 ∩ 𝒜^∘ ≠ ∅)
        surpass_mode: 'circ' si ⪯ es ⪯_∘, 'explicit' si es una lista
        labeler: Nombre de un elemento para serialización
    """
    carrier_id: str
    name: str
    add: BinaryOp
    mul: BinaryOp
    zero: Elem
    one: Optional[Elem]
    is_tangible: Predicate
    negate: Callable[[Elem], Elem]
    surpass: Callable[[Elem, Elem], bool]
    kind: SystemKind = SystemKind.SEMIRING_SYSTEM
    elements: Optional[Tuple[Elem, ...]] = None
    closed: bool = False
    sample: Optional[Callable[[np.random.Generator], Elem]] = None
    is_quasi_zero: Optional[Predicate] = None
    invert: Optional[Callable[[Elem], Optional[Elem]]] = None
    is_triple: bool = True
    surpass_mode: str = 'circ'
    labeler: Optional[Callable[[Elem], str]] = None
    base: Optional['SystemDescriptor'] = None
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def has_total_mul(self) -> bool:
        return self.kind == SystemKind.SEMIRING_SYSTEM

    def quasi_zero(self, a: Elem) -> Elem:
        return self.add(a, self.negate(a))

    def in_quasi_zeros(self, b: Elem) -> bool:
        if self.is_quasi_zero is not None:
            return self.is_quasi_zero(b)
        if self.elements is None:
            raise ValueError(f"El sistema {self.name} no decide 𝒜^∘")
        return any(self.quasi_zero(d) == b for d in self.elements)

    def tangibles(self) -> List[Elem]:
        if self.elements is None:
            return []
        return [e for e in self.elements if self.is_tangible(e)]

    def label(self, e: Elem) -> str:
        if self.labeler is not None:
            return self.labeler(e)
        return e.label()

    def replace(self, **changes) -> 'SystemDescriptor':
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'carrier_id': self.carrier_id,
            'kind': self.kind.value,
            'finite': self.is_finite,
            'closed': self.closed,
            'size': len(self.elements) if self.elements is not None else None,
            'is_triple': self.is_triple,
            'surpass_mode': self.surpass_mode,
        }


@dataclass(frozen=True)
class FinSys:
    """
    Sistema finito dado por tablas de índices.

    Attributes:
        names: Símbolos de los elementos
        add_table: Tabla de suma
        mul_table: Tabla de multiplicación
        zero_idx: Índice de 𝟘
        one_idx: Índice de 𝟙 (opcional)
        tangible_idxs: Índices tangibles
        neg_table: Tabla de la negación
        surpass_mode: 'circ' (⪯_∘ derivado) o 'explicit'
        surpass_pairs: Pares (b, c) con b ⪯ c cuando el modo es explícito
        name: Nombre del sistema
    """
    names: Tuple[str, ...]
    add_table: Tuple[Tuple[int, ...], ...]
    mul_table: Tuple[Tuple[int, ...], ...]
    zero_idx: int
    one_idx: Optional[int]
    tangible_idxs: FrozenSet[int]
    neg_table: Tuple[int, ...]
    surpass_mode: str = 'circ'
    surpass_pairs: Optional[FrozenSet[Tuple[int, int]]] = None
    name: str = 'finsys'

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise ValueError("Un sistema finito requiere al menos un elemento")
        if len(set(self.names)) != n:
            raise ValueError("Los nombres de los elementos deben ser únicos")
        for label, table in (('add', self.add_table), ('mul', self.mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"La tabla {label} debe ser cuadrada de tamaño {n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError(f"La tabla {label} contiene índices fuera de rango")
        if len(self.neg_table) != n or any(not 0 <= v < n for v in self.neg_table):
            raise ValueError("La tabla neg debe ser total sobre el portador")
        if not 0 <= self.zero_idx < n:
            raise ValueError("Índice de cero fuera de rango")
        if self.one_idx is not None and not 0 <= self.one_idx < n:
            raise ValueError("Índice de unidad fuera de rango")
        if any(not 0 <= t < n for t in self.tangible_idxs):
            raise ValueError("Índice tangible fuera de rango")
        if self.surpass_mode not in ('circ', 'explicit'):
            raise ValueError(f"Modo de sobrepaso desconocido: {self.surpass_mode}")
        if self.surpass_mode == 'explicit' and self.surpass_pairs is None:
            raise ValueError("El modo explícito requiere la lista de pares")

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def carrier_id(self) -> str:
        return f"fin:{self.name}"

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Elemento desconocido en {self.name}: {name!r}")

    def add(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def neg(self, i: int) -> int:
        return self.neg_table[i]

    def quasi_zero(self, i: int) -> int:
        return self.add_table[i][self.neg_table[i]]

    @cached_property
    def quasi_zeros(self) -> FrozenSet[int]:
        return frozenset(self.quasi_zero(i) for i in self.elements)

    @cached_property
    def surpass_matrix(self) -> Tuple[Tuple[bool, ...], ...]:
        n = self.size
        if self.surpass_mode == 'explicit':
            return tuple(
                tuple((b, c) in self.surpass_pairs for c in range(n)) for b in range(n)
            )
        # b ⪯_∘ c  sii  c = b + d° para algún d
        rows = []
        for b in range(n):
            reach = {self.add_table[b][q] for q in self.quasi_zeros}
            rows.append(tuple(c in reach for c in range(n)))
        return tuple(rows)

    def surpasses(self, b: int, c: int) -> bool:
        """True si b ⪯ c."""
        return self.surpass_matrix[b][c]

    @cached_property
    def is_triple(self) -> bool:
        if self.tangible_idxs & self.quasi_zeros:
            return False
        reach = {self.zero_idx} | set(self.tangible_idxs)
        frontier = list(reach)
        while frontier:
            x = frontier.pop()
            for t in self.tangible_idxs:
                y = self.add_table[x][t]
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        return len(reach) == self.size

    def elem(self, i: int) -> Elem:
        return symbol(self.carrier_id, i)

    def to_descriptor(self) -> SystemDescriptor:
        """Descriptor cerrado cuyas operaciones consultan las tablas."""
        cid = self.carrier_id
        elems = tuple(symbol(cid, i) for i in self.elements)
        return SystemDescriptor(
            carrier_id=cid,
            name=self.name,
            add=lambda x, y: elems[self.add_table[x.value][y.value]],
            mul=lambda x, y: elems[self.mul_table[x.value][y.value]],
            zero=elems[self.zero_idx],
            one=elems[self.one_idx] if self.one_idx is not None else None,
            is_tangible=lambda x: x.value in self.tangible_idxs,
            negate=lambda x: elems[self.neg_table[x.value]],
            surpass=lambda x, y: self.surpass_matrix[x.value][y.value],
            elements=elems,
            closed=True,
            is_quasi_zero=lambda x: x.value in self.quasi_zeros,
            is_triple=self.is_triple,
            surpass_mode=self.surpass_mode,
            labeler=lambda x: self.names[x.value],
            params={'finsys': self},
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convierte el sistema al formato JSON de intercambio."""
        names = self.names
        data = {
            'name': self.name,
            'names': list(names),
            'zero': names[self.zero_idx],
            'one': names[self.one_idx] if self.one_idx is not None else None,
            'add': [[names[v] for v in row] for row in self.add_table],
            'mul': [[names[v] for v in row] for row in self.mul_table],
            'tangibles': [names[t] for t in sorted(self.tangible_idxs)],
            'neg': {names[i]: names[self.neg_table[i]] for i in self.elements},
        }
        if self.surpass_mode == 'circ':
            data['surpass'] = 'circ'
        else:
            data['surpass'] = [[names[b], names[c]] for b, c in sorted(self.surpass_pairs)]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any], name: Optional[str] = None) -> 'FinSys':
        """
        Crea un FinSys desde el formato JSON de intercambio.

        Args:
            data: Diccionario con names, zero, one, add, mul, tangibles, neg, surpass
            name: Nombre a usar si data no trae uno

        Returns:
            FinSys: Sistema finito

        Raises:
            ValueError: Si faltan campos o hay nombres desconocidos
        """
        required = ('names', 'zero', 'add', 'mul', 'tangibles', 'neg')
        missing = [key for key in required if key not in data]
        if missing:
            raise ValueError(f"Campos requeridos faltantes: {', '.join(missing)}")

        names = tuple(str(x) for x in data['names'])
        position = {x: i for i, x in enumerate(names)}

        def idx(raw) -> int:
            if raw not in position:
                raise ValueError(f"Elemento desconocido: {raw!r}")
            return position[raw]

        neg_raw = data['neg']
        if isinstance(neg_raw, dict):
            neg_table = tuple(idx(neg_raw[x]) if x in neg_raw else -1 for x in names)
        else:
            neg_table = tuple(idx(x) for x in neg_raw)

        surpass_raw = data.get('surpass', 'circ')
        if surpass_raw == 'circ':
            mode, pairs = 'circ', None
        else:
            mode = 'explicit'
            pairs = frozenset((idx(b), idx(c)) for b, c in surpass_raw)

        one_raw = data.get('one')
        return cls(
            names=names,
            add_table=tuple(tuple(idx(v) for v in row) for row in data['add']),
            mul_table=tuple(tuple(idx(v) for v in row) for row in data['mul']),
            zero_idx=idx(data['zero']),
            one_idx=idx(one_raw) if one_raw is not None else None,
            tangible_idxs=frozenset(idx(t) for t in data['tangibles']),
            neg_table=neg_table,
            surpass_mode=mode,
            surpass_pairs=pairs,
            name=str(data.get('name', name or 'finsys')),
        )


def finsys_elem_index(fs: FinSys, e: Elem) -> int:
    if e.kind != ElemKind.SYMBOL or e.carrier_id != fs.carrier_id:
        raise ValueError(f"{e!r} no pertenece al sistema {fs.name}")
    return e.value

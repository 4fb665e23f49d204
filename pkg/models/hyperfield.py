"""
Modelo de hipercuerpos.

Un hipercuerpo finito se guarda por tablas de índices (la hipersuma
devuelve conjuntos de índices). El hipercuerpo tropical es paramétrico y
sus operaciones viven en el servicio.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Optional, Tuple

from models.elem import Elem, symbol
from models.system import SystemDescriptor


class HyperfieldKind(Enum):
    """Hipercuerpo finito por tablas o tropical sobre ℚ ∪ {−∞}."""
    FINITE = 'finite'
    TROPICAL = 'tropical'


@dataclass(frozen=True)
class Hyperfield:
    """
    Hipercuerpo (H, ⊞, ·, 0, 1, −).

    Attributes:
        name: Nombre del hipercuerpo
        kind: Finito o tropical
        names: Nombres de los elementos (finito)
        hyperadd_table: a ⊞ b como conjunto de índices
        mul_table: Tabla de multiplicación
        neg_table: Hipernegación
        zero_idx: Índice de 0
        one_idx: Índice de 1
    """
    name: str
    kind: HyperfieldKind = HyperfieldKind.FINITE
    names: Tuple[str, ...] = ()
    hyperadd_table: Tuple[Tuple[FrozenSet[int], ...], ...] = ()
    mul_table: Tuple[Tuple[int, ...], ...] = ()
    neg_table: Tuple[int, ...] = ()
    zero_idx: int = 0
    one_idx: int = 1

    def __post_init__(self):
        if self.kind == HyperfieldKind.TROPICAL:
            return
        n = len(self.names)
        if n < 2:
            raise ValueError("Un hipercuerpo finito requiere al menos 0 y 1")
        if len(set(self.names)) != n:
            raise ValueError("Los nombres de los elementos deben ser únicos")
        for label, table in (('hyperadd', self.hyperadd_table), ('mul', self.mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"La tabla {label} debe ser cuadrada de tamaño {n}")
        if any(not s or any(not 0 <= v < n for v in s) for row in self.hyperadd_table for s in row):
            raise ValueError("La hipersuma debe dar conjuntos no vacíos de elementos")
        if any(not 0 <= v < n for row in self.mul_table for v in row):
            raise ValueError("La tabla mul contiene índices fuera de rango")
        if len(self.neg_table) != n or any(not 0 <= v < n for v in self.neg_table):
            raise ValueError("La tabla neg debe ser total")
        if not (0 <= self.zero_idx < n and 0 <= self.one_idx < n):
            raise ValueError("Índices de 0 o 1 fuera de rango")

    @property
    def is_finite(self) -> bool:
        return self.kind == HyperfieldKind.FINITE

    @property
    def carrier_id(self) -> str:
        return f"hf:{self.name}"

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def hyperadd(self, i: int, j: int) -> FrozenSet[int]:
        return self.hyperadd_table[i][j]

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def neg(self, i: int) -> int:
        return self.neg_table[i]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Elemento desconocido en {self.name}: {name!r}")

    def elem(self, i: int) -> Elem:
        return symbol(self.carrier_id, i)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == HyperfieldKind.TROPICAL:
            return {'name': self.name, 'kind': self.kind.value}
        names = self.names
        return {
            'name': self.name,
            'elements': list(names),
            'zero': names[self.zero_idx],
            'one': names[self.one_idx],
            'hyperadd': {
                f"{names[i]},{names[j]}": [names[k] for k in sorted(self.hyperadd(i, j))]
                for i in self.elements for j in self.elements
            },
            'mul': {
                f"{names[i]},{names[j]}": names[self.mul(i, j)]
                for i in self.elements for j in self.elements
            },
            'neg': {names[i]: names[self.neg(i)] for i in self.elements},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], name: Optional[str] = None) -> 'Hyperfield':
        """
        Crea un hipercuerpo finito desde el formato JSON.

        Las claves "a,b" de hyperadd y mul pueden darse en un solo orden;
        el otro se completa por conmutatividad.

        Raises:
            ValueError: Si faltan campos, entradas o nombres
        """
        missing = [key for key in ('elements', 'hyperadd', 'mul', 'neg') if key not in data]
        if missing:
            raise ValueError(f"Campos requeridos faltantes: {', '.join(missing)}")
        names = tuple(str(x) for x in data['elements'])
        position = {x: i for i, x in enumerate(names)}

        def idx(raw) -> int:
            if raw not in position:
                raise ValueError(f"Elemento desconocido: {raw!r}")
            return position[raw]

        def entry(table: Dict[str, Any], a: str, b: str) -> Any:
            for key in (f"{a},{b}", f"{b},{a}"):
                if key in table:
                    return table[key]
            raise ValueError(f"Falta la entrada {a},{b}")

        hyperadd = tuple(
            tuple(frozenset(idx(x) for x in entry(data['hyperadd'], a, b)) for b in names)
            for a in names
        )
        mul = tuple(tuple(idx(entry(data['mul'], a, b)) for b in names) for a in names)
        neg = tuple(idx(data['neg'][a]) for a in names)
        return cls(
            name=str(data.get('name', name or 'hyperfield')),
            names=names,
            hyperadd_table=hyperadd,
            mul_table=mul,
            neg_table=neg,
            zero_idx=idx(data.get('zero', '0')),
            one_idx=idx(data.get('one', '1')),
        )


@dataclass(frozen=True, eq=False)
class SemiringMonoidPair:
    """Par (semianillo, submonoide multiplicativo generador)."""
    semiring: SystemDescriptor
    is_member: Callable[[Elem], bool]
    members: Optional[Tuple[Elem, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'semiring': self.semiring.to_dict(),
            'monoid': (
                [self.semiring.label(m) for m in self.members]
                if self.members is not None else None
            ),
        }

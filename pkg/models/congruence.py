"""
Modelo de congruencias sobre sistemas finitos.

Una congruencia se guarda como partición: para cada elemento, el menor
índice de su clase. Los pares se derivan de ella.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Tuple, Union

from models.module_system import ModSys
from models.system import FinSys

Carrier = Union[FinSys, ModSys]


def find(parent: List[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def union(parent: List[int], a: int, b: int) -> bool:
    """Une los bloques de a y b; True si eran distintos."""
    ra, rb = find(parent, a), find(parent, b)
    if ra == rb:
        return False
    parent[max(ra, rb)] = min(ra, rb)
    return True


def canonical_labels(parent: List[int]) -> Tuple[int, ...]:
    """Etiqueta cada índice con el menor miembro de su bloque."""
    smallest: Dict[int, int] = {}
    for i in range(len(parent)):
        smallest.setdefault(find(parent, i), i)
    return tuple(smallest[find(parent, i)] for i in range(len(parent)))


@dataclass(frozen=True)
class Congruence:
    """
    Congruencia sobre un FinSys o un ModSys (en módulos sólo se usan suma,
    acción y negación).

    Attributes:
        system: Sistema subyacente
        labels: Representante canónico (menor índice) de la clase de cada elemento
        generators: Pares con los que se generó, si se conocen
    """
    system: Carrier = field(compare=False)
    labels: Tuple[int, ...]
    generators: Optional[FrozenSet[Tuple[int, int]]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.system.size:
            raise ValueError("Las etiquetas deben cubrir el portador")
        if any(self.labels[lab] != lab or lab > i for i, lab in enumerate(self.labels)):
            raise ValueError("Etiquetas no canónicas para una partición")

    @cached_property
    def pairs(self) -> FrozenSet[Tuple[int, int]]:
        n = self.system.size
        return frozenset(
            (a, b) for a in range(n) for b in range(n) if self.labels[a] == self.labels[b]
        )

    @cached_property
    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        blocks: Dict[int, List[int]] = {}
        for i, lab in enumerate(self.labels):
            blocks.setdefault(lab, []).append(i)
        return tuple(tuple(blocks[k]) for k in sorted(blocks))

    @property
    def is_diagonal(self) -> bool:
        return len(self.classes) == self.system.size

    @property
    def is_full(self) -> bool:
        return len(self.classes) == 1

    def contains(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return self.contains(*pair)

    def __le__(self, other: 'Congruence') -> bool:
        return all(other.contains(i, lab) for i, lab in enumerate(self.labels))

    def __lt__(self, other: 'Congruence') -> bool:
        return self <= other and self != other

    def to_dict(self) -> Dict[str, Any]:
        names = self.system.names
        return {
            'system': self.system.name,
            'classes': [[names[i] for i in block] for block in self.classes],
            'pairs': [[names[a], names[b]] for a, b in sorted(self.pairs) if a != b],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], system: Carrier) -> 'Congruence':
        """
        Reconstruye la partición desde {"pairs": [["a","b"], ...]}.

        Los pares se cierran por equivalencia; el cierre de congruencia
        completo lo hace el servicio.
        """
        if 'pairs' not in data:
            raise ValueError("Campo requerido faltante: pairs")
        parent = list(range(system.size))
        gens = []
        for a, b in data['pairs']:
            i, j = system.index(str(a)), system.index(str(b))
            gens.append((i, j))
            union(parent, i, j)
        return cls(system, canonical_labels(parent), frozenset(gens))


@dataclass(frozen=True)
class LocalizedFraction:
    """Fracción b/s de la localización, con s en el submonoide S."""
    num: int
    den: int

    def label(self, system: FinSys) -> str:
        if system.one_idx is not None and self.den == system.one_idx:
            return system.names[self.num]
        return f"{system.names[self.num]}/{system.names[self.den]}"

    def to_dict(self, system: FinSys) -> Dict[str, str]:
        return {'num': system.names[self.num], 'den': system.names[self.den]}

"""
Modelo de candidatos a matroide valuado.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Optional, Tuple

from utils.rationals import format_rational, parse_rational


@dataclass(frozen=True)
class ValuatedMatroidCandidate:
    """
    Par (E, v) con v: E^m → ℚ ∪ {𝟘}, convención max (𝟘 = −∞).

    Attributes:
        ground: Nombres de los elementos de E
        rank: Rango m
        values: Pares (tupla de índices, valor) con valor distinto de 𝟘;
            las tuplas ausentes valen 𝟘
    """
    ground: Tuple[str, ...]
    rank: int
    values: Tuple[Tuple[Tuple[int, ...], Fraction], ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Rango inválido: {self.rank}")
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("Los elementos de E deben ser únicos")
        seen = set()
        normalized = []
        for key, value in self.values:
            key = tuple(int(e) for e in key)
            if len(key) != self.rank or any(not 0 <= e < len(self.ground) for e in key):
                raise ValueError(f"Tupla inválida para rango {self.rank}: {key}")
            if key in seen:
                raise ValueError(f"Tupla repetida: {key}")
            seen.add(key)
            normalized.append((key, parse_rational(value)))
        object.__setattr__(self, 'values', tuple(sorted(normalized)))

    def v(self, key: Tuple[int, ...]) -> Optional[Fraction]:
        """Valor en la tupla; None representa 𝟘."""
        return self._lookup.get(tuple(key))

    @cached_property
    def _lookup(self) -> Dict[Tuple[int, ...], Fraction]:
        return dict(self.values)

    def tuples(self):
        return itertools.product(range(len(self.ground)), repeat=self.rank)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ground': list(self.ground),
            'rank': self.rank,
            'values': [
                {'tuple': [self.ground[e] for e in key], 'value': format_rational(value)}
                for key, value in self.values
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ValuatedMatroidCandidate':
        """
        Crea un candidato desde {"ground": [...], "rank": m, "values": [...]}.

        Raises:
            ValueError: Si faltan campos o una tupla nombra elementos desconocidos
        """
        missing = [k for k in ('ground', 'rank', 'values') if k not in data]
        if missing:
            raise ValueError(f"Campos requeridos faltantes: {', '.join(missing)}")
        ground = tuple(str(e) for e in data['ground'])
        position = {e: i for i, e in enumerate(ground)}
        values = []
        for entry in data['values']:
            if entry.get('value') is None:
                continue
            try:
                key = tuple(position[str(e)] for e in entry['tuple'])
            except KeyError as e:
                raise ValueError(f"Elemento desconocido en la tupla: {e}")
            values.append((key, entry['value']))
        return cls(ground=ground, rank=int(data['rank']), values=tuple(values))

"""
Modelo de funciones de soporte finito (polinomios y polinomios de Laurent).
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple

from models.elem import Elem

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    """
    Asociación finita exponente → coeficiente no nulo.

    Attributes:
        carrier_id: Portador de los coeficientes
        nvars: Número de variables
        terms: Pares (exponente, coeficiente) en orden canónico
        laurent: True si se admiten exponentes negativos
    """
    carrier_id: str
    nvars: int
    terms: Tuple[Tuple[Exponent, Elem], ...] = ()
    laurent: bool = False

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("Un polinomio requiere al menos una variable")
        ordered = tuple(sorted(self.terms, key=lambda t: t[0]))
        seen = set()
        for exp, coef in ordered:
            if len(exp) != self.nvars:
                raise ValueError(f"Exponente {exp} no tiene {self.nvars} componentes")
            if not self.laurent and any(k < 0 for k in exp):
                raise ValueError(f"Exponente negativo {exp} en un polinomio no Laurent")
            if exp in seen:
                raise ValueError(f"Exponente repetido: {exp}")
            if coef.carrier_id != self.carrier_id:
                raise ValueError(f"Coeficiente de otro portador en {exp}")
            seen.add(exp)
        object.__setattr__(self, 'terms', ordered)

    def __iter__(self) -> Iterator[Tuple[Exponent, Elem]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Exponent]:
        return [exp for exp, _ in self.terms]

    def coef(self, exp: Exponent) -> Optional[Elem]:
        for e, c in self.terms:
            if e == exp:
                return c
        return None

    def as_dict(self) -> Dict[Exponent, Elem]:
        return dict(self.terms)

    def degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(exp) for exp in self.support())

    def without(self, exp: Exponent) -> 'Polynomial':
        """Copia sin el monomio de exponente exp."""
        return Polynomial(
            self.carrier_id, self.nvars, tuple(t for t in self.terms if t[0] != exp), self.laurent
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'nvars': self.nvars,
            'laurent': self.laurent,
            'terms': [{'exp': list(exp), 'coef': coef.to_dict()} for exp, coef in self.terms],
        }

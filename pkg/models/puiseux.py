"""
Modelo de series de Puiseux truncadas con coeficientes racionales.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from utils.rationals import format_rational, parse_rational

Term = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PuiseuxSeries:
    """
    Suma finita Σ c_q t^q con exponentes racionales.

    Attributes:
        terms: Pares (exponente, coeficiente) con exponentes estrictamente
            crecientes y coeficientes no nulos
    """
    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        parsed = tuple((parse_rational(q), parse_rational(c)) for q, c in self.terms)
        for k, (q, c) in enumerate(parsed):
            if c == 0:
                raise ValueError(f"Coeficiente nulo en el exponente {format_rational(q)}")
            if k and parsed[k - 1][0] >= q:
                raise ValueError("Los exponentes deben ser estrictamente crecientes")
        object.__setattr__(self, 'terms', parsed)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Any, Any]]) -> 'PuiseuxSeries':
        """Suma términos repetidos y descarta los nulos."""
        acc: Dict[Fraction, Fraction] = {}
        for q, c in terms:
            q, c = parse_rational(q), parse_rational(c)
            acc[q] = acc.get(q, Fraction(0)) + c
        return cls(tuple((q, c) for q, c in sorted(acc.items()) if c != 0))

    @classmethod
    def constant(cls, c) -> 'PuiseuxSeries':
        return cls.from_terms([(0, c)])

    @classmethod
    def monomial(cls, c, q) -> 'PuiseuxSeries':
        return cls.from_terms([(q, c)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> Optional[Fraction]:
        """Menor exponente con coeficiente no nulo (None para la serie nula)."""
        return self.terms[0][0] if self.terms else None

    @property
    def leading_coefficient(self) -> Optional[Fraction]:
        return self.terms[0][1] if self.terms else None

    def __add__(self, other: 'PuiseuxSeries') -> 'PuiseuxSeries':
        return PuiseuxSeries.from_terms(self.terms + other.terms)

    def __neg__(self) -> 'PuiseuxSeries':
        return PuiseuxSeries(tuple((q, -c) for q, c in self.terms))

    def __sub__(self, other: 'PuiseuxSeries') -> 'PuiseuxSeries':
        return self + (-other)

    def __mul__(self, other: 'PuiseuxSeries') -> 'PuiseuxSeries':
        return PuiseuxSeries.from_terms(
            (q1 + q2, c1 * c2) for q1, c1 in self.terms for q2, c2 in other.terms
        )

    def scale(self, c) -> 'PuiseuxSeries':
        c = parse_rational(c)
        return PuiseuxSeries.from_terms((q, c * x) for q, x in self.terms)

    def inverse(self) -> Optional['PuiseuxSeries']:
        """Inverso exacto; sólo los monomios son invertibles como sumas finitas."""
        if len(self.terms) != 1:
            return None
        q, c = self.terms[0]
        return PuiseuxSeries(((-q, 1 / c),))

    def label(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for q, c in self.terms:
            coef = format_rational(c)
            if q == 0:
                parts.append(coef)
                continue
            power = 't' if q == 1 else f"t^({format_rational(q)})"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{coef}{power}")
        return ' + '.join(parts)

    def __str__(self) -> str:
        return self.label()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'terms': [
                {'exp': format_rational(q), 'coef': format_rational(c)} for q, c in self.terms
            ]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PuiseuxSeries':
        """
        Crea una serie desde {"terms": [{"exp": "1/3", "coef": "2"}, ...]}.

        Raises:
            ValueError: Si falta un campo o un racional es inválido
        """
        if 'terms' not in data:
            raise ValueError("Campo requerido faltante: terms")
        terms = []
        for term in data['terms']:
            if 'exp' not in term or 'coef' not in term:
                raise ValueError("Cada término requiere 'exp' y 'coef'")
            terms.append((term['exp'], term['coef']))
        return cls.from_terms(terms)

"""
Servicio de tropicalización.

Series de Puiseux como sistema, la valoración de Puiseux (convención
min) y su puente a la convención max del hipercuerpo tropical,
tropicalización de polinomios, generadores bend de ideales
tropicalizados, la condición de pares de ideales tropicales y el
chequeo de axiomas de matroides valuados.
"""

import itertools
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.combinatorics import Permutation

from config import config
from models.elem import Elem, ElemKind, tangible, zero as zero_elem
from models.matroid import ValuatedMatroidCandidate
from models.polynomial import Exponent, Polynomial
from models.puiseux import PuiseuxSeries
from models.system import SystemDescriptor
from services.core_systems_service import CoreSystemsService, core_systems_service
from services.hyperfield_service import hf_neginf, hf_val, hyperfield_service
from services.polynomial_service import polynomial_service
from utils.rationals import sample_rational

logger = logging.getLogger(__name__)

PUISEUX = 'puiseux'
GAMMA = CoreSystemsService.MINPLUS


class TropicalizationServiceException(Exception):
    """Excepción personalizada para errores del servicio de tropicalización."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class NoCommonMonomial(TropicalizationServiceException):
    pass


class MatroidTooLarge(TropicalizationServiceException):
    pass


def series(p: PuiseuxSeries) -> Elem:
    return Elem(PUISEUX, ElemKind.SERIES, p)


class TropicalizationService:
    """Valoración de Puiseux, tropicalización y matroides valuados."""

    # ====================================================================
    # SERIES DE PUISEUX
    # ====================================================================

    def make_puiseux(self) -> SystemDescriptor:
        """
        El cuerpo de series de Puiseux truncadas como sistema: (−) es la
        negación del cuerpo, 𝒯 las series no nulas y ⪯_∘ la igualdad.
        """

        def add(x: Elem, y: Elem) -> Elem:
            return series(x.value + y.value)

        def mul(x: Elem, y: Elem) -> Elem:
            return series(x.value * y.value)

        def invert(x: Elem) -> Optional[Elem]:
            inverse = x.value.inverse()
            return series(inverse) if inverse is not None else None

        return SystemDescriptor(
            carrier_id=PUISEUX,
            name='puiseux',
            add=add,
            mul=mul,
            zero=series(PuiseuxSeries()),
            one=series(PuiseuxSeries.constant(1)),
            is_tangible=lambda x: not x.value.is_zero,
            negate=lambda x: series(-x.value),
            surpass=lambda b, c: b == c,
            sample=lambda rng: series(self.sample_series(rng)),
            is_quasi_zero=lambda x: x.value.is_zero,
            invert=invert,
            labeler=lambda x: x.value.label(),
        )

    def sample_series(self, rng: np.random.Generator, max_terms: int = 3) -> PuiseuxSeries:
        """Serie aleatoria con 1 a max_terms términos de exponente y coeficiente racional."""
        count = int(rng.integers(1, max_terms + 1))
        terms = []
        for _ in range(count):
            coef = sample_rational(rng)
            if coef == 0:
                coef = Fraction(1)
            terms.append((sample_rational(rng, max_numerator=6), coef))
        return PuiseuxSeries.from_terms(terms)

    def sample_pairs(
        self, rng: Optional[np.random.Generator] = None, samples: int = 1000
    ) -> List[Tuple[PuiseuxSeries, PuiseuxSeries]]:
        """Pares muestreados; uno de cada cuatro es una cancelación del término líder."""
        rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
        pairs = []
        for k in range(samples):
            p = self.sample_series(rng)
            if k % 4 == 0:
                q, c = p.terms[0]
                tail = self.sample_series(rng)
                shifted = PuiseuxSeries.from_terms(
                    (e - tail.order + q + 1, x) for e, x in tail.terms
                )
                pairs.append((p, PuiseuxSeries.monomial(-c, q) + shifted))
            else:
                pairs.append((p, self.sample_series(rng)))
        return pairs

    # ====================================================================
    # VALORACIÓN
    # ====================================================================

    def val(self, p: PuiseuxSeries) -> Elem:
        """
        Menor exponente de un término no nulo, en Γ con convención min;
        la serie nula va al 𝟘 absorbente de Γ.
        """
        if p.is_zero:
            return zero_elem(GAMMA)
        return tangible(GAMMA, p.order)

    def nu(self, p: PuiseuxSeries) -> Elem:
        """Puente a la convención max: ν = −val en el hipercuerpo tropical."""
        if p.is_zero:
            return hf_neginf()
        return hf_val(-p.order)

    def trop(self, P: Polynomial) -> Polynomial:
        """Σ pᵢ λ^i ↦ Σ val(pᵢ) λ^i; los coeficientes nulos salen del soporte."""
        if P.carrier_id != PUISEUX:
            raise TropicalizationServiceException(
                f"trop requiere coeficientes de Puiseux, no de {P.carrier_id}"
            )
        gamma = core_systems_service.make_minplus()
        return polynomial_service.make(
            gamma,
            [(exp, self.val(c.value)) for exp, c in P if not c.value.is_zero],
            nvars=P.nvars,
            laurent=P.laurent,
        )

    def val_arith_check(self, p: PuiseuxSeries, q: PuiseuxSeries) -> Dict[str, Any]:
        """
        val(pq) = val(p) + val(q) y ν(p + q) ∈ ν(p) ⊞ ν(q) en el hipercuerpo tropical.
        """
        gamma = core_systems_service.make_minplus()
        h = hyperfield_service.make_tropical_hyperfield()
        multiplicative = self.val(p * q) == gamma.mul(self.val(p), self.val(q))
        additive = hyperfield_service.contains(
            h, hyperfield_service.hypersum(h, self.nu(p), self.nu(q)), self.nu(p + q)
        )
        return {
            'multiplicative': multiplicative,
            'additive': additive,
            'holds': multiplicative and additive,
            'val_p': self.val(p),
            'val_q': self.val(q),
            'val_product': self.val(p * q),
            'val_sum': self.val(p + q),
        }

    def val_arith_scan(
        self, rng: Optional[np.random.Generator] = None, samples: int = 1000
    ) -> Dict[str, Any]:
        """val_arith_check sobre pares muestreados con cancelaciones forzadas."""
        failures = []
        for p, q in self.sample_pairs(rng, samples):
            report = self.val_arith_check(p, q)
            if not report['holds']:
                failures.append((p.label(), q.label()))
        if failures:
            logger.warning(f"val falla en {len(failures)} pares de Puiseux")
        return {'holds': not failures, 'checked': samples, 'failures': failures[:10]}

    def puiseux_valuation_check(
        self, rng: Optional[np.random.Generator] = None, samples: int = 40
    ) -> Dict[str, Any]:
        """Certifica ν = −val como valoración en el hipercuerpo tropical."""
        rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
        sd = self.make_puiseux()
        elements = [sd.zero]
        for p, q in self.sample_pairs(rng, samples // 2):
            elements.extend([series(p), series(q)])
        return hyperfield_service.check_valuation(
            sd, lambda x: self.nu(x.value), elements=elements
        )

    # ====================================================================
    # IDEALES TROPICALES
    # ====================================================================

    def trop_ideal_to_bend(
        self, gens: Sequence[Polynomial]
    ) -> List[Tuple[Polynomial, Polynomial]]:
        """
        Generadores bend de {trop(f)}; acepta polinomios de Puiseux o ya
        tropicalizados. Los polinomios nulos no aportan generadores.
        """
        pairs: List[Tuple[Polynomial, Polynomial]] = []
        for f in gens:
            tf = self.trop(f) if f.carrier_id == PUISEUX else f
            if tf.is_zero:
                logger.debug("Generador tropicalizado nulo descartado")
                continue
            pairs.extend(polynomial_service.bend_generators(tf))
        return pairs

    def tropical_ideal_pair_check(
        self,
        f: Polynomial,
        g: Polynomial,
        candidates: Sequence[Polynomial] = (),
        monomial: Optional[Exponent] = None,
    ) -> Dict[str, Any]:
        """
        Busca h sin el monomio común Λ^i con hⱼ ≥ min{a_f + fⱼ, b_g + gⱼ}.

        a_f y b_g son los desplazamientos de Γ que normalizan fᵢ y gᵢ a 𝟙.
        Se prueban los candidatos y, al final, la combinación normalizada
        de f y g. 𝟘 cuenta como +∞ y h debe ser no nula.

        Raises:
            NoCommonMonomial: Si f y g no comparten monomios
        """
        common = sorted(set(f.support()) & set(g.support()))
        if not common:
            raise NoCommonMonomial("f y g no comparten monomios en su soporte")
        if monomial is None:
            monomial = common[0]
        elif tuple(monomial) not in common:
            raise NoCommonMonomial(f"El monomio {tuple(monomial)} no es común a f y g")
        monomial = tuple(monomial)

        a_f = -f.coef(monomial).value
        b_g = -g.coef(monomial).value
        combination = self.normalized_combination(f, g, monomial)
        for h in list(candidates) + [combination]:
            if self._eliminates(f, g, h, monomial, a_f, b_g):
                return {
                    'holds': True,
                    'witness': h,
                    'monomial': monomial,
                    'shifts': (a_f, b_g),
                }
        return {'holds': False, 'witness': None, 'monomial': monomial, 'shifts': (a_f, b_g)}

    def normalized_combination(
        self, f: Polynomial, g: Polynomial, monomial: Exponent
    ) -> Polynomial:
        """min{a_f + fⱼ, b_g + gⱼ} fuera de Λ^i, con coeficiente 𝟘 en Λ^i."""
        gamma = core_systems_service.make_minplus()
        a_f = tangible(GAMMA, -f.coef(monomial).value)
        b_g = tangible(GAMMA, -g.coef(monomial).value)
        terms = [(e, gamma.mul(a_f, c)) for e, c in f if e != monomial]
        terms += [(e, gamma.mul(b_g, c)) for e, c in g if e != monomial]
        return polynomial_service.make(gamma, terms, nvars=f.nvars, laurent=f.laurent)

    # ====================================================================
    # MATROIDES VALUADOS
    # ====================================================================

    def valuated_matroid_check(self, c: ValuatedMatroidCandidate) -> Dict[str, Any]:
        """
        Axiomas de matroide valuado en convención max.

        Returns:
            Dict con 'holds', 'axiom' ('nontrivial', 'symmetry', 'nullity',
            'exchange' o None) y 'witness' (nombres)

        Raises:
            MatroidTooLarge: Si |E| o m superan los límites configurados
        """
        E, m = c.ground, c.rank
        if len(E) > config.MATROID_MAX_GROUND or m > config.MATROID_MAX_RANK:
            raise MatroidTooLarge(
                f"Matroide con |E|={len(E)} y m={m} fuera de los límites",
                {'max_ground': config.MATROID_MAX_GROUND, 'max_rank': config.MATROID_MAX_RANK},
            )

        def names(key) -> List[str]:
            return [E[e] for e in key]

        support = [key for key, _ in c.values]
        if not support:
            return {'holds': False, 'axiom': 'nontrivial', 'witness': None}

        for key in c.tuples():
            value = c.v(key)
            if len(set(key)) < m:
                if value is not None:
                    return {'holds': False, 'axiom': 'nullity', 'witness': names(key)}
                continue
            for perm in itertools.permutations(key):
                if c.v(perm) != value:
                    return {
                        'holds': False,
                        'axiom': 'symmetry',
                        'witness': [names(key), names(perm)],
                    }

        # e₁..e_m y (e₀, e₂', ..., e_m') recorren el soporte; fuera de él el lado izquierdo es 𝟘
        for left in support:
            for right in support:
                e0, rest = right[0], right[1:]
                lhs = c.v(left) + c.v(right)
                terms = [self._exchange_term(c, left, e0, rest, i) for i in range(m)]
                if not any(t is not None and t >= lhs for t in terms):
                    return {
                        'holds': False,
                        'axiom': 'exchange',
                        'witness': [names(left), names(right)],
                    }
        return {'holds': True, 'axiom': None, 'witness': None}

    def uniform_matroid(self, rank: int, size: int) -> ValuatedMatroidCandidate:
        """U_{rank,size} con v = 𝟙 en las tuplas de elementos distintos."""
        ground = tuple(f"e{i + 1}" for i in range(size))
        values = [
            (key, 0)
            for key in itertools.product(range(size), repeat=rank)
            if len(set(key)) == rank
        ]
        return ValuatedMatroidCandidate(ground=ground, rank=rank, values=tuple(values))

    def linear_matroid(
        self, columns: Sequence[Sequence[Any]], names: Optional[Sequence[str]] = None
    ) -> ValuatedMatroidCandidate:
        """
        Valoración trivial de un matroide lineal sobre ℚ: v = 𝟙 si las
        columnas elegidas son independientes, 𝟘 si no.
        """
        columns = [[Fraction(x) for x in col] for col in columns]
        rank = len(columns[0])
        ground = tuple(names) if names else tuple(f"e{i + 1}" for i in range(len(columns)))
        values = []
        for key in itertools.product(range(len(columns)), repeat=rank):
            if len(set(key)) < rank:
                continue
            matrix = sympy.Matrix(
                [[sympy.Rational(columns[j][r].numerator, columns[j][r].denominator)
                  for j in key] for r in range(rank)]
            )
            if matrix.det() != 0:
                values.append((key, 0))
        return ValuatedMatroidCandidate(ground=ground, rank=rank, values=tuple(values))

    def puiseux_matroid(
        self, columns: Sequence[Sequence[PuiseuxSeries]], names: Optional[Sequence[str]] = None
    ) -> ValuatedMatroidCandidate:
        """v(e₁, ..., e_m) = −val(det) de las columnas elegidas (𝟘 si el determinante es nulo)."""
        rank = len(columns[0])
        ground = tuple(names) if names else tuple(f"e{i + 1}" for i in range(len(columns)))
        values = []
        for key in itertools.product(range(len(columns)), repeat=rank):
            if len(set(key)) < rank:
                continue
            det = self._puiseux_det([[columns[j][r] for j in key] for r in range(rank)])
            if not det.is_zero:
                values.append((key, -det.order))
        return ValuatedMatroidCandidate(ground=ground, rank=rank, values=tuple(values))

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _eliminates(
        self,
        f: Polynomial,
        g: Polynomial,
        h: Polynomial,
        monomial: Exponent,
        a_f: Fraction,
        b_g: Fraction,
    ) -> bool:
        if h.is_zero or h.coef(monomial) is not None:
            return False
        for exp in set(f.support()) | set(g.support()) | set(h.support()):
            if exp == monomial:
                continue
            bounds = []
            if f.coef(exp) is not None:
                bounds.append(a_f + f.coef(exp).value)
            if g.coef(exp) is not None:
                bounds.append(b_g + g.coef(exp).value)
            hc = h.coef(exp)
            if hc is None or not bounds:
                continue
            if hc.value < min(bounds):
                return False
        return True

    def _exchange_term(
        self,
        c: ValuatedMatroidCandidate,
        left: Tuple[int, ...],
        e0: int,
        rest: Tuple[int, ...],
        i: int,
    ) -> Optional[Fraction]:
        swapped = left[:i] + (e0,) + left[i + 1:]
        a, b = c.v(swapped), c.v((left[i],) + rest)
        if a is None or b is None:
            return None
        return a + b

    def _puiseux_det(self, rows: List[List[PuiseuxSeries]]) -> PuiseuxSeries:
        n = len(rows)
        total = PuiseuxSeries()
        for perm in itertools.permutations(range(n)):
            term = PuiseuxSeries.constant(1)
            for r, col in enumerate(perm):
                term = term * rows[r][col]
            if Permutation(list(perm)).signature() < 0:
                term = -term
            total = total + term
        return total


# Instancia global del servicio
tropicalization_service = TropicalizationService()

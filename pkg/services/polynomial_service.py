"""
Servicio de polinomios sobre sistemas con negación.

Producto de convolución, evaluación, ∘-raíces, ∘-equivalencia, relación
bend y verificación exhaustiva de la cota de raíces.
"""

import itertools
import logging
from collections import deque
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from config import config
from models.elem import Elem, tangible
from models.polynomial import Exponent, Polynomial
from models.system import SystemDescriptor
from services.core_systems_service import (
    ActionOnly,
    CoreSystemsService,
    NonInvertible,
    core_systems_service,
)
from utils.rationals import sample_rational

logger = logging.getLogger(__name__)

Point = Tuple[Elem, ...]


class PolynomialServiceException(Exception):
    """Excepción personalizada para errores del servicio de polinomios."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class SearchBoundExceeded(PolynomialServiceException):
    """La búsqueda acotada terminó sin decidir; no equivale a 'falso'."""
    pass


class _OrderedView:
    """Lectura de coeficientes como valores racionales en convención max."""

    def __init__(
        self,
        value: Callable[[Elem], Fraction],
        make: Callable[[Fraction], Elem],
        discrete: bool,
    ):
        self.value = value
        self.make = make
        self.discrete = discrete


class PolynomialService:
    """Aritmética y semántica funcional de polinomios."""

    # ====================================================================
    # CONSTRUCCIÓN Y ARITMÉTICA
    # ====================================================================

    def make(
        self,
        sd: SystemDescriptor,
        terms: Iterable[Tuple[Sequence[int], Elem]],
        nvars: Optional[int] = None,
        laurent: bool = False,
    ) -> Polynomial:
        """
        Construye un polinomio sumando coeficientes de exponentes repetidos.

        Args:
            sd: Sistema de coeficientes
            terms: Pares (exponente, coeficiente)
            nvars: Número de variables (se deduce de los términos si falta)
            laurent: Admite exponentes negativos

        Returns:
            Polynomial: Forma canónica, sin coeficientes 𝟘
        """
        acc: Dict[Exponent, Elem] = {}
        for exp, coef in terms:
            exp = tuple(int(k) for k in exp)
            if nvars is None:
                nvars = len(exp)
            acc[exp] = sd.add(acc[exp], coef) if exp in acc else coef
        if nvars is None:
            raise PolynomialServiceException("No se puede deducir nvars de un polinomio vacío")
        return Polynomial(
            sd.carrier_id,
            nvars,
            tuple((e, c) for e, c in acc.items() if c != sd.zero),
            laurent,
        )

    def monomial(
        self, sd: SystemDescriptor, exp: Sequence[int], coef: Elem, laurent: bool = False
    ) -> Polynomial:
        return self.make(sd, [(exp, coef)], nvars=len(exp), laurent=laurent)

    def poly_add(self, sd: SystemDescriptor, f: Polynomial, g: Polynomial) -> Polynomial:
        self._check_shapes(f, g)
        return self.make(sd, list(f.terms) + list(g.terms), f.nvars, f.laurent)

    def poly_scale(self, sd: SystemDescriptor, a: Elem, f: Polynomial) -> Polynomial:
        """a·f término a término."""
        return self.make(sd, [(e, sd.mul(a, c)) for e, c in f], f.nvars, f.laurent)

    def conv_mul(self, sd: SystemDescriptor, f: Polynomial, g: Polynomial) -> Polynomial:
        """
        Producto de convolución (f*g)(s) = Σ_{u+v=s} f(u)g(v).

        Raises:
            ActionOnly: Si el portador sólo tiene acción y ningún factor
                tiene todos sus coeficientes tangibles
        """
        self._check_shapes(f, g)
        if not sd.has_total_mul:
            if not self._all_tangible(sd, f):
                if not self._all_tangible(sd, g):
                    raise ActionOnly(
                        f"Convolución no definida sobre {sd.name}: ningún factor es tangible"
                    )
                f, g = g, f
        terms = [
            (tuple(a + b for a, b in zip(u, v)), sd.mul(cu, cv))
            for (u, cu), (v, cv) in itertools.product(f.terms, g.terms)
        ]
        return self.make(sd, terms, f.nvars, f.laurent)

    # ====================================================================
    # EVALUACIÓN Y RAÍCES
    # ====================================================================

    def eval(self, sd: SystemDescriptor, f: Polynomial, point: Sequence[Elem]) -> Elem:
        """
        Evalúa f en un punto: Σ coef·point^exp.

        Raises:
            NonInvertible: Si f es de Laurent y alguna coordenada no es invertible
        """
        point = tuple(point)
        if len(point) != f.nvars:
            raise PolynomialServiceException(
                f"El punto tiene {len(point)} coordenadas y f {f.nvars} variables"
            )
        inverses: Tuple[Optional[Elem], ...] = (None,) * f.nvars
        if f.laurent:
            inverses = tuple(sd.invert(x) if sd.invert is not None else None for x in point)
            missing = [sd.label(x) for x, inv in zip(point, inverses) if inv is None]
            if missing:
                raise NonInvertible(
                    f"Evaluación de Laurent en coordenadas no invertibles: {missing}",
                    {'coordinates': missing},
                )

        total = sd.zero
        for exp, coef in f:
            power = None
            for x, inv, k in zip(point, inverses, exp):
                base = x if k >= 0 else inv
                for _ in range(abs(k)):
                    power = base if power is None else sd.mul(power, base)
            term = coef if power is None else sd.mul(power, coef)
            total = sd.add(total, term)
        return total

    def circ_roots(
        self, sd: SystemDescriptor, f: Polynomial, domain: Iterable[Elem]
    ) -> List[Elem]:
        """∘-raíces de f en el dominio: {b : f(b) ∈ 𝒜^∘}."""
        if f.nvars != 1:
            raise PolynomialServiceException("circ_roots requiere un polinomio univariado")
        roots = {b for b in domain if sd.in_quasi_zeros(self.eval(sd, f, (b,)))}
        return sorted(roots, key=lambda e: e.sort_key())

    def check_root_bound(
        self,
        sys: SystemDescriptor,
        degree: int,
        coeff_pool: Sequence[Elem],
        domain: Sequence[Elem],
    ) -> Dict[str, Any]:
        """
        Enumera los polinomios de grado n con coeficientes en {𝟘} ∪ pool
        (principal en pool) y comprueba que ninguno tenga más de n ∘-raíces
        tangibles distintas en el dominio.

        Returns:
            Dict con 'holds', 'counterexample' (polinomio y raíces) y 'checked'
        """
        sd = core_systems_service.require_triple(sys)
        if not 1 <= degree <= config.ROOT_BOUND_MAX_DEGREE:
            raise PolynomialServiceException(
                f"Grado {degree} fuera de 1..{config.ROOT_BOUND_MAX_DEGREE}"
            )
        pool = list(dict.fromkeys(coeff_pool))
        domain = list(dict.fromkeys(domain))
        if not pool or any(not sd.is_tangible(c) for c in pool):
            raise PolynomialServiceException(
                "El conjunto de coeficientes debe ser tangible y no vacío"
            )
        if any(not sd.is_tangible(b) for b in domain):
            raise PolynomialServiceException("El dominio debe contener sólo tangibles")
        choices = [sd.zero] + pool
        if len(pool) * len(choices) ** degree > config.COEFF_MAX_COMBINATIONS:
            raise PolynomialServiceException(
                "Demasiados polinomios para la enumeración exhaustiva",
                {'limit': config.COEFF_MAX_COMBINATIONS},
            )

        checked = 0
        for lead in pool:
            for rest in itertools.product(choices, repeat=degree):
                terms = [((degree,), lead)] + [((k,), c) for k, c in enumerate(rest)]
                f = self.make(sd, terms, nvars=1)
                roots = self.circ_roots(sd, f, domain)
                checked += 1
                if len(roots) > degree:
                    logger.info(f"Cota de raíces violada en {sd.name} por {f.to_dict()}")
                    return {
                        'holds': False,
                        'counterexample': {'polynomial': f, 'roots': roots},
                        'checked': checked,
                    }
        logger.debug(f"Cota de raíces: {checked} polinomios de grado {degree} revisados")
        return {'holds': True, 'counterexample': None, 'checked': checked}

    def circ_equiv(
        self, sd: SystemDescriptor, f: Polynomial, g: Polynomial, domain: Iterable
    ) -> bool:
        """f ≡_∘ g en el dominio: f(b)^∘ = g(b)^∘ punto a punto."""
        self._check_shapes(f, g)
        for b in domain:
            point = self._as_point(b)
            if sd.quasi_zero(self.eval(sd, f, point)) != sd.quasi_zero(self.eval(sd, g, point)):
                return False
        return True

    def circ_supp(self, sd: SystemDescriptor, f: Polynomial) -> List[Exponent]:
        """Exponentes cuyo coeficiente es tangible."""
        return [exp for exp, coef in f if sd.is_tangible(coef)]

    def is_functionally_tangible(
        self,
        sd: SystemDescriptor,
        f: Polynomial,
        sample: Iterable,
        threshold: Optional[Fraction] = None,
    ) -> Dict[str, Any]:
        """
        'Casi todo' punto de la muestra da valor tangible: la fracción de
        puntos tangibles supera el umbral y las excepciones se enumeran.
        """
        threshold = threshold if threshold is not None else config.FUNCTIONAL_TANGIBLE_THRESHOLD
        points = [self._as_point(b) for b in sample]
        if not points:
            raise PolynomialServiceException("La muestra de puntos está vacía")
        exceptions = [p for p in points if not sd.is_tangible(self.eval(sd, f, p))]
        fraction = Fraction(len(points) - len(exceptions), len(points))
        if exceptions:
            logger.debug(f"Tangibilidad funcional: {len(exceptions)} excepciones")
        return {
            'holds': fraction > threshold,
            'exceptions': [p[0] if len(p) == 1 else p for p in exceptions],
            'fraction': fraction,
        }

    def disjoint_root_sets(
        self, sd: SystemDescriptor, polys: Sequence[Polynomial], domain: Sequence[Elem]
    ) -> Dict[str, Any]:
        """
        Sombra finita del lema de tipo Zariski: si cada polinomio tiene un
        punto no raíz en el dominio, el producto también debe tenerlo, y
        las raíces del producto son la unión de las raíces.
        """
        if not polys:
            raise PolynomialServiceException("Se requiere al menos un polinomio")
        domain = list(domain)
        root_sets = [set(self.circ_roots(sd, f, domain)) for f in polys]
        product = polys[0]
        for f in polys[1:]:
            product = self.conv_mul(sd, product, f)
        product_roots = set(self.circ_roots(sd, product, domain))
        proper = all(len(roots) < len(domain) for roots in root_sets)
        non_roots = [b for b in domain if b not in product_roots]
        return {
            'proper': proper,
            'holds': (not proper) or bool(non_roots),
            'union_matches': product_roots == set().union(*root_sets),
            'non_root': non_roots[0] if non_roots else None,
            'product': product,
        }

    # ====================================================================
    # RELACIÓN BEND
    # ====================================================================

    def bend_generators(self, f: Polynomial) -> List[Tuple[Polynomial, Polynomial]]:
        """Pares (f, f sin un monomio) para cada exponente del soporte."""
        if f.is_zero:
            raise PolynomialServiceException("bend_generators requiere f no nulo")
        return [(f, f.without(exp)) for exp in f.support()]

    def bend_equiv(
        self,
        sd: SystemDescriptor,
        f: Polynomial,
        g: Polynomial,
        steps: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        Búsqueda bidireccional acotada en la congruencia bend: se borra un
        monomio dominado por la envolvente de los demás o se añade uno
        dominado por la envolvente actual.

        Returns:
            Dict con 'equivalent' y 'steps' (None si no son equivalentes)

        Raises:
            SearchBoundExceeded: Si no se decide dentro de la cota de pasos
        """
        self._check_shapes(f, g)
        view = self._ordered_view(sd)
        steps = steps if steps is not None else config.BEND_STEP_BOUND
        if f == g:
            return {'equivalent': True, 'steps': 0}
        if self._essential_terms(view, f) != self._essential_terms(view, g):
            # los términos esenciales determinan la función
            return {'equivalent': False, 'steps': None}

        candidates = sorted(set(f.terms) | set(g.terms), key=lambda t: t[0])
        visited = {f}
        frontier = deque([(f, 0)])
        while frontier:
            current, depth = frontier.popleft()
            if depth >= steps:
                continue
            for nxt in self._bend_moves(sd, view, current, candidates):
                if nxt == g:
                    logger.debug(f"Bend: equivalencia encontrada en {depth + 1} pasos")
                    return {'equivalent': True, 'steps': depth + 1}
                if nxt in visited:
                    continue
                visited.add(nxt)
                if len(visited) > config.BEND_MAX_STATES:
                    logger.warning(f"Bend: límite de {config.BEND_MAX_STATES} estados alcanzado")
                    raise SearchBoundExceeded(
                        "Límite de estados de la búsqueda bend alcanzado",
                        {'states': len(visited), 'steps': steps},
                    )
                frontier.append((nxt, depth + 1))
        logger.warning(f"Bend: sin decisión con cota de {steps} pasos")
        raise SearchBoundExceeded(
            f"Sin decisión bend dentro de {steps} pasos", {'steps': steps}
        )

    def forward_rewrite(
        self,
        sd: SystemDescriptor,
        f: Polynomial,
        rng: np.random.Generator,
        steps: int = 4,
    ) -> Polynomial:
        """Aplica movimientos bend aleatorios (borrar o añadir monomios dominados)."""
        view = self._ordered_view(sd)
        current = f
        for _ in range(steps):
            if current.is_zero:
                break
            dominated = [
                exp for exp, coef in current
                if self._dominated(view, current.without(exp), exp, coef)
            ]
            if dominated and int(rng.integers(0, 2)) == 0:
                current = current.without(dominated[int(rng.integers(0, len(dominated)))])
                continue
            support = current.support()
            exp = tuple(
                int(rng.integers(min(e[i] for e in support), max(e[i] for e in support) + 1))
                for i in range(current.nvars)
            )
            top = self._hull_value(view, current, exp)
            if top is None:
                continue
            slack = Fraction(0)
            if not view.discrete:
                slack = abs(sample_rational(rng))
            coef = view.make(top - slack)
            current = self.make(
                sd, list(current.terms) + [(exp, coef)], current.nvars, current.laurent
            )
        return current

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _ordered_view(self, sd: SystemDescriptor) -> _OrderedView:
        if sd.carrier_id == CoreSystemsService.MAXPLUS:
            return _OrderedView(
                lambda c: c.value, lambda v: tangible(sd.carrier_id, v), discrete=False
            )
        if sd.carrier_id == CoreSystemsService.MINPLUS:
            return _OrderedView(
                lambda c: -c.value, lambda v: tangible(sd.carrier_id, -v), discrete=False
            )
        if sd.name == 'boolean' and sd.one is not None:
            return _OrderedView(lambda c: Fraction(0), lambda v: sd.one, discrete=True)
        raise PolynomialServiceException(
            f"La relación bend requiere coeficientes max-plus, min-plus o booleanos, no {sd.name}"
        )

    def _bend_moves(
        self,
        sd: SystemDescriptor,
        view: _OrderedView,
        f: Polynomial,
        candidates: List[Tuple[Exponent, Elem]],
    ) -> List[Polynomial]:
        moves = []
        if len(f) > 1:
            for exp, coef in f:
                rest = f.without(exp)
                if self._dominated(view, rest, exp, coef):
                    moves.append(rest)
        for exp, coef in candidates:
            top = self._hull_value(view, f, exp)
            if top is None or view.value(coef) > top:
                continue
            nxt = self.make(sd, list(f.terms) + [(exp, coef)], f.nvars, f.laurent)
            if nxt != f:
                moves.append(nxt)
        return moves

    def _essential_terms(self, view: _OrderedView, f: Polynomial) -> frozenset:
        return frozenset(
            (exp, view.value(coef)) for exp, coef in f
            if not self._dominated(view, f.without(exp), exp, coef)
        )

    def _dominated(
        self, view: _OrderedView, others: Polynomial, exp: Exponent, coef: Elem
    ) -> bool:
        top = self._hull_value(view, others, exp)
        return top is not None and view.value(coef) <= top

    def _hull_value(
        self, view: _OrderedView, f: Polynomial, exp: Exponent
    ) -> Optional[Fraction]:
        """
        Envolvente cóncava superior de los términos de f en exp, o None si
        exp no está en la envoltura convexa del soporte.
        """
        points = [(e, view.value(c)) for e, c in f]
        best: Optional[Fraction] = None
        for k in range(1, min(len(points), f.nvars + 1) + 1):
            for subset in itertools.combinations(points, k):
                weights = self._barycentric([e for e, _ in subset], exp)
                if weights is None:
                    continue
                value = sum((w * v for w, (_, v) in zip(weights, subset)), Fraction(0))
                if best is None or value > best:
                    best = value
        return best

    def _barycentric(self, vertices: List[Exponent], exp: Exponent) -> Optional[List[Fraction]]:
        # pesos λ ≥ 0 únicos con Σλ = 1 y Σλ·vᵢ = exp
        rows = [[sp.Integer(v[i]) for v in vertices] for i in range(len(exp))]
        rows.append([sp.Integer(1)] * len(vertices))
        rhs = sp.Matrix([sp.Integer(x) for x in exp] + [sp.Integer(1)])
        try:
            solution, params = sp.Matrix(rows).gauss_jordan_solve(rhs)
        except ValueError:
            return None
        if params.shape[0] > 0:
            return None
        weights = [Fraction(int(x.p), int(x.q)) for x in solution]
        if any(w < 0 for w in weights):
            return None
        return weights

    def _check_shapes(self, f: Polynomial, g: Polynomial) -> None:
        if f.nvars != g.nvars or f.laurent != g.laurent or f.carrier_id != g.carrier_id:
            raise PolynomialServiceException(
                "Los polinomios deben compartir portador, número de variables y tipo"
            )

    def _all_tangible(self, sd: SystemDescriptor, f: Polynomial) -> bool:
        return all(sd.is_tangible(c) for _, c in f)

    def _as_point(self, b) -> Point:
        if isinstance(b, Elem):
            return (b,)
        return tuple(b)


# Instancia global del servicio
polynomial_service = PolynomialService()

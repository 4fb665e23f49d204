"""
Servicio de simetrización.

Construye Â = 𝒜 × 𝒜 con suma por componentes, producto twist,
negación switch y tangibles (𝒯 × {𝟘}) ∪ ({𝟘} × 𝒯).
"""

import itertools
import logging
from typing import Any, Dict, List, Optional

import numpy as np

from models.elem import Elem, pair
from models.polynomial import Polynomial
from models.system import SystemDescriptor
from services.core_systems_service import ActionOnly, NonInvertible, core_systems_service
from services.polynomial_service import polynomial_service

logger = logging.getLogger(__name__)


class SymmetrizationServiceException(Exception):
    """Excepción personalizada para errores del servicio de simetrización."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class SymmetrizationService:
    """Simetrizado de un sistema y operaciones sobre pares."""

    def symmetrize(self, sd: SystemDescriptor) -> SystemDescriptor:
        """
        Construye el pseudo-sistema simetrizado (Â, 𝒯_Â, switch, ⪯_∘).

        Args:
            sd: Sistema base

        Returns:
            SystemDescriptor: Simetrizado, con `base` apuntando a sd
        """
        cid = f"sym({sd.carrier_id})"
        z = sd.zero

        def make(a: Elem, b: Elem) -> Elem:
            return pair(cid, a, b)

        def in_t_hat(x: Elem) -> bool:
            a, b = x.value
            return (sd.is_tangible(a) and b == z) or (a == z and sd.is_tangible(b))

        def add(x: Elem, y: Elem) -> Elem:
            return make(sd.add(x.pos, y.pos), sd.add(x.neg, y.neg))

        def twist(x: Elem, y: Elem) -> Elem:
            if not sd.has_total_mul:
                if in_t_hat(y) and not in_t_hat(x):
                    x, y = y, x
                elif not (in_t_hat(x) or x == make(z, z)):
                    raise ActionOnly(
                        f"Ningún factor está en 𝒯̂ sobre el portador de acción {sd.name}"
                    )
            a0, a1 = x.value
            b0, b1 = y.value
            return make(
                sd.add(sd.mul(a0, b0), sd.mul(a1, b1)),
                sd.add(sd.mul(a0, b1), sd.mul(a1, b0)),
            )

        def switch(x: Elem) -> Elem:
            return make(x.neg, x.pos)

        if sd.elements is not None:
            def witnesses(c: Elem) -> List[Elem]:
                return list(sd.elements)
        else:
            def witnesses(c: Elem) -> List[Elem]:
                c0, c1 = c.value
                return [z, c0, c1, sd.quasi_zero(c0), sd.quasi_zero(c1)]

        def surpass(b: Elem, c: Elem) -> bool:
            # b ⪯_∘ c  sii  c = b + (s, s)
            if b == c:
                return True
            return any(add(b, make(s, s)) == c for s in witnesses(c))

        def invert(x: Elem) -> Optional[Elem]:
            if sd.invert is None or not in_t_hat(x):
                return None
            a, b = x.value
            if b == z:
                inv = sd.invert(a)
                return make(inv, z) if inv is not None else None
            inv = sd.invert(b)
            return make(z, inv) if inv is not None else None

        elements = None
        if sd.elements is not None:
            elements = tuple(make(a, b) for a in sd.elements for b in sd.elements)

        sample = None
        if sd.sample is not None:
            def sample(rng: np.random.Generator) -> Elem:
                return make(sd.sample(rng), sd.sample(rng))
        elif sd.elements is not None:
            def sample(rng: np.random.Generator) -> Elem:
                return elements[int(rng.integers(0, len(elements)))]

        base_pool = sd.params.get('height_pool')

        def height_pool(b: Elem) -> List[Elem]:
            if base_pool is None:
                return []
            pos = [make(a, z) for a in base_pool(b.pos)] if b.pos != z else []
            neg = [make(z, a) for a in base_pool(b.neg)] if b.neg != z else []
            return pos + neg

        generated = True
        if sd.elements is not None:
            generated = not core_systems_service.check_triple(sd)['not_generated']

        sym = SystemDescriptor(
            carrier_id=cid,
            name=f"sym-{sd.name}",
            add=add,
            mul=twist,
            zero=make(z, z),
            one=make(sd.one, z) if sd.one is not None else None,
            is_tangible=in_t_hat,
            negate=switch,
            surpass=surpass,
            kind=sd.kind,
            elements=elements,
            closed=sd.closed,
            sample=sample,
            is_quasi_zero=lambda x: x.pos == x.neg,
            invert=invert,
            is_triple=generated,
            surpass_mode='circ',
            labeler=lambda x: f"({sd.label(x.pos)},{sd.label(x.neg)})",
            base=sd,
            params={'height_pool': height_pool},
        )
        logger.info(f"Simetrizado de {sd.name} construido")
        return sym

    def embed(self, sym: SystemDescriptor, a: Elem) -> Elem:
        """Inyección a ↦ (a, 𝟘)."""
        base = self._base(sym)
        return pair(sym.carrier_id, a, base.zero)

    def switch(self, sym: SystemDescriptor, x: Elem) -> Elem:
        return sym.negate(x)

    def twist_mul(self, sym: SystemDescriptor, x: Elem, y: Elem) -> Elem:
        """
        Producto twist (a₀b₀ + a₁b₁, a₀b₁ + a₁b₀).

        Raises:
            ActionOnly: Si el portador sólo tiene acción y ningún factor está en 𝒯̂
        """
        self._base(sym)
        return sym.mul(x, y)

    def twist_inverse(self, sym: SystemDescriptor, x: Elem) -> Elem:
        """Inverso en 𝒯̂: (a, 𝟘)⁻¹ = (a⁻¹, 𝟘) y (𝟘, a)⁻¹ = (𝟘, a⁻¹)."""
        inv = sym.invert(x) if sym.invert is not None else None
        if inv is None:
            raise NonInvertible(f"{sym.label(x)} no es invertible en 𝒯̂")
        return inv

    def sym_eval(
        self, sym: SystemDescriptor, f: Polynomial, g: Polynomial, b: Elem
    ) -> Elem:
        """(f, g)(b₀, b₁) = (f(b₀) + g(b₁), f(b₁) + g(b₀))."""
        base = self._base(sym)
        b0, b1 = b.value
        f0 = polynomial_service.eval(base, f, (b0,))
        f1 = polynomial_service.eval(base, f, (b1,))
        g0 = polynomial_service.eval(base, g, (b0,))
        g1 = polynomial_service.eval(base, g, (b1,))
        return pair(sym.carrier_id, base.add(f0, g1), base.add(f1, g0))

    def is_symmetrized_root(
        self, sym: SystemDescriptor, f: Polynomial, g: Polynomial, b: Elem
    ) -> bool:
        value = self.sym_eval(sym, f, g, b)
        return value.pos == value.neg

    def pair_action(self, sd: SystemDescriptor, p: Elem, x: Elem) -> Elem:
        """(a₀, a₁)·x = a₀x (−) a₁x sobre el sistema base."""
        a0, a1 = p.value
        return sd.add(sd.mul(a0, x), sd.negate(sd.mul(a1, x)))

    def check_pair_action(self, sd: SystemDescriptor) -> Dict[str, Any]:
        """
        Verifica que (a₀, a₁)·x = a₀x (−) a₁x sea una acción de Â sobre el
        sistema base: (p ⊙ q)·x = p·(q·x) y (𝟙, 𝟘)·x = x.
        """
        if sd.elements is None:
            raise SymmetrizationServiceException("La acción de pares requiere un portador finito")
        sym = self.symmetrize(sd)
        for p, q, x in itertools.product(sym.elements, sym.elements, sd.elements):
            left = self.pair_action(sd, sym.mul(p, q), x)
            right = self.pair_action(sd, p, self.pair_action(sd, q, x))
            if left != right:
                return {'holds': False, 'witness': (p, q, x)}
        if sd.one is not None:
            for x in sd.elements:
                if self.pair_action(sd, sym.one, x) != x:
                    return {'holds': False, 'witness': (sym.one, x)}
        return {'holds': True, 'witness': None}

    def _base(self, sym: SystemDescriptor) -> SystemDescriptor:
        if sym.base is None or not sym.carrier_id.startswith('sym('):
            raise SymmetrizationServiceException(f"{sym.name} no es un simetrizado")
        return sym.base


# Instancia global del servicio
symmetrization_service = SymmetrizationService()

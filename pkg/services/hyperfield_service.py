"""
Servicio de hipercuerpos.

Hipercuerpos de Krasner, de signos y tropical; el sistema S(H) de
hipersumas finitas; los funtores t, a, e, c y las valoraciones en el
hipercuerpo tropical.
"""

import itertools
import logging
from collections import deque
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from config import config
from models.elem import Elem, ElemKind, zero as zero_elem
from models.hyperfield import Hyperfield, HyperfieldKind, SemiringMonoidPair
from models.system import SystemDescriptor
from services.core_systems_service import (
    CoreSystemsService,
    SurpassUndetermined,
    core_systems_service,
)
from utils.rationals import sample_rational

logger = logging.getLogger(__name__)

TROPICAL_HF = 'hf:tropical'
TROPICAL_S = 'S(tropical)'


class HyperfieldServiceException(Exception):
    """Excepción personalizada para errores del servicio de hipercuerpos."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class NonterminatingClosure(HyperfieldServiceException):
    pass


class ZeroDivisor(HyperfieldServiceException):
    pass


class NotHomomorphism(HyperfieldServiceException):
    pass


class ImageUndefined(HyperfieldServiceException):
    pass


def hf_val(value) -> Elem:
    """Elemento a ∈ ℚ del hipercuerpo tropical."""
    return Elem(TROPICAL_HF, ElemKind.VAL, value)


def hf_neginf() -> Elem:
    return Elem(TROPICAL_HF, ElemKind.NEGINF)


class HyperfieldService:
    """Construcciones sobre hipercuerpos."""

    # ====================================================================
    # HIPERCUERPOS ESTÁNDAR
    # ====================================================================

    def make_krasner(self) -> Hyperfield:
        """K = {0, 1} con 1 ⊞ 1 = {0, 1}."""
        return Hyperfield(
            name='krasner',
            names=('0', '1'),
            hyperadd_table=(
                (frozenset({0}), frozenset({1})),
                (frozenset({1}), frozenset({0, 1})),
            ),
            mul_table=((0, 0), (0, 1)),
            neg_table=(0, 1),
        )

    def make_signs(self) -> Hyperfield:
        """S = {0, 1, −1} con 1 ⊞ −1 = {0, 1, −1}."""
        everything = frozenset({0, 1, 2})
        return Hyperfield(
            name='signs',
            names=('0', '1', '-1'),
            hyperadd_table=(
                (frozenset({0}), frozenset({1}), frozenset({2})),
                (frozenset({1}), frozenset({1}), everything),
                (frozenset({2}), everything, frozenset({2})),
            ),
            mul_table=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
            neg_table=(0, 2, 1),
        )

    def make_tropical_hyperfield(self) -> Hyperfield:
        """ℚ ∪ {−∞} con a ⊞ b = {max} si a ≠ b y [−∞, a] si a = b."""
        return Hyperfield(name='tropical', kind=HyperfieldKind.TROPICAL)

    # ====================================================================
    # OPERACIONES ELEMENTALES
    # ====================================================================

    def hypersum(self, h: Hyperfield, a: Elem, b: Elem) -> Elem:
        """a ⊞ b como elemento de S(H)."""
        if h.is_finite:
            return self._set_elem(h, h.hyperadd(a.value, b.value))
        return self._trop_add(self._trop_singleton(a), self._trop_singleton(b))

    def hmul(self, h: Hyperfield, a: Elem, b: Elem) -> Elem:
        if h.is_finite:
            return h.elem(h.mul(a.value, b.value))
        if a.kind == ElemKind.NEGINF or b.kind == ElemKind.NEGINF:
            return hf_neginf()
        return hf_val(a.value + b.value)

    def hneg(self, h: Hyperfield, a: Elem) -> Elem:
        if h.is_finite:
            return h.elem(h.neg(a.value))
        return a

    def contains(self, h: Hyperfield, s: Elem, x: Elem) -> bool:
        """x ∈ s para s ∈ S(H) y x ∈ H."""
        if h.is_finite:
            return x.value in s.value
        if s.kind == ElemKind.NEGINF:
            return x.kind == ElemKind.NEGINF
        if s.kind == ElemKind.VAL:
            return x.kind == ElemKind.VAL and x.value == s.value
        return x.kind == ElemKind.NEGINF or x.value <= s.value

    def check_hyperfield(
        self, h: Hyperfield, rng: Optional[np.random.Generator] = None, samples: int = 2000
    ) -> Dict[str, Any]:
        """
        Axiomas de hipercuerpo: conmutatividad, 0 neutro, hipernegación
        única, asociatividad conjuntista, distributividad y reversibilidad.

        Returns:
            Dict con 'holds' y 'violations' (axioma → testigo)
        """
        if h.is_finite:
            elements = [h.elem(i) for i in h.elements]
            triples = list(itertools.product(elements, repeat=3))
        else:
            rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
            pool = [self._sample_hf(rng) for _ in range(24)] + [hf_val(0), hf_neginf()]
            elements = list(dict.fromkeys(pool))
            triples = [
                tuple(elements[int(k)] for k in rng.integers(0, len(elements), size=3))
                for _ in range(samples)
            ]
        zero, one = self._zero(h), self._one(h)
        violations: Dict[str, Tuple[Elem, ...]] = {}

        def fail(axiom: str, *w: Elem) -> None:
            violations.setdefault(axiom, tuple(w))

        for a in elements:
            if self.hypersum(h, zero, a) != self._singleton(h, a):
                fail('zero-identity', a)
            opposites = [b for b in elements if self.contains(h, self.hypersum(h, a, b), zero)]
            if opposites != [self.hneg(h, a)]:
                fail('unique-hypernegation', a)
            if self.hmul(h, one, a) != a:
                fail('one-identity', a)
            if a != zero and h.is_finite and not any(self.hmul(h, a, b) == one for b in elements):
                fail('multiplicative-inverse', a)
        for a, b, c in triples:
            if self.hypersum(h, a, b) != self.hypersum(h, b, a):
                fail('commutative', a, b)
            if self.hmul(h, a, b) != self.hmul(h, b, a):
                fail('mul-commutative', a, b)
            left = self._set_add(h, self.hypersum(h, a, b), self._singleton(h, c))
            right = self._set_add(h, self._singleton(h, a), self.hypersum(h, b, c))
            if left != right:
                fail('associative', a, b, c)
            scaled = self._set_mul(h, self._singleton(h, a), self.hypersum(h, b, c))
            if scaled != self.hypersum(h, self.hmul(h, a, b), self.hmul(h, a, c)):
                fail('distributive', a, b, c)
            if self.contains(h, self.hypersum(h, b, c), a):
                if not self.contains(h, self.hypersum(h, a, self.hneg(h, b)), c):
                    fail('reversible', a, b, c)
        if violations:
            logger.info(f"Hipercuerpo {h.name}: axiomas fallidos {sorted(violations)}")
        return {'holds': not violations, 'violations': violations}

    # ====================================================================
    # S(H) Y FUNTORES
    # ====================================================================

    def build_S_of_H(self, h: Hyperfield) -> SystemDescriptor:
        """
        Sistema (S(H), H^×, (−), ⊆) de hipersumas finitas de elementos de H.

        Raises:
            NonterminatingClosure: Si la clausura supera CLOSURE_MAX_ELEMENTS
        """
        if not h.is_finite:
            return self._tropical_S()

        reps: Dict[FrozenSet[int], Optional[Tuple[int, ...]]] = {
            frozenset({i}): (i,) for i in h.elements
        }
        frontier = deque(reps)
        while frontier:
            A = frontier.popleft()
            for B in list(reps):
                total = self._raw_add(h, A, B)
                rep = reps[A] + reps[B] if reps[A] is not None and reps[B] is not None else None
                if total not in reps:
                    reps[total] = rep
                    frontier.append(total)
                elif reps[total] is None:
                    reps[total] = rep
                product = frozenset(h.mul(a, b) for a in A for b in B)
                if product not in reps:
                    reps[product] = None
                    frontier.append(product)
            if len(reps) > config.CLOSURE_MAX_ELEMENTS:
                raise NonterminatingClosure(
                    f"La clausura de S({h.name}) supera {config.CLOSURE_MAX_ELEMENTS} elementos"
                )
            logger.debug(f"S({h.name}): {len(reps)} conjuntos alcanzados")

        cid = f"S({h.name})"
        elements = tuple(
            sorted((Elem(cid, ElemKind.SET, s) for s in reps), key=lambda e: e.sort_key())
        )
        by_set = {e.value: e for e in elements}

        def add(x: Elem, y: Elem) -> Elem:
            return by_set[self._raw_add(h, x.value, y.value)]

        def mul(x: Elem, y: Elem) -> Elem:
            return by_set[frozenset(h.mul(a, b) for a in x.value for b in y.value)]

        def negate(x: Elem) -> Elem:
            return by_set[frozenset(h.neg(a) for a in x.value)]

        circ = frozenset(add(x, negate(x)) for x in elements)

        def invert(x: Elem) -> Optional[Elem]:
            if len(x.value) != 1 or h.zero_idx in x.value:
                return None
            (a,) = tuple(x.value)
            inverse = [b for b in h.elements if h.mul(a, b) == h.one_idx]
            return by_set[frozenset(inverse[:1])] if inverse else None

        sd = SystemDescriptor(
            carrier_id=cid,
            name=cid,
            add=add,
            mul=mul,
            zero=by_set[frozenset({h.zero_idx})],
            one=by_set[frozenset({h.one_idx})],
            is_tangible=lambda x: len(x.value) == 1 and h.zero_idx not in x.value,
            negate=negate,
            surpass=lambda x, y: x.value <= y.value,
            elements=elements,
            closed=True,
            is_quasi_zero=lambda x: x in circ,
            invert=invert,
            surpass_mode='explicit',
            labeler=lambda x: '{' + ','.join(h.names[i] for i in sorted(x.value)) + '}',
            params={'hyperfield': h, 'representations': reps},
        )
        is_triple = core_systems_service.check_triple(sd)['is_triple']
        logger.info(f"S({h.name}) construido con {len(elements)} elementos")
        return sd.replace(is_triple=is_triple)

    def functor_a(self, h: Hyperfield) -> SemiringMonoidPair:
        """a(H) = (S(H), H^×)."""
        sd = self.build_S_of_H(h)
        return SemiringMonoidPair(
            semiring=sd,
            is_member=sd.is_tangible,
            members=tuple(sd.tangibles()) if sd.is_finite else None,
        )

    def functor_t(self, sd: SystemDescriptor) -> SemiringMonoidPair:
        """
        t(𝒜) = (𝒜, 𝒜 ∖ {𝟘}) para semidominios.

        Raises:
            ZeroDivisor: Si hay divisores de cero
        """
        report = core_systems_service.is_semidomain(sd)
        if not report['holds']:
            a, b = report['witness']
            raise ZeroDivisor(
                f"{sd.name} tiene divisores de cero: {sd.label(a)}·{sd.label(b)} = 𝟘",
                {'witness': [sd.label(a), sd.label(b)]},
            )
        members = None
        if sd.elements is not None:
            members = tuple(e for e in sd.elements if e != sd.zero)
        return SemiringMonoidPair(semiring=sd, is_member=lambda x: x != sd.zero, members=members)

    def functor_e(self, pair: SemiringMonoidPair) -> SystemDescriptor:
        """
        e(𝒜, 𝒯): (−) identidad y ⪯ = ⪯_∘.

        Raises:
            SurpassUndetermined: Si ⪯_∘ no puede calcularse en un portador paramétrico
        """
        sd = pair.semiring
        if sd.is_finite and sd.closed:
            rebuilt = sd.replace(
                is_tangible=pair.is_member, negate=lambda x: x, surpass_mode='circ',
                params={k: v for k, v in sd.params.items() if k != 'finsys'},
            )
            fs = core_systems_service.tabulate(rebuilt)
            position = {e: k for k, e in enumerate(sorted(sd.elements, key=lambda e: e.sort_key()))}
            circ = frozenset(sd.add(d, d) for d in sd.elements)
            return rebuilt.replace(
                surpass=lambda x, y: fs.surpass_matrix[position[x]][position[y]],
                is_quasi_zero=lambda x: x in circ,
                is_triple=fs.is_triple,
                name=f"e({sd.name})",
            )
        if sd.surpass_mode == 'circ' and sd.carrier_id in (
            CoreSystemsService.MAXPLUS, CoreSystemsService.MINPLUS, CoreSystemsService.NAT,
        ):
            return sd.replace(is_tangible=pair.is_member, name=f"e({sd.name})")
        raise SurpassUndetermined(f"⪯_∘ no se puede derivar para {sd.name}")

    def functor_c(self, h: Hyperfield) -> SystemDescriptor:
        """
        c(R) = (S(R), R, −, ⊆) para hipercuerpos sin divisores de cero.

        Raises:
            ZeroDivisor: Si ab = 0 con a, b ≠ 0
        """
        if h.is_finite:
            for a, b in itertools.product(h.elements, repeat=2):
                if a != h.zero_idx and b != h.zero_idx and h.mul(a, b) == h.zero_idx:
                    raise ZeroDivisor(
                        f"{h.names[a]}·{h.names[b]} = 0 en {h.name}",
                        {'witness': [h.names[a], h.names[b]]},
                    )
        sd = self.build_S_of_H(h)
        return sd.replace(name=f"c({h.name})")

    def hyperfield_morphism_map(
        self, f: Dict[str, str], h1: Hyperfield, h2: Hyperfield
    ) -> Dict[str, Any]:
        """
        a(f): S(H₁) → S(H₂), Σ hᵢ ↦ Σ f(hᵢ), para homomorfismos de hipercuerpos.

        Args:
            f: Mapa por nombres de H₁ en H₂

        Returns:
            Dict con 'map' (Elem → Elem), 'strict' (f(a ⊞ b) = f(a) ⊞ f(b)),
            'elementwise' (a(f) coincide con la imagen puntual del conjunto),
            'preserves_add', 'preserves_mul' y 'monotone'

        Raises:
            NotHomomorphism: Si f no es homomorfismo
            ImageUndefined: Si un elemento de S(H₁) no tiene representación como
                hipersuma o dos representaciones del mismo conjunto tienen imágenes distintas
        """
        if not (h1.is_finite and h2.is_finite):
            raise HyperfieldServiceException("a(f) requiere hipercuerpos finitos")
        try:
            fmap = {h1.index(a): h2.index(b) for a, b in f.items()}
        except ValueError as e:
            raise NotHomomorphism(str(e))
        if set(fmap) != set(h1.elements):
            raise NotHomomorphism("El mapa debe ser total en H₁")

        def bad(reason: str, *w: int) -> None:
            raise NotHomomorphism(
                f"f no es homomorfismo: {reason}", {'witness': [h1.names[i] for i in w]}
            )

        if fmap[h1.zero_idx] != h2.zero_idx:
            bad('f(0) ≠ 0', h1.zero_idx)
        if fmap[h1.one_idx] != h2.one_idx:
            bad('f(1) ≠ 1', h1.one_idx)
        for a, b in itertools.product(h1.elements, repeat=2):
            if fmap[h1.mul(a, b)] != h2.mul(fmap[a], fmap[b]):
                bad('f(ab) ≠ f(a)f(b)', a, b)
            image = {fmap[c] for c in h1.hyperadd(a, b)}
            if not image <= h2.hyperadd(fmap[a], fmap[b]):
                bad('f(a ⊞ b) ⊄ f(a) ⊞ f(b)', a, b)
        for a in h1.elements:
            if fmap[h1.neg(a)] != h2.neg(fmap[a]):
                bad('f(−a) ≠ −f(a)', a)

        s1, s2 = self.build_S_of_H(h1), self.build_S_of_H(h2)
        reps = s1.params['representations']
        by_set = {e.value: e for e in s2.elements}
        mapping: Dict[Elem, Elem] = {}
        for x in s1.elements:
            rep = reps[x.value]
            if rep is None:
                raise ImageUndefined(f"{s1.label(x)} no es una hipersuma de elementos de {h1.name}")
            total = frozenset({fmap[rep[0]]})
            for i in rep[1:]:
                total = self._raw_add(h2, total, frozenset({fmap[i]}))
            mapping[x] = by_set[total]

        # rep(x) + rep(y) representa x + y: la imagen no debe depender de la representación
        pairs = list(itertools.product(s1.elements, repeat=2))
        for x, y in pairs:
            via_sum = s2.add(mapping[x], mapping[y])
            if mapping[s1.add(x, y)] != via_sum:
                raise ImageUndefined(
                    f"a(f) no está bien definido: {s1.label(s1.add(x, y))} tiene "
                    f"representaciones con imágenes {s2.label(mapping[s1.add(x, y)])} "
                    f"y {s2.label(via_sum)}",
                    {'witness': [s1.label(x), s1.label(y)]},
                )

        strict = all(
            {fmap[c] for c in h1.hyperadd(a, b)} == h2.hyperadd(fmap[a], fmap[b])
            for a, b in itertools.product(h1.elements, repeat=2)
        )
        logger.info(f"a(f): S({h1.name}) → S({h2.name}) bien definido (estricto={strict})")
        return {
            'map': mapping,
            'strict': strict,
            'elementwise': all(
                mapping[x].value == frozenset(fmap[a] for a in x.value) for x in s1.elements
            ),
            'preserves_add': True,
            'preserves_mul': all(
                mapping[s1.mul(x, y)] == s2.mul(mapping[x], mapping[y]) for x, y in pairs
            ),
            'monotone': all(
                s2.surpass(mapping[x], mapping[y]) for x, y in pairs if s1.surpass(x, y)
            ),
        }

    # ====================================================================
    # HIPERCUERPO TROPICAL Y SUPERTROPICAL
    # ====================================================================

    def tropical_to_supertropical(self, x: Elem) -> Elem:
        """{a} ↦ a tangible, [−∞, a] ↦ a fantasma, {−∞} ↦ 𝟘."""
        cid = CoreSystemsService.SUPERTROPICAL
        if x.kind == ElemKind.VAL:
            return Elem(cid, ElemKind.TANGIBLE, x.value)
        if x.kind == ElemKind.INTERVAL:
            return Elem(cid, ElemKind.GHOST, x.value)
        if x.kind == ElemKind.NEGINF:
            return zero_elem(cid)
        raise HyperfieldServiceException(f"{x!r} no pertenece a S(tropical)")

    def supertropical_to_tropical(self, x: Elem) -> Elem:
        if x.kind == ElemKind.TANGIBLE:
            return Elem(TROPICAL_S, ElemKind.VAL, x.value)
        if x.kind == ElemKind.GHOST:
            return Elem(TROPICAL_S, ElemKind.INTERVAL, x.value)
        if x.kind == ElemKind.ZERO:
            return Elem(TROPICAL_S, ElemKind.NEGINF)
        raise HyperfieldServiceException(f"{x!r} no es supertropical")

    def check_tropical_isomorphism(
        self, rng: Optional[np.random.Generator] = None, samples: int = 1000
    ) -> Dict[str, Any]:
        """Compara S(tropical) y el supertropical en pares muestreados."""
        rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
        st = core_systems_service.make_supertropical()
        trop = self._tropical_S()
        phi = self.supertropical_to_tropical
        for _ in range(samples):
            x, y = st.sample(rng), st.sample(rng)
            checks = {
                'add': phi(st.add(x, y)) == trop.add(phi(x), phi(y)),
                'mul': phi(st.mul(x, y)) == trop.mul(phi(x), phi(y)),
                'negate': phi(st.negate(x)) == trop.negate(phi(x)),
                'tangible': st.is_tangible(x) == trop.is_tangible(phi(x)),
                'surpass': st.surpass(x, y) == trop.surpass(phi(x), phi(y)),
                'inverse': self.tropical_to_supertropical(phi(x)) == x,
            }
            failed = [name for name, ok in checks.items() if not ok]
            if failed:
                return {'holds': False, 'failed': failed, 'witness': (x, y)}
        return {'holds': True, 'failed': [], 'witness': None}

    # ====================================================================
    # VALORACIONES
    # ====================================================================

    def check_valuation(
        self,
        src: SystemDescriptor,
        nu: Callable[[Elem], Elem],
        elements: Optional[Sequence[Elem]] = None,
        rng: Optional[np.random.Generator] = None,
        samples: int = 300,
    ) -> Dict[str, Any]:
        """
        ν: 𝒜 → ℚ ∪ {−∞} es valoración: ν(𝟘) = −∞, ν(ab) = ν(a) ⊡ ν(b),
        ν(a + b) ∈ ν(a) ⊞ ν(b) y ν no es constante −∞.

        Returns:
            Dict con 'holds' y 'violations' (lista de (ley, testigo))
        """
        h = self.make_tropical_hyperfield()
        if elements is None:
            if src.elements is not None:
                elements = list(src.elements)
            else:
                rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
                elements = [src.sample(rng) for _ in range(samples)]
        elements = list(elements)
        violations: List[Tuple[str, Tuple[Elem, ...]]] = []

        if nu(src.zero).kind != ElemKind.NEGINF:
            violations.append(('zero', (src.zero,)))
        for a in elements:
            for b in elements:
                if nu(src.mul(a, b)) != self.hmul(h, nu(a), nu(b)):
                    violations.append(('multiplicative', (a, b)))
                if not self.contains(h, self.hypersum(h, nu(a), nu(b)), nu(src.add(a, b))):
                    violations.append(('subadditive', (a, b)))
        if all(nu(a).kind == ElemKind.NEGINF for a in elements):
            violations.append(('nontrivial', ()))
        if violations:
            logger.info(f"Valoración sobre {src.name}: {len(violations)} violaciones")
        return {'holds': not violations, 'violations': violations}

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _raw_add(self, h: Hyperfield, A: FrozenSet[int], B: FrozenSet[int]) -> FrozenSet[int]:
        out: set = set()
        for a in A:
            for b in B:
                out |= h.hyperadd(a, b)
        return frozenset(out)

    def _set_elem(self, h: Hyperfield, s: FrozenSet[int]) -> Elem:
        return Elem(f"S({h.name})", ElemKind.SET, s)

    def _singleton(self, h: Hyperfield, a: Elem) -> Elem:
        if h.is_finite:
            return self._set_elem(h, frozenset({a.value}))
        return self._trop_singleton(a)

    def _set_add(self, h: Hyperfield, s: Elem, t: Elem) -> Elem:
        if h.is_finite:
            return self._set_elem(h, self._raw_add(h, s.value, t.value))
        return self._trop_add(s, t)

    def _set_mul(self, h: Hyperfield, s: Elem, t: Elem) -> Elem:
        if h.is_finite:
            return self._set_elem(h, frozenset(h.mul(a, b) for a in s.value for b in t.value))
        return self._trop_mul(s, t)

    def _zero(self, h: Hyperfield) -> Elem:
        return h.elem(h.zero_idx) if h.is_finite else hf_neginf()

    def _one(self, h: Hyperfield) -> Elem:
        return h.elem(h.one_idx) if h.is_finite else hf_val(0)

    def _sample_hf(self, rng: np.random.Generator) -> Elem:
        if int(rng.integers(0, 10)) == 0:
            return hf_neginf()
        return hf_val(sample_rational(rng))

    def _trop_singleton(self, a: Elem) -> Elem:
        if a.kind == ElemKind.NEGINF:
            return Elem(TROPICAL_S, ElemKind.NEGINF)
        return Elem(TROPICAL_S, ElemKind.VAL, a.value)

    def _trop_add(self, x: Elem, y: Elem) -> Elem:
        # {a}, [−∞, a] y {−∞}: las sumas finitas no salen de esta familia
        if x.kind == ElemKind.NEGINF:
            return y
        if y.kind == ElemKind.NEGINF:
            return x
        if x.value > y.value:
            return x
        if y.value > x.value:
            return y
        if x.kind == ElemKind.INTERVAL:
            return x
        return Elem(TROPICAL_S, ElemKind.INTERVAL, x.value)

    def _trop_mul(self, x: Elem, y: Elem) -> Elem:
        if x.kind == ElemKind.NEGINF or y.kind == ElemKind.NEGINF:
            return Elem(TROPICAL_S, ElemKind.NEGINF)
        kind = ElemKind.VAL
        if ElemKind.INTERVAL in (x.kind, y.kind):
            kind = ElemKind.INTERVAL
        return Elem(TROPICAL_S, kind, x.value + y.value)

    def _trop_subset(self, x: Elem, y: Elem) -> bool:
        if x == y:
            return True
        if x.kind == ElemKind.NEGINF:
            return y.kind == ElemKind.INTERVAL
        return y.kind == ElemKind.INTERVAL and x.kind != ElemKind.NEGINF and x.value <= y.value

    def _tropical_S(self) -> SystemDescriptor:
        base_sample = core_systems_service.make_supertropical().sample

        def sample(rng: np.random.Generator) -> Elem:
            return self.supertropical_to_tropical(base_sample(rng))

        return SystemDescriptor(
            carrier_id=TROPICAL_S,
            name=TROPICAL_S,
            add=self._trop_add,
            mul=self._trop_mul,
            zero=Elem(TROPICAL_S, ElemKind.NEGINF),
            one=Elem(TROPICAL_S, ElemKind.VAL, 0),
            is_tangible=lambda x: x.kind == ElemKind.VAL,
            negate=lambda x: x,
            surpass=self._trop_subset,
            sample=sample,
            is_quasi_zero=lambda x: x.kind in (ElemKind.INTERVAL, ElemKind.NEGINF),
            invert=lambda x: (
                Elem(TROPICAL_S, ElemKind.VAL, -x.value) if x.kind == ElemKind.VAL else None
            ),
            is_triple=True,
            surpass_mode='explicit',
            params={
                'height_pool': lambda b: (
                    [] if b.kind == ElemKind.NEGINF else [Elem(TROPICAL_S, ElemKind.VAL, b.value)]
                ),
            },
        )


# Instancia global del servicio
hyperfield_service = HyperfieldService()

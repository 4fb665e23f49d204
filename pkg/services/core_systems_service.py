"""
Servicio de sistemas con negación.

Construye los portadores básicos (supertropical, max-plus, min-plus,
booleano, naturales) como SystemDescriptor y evalúa los predicados
estructurales: negación única, meta-tangibilidad, bipotencia, altura,
sub-triple característico, axiomas de sobrepaso y conjunto nulo.
"""

import itertools
import logging
from collections import deque
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from config import config
from models.elem import Elem, ElemKind, ghost, tangible, zero
from models.system import FinSys, SystemDescriptor, SystemKind
from utils.rationals import parse_rational, sample_rational

logger = logging.getLogger(__name__)

SystemLike = Union[SystemDescriptor, FinSys]


class CoreSystemsServiceException(Exception):
    """Excepción personalizada para errores del servicio de sistemas."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class EpsNotInvolutive(CoreSystemsServiceException):
    pass


class NoUnit(CoreSystemsServiceException):
    pass


class NotATriple(CoreSystemsServiceException):
    pass


class NotASemiring(CoreSystemsServiceException):
    pass


class ActionOnly(CoreSystemsServiceException):
    """Producto no definido: el portador sólo tiene la acción de 𝒯."""
    pass


class NonInvertible(CoreSystemsServiceException):
    pass


class SurpassUndetermined(CoreSystemsServiceException):
    pass


class FinSysInvalid(CoreSystemsServiceException):
    """Tabla finita que viola un axioma; lleva el nombre del axioma."""

    def __init__(self, axiom: str, message: str, witness: Optional[List[str]] = None):
        super().__init__(message, {'axiom': axiom, 'witness': witness or []})
        self.axiom = axiom


def _is_closed(elements: Tuple[Elem, ...], add, mul) -> bool:
    members = set(elements)
    for x in elements:
        for y in elements:
            if add(x, y) not in members or mul(x, y) not in members:
                return False
    return True


def _rational_sampler(
    carrier_id: str, ghosts: bool, zero_weight: int = 1
) -> Callable[[np.random.Generator], Elem]:
    def sample(rng: np.random.Generator) -> Elem:
        roll = int(rng.integers(0, 10))
        if roll < zero_weight:
            return zero(carrier_id)
        if ghosts and roll < 4:
            return ghost(carrier_id, sample_rational(rng))
        return tangible(carrier_id, sample_rational(rng))

    return sample


class CoreSystemsService:
    """Construcción de portadores y predicados estructurales."""

    SUPERTROPICAL = 'supertropical'
    MAXPLUS = 'maxplus'
    MINPLUS = 'minplus'
    NAT = 'nat'

    # ====================================================================
    # PORTADORES
    # ====================================================================

    def make_supertropical(self, values: Optional[Iterable] = None) -> SystemDescriptor:
        """
        Construye el triple supertropical estándar sobre (ℚ, +, max).

        Args:
            values: Valores racionales opcionales para un fragmento finito
                (cero, tangibles y fantasmas de esos valores)

        Returns:
            SystemDescriptor: Portador supertropical con (−) = identidad y ⪯ = ⪯_∘
        """
        cid = self.SUPERTROPICAL

        def add(x: Elem, y: Elem) -> Elem:
            if x.kind == ElemKind.ZERO:
                return y
            if y.kind == ElemKind.ZERO:
                return x
            if x.value > y.value:
                return x
            if y.value > x.value:
                return y
            return ghost(cid, x.value)

        def mul(x: Elem, y: Elem) -> Elem:
            if x.kind == ElemKind.ZERO or y.kind == ElemKind.ZERO:
                return zero(cid)
            if x.kind == ElemKind.GHOST or y.kind == ElemKind.GHOST:
                return ghost(cid, x.value + y.value)
            return tangible(cid, x.value + y.value)

        def surpass(b: Elem, c: Elem) -> bool:
            if b == c:
                return True
            if c.kind != ElemKind.GHOST:
                return False
            return b.kind == ElemKind.ZERO or b.value <= c.value

        def invert(x: Elem) -> Optional[Elem]:
            if x.kind != ElemKind.TANGIBLE:
                return None
            return tangible(cid, -x.value)

        def height_pool(b: Elem) -> List[Elem]:
            if b.kind == ElemKind.ZERO:
                return []
            return [tangible(cid, b.value)]

        elements = None
        closed = False
        if values is not None:
            qs = sorted({parse_rational(v) for v in values})
            elements = tuple(
                [zero(cid)] + [tangible(cid, q) for q in qs] + [ghost(cid, q) for q in qs]
            )
            closed = _is_closed(elements, add, mul)

        return SystemDescriptor(
            carrier_id=cid,
            name='supertropical',
            add=add,
            mul=mul,
            zero=zero(cid),
            one=tangible(cid, 0),
            is_tangible=lambda x: x.kind == ElemKind.TANGIBLE,
            negate=lambda x: x,
            surpass=surpass,
            elements=elements,
            closed=closed,
            sample=_rational_sampler(cid, ghosts=True),
            is_quasi_zero=lambda x: x.kind in (ElemKind.GHOST, ElemKind.ZERO),
            invert=invert,
            is_triple=True,
            params={'height_pool': height_pool},
        )

    def make_maxplus(self, values: Optional[Iterable] = None) -> SystemDescriptor:
        """Álgebra max-plus sobre ℚ ∪ {−∞}; sólo pseudo-triple pues a^∘ = a."""
        return self._make_idempotent(self.MAXPLUS, 'max-plus', values, prefer_max=True)

    def make_minplus(self, values: Optional[Iterable] = None) -> SystemDescriptor:
        """Álgebra min-plus sobre ℚ ∪ {+∞}, dual de max-plus."""
        return self._make_idempotent(self.MINPLUS, 'min-plus', values, prefer_max=False)

    def _make_idempotent(
        self, cid: str, name: str, values: Optional[Iterable], prefer_max: bool
    ) -> SystemDescriptor:
        def add(x: Elem, y: Elem) -> Elem:
            if x.kind == ElemKind.ZERO:
                return y
            if y.kind == ElemKind.ZERO:
                return x
            if prefer_max:
                return x if x.value >= y.value else y
            return x if x.value <= y.value else y

        def mul(x: Elem, y: Elem) -> Elem:
            if x.kind == ElemKind.ZERO or y.kind == ElemKind.ZERO:
                return zero(cid)
            return tangible(cid, x.value + y.value)

        def surpass(b: Elem, c: Elem) -> bool:
            # c = b + c  (a^∘ = a), así que ⪯_∘ es el orden del semianillo
            return add(b, c) == c

        def invert(x: Elem) -> Optional[Elem]:
            if x.kind == ElemKind.ZERO:
                return None
            return tangible(cid, -x.value)

        elements = None
        closed = False
        if values is not None:
            qs = sorted({parse_rational(v) for v in values})
            elements = tuple([zero(cid)] + [tangible(cid, q) for q in qs])
            closed = _is_closed(elements, add, mul)

        return SystemDescriptor(
            carrier_id=cid,
            name=name,
            add=add,
            mul=mul,
            zero=zero(cid),
            one=tangible(cid, 0),
            is_tangible=lambda x: x.kind == ElemKind.TANGIBLE,
            negate=lambda x: x,
            surpass=surpass,
            elements=elements,
            closed=closed,
            sample=_rational_sampler(cid, ghosts=False),
            is_quasi_zero=lambda x: True,
            invert=invert,
            is_triple=False,
            params={'height_pool': lambda b: [] if b.kind == ElemKind.ZERO else [b]},
        )

    def boolean_finsys(self) -> FinSys:
        """Semicampo booleano 𝔹 = {0, 1} con 1 + 1 = 1."""
        return FinSys(
            names=('0', '1'),
            add_table=((0, 1), (1, 1)),
            mul_table=((0, 0), (0, 1)),
            zero_idx=0,
            one_idx=1,
            tangible_idxs=frozenset({1}),
            neg_table=(0, 1),
            name='boolean',
        )

    def make_boolean(self) -> SystemDescriptor:
        return self.boolean_finsys().to_descriptor()

    def make_nat(self, values: Optional[Iterable] = None) -> SystemDescriptor:
        """Semianillo ℕ con (−) = identidad y 𝒯 = ℕ ∖ {0}."""
        cid = self.NAT

        def num(x: Elem) -> Fraction:
            return Fraction(0) if x.kind == ElemKind.ZERO else x.value

        def make(v: Fraction) -> Elem:
            return zero(cid) if v == 0 else tangible(cid, v)

        def sample(rng: np.random.Generator) -> Elem:
            return make(Fraction(int(rng.integers(0, config.SAMPLE_MAX_NUMERATOR + 1))))

        def surpass(b: Elem, c: Elem) -> bool:
            diff = num(c) - num(b)
            return diff >= 0 and diff % 2 == 0

        def height_pool(b: Elem) -> List[Elem]:
            return [tangible(cid, k) for k in range(1, int(num(b)) + 1)]

        elements = None
        closed = False
        if values is not None:
            vs = sorted({int(parse_rational(v)) for v in values} | {0})
            if any(v < 0 for v in vs):
                raise CoreSystemsServiceException("ℕ no admite valores negativos")
            elements = tuple(make(Fraction(v)) for v in vs)
            closed = _is_closed(elements, lambda x, y: make(num(x) + num(y)),
                                lambda x, y: make(num(x) * num(y)))

        return SystemDescriptor(
            carrier_id=cid,
            name='nat',
            add=lambda x, y: make(num(x) + num(y)),
            mul=lambda x, y: make(num(x) * num(y)),
            zero=zero(cid),
            one=tangible(cid, 1),
            is_tangible=lambda x: x.kind == ElemKind.TANGIBLE,
            negate=lambda x: x,
            surpass=surpass,
            elements=elements,
            closed=closed,
            sample=sample,
            is_quasi_zero=lambda x: num(x) % 2 == 0,
            invert=lambda x: x if num(x) == 1 else None,
            is_triple=False,
            params={'height_pool': height_pool},
        )

    def make_product(self, s1: FinSys, s2: FinSys) -> FinSys:
        """
        Producto directo de dos sistemas finitos, con operaciones por componentes.

        Args:
            s1: Primer factor
            s2: Segundo factor

        Returns:
            FinSys: Producto con 𝒯 = 𝒯₁ × 𝒯₂
        """
        idx = [(i, j) for i in s1.elements for j in s2.elements]
        position = {p: k for k, p in enumerate(idx)}
        names = tuple(f"({s1.names[i]},{s2.names[j]})" for i, j in idx)

        def table(op1, op2):
            return tuple(
                tuple(position[(op1[a][c], op2[b][d])] for (c, d) in idx) for (a, b) in idx
            )

        one_idx = None
        if s1.one_idx is not None and s2.one_idx is not None:
            one_idx = position[(s1.one_idx, s2.one_idx)]
        return FinSys(
            names=names,
            add_table=table(s1.add_table, s2.add_table),
            mul_table=table(s1.mul_table, s2.mul_table),
            zero_idx=position[(s1.zero_idx, s2.zero_idx)],
            one_idx=one_idx,
            tangible_idxs=frozenset(
                position[(i, j)] for i in s1.tangible_idxs for j in s2.tangible_idxs
            ),
            neg_table=tuple(position[(s1.neg(i), s2.neg(j))] for i, j in idx),
            name=f"{s1.name}x{s2.name}",
        )

    def restrict_to_action(self, sd: SystemDescriptor) -> SystemDescriptor:
        """Olvida la multiplicación total y conserva sólo la acción de 𝒯 ∪ {𝟘}."""

        def action(x: Elem, y: Elem) -> Elem:
            if x != sd.zero and not sd.is_tangible(x):
                raise ActionOnly(
                    f"El portador {sd.name} sólo admite la acción de elementos tangibles"
                )
            return sd.mul(x, y)

        return sd.replace(kind=SystemKind.MODULE_TRIPLE, mul=action, name=f"{sd.name}-action")

    def tabulate(self, sd: SystemDescriptor, name: Optional[str] = None) -> FinSys:
        """
        Convierte un descriptor finito y cerrado en tablas.

        Raises:
            FinSysInvalid: Si el fragmento no es cerrado bajo + y ·
        """
        if sd.elements is None:
            raise CoreSystemsServiceException(f"El sistema {sd.name} no es finito")
        elements = sorted(sd.elements, key=lambda e: e.sort_key())
        position = {e: k for k, e in enumerate(elements)}

        def lookup(e: Elem, where: str) -> int:
            if e not in position:
                raise FinSysInvalid(
                    'closure', f"El fragmento de {sd.name} no es cerrado bajo {where}",
                    [sd.label(e)],
                )
            return position[e]

        add_table = tuple(
            tuple(lookup(sd.add(x, y), '+') for y in elements) for x in elements
        )
        mul_table = tuple(
            tuple(lookup(sd.mul(x, y), '·') for y in elements) for x in elements
        )
        surpass_mode, surpass_pairs = 'circ', None
        if sd.surpass_mode != 'circ':
            surpass_mode = 'explicit'
            surpass_pairs = frozenset(
                (position[b], position[c])
                for b in elements for c in elements if sd.surpass(b, c)
            )
        fs = FinSys(
            names=tuple(sd.label(e) for e in elements),
            add_table=add_table,
            mul_table=mul_table,
            zero_idx=position[sd.zero],
            one_idx=position[sd.one] if sd.one is not None and sd.one in position else None,
            tangible_idxs=frozenset(position[e] for e in elements if sd.is_tangible(e)),
            neg_table=tuple(lookup(sd.negate(e), '(−)') for e in elements),
            surpass_mode=surpass_mode,
            surpass_pairs=surpass_pairs,
            name=name or sd.name,
        )
        logger.info(f"Sistema {fs.name} tabulado con {fs.size} elementos")
        return fs

    # ====================================================================
    # NEGACIÓN
    # ====================================================================

    def negation_from_epsilon(self, sys: SystemLike, eps: Elem) -> SystemDescriptor:
        """
        Instala la negación (−)x = ε·x.

        Args:
            sys: Sistema con multiplicación total
            eps: Elemento con ε² = 𝟙

        Returns:
            SystemDescriptor: Sistema con la nueva negación

        Raises:
            EpsNotInvolutive: Si ε² ≠ 𝟙
            SurpassUndetermined: Si ⪯ no puede recalcularse para el portador paramétrico
        """
        sd = self._descriptor(sys)
        if not sd.has_total_mul:
            raise NotASemiring(f"{sd.name} no tiene multiplicación total")
        if sd.one is None:
            raise NoUnit(f"{sd.name} no tiene unidad")
        if sd.mul(eps, eps) != sd.one:
            raise EpsNotInvolutive(
                f"ε² ≠ 𝟙 para ε = {sd.label(eps)}", {'eps': sd.label(eps)}
            )

        def negate(x: Elem) -> Elem:
            return sd.mul(eps, x)

        candidates = self._witness_elements(sd)
        for a in candidates:
            for b in candidates:
                if negate(sd.mul(a, b)) != sd.mul(negate(a), b):
                    raise CoreSystemsServiceException(
                        "(−)(ab) ≠ ((−)a)b para la negación inducida",
                        {'witness': [sd.label(a), sd.label(b)]},
                    )

        if sd.closed:
            # en portadores finitos ⪯_∘ se recalcula con la nueva negación
            fs = self.tabulate(sd.replace(negate=negate, surpass_mode='circ'))
            position = {
                e: k for k, e in enumerate(sorted(sd.elements, key=lambda e: e.sort_key()))
            }
            matrix = fs.surpass_matrix
            circ = frozenset(sd.add(d, negate(d)) for d in sd.elements)
            return sd.replace(
                negate=negate,
                surpass=lambda x, y: matrix[position[x]][position[y]],
                is_quasi_zero=lambda x: x in circ,
                surpass_mode='circ',
                name=f"{sd.name}[eps]",
                params={k: v for k, v in sd.params.items() if k != 'finsys'},
            )

        if any(negate(a) != sd.negate(a) for a in candidates):
            raise SurpassUndetermined(
                f"La negación inducida cambia (−) en {sd.name}; ⪯ no puede derivarse"
            )
        return sd.replace(
            negate=negate,
            name=f"{sd.name}[eps]",
            params={k: v for k, v in sd.params.items() if k != 'finsys'},
        )

    def quasi_zero(self, sys: SystemLike, a: Elem) -> Elem:
        """Devuelve a^∘ = a + (−)a."""
        sd = self._descriptor(sys)
        return sd.quasi_zero(a)

    # ====================================================================
    # PREDICADOS ESTRUCTURALES
    # ====================================================================

    def check_unique_negation(self, sys: SystemLike) -> Dict[str, Any]:
        """
        Negación única: a₀ + a₁ ∈ 𝒜^∘ con aᵢ tangibles implica a₁ = (−)a₀.

        Returns:
            Dict con 'holds' y 'witness' (par de tangibles o None)
        """
        sd = self._require_finite(sys)
        for a0, a1 in itertools.product(sd.tangibles(), repeat=2):
            if sd.in_quasi_zeros(sd.add(a0, a1)) and a1 != sd.negate(a0):
                return {'holds': False, 'witness': (a0, a1)}
        return {'holds': True, 'witness': None}

    def check_meta_tangible(self, sys: SystemLike) -> Dict[str, Any]:
        """Meta-tangible: a₀ + a₁ ∈ 𝒯 para tangibles con a₁ ≠ (−)a₀."""
        sd = self._require_finite(sys)
        for a0, a1 in itertools.product(sd.tangibles(), repeat=2):
            if a1 != sd.negate(a0) and not sd.is_tangible(sd.add(a0, a1)):
                return {'holds': False, 'witness': (a0, a1)}
        return {'holds': True, 'witness': None}

    def check_bipotent(self, sys: SystemLike) -> Dict[str, Any]:
        """(−)-bipotente: a + b ∈ {a, b} para tangibles con b ≠ (−)a."""
        sd = self._require_finite(sys)
        for a, b in itertools.product(sd.tangibles(), repeat=2):
            if b != sd.negate(a) and sd.add(a, b) not in (a, b):
                return {'holds': False, 'witness': (a, b)}
        return {'holds': True, 'witness': None}

    def height(self, sys: SystemLike, b: Elem, bound: Optional[int] = None) -> Optional[int]:
        """
        Mínimo t ≤ bound tal que b es suma de t tangibles.

        Args:
            sys: Sistema
            b: Elemento
            bound: Cota de la búsqueda (por defecto HEIGHT_BOUND)

        Returns:
            Optional[int]: La altura, o None si no se alcanza dentro de la cota
        """
        sd = self._descriptor(sys)
        bound = bound if bound is not None else config.HEIGHT_BOUND
        if bound < 1:
            raise CoreSystemsServiceException("La cota de altura debe ser ≥ 1")
        if b == sd.zero:
            return 0

        pool = list(sd.tangibles())
        if 'height_pool' in sd.params:
            pool.extend(sd.params['height_pool'](b))
        pool = list(dict.fromkeys(pool))
        if not pool:
            return None

        level = {sd.zero}
        for t in range(1, bound + 1):
            level = {sd.add(s, a) for s in level for a in pool}
            logger.debug(f"Altura: nivel {t} con {len(level)} sumas")
            if b in level:
                return t
        logger.warning(f"Altura de {sd.label(b)} no alcanzada con cota {bound}")
        return None

    def characteristic_subtriple(self, sys: SystemLike) -> Dict[str, Any]:
        """
        Sub-triple generado por 𝟙 y su clasificación.

        Returns:
            Dict con 'elements' (generados por 𝟙 y (−)𝟙), 'subsystem' (FinSys
            con 𝟘 adjunto) y 'tag'

        Raises:
            NoUnit: Si el sistema no tiene 𝟙
        """
        sd = self._descriptor(sys)
        if sd.one is None:
            raise NoUnit(f"El sistema {sd.name} no tiene unidad")

        one = sd.one
        minus_one = sd.negate(one)
        generated = {one, minus_one}
        frontier = deque(generated)
        while frontier:
            x = frontier.popleft()
            if len(generated) > config.CLOSURE_MAX_ELEMENTS:
                raise CoreSystemsServiceException("El sub-triple característico no es finito")
            candidates = [sd.negate(x)] + [sd.add(x, y) for y in list(generated)]
            if sd.has_total_mul:
                candidates += [sd.mul(x, y) for y in list(generated)]
            for y in candidates:
                if y not in generated:
                    generated.add(y)
                    frontier.append(y)

        e = sd.add(one, minus_one)
        if e == one:
            tag = 'boolean'
        elif sd.add(e, one) == one:
            tag = 'integer-like'
        elif minus_one == one and sd.add(e, one) == e:
            tag = 'krasner-like'
        elif sd.add(one, one) == one:
            tag = 'sign-like'
        elif sd.add(e, one) == minus_one:
            tag = 'char-4-like'
        else:
            tag = 'other'

        elements = sorted(generated, key=lambda x: x.sort_key())
        subsystem = self.tabulate(
            sd.replace(
                elements=tuple(elements + ([sd.zero] if sd.zero not in generated else [])),
                is_tangible=lambda x: x in (one, minus_one),
                closed=True,
            ),
            name=f"{sd.name}-char",
        )
        logger.info(f"Sub-triple característico de {sd.name}: {len(elements)} elementos, {tag}")
        return {'elements': elements, 'subsystem': subsystem, 'tag': tag}

    # ====================================================================
    # SOBREPASO Y CONJUNTO NULO
    # ====================================================================

    def circ_surpass(self, sys: SystemLike, b: Elem, c: Elem) -> bool:
        """b ⪯_∘ c por búsqueda de un testigo d con c = b + d^∘."""
        sd = self._require_finite(sys)
        return any(sd.add(b, sd.quasi_zero(d)) == c for d in sd.elements)

    def circ_surpass_table(self, sys: SystemLike) -> Dict[str, Any]:
        """
        Tabla de ⪯_∘ por búsqueda de testigos, contrastada con la relación del sistema.

        Returns:
            Dict con 'table' (matriz booleana b ⪯_∘ c), 'matches' y el primer
            par 'witness' en que la forma cerrada difiere de la búsqueda
        """
        sd = self._require_finite(sys)
        elems = list(sd.elements)
        table = [[self.circ_surpass(sd, b, c) for c in elems] for b in elems]
        witness = next(
            (
                (b, c)
                for i, b in enumerate(elems)
                for j, c in enumerate(elems)
                if table[i][j] != sd.surpass(b, c)
            ),
            None,
        )
        if witness is not None:
            logger.warning(f"⪯ de {sd.name} difiere de ⪯_∘ en {witness}")
        return {'table': table, 'matches': witness is None, 'witness': witness}

    def check_surpassing_axioms(
        self,
        sys: SystemLike,
        rng: Optional[np.random.Generator] = None,
        samples: int = 0,
    ) -> Dict[str, Any]:
        """
        Verifica los axiomas de relación de sobrepaso.

        Exhaustivo en portadores finitos; en portadores paramétricos usa
        `samples` ternas muestreadas con `rng`.

        Returns:
            Dict con 'holds' (axiomas (i)–(v) y preorden), 'axioms' (por
            axioma: holds y witness) y 't_surpassing'
        """
        sd = self._descriptor(sys)
        if sd.is_finite:
            triples: Iterable = itertools.product(sd.elements, repeat=3)
        else:
            if sd.sample is None:
                raise CoreSystemsServiceException(f"{sd.name} no es finito ni muestreable")
            rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
            samples = samples or 10000
            triples = [(sd.sample(rng), sd.sample(rng), sd.sample(rng)) for _ in range(samples)]

        le = sd.surpass
        witness: Dict[str, Any] = {
            name: None
            for name in (
                'reflexive', 'transitive', 'i', 'ii', 'iii', 'iv', 'v', 'antisymmetric',
                't-surpassing',
            )
        }

        def fail(name: str, *w: Elem) -> None:
            if witness[name] is None:
                witness[name] = tuple(w)

        for x, y, z in triples:
            if not le(x, x):
                fail('reflexive', x)
            if le(x, y) and le(y, z) and not le(x, z):
                fail('transitive', x, y, z)
            if not le(x, sd.add(x, sd.quasi_zero(y))):
                fail('i', x, y)
            if le(x, y):
                if not le(sd.negate(x), sd.negate(y)):
                    fail('ii', x, y)
                if sd.is_tangible(z) and not le(sd.mul(z, x), sd.mul(z, y)):
                    fail('iii', z, x, y)
                if le(z, z) and not le(sd.add(x, z), sd.add(y, z)):
                    fail('iv', x, y, z)
                if sd.is_tangible(x) and sd.is_tangible(y) and x != y:
                    fail('v', x, y)
                if le(y, x) and x != y:
                    fail('antisymmetric', x, y)
            if sd.is_tangible(y) and le(sd.quasi_zero(x), y):
                fail('t-surpassing', x, y)

        # (iv) con dos pares: en finitos se comprueba exhaustivamente
        if sd.is_finite and witness['iv'] is None:
            pairs = [(x, y) for x in sd.elements for y in sd.elements if le(x, y)]
            for (b1, b2), (c1, c2) in itertools.product(pairs, repeat=2):
                if not le(sd.add(b1, c1), sd.add(b2, c2)):
                    fail('iv', b1, b2, c1, c2)
                    break

        axioms = {
            name: {'holds': witness[name] is None, 'witness': witness[name]}
            for name in witness
        }
        core = ('reflexive', 'transitive', 'i', 'ii', 'iii', 'iv', 'v')
        holds = all(axioms[name]['holds'] for name in core)
        if not holds:
            failed = [name for name in core if not axioms[name]['holds']]
            logger.info(f"Axiomas de sobrepaso fallidos en {sd.name}: {failed}")
        return {
            'holds': holds,
            'axioms': axioms,
            'partial_order': holds and axioms['antisymmetric']['holds'],
            't_surpassing': holds and axioms['t-surpassing']['holds'],
        }

    def compute_null_set(self, sys: SystemLike) -> List[Elem]:
        """
        𝒜_Null = {b : b + b' ⪰ b' para todo b'}.

        Returns:
            List[Elem]: Elementos nulos en orden canónico
        """
        sd = self._require_finite(sys)
        null = [
            b for b in sd.elements
            if all(sd.surpass(bp, sd.add(b, bp)) for bp in sd.elements)
        ]
        by_zero = [b for b in sd.elements if sd.surpass(sd.zero, b)]
        if set(null) != set(by_zero):
            logger.warning(
                f"En {sd.name} 𝒜_Null difiere de {{b : 𝟘 ⪯ b}}: "
                f"{len(null)} frente a {len(by_zero)} elementos"
            )
        return sorted(null, key=lambda e: e.sort_key())

    def check_null_set_consistency(self, sys: SystemLike) -> Dict[str, Any]:
        """Compara 𝒜_Null con {b : 𝟘 ⪯ b} y con 𝒜^∘."""
        sd = self._require_finite(sys)
        null = set(self.compute_null_set(sd))
        by_zero = {b for b in sd.elements if sd.surpass(sd.zero, b)}
        circ = {sd.quasi_zero(d) for d in sd.elements}
        return {
            'null_set': sorted(null, key=lambda e: e.sort_key()),
            'matches_zero_criterion': null == by_zero,
            'equals_quasi_zeros': null == circ,
        }

    def precpr(self, sys: SystemLike, b: Elem, c: Elem) -> bool:
        """b ⪯̂ c: c = b + n para algún n ∈ 𝒜_Null."""
        sd = self._require_finite(sys)
        return any(sd.add(b, n) == c for n in self.compute_null_set(sd))

    def check_precpr_coincidence(self, sys: SystemLike) -> Dict[str, Any]:
        """Compara ⪯̂ con la relación ⪯ del sistema sobre todos los pares."""
        sd = self._require_finite(sys)
        null = self.compute_null_set(sd)
        for b, c in itertools.product(sd.elements, repeat=2):
            hat = any(sd.add(b, n) == c for n in null)
            if hat != sd.surpass(b, c):
                return {'coincide': False, 'witness': (b, c)}
        return {'coincide': True, 'witness': None}

    # ====================================================================
    # LEYES Y VALIDACIONES
    # ====================================================================

    def check_system_laws(
        self,
        sys: SystemLike,
        rng: Optional[np.random.Generator] = None,
        samples: int = 0,
    ) -> Dict[str, Any]:
        """
        Leyes de semianillo y de negación, exhaustivas o muestreadas.

        Returns:
            Dict con 'holds' y 'violations' (ley → testigo)
        """
        sd = self._descriptor(sys)
        if sd.is_finite and sd.closed:
            triples: Iterable = itertools.product(sd.elements, repeat=3)
        else:
            if sd.sample is None:
                raise CoreSystemsServiceException(f"{sd.name} no es cerrado ni muestreable")
            rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
            samples = samples or 10000
            triples = [(sd.sample(rng), sd.sample(rng), sd.sample(rng)) for _ in range(samples)]

        violations: Dict[str, Tuple[Elem, ...]] = {}

        def fail(law: str, *w: Elem) -> None:
            violations.setdefault(law, tuple(w))

        total = sd.has_total_mul
        for a, b, c in triples:
            if sd.add(sd.add(a, b), c) != sd.add(a, sd.add(b, c)):
                fail('add-associative', a, b, c)
            if sd.add(a, b) != sd.add(b, a):
                fail('add-commutative', a, b)
            if sd.add(a, sd.zero) != a:
                fail('zero-identity', a)
            if sd.negate(sd.negate(a)) != a:
                fail('negation-involutive', a)
            if sd.negate(sd.add(a, b)) != sd.add(sd.negate(a), sd.negate(b)):
                fail('negation-additive', a, b)
            acts = total or sd.is_tangible(a) or a == sd.zero
            if acts:
                if sd.mul(a, sd.add(b, c)) != sd.add(sd.mul(a, b), sd.mul(a, c)):
                    fail('distributive', a, b, c)
                if sd.negate(sd.mul(a, b)) != sd.mul(a, sd.negate(b)):
                    fail('negation-action', a, b)
            if total:
                if sd.mul(sd.mul(a, b), c) != sd.mul(a, sd.mul(b, c)):
                    fail('mul-associative', a, b, c)
                if sd.negate(sd.mul(a, b)) != sd.mul(sd.negate(a), b):
                    fail('negation-multiplicative', a, b)
                if sd.mul(sd.zero, a) != sd.zero:
                    fail('zero-absorbing', a)
                if sd.one is not None and sd.mul(sd.one, a) != a:
                    fail('one-identity', a)
            if sd.is_tangible(sd.zero):
                fail('zero-not-tangible', sd.zero)

        return {'holds': not violations, 'violations': violations}

    def check_triple(self, sys: SystemLike) -> Dict[str, Any]:
        """𝒯 ∩ 𝒜^∘ = ∅ y todo elemento es suma finita de tangibles."""
        sd = self._require_finite(sys)
        circ_tangibles = [a for a in sd.tangibles() if sd.in_quasi_zeros(a)]
        reach = {sd.zero} | set(sd.tangibles())
        frontier = list(reach)
        while frontier:
            x = frontier.pop()
            for t in sd.tangibles():
                y = sd.add(x, t)
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        ungenerated = [e for e in sd.elements if e not in reach]
        return {
            'is_triple': not circ_tangibles and not ungenerated,
            'tangible_quasi_zeros': circ_tangibles,
            'not_generated': ungenerated,
        }

    def require_triple(self, sys: SystemLike) -> SystemDescriptor:
        sd = self._descriptor(sys)
        if not sd.is_triple:
            raise NotATriple(f"{sd.name} es sólo un pseudo-triple (𝒯 ∩ 𝒜^∘ ≠ ∅)")
        return sd

    def is_semidomain(
        self, sys: SystemLike, rng: Optional[np.random.Generator] = None, samples: int = 2000
    ) -> Dict[str, Any]:
        """Sin divisores de cero entre elementos no nulos."""
        sd = self._descriptor(sys)
        if sd.is_finite:
            pairs: Iterable = itertools.product(sd.elements, repeat=2)
        else:
            rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
            pairs = [(sd.sample(rng), sd.sample(rng)) for _ in range(samples)]
        for a, b in pairs:
            if a != sd.zero and b != sd.zero and sd.mul(a, b) == sd.zero:
                return {'holds': False, 'witness': (a, b)}
        return {'holds': True, 'witness': None}

    def validate_finsys(self, fs: FinSys) -> Dict[str, Any]:
        """
        Valida un sistema finito leído de JSON.

        Raises:
            FinSysInvalid: Con el nombre del primer axioma violado
        """
        names = fs.names
        n = fs.size
        for i in range(n):
            if fs.neg(fs.neg(i)) != i:
                raise FinSysInvalid(
                    'negation-involutive', f"(−)(−){names[i]} ≠ {names[i]}", [names[i]]
                )
        checks: List[Tuple[str, Callable[[int, int, int], bool]]] = [
            ('add-commutative', lambda a, b, c: fs.add(a, b) == fs.add(b, a)),
            ('add-associative',
             lambda a, b, c: fs.add(fs.add(a, b), c) == fs.add(a, fs.add(b, c))),
            ('zero-identity', lambda a, b, c: fs.add(a, fs.zero_idx) == a),
            ('negation-additive',
             lambda a, b, c: fs.neg(fs.add(a, b)) == fs.add(fs.neg(a), fs.neg(b))),
            ('mul-associative',
             lambda a, b, c: fs.mul(fs.mul(a, b), c) == fs.mul(a, fs.mul(b, c))),
            ('distributive',
             lambda a, b, c: fs.mul(a, fs.add(b, c)) == fs.add(fs.mul(a, b), fs.mul(a, c))),
            ('zero-absorbing', lambda a, b, c: fs.mul(fs.zero_idx, a) == fs.zero_idx),
            ('negation-multiplicative',
             lambda a, b, c: fs.neg(fs.mul(a, b)) == fs.mul(fs.neg(a), b)),
        ]
        if fs.one_idx is not None:
            one = fs.one_idx
            checks.append(
                ('one-identity', lambda a, b, c: fs.mul(one, a) == a == fs.mul(a, one))
            )
        for axiom, law in checks:
            for a, b, c in itertools.product(range(n), repeat=3):
                if not law(a, b, c):
                    raise FinSysInvalid(
                        axiom, f"El sistema {fs.name} viola {axiom}",
                        [names[a], names[b], names[c]],
                    )
        if fs.zero_idx in fs.tangible_idxs:
            raise FinSysInvalid(
                'zero-not-tangible', "𝟘 no puede ser tangible", [names[fs.zero_idx]]
            )
        return {'valid': True, 'name': fs.name, 'size': n, 'is_triple': fs.is_triple}

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _descriptor(self, sys: SystemLike) -> SystemDescriptor:
        if isinstance(sys, FinSys):
            return sys.to_descriptor()
        return sys

    def _require_finite(self, sys: SystemLike) -> SystemDescriptor:
        sd = self._descriptor(sys)
        if sd.elements is None:
            raise CoreSystemsServiceException(
                f"La operación requiere un portador finito o un fragmento de {sd.name}"
            )
        return sd

    def _witness_elements(self, sd: SystemDescriptor, count: int = 200) -> List[Elem]:
        if sd.elements is not None:
            return list(sd.elements)
        rng = np.random.default_rng(config.DEFAULT_SEED)
        return [sd.sample(rng) for _ in range(count)]


# Instancia global del servicio
core_systems_service = CoreSystemsService()

"""
Servicio de sistemas de módulos finitos.

Construcciones (módulo regular, suma directa, módulo libre,
simetrizado), clasificación de morfismos, el triple Hom y el dual,
⪯-generación e independencia, núcleos, exactitud y la factorización
por el núcleo de congruencia.
"""

import itertools
import logging
from collections import deque
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from config import config
from models.congruence import Congruence, canonical_labels, find, union
from models.module_system import ModSys, MorphismTable
from models.system import FinSys
from services.core_systems_service import core_systems_service
from services.symmetrization_service import symmetrization_service

logger = logging.getLogger(__name__)

Counts = Tuple[int, ...]

KIND_ORDER = ('homomorphism', 'preceq_morphism', 't_admissible', 'none')


class ModuleSystemServiceException(Exception):
    """Excepción personalizada para errores del servicio de módulos."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class CarrierTooLarge(ModuleSystemServiceException):
    pass


class CoefficientSpaceTooLarge(ModuleSystemServiceException):
    pass


class NotHomomorphism(ModuleSystemServiceException):
    pass


class ImageUndefined(ModuleSystemServiceException):
    """La imagen de congruencia sólo se define para homomorfismos."""
    pass


class ModuleSystemService:
    """Construcciones y chequeos exhaustivos sobre módulos finitos."""

    # ====================================================================
    # CONSTRUCCIONES
    # ====================================================================

    def regular_module(self, ground: FinSys) -> ModSys:
        """El sistema base como módulo sobre sí mismo (a·m = am)."""
        return ModSys(
            ground=ground,
            names=ground.names,
            add_table=ground.add_table,
            action_table=ground.mul_table,
            zero_idx=ground.zero_idx,
            tangible_idxs=ground.tangible_idxs,
            neg_table=ground.neg_table,
            surpass_mode=ground.surpass_mode,
            surpass_pairs=ground.surpass_pairs,
            name=ground.name,
        )

    def direct_sum(self, mods: Sequence[ModSys]) -> ModSys:
        """
        Suma directa por componentes.

        Los tangibles son las inyecciones de los tangibles de cada sumando
        (una componente tangible y el resto 𝟘). Si todos los sumandos usan
        ⪯_∘ la suma también; si no, ⪯ es el orden producto.

        Raises:
            ModuleSystemServiceException: Si la lista es vacía o los bases difieren
        """
        mods = list(mods)
        if not mods:
            raise ModuleSystemServiceException("La suma directa requiere al menos un módulo")
        if len(mods) == 1:
            return mods[0]
        ground = mods[0].ground
        for M in mods[1:]:
            self._same_ground(mods[0], M)

        idx = list(itertools.product(*(M.elements for M in mods)))
        total = len(idx)
        if total > config.CLOSURE_MAX_ELEMENTS:
            raise CarrierTooLarge(
                f"La suma directa tendría {total} elementos",
                {'limit': config.CLOSURE_MAX_ELEMENTS},
            )
        position = {p: k for k, p in enumerate(idx)}
        names = tuple(
            '(' + ','.join(M.names[i] for M, i in zip(mods, p)) + ')' for p in idx
        )
        add_table = tuple(
            tuple(
                position[tuple(M.add(a, b) for M, a, b in zip(mods, p, q))] for q in idx
            )
            for p in idx
        )
        action_table = tuple(
            tuple(position[tuple(M.act(r, a) for M, a in zip(mods, p))] for p in idx)
            for r in ground.elements
        )
        zeros = tuple(M.zero_idx for M in mods)
        tangibles = set()
        for k, M in enumerate(mods):
            for t in M.tangible_idxs:
                tangibles.add(position[zeros[:k] + (t,) + zeros[k + 1:]])

        surpass_mode, surpass_pairs = 'circ', None
        if any(M.surpass_mode == 'explicit' for M in mods):
            surpass_mode = 'explicit'
            surpass_pairs = frozenset(
                (position[p], position[q])
                for p in idx for q in idx
                if all(M.surpasses(a, b) for M, a, b in zip(mods, p, q))
            )
        summed = ModSys(
            ground=ground,
            names=names,
            add_table=add_table,
            action_table=action_table,
            zero_idx=position[zeros],
            tangible_idxs=frozenset(tangibles),
            neg_table=tuple(
                position[tuple(M.neg(a) for M, a in zip(mods, p))] for p in idx
            ),
            surpass_mode=surpass_mode,
            surpass_pairs=surpass_pairs,
            name='+'.join(M.name for M in mods),
        )
        logger.info(f"Suma directa de {len(mods)} módulos con {summed.size} elementos")
        return summed

    def free_module(self, ground: FinSys, n: int) -> ModSys:
        """𝒜^(n) como suma directa de n copias del módulo regular."""
        if n < 1:
            raise ModuleSystemServiceException(f"Rango inválido para el módulo libre: {n}")
        regular = self.regular_module(ground)
        free = self.direct_sum([regular] * n)
        if n == 1:
            return free
        return ModSys(
            ground=free.ground,
            names=free.names,
            add_table=free.add_table,
            action_table=free.action_table,
            zero_idx=free.zero_idx,
            tangible_idxs=free.tangible_idxs,
            neg_table=free.neg_table,
            surpass_mode=free.surpass_mode,
            surpass_pairs=free.surpass_pairs,
            name=f"{ground.name}^{n}",
        )

    def basis_vector(self, M: ModSys, n: int, i: int) -> int:
        """Índice de eᵢ en free_module(ground, n)."""
        ground = M.ground
        if ground.one_idx is None:
            raise ModuleSystemServiceException(f"{ground.name} no tiene unidad")
        coords = [ground.zero_idx] * n
        coords[i] = ground.one_idx
        return self.coords_to_index(ground, coords)

    def coords_to_index(self, ground: FinSys, coords: Sequence[int]) -> int:
        index = 0
        for c in coords:
            index = index * ground.size + c
        return index

    def index_to_coords(self, ground: FinSys, n: int, index: int) -> Tuple[int, ...]:
        coords = []
        for _ in range(n):
            index, c = divmod(index, ground.size)
            coords.append(c)
        return tuple(reversed(coords))

    def symmetrized_module(self, M: ModSys) -> ModSys:
        """
        ℳ̂ = ℳ × ℳ sobre el simetrizado del base.

        (a₀, a₁)·(x₀, x₁) = (a₀x₀ + a₁x₁, a₀x₁ + a₁x₀), (−) es el switch y
        los tangibles son (𝒯 × {𝟘}) ∪ ({𝟘} × 𝒯).
        """
        ground = M.ground
        sym_sd = symmetrization_service.symmetrize(ground.to_descriptor())
        sym_ground = core_systems_service.tabulate(sym_sd, name=f"sym-{ground.name}")
        ordered = sorted(sym_sd.elements, key=lambda e: e.sort_key())
        ground_pairs = [(e.pos.value, e.neg.value) for e in ordered]

        idx = [(x0, x1) for x0 in M.elements for x1 in M.elements]
        position = {p: k for k, p in enumerate(idx)}
        z = M.zero_idx

        def act(r: int, p: Tuple[int, int]) -> int:
            a0, a1 = ground_pairs[r]
            x0, x1 = p
            return position[(
                M.add(M.act(a0, x0), M.act(a1, x1)),
                M.add(M.act(a0, x1), M.act(a1, x0)),
            )]

        tangibles = {position[(t, z)] for t in M.tangible_idxs}
        tangibles |= {position[(z, t)] for t in M.tangible_idxs}
        return ModSys(
            ground=sym_ground,
            names=tuple(f"({M.names[x0]},{M.names[x1]})" for x0, x1 in idx),
            add_table=tuple(
                tuple(position[(M.add(p[0], q[0]), M.add(p[1], q[1]))] for q in idx)
                for p in idx
            ),
            action_table=tuple(
                tuple(act(r, p) for p in idx) for r in sym_ground.elements
            ),
            zero_idx=position[(z, z)],
            tangible_idxs=frozenset(tangibles),
            neg_table=tuple(position[(x1, x0)] for x0, x1 in idx),
            name=f"sym-{M.name}",
        )

    def embed_symmetrized(self, M: ModSys, b: int) -> int:
        """b ↦ (b, 𝟘) en symmetrized_module(M)."""
        return b * M.size + M.zero_idx

    # ====================================================================
    # LEYES DE MÓDULO
    # ====================================================================

    def check_module_laws(self, M: ModSys) -> Dict[str, Any]:
        """
        Axiomas de módulo y la ley ((−)a)b = a((−)b) = (−)(ab).

        Returns:
            Dict con 'holds' y 'failures' (ley → testigo en nombres)
        """
        G = M.ground
        n = M.names
        g = G.names
        failures: Dict[str, List[str]] = {}

        def fail(law: str, *witness: str) -> None:
            failures.setdefault(law, list(witness))

        for x, y in itertools.product(M.elements, repeat=2):
            if M.add(x, y) != M.add(y, x):
                fail('add_commutative', n[x], n[y])
            for w in M.elements:
                if M.add(M.add(x, y), w) != M.add(x, M.add(y, w)):
                    fail('add_associative', n[x], n[y], n[w])
        for x in M.elements:
            if M.add(x, M.zero_idx) != x:
                fail('zero_identity', n[x])
            if M.neg(M.neg(x)) != x:
                fail('neg_involutive', n[x])
            for y in M.elements:
                if M.neg(M.add(x, y)) != M.add(M.neg(x), M.neg(y)):
                    fail('neg_additive', n[x], n[y])

        for a in G.elements:
            for x in M.elements:
                ax = M.act(a, x)
                if M.act(G.neg(a), x) != M.act(a, M.neg(x)) or M.neg(ax) != M.act(a, M.neg(x)):
                    fail('negation_action', g[a], n[x])
                for y in M.elements:
                    if M.act(a, M.add(x, y)) != M.add(ax, M.act(a, y)):
                        fail('distributive_module', g[a], n[x], n[y])
                for b in G.elements:
                    if M.act(G.add(a, b), x) != M.add(ax, M.act(b, x)):
                        fail('distributive_ground', g[a], g[b], n[x])
                    if M.act(G.mul(a, b), x) != M.act(a, M.act(b, x)):
                        fail('associative_action', g[a], g[b], n[x])
            if M.act(a, M.zero_idx) != M.zero_idx:
                fail('action_zero', g[a])
        for x in M.elements:
            if M.act(G.zero_idx, x) != M.zero_idx:
                fail('zero_action', n[x])
            if G.one_idx is not None and M.act(G.one_idx, x) != x:
                fail('unit_action', n[x])

        if failures:
            logger.warning(f"{M.name} incumple {len(failures)} leyes de módulo")
        return {'holds': not failures, 'failures': failures}

    def check_unique_negation(self, M: ModSys) -> Dict[str, Any]:
        """a₀ + a₁ ∈ ℳ^∘ con aᵢ tangibles implica a₁ = (−)a₀."""
        for a0, a1 in itertools.product(sorted(M.tangible_idxs), repeat=2):
            if M.add(a0, a1) in M.quasi_zeros and a1 != M.neg(a0):
                return {'holds': False, 'witness': (M.names[a0], M.names[a1])}
        return {'holds': True, 'witness': None}

    # ====================================================================
    # MORFISMOS
    # ====================================================================

    def identity(self, M: ModSys) -> MorphismTable:
        return MorphismTable(M, M, tuple(M.elements))

    def compose(self, f: MorphismTable, g: MorphismTable) -> MorphismTable:
        """f ∘ g (primero g)."""
        if g.target != f.source:
            raise ModuleSystemServiceException(
                f"No se puede componer: {g.target.name} ≠ {f.source.name}"
            )
        return MorphismTable(g.source, f.target, tuple(f(g(x)) for x in g.source.elements))

    def morphism_from_function(self, M: ModSys, N: ModSys, fn) -> MorphismTable:
        """Tabula fn: índice de M ↦ índice de N."""
        return MorphismTable(M, N, tuple(int(fn(x)) for x in M.elements))

    def classify_morphism(self, m: MorphismTable) -> Dict[str, Any]:
        """
        Clasifica un mapa entre módulos.

        Cláusulas: (i) f((−)b) ⪯ (−)f(b), (ii) f(b₁+b₂) ⪯ f(b₁)+f(b₂),
        (iii) f(ab) ⪯ af(b) para a ∈ 𝒯, (iv) monotonía, (v) f(ℳ_Null) ⊆ 𝒩_Null,
        (vi) f(𝟘) = 𝟘. Homomorfismo: igualdad en (i)–(iii).

        Returns:
            Dict con 'kind' (la clase más fuerte), 'preceq_morphism',
            'homomorphism', 't_admissible' y 'violations'
        """
        violations = self._clause_violations(m, equality=False)
        preceq = not violations
        strict = self._clause_violations(m, equality=True, stop_early=True)
        homomorphism = not strict
        admissible = self.t_admissibility(m)
        if not admissible['holds']:
            violations['t_admissible'] = admissible['witness']

        if homomorphism:
            kind = 'homomorphism'
        elif preceq:
            kind = 'preceq_morphism'
        elif admissible['holds']:
            kind = 't_admissible'
        else:
            kind = 'none'
        logger.debug(f"Morfismo {m.source.name} → {m.target.name}: {kind}")
        return {
            'kind': kind,
            'preceq_morphism': preceq,
            'homomorphism': homomorphism,
            't_admissible': admissible['holds'],
            'violations': violations,
        }

    def is_homomorphism(self, m: MorphismTable) -> bool:
        return not self._clause_violations(m, equality=True, stop_early=True)

    def t_admissibility(self, m: MorphismTable, bound: Optional[int] = None) -> Dict[str, Any]:
        """
        Σaᵢ = Σa'ⱼ con tangibles implica Σf(aᵢ) = Σf(a'ⱼ), hasta `bound` sumandos.

        Returns:
            Dict con 'holds' y 'witness' (dos listas de nombres o None)
        """
        M, N = m.source, m.target
        bound = config.ADMISSIBLE_SUMMAND_BOUND if bound is None else bound
        seen: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
        tangibles = sorted(M.tangible_idxs)
        for k in range(bound + 1):
            for combo in itertools.combinations_with_replacement(tangibles, k):
                total, image = M.zero_idx, N.zero_idx
                for a in combo:
                    total = M.add(total, a)
                    image = N.add(image, m(a))
                if total not in seen:
                    seen[total] = (image, combo)
                elif seen[total][0] != image:
                    first = seen[total][1]
                    return {
                        'holds': False,
                        'witness': (
                            [M.names[a] for a in first], [M.names[a] for a in combo]
                        ),
                    }
        return {'holds': True, 'witness': None}

    def derived_morphism_laws(self, m: MorphismTable) -> Dict[str, Any]:
        """
        Igualdades que todo ⪯-morfismo cumple cuando ⪯ es un orden parcial.

        'negation': f((−)b) = (−)f(b); 'action': f(ab) = af(b) si el base
        es un 𝒯-grupo (None si no lo es); 'convexity': b₀ ⪯ b ⪯ b₁ con
        f(b₀) = f(b₁) implica f(b) = f(b₀).
        """
        M, N = m.source, m.target
        classification = self.classify_morphism(m)
        partial_order = self._is_partial_order(M) and self._is_partial_order(N)
        report: Dict[str, Any] = {
            'applicable': classification['preceq_morphism'] and partial_order,
            'negation': None,
            'action': None,
            'convexity': None,
            'failures': {},
        }
        if not report['applicable']:
            return report

        failures = report['failures']
        neg_bad = [b for b in M.elements if m(M.neg(b)) != N.neg(m(b))]
        report['negation'] = not neg_bad
        if neg_bad:
            failures['negation'] = M.names[neg_bad[0]]

        if self._is_tangible_group(M.ground):
            act_bad = [
                (a, b) for a in sorted(M.ground.tangible_idxs) for b in M.elements
                if m(M.act(a, b)) != N.act(a, m(b))
            ]
            report['action'] = not act_bad
            if act_bad:
                a, b = act_bad[0]
                failures['action'] = [M.ground.names[a], M.names[b]]

        convex = True
        for b0, b1 in itertools.product(M.elements, repeat=2):
            if not M.surpasses(b0, b1) or m(b0) != m(b1):
                continue
            for b in M.elements:
                if M.surpasses(b0, b) and M.surpasses(b, b1) and m(b) != m(b0):
                    convex = False
                    failures.setdefault('convexity', [M.names[b0], M.names[b], M.names[b1]])
        report['convexity'] = convex
        if failures:
            logger.error(
                f"Leyes derivadas violadas por un ⪯-morfismo verificado: {sorted(failures)}"
            )
        return report

    # ====================================================================
    # HOM Y DUAL
    # ====================================================================

    def hom_triple(self, M: ModSys, N: ModSys) -> Dict[str, Any]:
        """
        Enumera Hom(M, N) y lo organiza como módulo.

        Los candidatos se fijan sobre un conjunto generador aditivo de M
        y se extienden por sumas; luego se verifican todas las cláusulas.
        Suma, (−) y acción son puntuales; f ⪯ g sii f(x) ⪯ g(x) para todo x;
        los tangibles son los morfismos que llevan 𝒯_M en 𝒯_N.

        Returns:
            Dict con 'module' (ModSys) y 'morphisms' (MorphismTable por índice)

        Raises:
            CarrierTooLarge: Si los candidatos superan HOM_MAX_CANDIDATES
        """
        self._same_ground(M, N)
        G = M.ground
        if any(G.mul(a, b) != G.mul(b, a) for a in G.elements for b in G.elements):
            raise ModuleSystemServiceException(
                f"Hom sólo se organiza como módulo sobre bases conmutativos ({G.name})"
            )
        gens = self.generating_set(M)
        candidates = N.size ** len(gens)
        if candidates > config.HOM_MAX_CANDIDATES:
            raise CarrierTooLarge(
                f"Hom({M.name}, {N.name}) requiere {candidates} candidatos",
                {'candidates': candidates, 'limit': config.HOM_MAX_CANDIDATES},
            )
        expansion = self.decompositions(M, gens)

        tables: List[Tuple[int, ...]] = []
        for images in itertools.product(N.elements, repeat=len(gens)):
            table = tuple(self._evaluate(N, images, expansion[x]) for x in M.elements)
            if self.is_homomorphism(MorphismTable(M, N, table)):
                tables.append(table)
        position = {t: k for k, t in enumerate(tables)}

        def lookup(table: Tuple[int, ...], label: str) -> int:
            if table not in position:
                raise ModuleSystemServiceException(
                    f"Hom({M.name}, {N.name}) no es cerrado bajo {label}"
                )
            return position[table]

        add_table = tuple(
            tuple(lookup(tuple(N.add(u, v) for u, v in zip(f, g)), '+') for g in tables)
            for f in tables
        )
        action_table = tuple(
            tuple(lookup(tuple(N.act(a, u) for u in f), 'la acción') for f in tables)
            for a in G.elements
        )
        neg_table = tuple(lookup(tuple(N.neg(u) for u in f), '(−)') for f in tables)
        zero = lookup(tuple(N.zero_idx for _ in M.elements), '𝟘')
        tangible = frozenset(
            k for k, f in enumerate(tables)
            if M.tangible_idxs and all(f[t] in N.tangible_idxs for t in M.tangible_idxs)
        )
        surpass_pairs = frozenset(
            (i, j)
            for i, f in enumerate(tables) for j, g in enumerate(tables)
            if all(N.surpasses(u, v) for u, v in zip(f, g))
        )
        hom = ModSys(
            ground=G,
            names=tuple('[' + ','.join(N.names[u] for u in f) + ']' for f in tables),
            add_table=add_table,
            action_table=action_table,
            zero_idx=zero,
            tangible_idxs=tangible,
            neg_table=neg_table,
            surpass_mode='explicit',
            surpass_pairs=surpass_pairs,
            name=f"Hom({M.name},{N.name})",
        )
        logger.info(
            f"Hom({M.name}, {N.name}): {len(tables)} homomorfismos de {candidates} candidatos"
        )
        return {'module': hom, 'morphisms': [MorphismTable(M, N, t) for t in tables]}

    def check_isomorphism(self, M: ModSys, N: ModSys) -> Dict[str, Any]:
        """
        Busca una biyección que preserve +, acción, (−), 𝟘 y tangibles.

        Returns:
            Dict con 'isomorphic' y 'map' (tabla M → N o None)
        """
        self._same_ground(M, N)
        if M.size != N.size or len(M.tangible_idxs) != len(N.tangible_idxs):
            return {'isomorphic': False, 'map': None}
        gens = self.generating_set(M)
        candidates = N.size ** len(gens)
        if candidates > config.HOM_MAX_CANDIDATES:
            raise CarrierTooLarge(
                f"Búsqueda de isomorfismo con {candidates} candidatos",
                {'candidates': candidates, 'limit': config.HOM_MAX_CANDIDATES},
            )
        expansion = self.decompositions(M, gens)
        for images in itertools.product(N.elements, repeat=len(gens)):
            table = tuple(self._evaluate(N, images, expansion[x]) for x in M.elements)
            if len(set(table)) != N.size:
                continue
            if {table[t] for t in M.tangible_idxs} != set(N.tangible_idxs):
                continue
            if self._preserves_structure(M, N, table):
                return {'isomorphic': True, 'map': table}
        return {'isomorphic': False, 'map': None}

    def dual_system(self, n: int, ground: FinSys) -> Dict[str, Any]:
        """
        𝒮* = Hom(𝒮, 𝒜) para 𝒮 = 𝒜^(n) y el emparejamiento a ↦ a*,
        a*(b) = Σ aᵢbᵢ.

        Returns:
            Dict con 'source' (𝒮), 'dual' (ModSys), 'pairing' (índice de a*
            en el dual, o None si a* no es homomorfismo), 'onto' e 'injective'
        """
        S = self.free_module(ground, n)
        regular = self.regular_module(ground)
        hom = self.hom_triple(S, regular)
        position = {f.table: k for k, f in enumerate(hom['morphisms'])}
        pairing = []
        for a in S.elements:
            a_coords = self.index_to_coords(ground, n, a)
            table = []
            for b in S.elements:
                b_coords = self.index_to_coords(ground, n, b)
                value = ground.zero_idx
                for ai, bi in zip(a_coords, b_coords):
                    value = ground.add(value, ground.mul(ai, bi))
                table.append(value)
            pairing.append(position.get(tuple(table)))
        hit = {k for k in pairing if k is not None}
        result = {
            'source': S,
            'dual': hom['module'],
            'morphisms': hom['morphisms'],
            'pairing': tuple(pairing),
            'onto': len(hit) == hom['module'].size,
            'injective': None not in pairing and len(hit) == len(pairing),
        }
        logger.info(
            f"Dual de {S.name}: {hom['module'].size} funcionales, "
            f"sobre={result['onto']}, inyectivo={result['injective']}"
        )
        return result

    # ====================================================================
    # ⪯-GENERACIÓN E INDEPENDENCIA
    # ====================================================================

    def span_check(
        self, vs: Iterable[int], M: ModSys, N: Optional[Iterable[int]] = None
    ) -> bool:
        """Todo n ∈ 𝒩 cumple n ⪯ s para alguna suma s de términos avᵢ, a ∈ 𝒯."""
        seeds = {M.act(a, v) for a in M.ground.tangible_idxs for v in vs}
        span = M.additive_span(seeds)
        targets = M.elements if N is None else list(N)
        for x in targets:
            if not any(M.surpasses(x, s) for s in span):
                logger.debug(f"{M.names[x]} no queda bajo el ⪯-span en {M.name}")
                return False
        return True

    def independence_check(self, vs: Sequence[int], M: ModSys) -> bool:
        """
        Σ bᵢvᵢ ∈ ℳ_Null implica bᵢ ∈ 𝒜_Null para todo i.

        Raises:
            CoefficientSpaceTooLarge: Si |𝒜|^k supera COEFF_MAX_COMBINATIONS
        """
        return self.independence_witness(vs, M) is None

    def independence_witness(self, vs: Sequence[int], M: ModSys) -> Optional[Tuple[int, ...]]:
        """Coeficientes que violan la independencia, o None."""
        vs = list(vs)
        G = M.ground
        combinations = G.size ** len(vs)
        if combinations > config.COEFF_MAX_COMBINATIONS:
            raise CoefficientSpaceTooLarge(
                f"{combinations} combinaciones de coeficientes para {len(vs)} vectores",
                {'combinations': combinations, 'limit': config.COEFF_MAX_COMBINATIONS},
            )
        ground_null = self._ground_null_set(G)
        for coeffs in itertools.product(G.elements, repeat=len(vs)):
            if all(b in ground_null for b in coeffs):
                continue
            total = M.zero_idx
            for b, v in zip(coeffs, vs):
                total = M.add(total, M.act(b, v))
            if total in M.null_set:
                return coeffs
        return None

    def is_base(self, vs: Sequence[int], M: ModSys) -> bool:
        """⪯-base: ⪯-independiente y ⪯-generador."""
        vs = list(vs)
        return self.independence_check(vs, M) and self.span_check(vs, M)

    def symmetric_base(self, vs: Sequence[int], M: ModSys) -> Dict[str, Any]:
        """Chequeo de ⪯-base de {(vᵢ, 𝟘)} dentro del módulo simetrizado."""
        sym = self.symmetrized_module(M)
        embedded = [self.embed_symmetrized(M, v) for v in vs]
        spans = self.span_check(embedded, sym)
        independent = self.independence_check(embedded, sym)
        return {
            'module': sym,
            'spans': spans,
            'independent': independent,
            'base': spans and independent,
        }

    # ====================================================================
    # NÚCLEOS Y EXACTITUD
    # ====================================================================

    def t_kernel(self, f: MorphismTable) -> List[int]:
        """𝒯-ker f = {a ∈ 𝒯_ℳ : f(a) ∈ 𝒩_Null}."""
        null = f.target.null_set
        return sorted(a for a in f.source.tangible_idxs if f(a) in null)

    def is_null_morphism(self, f: MorphismTable) -> bool:
        return len(self.t_kernel(f)) == len(f.source.tangible_idxs)

    def null_monic(self, f: MorphismTable) -> Dict[str, Any]:
        """f(a₀) = f(a₁) implica a₀ (−) a₁ ∈ ℳ_Null."""
        M = f.source
        for a0, a1 in itertools.product(M.elements, repeat=2):
            if f(a0) == f(a1) and M.add(a0, M.neg(a1)) not in M.null_set:
                return {'holds': False, 'witness': (M.names[a0], M.names[a1])}
        return {'holds': True, 'witness': None}

    def t_image(self, f: MorphismTable) -> frozenset:
        """𝒯-submódulo generado por {f(a) : a ∈ 𝒯_ℳ}."""
        N = f.target
        seeds = {N.act(r, f(a)) for r in f.source.ground.tangible_idxs
                 for a in f.source.tangible_idxs}
        return N.additive_span(seeds)

    def null_onto(self, f: MorphismTable) -> Dict[str, Any]:
        """f_𝒯(ℳ) + 𝒩_Null = 𝒩."""
        N = f.target
        image = self.t_image(f)
        reached = {N.add(y, z) for y in image for z in N.null_set}
        missing = [N.names[x] for x in N.elements if x not in reached]
        return {'holds': not missing, 'missing': missing}

    def null_onto_epic_check(self, f: MorphismTable) -> Dict[str, Any]:
        """
        Compara Null-sobre con el cociente 𝒩/K, K generada por (y, 𝟘) con
        y en el 𝒯-imagen: el conúcleo es trivial si cada clase contiene un
        elemento de 𝒩_Null.
        """
        N = f.target
        image = self.t_image(f)
        K = self.generate_module_congruence(N, [(y, N.zero_idx) for y in image])
        trivial = all(any(x in N.null_set for x in block) for block in K.classes)
        onto = self.null_onto(f)['holds']
        return {
            'null_onto': onto,
            'cokernel': K,
            'cokernel_trivial': trivial,
            'agree': onto == trivial,
        }

    def exactness(self, chain: Sequence[MorphismTable]) -> Dict[str, Any]:
        """
        Evalúa una cadena ··· → 𝒦 →g ℳ →f 𝒩 → ···.

        Returns:
            Dict con 'is_chain' (fg(k) ∈ 𝒩_Null en cada tramo) y 'exact'
            (lista con la exactitud en cada objeto interior)
        """
        chain = list(chain)
        for g, f in zip(chain, chain[1:]):
            if g.target != f.source:
                raise ModuleSystemServiceException(
                    f"Morfismos no encadenables: {g.target.name} ≠ {f.source.name}"
                )
        is_chain, exact = True, []
        for g, f in zip(chain, chain[1:]):
            null = f.target.null_set
            if any(f(g(k)) not in null for k in g.source.elements):
                is_chain = False
            image = {g(k) for k in g.source.elements}
            preimage = {b for b in f.source.elements if f(b) in null}
            exact.append(image == preimage)
        return {'is_chain': is_chain, 'exact': exact}

    # ====================================================================
    # CONGRUENCIAS DE MÓDULOS
    # ====================================================================

    def generate_module_congruence(
        self, M: ModSys, gens: Iterable[Tuple[int, int]] = ()
    ) -> Congruence:
        """Menor congruencia de módulo (cerrada bajo +c, a·, (−)) que contiene gens."""
        gens = frozenset(gens)
        parent = list(range(M.size))
        for a, b in gens:
            union(parent, a, b)
        changed = True
        while changed:
            changed = False
            for a in M.elements:
                r = find(parent, a)
                if r == a:
                    continue
                if union(parent, M.neg(a), M.neg(r)):
                    changed = True
                for c in M.elements:
                    if union(parent, M.add(a, c), M.add(r, c)):
                        changed = True
                for s in M.ground.elements:
                    if union(parent, M.act(s, a), M.act(s, r)):
                        changed = True
        return Congruence(M, canonical_labels(parent), gens)

    def quotient_module(self, C: Congruence) -> Tuple[ModSys, MorphismTable]:
        """ℳ/C con la proyección canónica."""
        M: ModSys = C.system
        classes = C.classes
        position = {block[0]: k for k, block in enumerate(classes)}
        projection = tuple(position[C.labels[x]] for x in M.elements)

        def induced(op, label: str) -> int:
            images = {projection[v] for v in op}
            if len(images) != 1:
                raise ModuleSystemServiceException(
                    f"La operación {label} no está bien definida en {M.name}/C"
                )
            return images.pop()

        add_table = tuple(
            tuple(induced((M.add(a, b) for a in A for b in B), '+') for B in classes)
            for A in classes
        )
        action_table = tuple(
            tuple(induced((M.act(r, a) for a in A), 'la acción') for A in classes)
            for r in M.ground.elements
        )
        neg_table = tuple(induced((M.neg(a) for a in A), '(−)') for A in classes)
        zero = projection[M.zero_idx]
        surpass_mode, surpass_pairs = 'circ', None
        if M.surpass_mode == 'explicit':
            surpass_mode = 'explicit'
            surpass_pairs = frozenset(
                (projection[b], projection[c]) for b, c in M.surpass_pairs
            )
        quotient = ModSys(
            ground=M.ground,
            names=tuple(
                M.names[A[0]] if len(A) == 1 else f"[{M.names[A[0]]}]" for A in classes
            ),
            add_table=add_table,
            action_table=action_table,
            zero_idx=zero,
            tangible_idxs=frozenset(
                projection[t] for t in M.tangible_idxs if projection[t] != zero
            ),
            neg_table=neg_table,
            surpass_mode=surpass_mode,
            surpass_pairs=surpass_pairs,
            name=f"{M.name}/C",
        )
        return quotient, MorphismTable(M, quotient, projection)

    def congruence_kernel(self, f: MorphismTable) -> Congruence:
        """
        Núcleo de congruencia: generado por (a₀, a₁) ∈ 𝒯₀ × 𝒯₀ con
        f(a₀) = f(a₁). Para homomorfismos coincide con {(x, x') : f(x) = f(x')}.
        """
        M = f.source
        if self.is_homomorphism(f):
            first: Dict[int, int] = {}
            labels = tuple(first.setdefault(f(x), x) for x in M.elements)
            return Congruence(M, labels)
        t0 = sorted(M.tangible_idxs | {M.zero_idx})
        gens = [(a0, a1) for a0 in t0 for a1 in t0 if a0 < a1 and f(a0) == f(a1)]
        return self.generate_module_congruence(M, gens)

    def congruence_image(self, f: MorphismTable, C: Congruence) -> Congruence:
        """
        Congruencia de 𝒩 generada por Diag y {(f(x₀), f(x₁)) : (x₀, x₁) ∈ C}.

        Raises:
            ImageUndefined: Si f no es homomorfismo
        """
        if C.system != f.source:
            raise ModuleSystemServiceException("La congruencia no vive en el módulo de partida")
        if not self.is_homomorphism(f):
            raise ImageUndefined(
                "La imagen de congruencia sólo se define para homomorfismos",
                {'kind': self.classify_morphism(f)['kind']},
            )
        return self.generate_module_congruence(
            f.target, {(f(a), f(b)) for a, b in C.pairs if a != b}
        )

    def factor_through(self, f: MorphismTable) -> Tuple[MorphismTable, MorphismTable]:
        """
        ℳ → ℳ/ker f → 𝒩 con f̄([a]) = f(a).

        Raises:
            ModuleSystemServiceException: Si f no es constante en las clases del núcleo
        """
        kernel = self.congruence_kernel(f)
        quotient, projection = self.quotient_module(kernel)
        bar = [None] * quotient.size
        for x in f.source.elements:
            k = projection(x)
            if bar[k] is not None and bar[k] != f(x):
                raise ModuleSystemServiceException(
                    "f no es constante en las clases de su núcleo",
                    {'class': quotient.names[k]},
                )
            bar[k] = f(x)
        monic = MorphismTable(quotient, f.target, tuple(bar))
        logger.debug(f"Factorización de f por {quotient.size} clases del núcleo")
        return projection, monic

    def pair_action_check(self, M: ModSys) -> Dict[str, Any]:
        """
        (a₀, a₁)x = a₀x (−) a₁x es una acción del producto twist:
        ((a₀,a₁)(b₀,b₁))x = (a₀,a₁)((b₀,b₁)x) para todos los pares.
        """
        G = M.ground

        def act(p: Tuple[int, int], x: int) -> int:
            return M.add(M.act(p[0], x), M.neg(M.act(p[1], x)))

        pairs = list(itertools.product(G.elements, repeat=2))
        for p, q in itertools.product(pairs, repeat=2):
            pq = (
                G.add(G.mul(p[0], q[0]), G.mul(p[1], q[1])),
                G.add(G.mul(p[0], q[1]), G.mul(p[1], q[0])),
            )
            for x in M.elements:
                if act(pq, x) != act(p, act(q, x)):
                    return {
                        'holds': False,
                        'witness': (
                            [G.names[v] for v in p], [G.names[v] for v in q], M.names[x]
                        ),
                    }
        return {'holds': True, 'witness': None}

    # ====================================================================
    # EJEMPLO NO MONOIDAL
    # ====================================================================

    def nonmonoidal_fragment(self) -> Tuple[ModSys, MorphismTable]:
        """
        Fragmento finito de 𝒜[λ₁, λ₂] sobre 𝔹: λ₁ = e₁, λ₂ = e₂.

        ⪯ es la identidad más 𝟘 ⪯ c, los tangibles son los polinomios no
        nulos y f es la identidad en monomios y 𝟘 en λ₁ + λ₂.
        """
        boolean = core_systems_service.boolean_finsys()
        free = self.free_module(boolean, 2)
        lam1 = self.basis_vector(free, 2, 0)
        lam2 = self.basis_vector(free, 2, 1)
        both = free.add(lam1, lam2)
        z = free.zero_idx
        fragment = ModSys(
            ground=free.ground,
            names=free.names,
            add_table=free.add_table,
            action_table=free.action_table,
            zero_idx=z,
            tangible_idxs=frozenset(x for x in free.elements if x != z),
            neg_table=free.neg_table,
            surpass_mode='explicit',
            surpass_pairs=frozenset(
                {(x, x) for x in free.elements} | {(z, x) for x in free.elements}
            ),
            name='B[l1,l2]',
        )
        table = tuple(z if x == both else x for x in fragment.elements)
        return fragment, MorphismTable(fragment, fragment, table)

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def generating_set(self, M: ModSys) -> List[int]:
        """Tangibles si generan aditivamente; si no, todos los no nulos."""
        tangibles = sorted(M.tangible_idxs)
        if len(M.additive_span(tangibles)) == M.size:
            return tangibles
        return [x for x in M.elements if x != M.zero_idx]

    def decompositions(self, M: ModSys, gens: Sequence[int]) -> Dict[int, Counts]:
        """Para cada elemento, una suma más corta de generadores (conteos)."""
        gens = list(gens)
        start = (0,) * len(gens)
        best: Dict[int, Counts] = {M.zero_idx: start}
        queue = deque([M.zero_idx])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(gens):
                y = M.add(x, g)
                if y not in best:
                    counts = list(best[x])
                    counts[k] += 1
                    best[y] = tuple(counts)
                    queue.append(y)
        for k, g in enumerate(gens):
            if g != M.zero_idx:
                best[g] = tuple(int(i == k) for i in range(len(gens)))
        if len(best) != M.size:
            raise ModuleSystemServiceException(
                f"Los generadores no cubren {M.name}",
                {'reached': len(best), 'size': M.size},
            )
        return best

    def _evaluate(self, N: ModSys, images: Sequence[int], counts: Counts) -> int:
        total = N.zero_idx
        for image, c in zip(images, counts):
            for _ in range(c):
                total = N.add(total, image)
        return total

    def _clause_violations(
        self, m: MorphismTable, equality: bool, stop_early: bool = False
    ) -> Dict[str, Any]:
        M, N = m.source, m.target
        violations: Dict[str, Any] = {}

        def rel(x: int, y: int) -> bool:
            return x == y if equality else N.surpasses(x, y)

        if m(M.zero_idx) != N.zero_idx:
            violations['vi'] = M.names[M.zero_idx]
            if stop_early:
                return violations
        for b in M.elements:
            if not rel(m(M.neg(b)), N.neg(m(b))):
                violations['i'] = M.names[b]
                break
        if stop_early and violations:
            return violations
        for b1, b2 in itertools.product(M.elements, repeat=2):
            if not rel(m(M.add(b1, b2)), N.add(m(b1), m(b2))):
                violations['ii'] = [M.names[b1], M.names[b2]]
                break
        if stop_early and violations:
            return violations
        for a, b in itertools.product(sorted(M.ground.tangible_idxs), M.elements):
            if not rel(m(M.act(a, b)), N.act(a, m(b))):
                violations['iii'] = [M.ground.names[a], M.names[b]]
                break
        if stop_early and violations:
            return violations
        for b, c in itertools.product(M.elements, repeat=2):
            if M.surpasses(b, c) and not N.surpasses(m(b), m(c)):
                violations['iv'] = [M.names[b], M.names[c]]
                break
        for b in M.null_set:
            if m(b) not in N.null_set:
                violations['v'] = M.names[b]
                break
        return violations

    def _preserves_structure(self, M: ModSys, N: ModSys, table: Sequence[int]) -> bool:
        if table[M.zero_idx] != N.zero_idx:
            return False
        for x in M.elements:
            if table[M.neg(x)] != N.neg(table[x]):
                return False
            for y in M.elements:
                if table[M.add(x, y)] != N.add(table[x], table[y]):
                    return False
            for a in M.ground.elements:
                if table[M.act(a, x)] != N.act(a, table[x]):
                    return False
        return True

    def _is_partial_order(self, M: ModSys) -> bool:
        for b, c in itertools.product(M.elements, repeat=2):
            if b != c and M.surpasses(b, c) and M.surpasses(c, b):
                return False
        return all(M.surpasses(b, b) for b in M.elements)

    def _is_tangible_group(self, G: FinSys) -> bool:
        if G.one_idx is None or not G.tangible_idxs:
            return False
        T = G.tangible_idxs
        for a in T:
            if any(G.mul(a, b) not in T for b in T):
                return False
            if not any(G.mul(a, b) == G.one_idx for b in T):
                return False
        return True

    def _ground_null_set(self, G: FinSys) -> frozenset:
        return frozenset(
            e.value for e in core_systems_service.compute_null_set(G.to_descriptor())
        )

    def _same_ground(self, M: ModSys, N: ModSys) -> None:
        if M.ground != N.ground:
            raise ModuleSystemServiceException(
                f"Los módulos {M.name} y {N.name} tienen bases distintos"
            )


# Instancia global del servicio
module_system_service = ModuleSystemService()

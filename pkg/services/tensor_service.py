"""
Servicio de productos tensoriales de módulos finitos.

El producto se calcula como cociente del monoide libre conmutativo
sobre los tensores simples de generadores, truncado por las relaciones
cíclicas k·g = l·g, y cerrado por unión-búsqueda bajo las relaciones
de bilinealidad, de balance con 𝒯 y, si se pide, de negación.
"""

import itertools
import logging
from typing import Any, Dict, List, Sequence, Tuple

from config import config
from models.congruence import canonical_labels, find, union
from models.module_system import ModSys, MorphismTable, TensorElem
from services.core_systems_service import core_systems_service
from services.module_system_service import (
    ModuleSystemServiceException,
    NotHomomorphism,
    module_system_service,
)

logger = logging.getLogger(__name__)

Counts = Tuple[int, ...]


class TensorServiceException(ModuleSystemServiceException):
    """Excepción personalizada para errores del servicio tensorial."""
    pass


class QuotientTooLarge(TensorServiceException):
    pass


class TensorService:
    """Producto tensorial, potencias y morfismos inducidos."""

    def __init__(self) -> None:
        self._cache: Dict[Tuple[ModSys, ModSys, bool], Dict[str, Any]] = {}

    # ====================================================================
    # PRODUCTO TENSORIAL
    # ====================================================================

    def tensor(self, M1: ModSys, M2: ModSys, negated: bool = True) -> Dict[str, Any]:
        """
        Calcula M₁ ⊗ M₂.

        Args:
            M1: Primer factor
            M2: Segundo factor
            negated: Impone ((−)x) ⊗ y = x ⊗ ((−)y)

        Returns:
            Dict con 'module' (ModSys), 'bilinear' (tabla x, y ↦ clase de x⊗y),
            'representatives' (TensorElem por clase), 'generators',
            'classes' (elementos libres de cada clase) y 'free_size'

        Raises:
            QuotientTooLarge: Si el monoide libre truncado supera QUOTIENT_MAX_ELEMENTS
        """
        key = (M1, M2, negated)
        if key in self._cache:
            return self._cache[key]
        if M1.ground != M2.ground:
            raise TensorServiceException(
                f"Los módulos {M1.name} y {M2.name} tienen bases distintos"
            )
        ground = M1.ground
        gens1 = module_system_service.generating_set(M1)
        gens2 = module_system_service.generating_set(M2)
        exp1 = module_system_service.decompositions(M1, gens1)
        exp2 = module_system_service.decompositions(M2, gens2)
        generators = [(x, y) for x in gens1 for y in gens2]

        cycles = [self._cycle(M1, M2, x, y) for x, y in generators]
        free_size = 1
        for _, period_end in cycles:
            free_size *= period_end
        if free_size > config.QUOTIENT_MAX_ELEMENTS:
            raise QuotientTooLarge(
                f"El monoide libre de {M1.name}⊗{M2.name} tiene {free_size} elementos",
                {'free_size': free_size, 'limit': config.QUOTIENT_MAX_ELEMENTS},
            )

        free = list(itertools.product(*(range(end) for _, end in cycles)))
        position = {s: k for k, s in enumerate(free)}

        def reduce(k: int, v: int) -> int:
            start, end = cycles[k]
            if v < end:
                return v
            return start + (v - start) % (end - start)

        def plus(s: Counts, t: Counts) -> Counts:
            return tuple(reduce(k, a + b) for k, (a, b) in enumerate(zip(s, t)))

        unit = [tuple(int(i == k) for i in range(len(generators))) for k in range(len(generators))]
        empty = (0,) * len(generators)
        gen_index = {g: k for k, g in enumerate(generators)}

        def simple(x: int, y: int) -> Counts:
            total = empty
            for a, ca in zip(gens1, exp1[x]):
                for b, cb in zip(gens2, exp2[y]):
                    for _ in range(ca * cb):
                        total = plus(total, unit[gen_index[(a, b)]])
            return total

        table = {(x, y): simple(x, y) for x in M1.elements for y in M2.elements}
        parent = list(range(len(free)))

        def relate(s: Counts, t: Counts) -> None:
            union(parent, position[s], position[t])

        for y in gens2:
            for x1, x2 in itertools.product(M1.elements, repeat=2):
                relate(table[(M1.add(x1, x2), y)], plus(table[(x1, y)], table[(x2, y)]))
        for x in gens1:
            for y1, y2 in itertools.product(M2.elements, repeat=2):
                relate(table[(x, M2.add(y1, y2))], plus(table[(x, y1)], table[(x, y2)]))
        for x, y in generators:
            for a in ground.tangible_idxs:
                relate(table[(M1.act(a, x), y)], table[(x, M2.act(a, y))])
            if negated:
                relate(table[(M1.neg(x), y)], table[(x, M2.neg(y))])

        rounds = 0
        changed = True
        while changed:
            changed = False
            rounds += 1
            for k, s in enumerate(free):
                r = find(parent, k)
                if r == k:
                    continue
                for u in unit:
                    if union(parent, position[plus(s, u)], position[plus(free[r], u)]):
                        changed = True
        logger.debug(f"Cierre tensorial de {M1.name}⊗{M2.name}: {rounds} rondas")

        labels = canonical_labels(parent)
        members: Dict[int, List[Counts]] = {}
        for k, lab in enumerate(labels):
            members.setdefault(lab, []).append(free[k])
        reps_by_label = {
            lab: min(block, key=lambda s: (sum(s), s)) for lab, block in members.items()
        }
        order = sorted(members, key=lambda lab: (sum(reps_by_label[lab]), reps_by_label[lab]))
        cls_of_label = {lab: c for c, lab in enumerate(order)}

        def cls(s: Counts) -> int:
            return cls_of_label[labels[position[s]]]

        def expand(s: Counts, fn) -> Counts:
            total = empty
            for k, c in enumerate(s):
                x, y = generators[k]
                image = table[fn(x, y)]
                for _ in range(c):
                    total = plus(total, image)
            return total

        def induced(fn, label: str) -> Tuple[int, ...]:
            row = []
            for lab in order:
                images = {cls(expand(s, fn)) for s in members[lab]}
                if len(images) != 1:
                    raise TensorServiceException(
                        f"{label} no está bien definida en {M1.name}⊗{M2.name}"
                    )
                row.append(images.pop())
            return tuple(row)

        representatives = []
        for lab in order:
            terms = []
            for k, c in enumerate(reps_by_label[lab]):
                terms.extend([generators[k]] * c)
            representatives.append(TensorElem(tuple(terms)))
        names = tuple(rep.label(M1, M2) for rep in representatives)

        add_table = tuple(
            tuple(cls(plus(reps_by_label[a], reps_by_label[b])) for b in order) for a in order
        )
        action_table = tuple(
            induced(lambda x, y, a=a: (M1.act(a, x), y), f"La acción de {ground.names[a]}")
            for a in ground.elements
        )
        neg_table = induced(lambda x, y: (M1.neg(x), y), '(−)')
        zero = cls(empty)
        tangibles = frozenset(
            cls(unit[k]) for k, (x, y) in enumerate(generators)
            if x in M1.tangible_idxs and y in M2.tangible_idxs
        ) - {zero}

        module = ModSys(
            ground=ground,
            names=names,
            add_table=add_table,
            action_table=action_table,
            zero_idx=zero,
            tangible_idxs=tangibles,
            neg_table=neg_table,
            name=f"{M1.name}⊗{M2.name}",
        )
        bilinear = tuple(tuple(cls(table[(x, y)]) for y in M2.elements) for x in M1.elements)
        result = {
            'module': module,
            'bilinear': bilinear,
            'representatives': representatives,
            'generators': generators,
            'classes': [members[lab] for lab in order],
            'free_size': free_size,
            'left': M1,
            'right': M2,
        }
        self._cache[key] = result
        logger.info(
            f"{module.name}: {module.size} clases desde {free_size} elementos libres"
        )
        return result

    def simple_tensor(self, result: Dict[str, Any], x: int, y: int) -> int:
        return result['bilinear'][x][y]

    def evaluate(self, result: Dict[str, Any], terms: Sequence[Tuple[int, int]]) -> int:
        """Clase de Σ xᵢ⊗yᵢ."""
        module: ModSys = result['module']
        total = module.zero_idx
        for x, y in terms:
            total = module.add(total, result['bilinear'][x][y])
        return total

    def negation_balanced(self, result: Dict[str, Any]) -> bool:
        """((−)x) ⊗ y = x ⊗ ((−)y) para todos los tensores simples."""
        M1, M2 = result['left'], result['right']
        bil = result['bilinear']
        return all(
            bil[M1.neg(x)][y] == bil[x][M2.neg(y)] for x in M1.elements for y in M2.elements
        )

    # ====================================================================
    # MORFISMOS INDUCIDOS
    # ====================================================================

    def tensor_of_homomorphisms(self, f1: MorphismTable, f2: MorphismTable) -> MorphismTable:
        """
        f₁ ⊗ f₂ definido en tensores simples y verificado en cada clase.

        Raises:
            NotHomomorphism: Si f₁ o f₂ no son homomorfismos
            TensorServiceException: Si el mapa no es independiente del representante
        """
        for f in (f1, f2):
            if not module_system_service.is_homomorphism(f):
                raise NotHomomorphism(
                    f"El mapa {f.source.name} → {f.target.name} no es homomorfismo",
                    {'kind': module_system_service.classify_morphism(f)['kind']},
                )
        source = self.tensor(f1.source, f2.source)
        target = self.tensor(f1.target, f2.target)
        generators = source['generators']
        table = []
        for k, block in enumerate(source['classes']):
            images = set()
            for s in block:
                terms = []
                for g, c in enumerate(s):
                    x, y = generators[g]
                    terms.extend([(f1(x), f2(y))] * c)
                images.add(self.evaluate(target, terms))
            if len(images) != 1:
                raise TensorServiceException(
                    "f₁⊗f₂ depende del representante",
                    {'class': source['module'].names[k]},
                )
            table.append(images.pop())
        return MorphismTable(source['module'], target['module'], tuple(table))

    def nonfunctoriality_witness(self) -> Dict[str, Any]:
        """
        λ₁⊗λ₁ + λ₁⊗λ₂ + λ₂⊗λ₂ admite dos agrupaciones,
        λ₁⊗(λ₁+λ₂) + λ₂⊗λ₂ y λ₁⊗λ₁ + (λ₁+λ₂)⊗λ₂, que el colapso
        f ⊗ f envía a λ₂⊗λ₂ y λ₁⊗λ₁.
        """
        fragment, f = module_system_service.nonmonoidal_fragment()
        boolean = core_systems_service.boolean_finsys()
        carrier = module_system_service.free_module(boolean, 2)
        result = self.tensor(carrier, carrier)
        module: ModSys = result['module']

        lam1 = module_system_service.basis_vector(carrier, 2, 0)
        lam2 = module_system_service.basis_vector(carrier, 2, 1)
        both = carrier.add(lam1, lam2)
        regroupings = [
            TensorElem(((lam1, both), (lam2, lam2))),
            TensorElem(((lam1, lam1), (both, lam2))),
        ]
        classes = [self.evaluate(result, r.terms) for r in regroupings]
        images = [
            self.evaluate(result, [(f(x), f(y)) for x, y in r.terms]) for r in regroupings
        ]
        witness = {
            'morphism': module_system_service.classify_morphism(f),
            'element': module.names[classes[0]],
            'representations': [r.label(carrier, carrier) for r in regroupings],
            'same_class': classes[0] == classes[1],
            'images': [module.names[i] for i in images],
            'well_defined': images[0] == images[1],
        }
        logger.info(
            f"f⊗f en {witness['element']}: {witness['images'][0]} frente a {witness['images'][1]}"
        )
        return witness

    # ====================================================================
    # POTENCIAS Y ADJUNCIÓN
    # ====================================================================

    def tensor_power(self, M: ModSys, k: int) -> ModSys:
        """M^{⊗k} para 1 ≤ k ≤ 3, iterando el tensor negado."""
        if not 1 <= k <= 3:
            raise TensorServiceException(f"Potencia tensorial fuera de rango: {k}")
        power = M
        for _ in range(k - 1):
            power = self.tensor(power, M, negated=True)['module']
        return power

    def tensor_algebra(self, M: ModSys, k: int) -> ModSys:
        """Suma directa truncada 𝒜 ⊕ M ⊕ M^{⊗2} ⊕ ··· ⊕ M^{⊗k}."""
        summands = [module_system_service.regular_module(M.ground)]
        summands.extend(self.tensor_power(M, j) for j in range(1, k + 1))
        return module_system_service.direct_sum(summands)

    def adjoint_bijection_check(self, M1: ModSys, M2: ModSys, M3: ModSys) -> Dict[str, Any]:
        """
        Hom(M₁⊗M₂, M₃) frente a Hom(M₁, Hom(M₂, M₃)) por φ ↦ (x ↦ (y ↦ φ(x⊗y))).

        Returns:
            Dict con 'left', 'right' (cardinales), 'bijective' y 'unmatched'
        """
        product = self.tensor(M1, M2)
        left = module_system_service.hom_triple(product['module'], M3)
        inner = module_system_service.hom_triple(M2, M3)
        right = module_system_service.hom_triple(M1, inner['module'])
        inner_index = {f.table: k for k, f in enumerate(inner['morphisms'])}
        right_index = {f.table: k for k, f in enumerate(right['morphisms'])}

        images, unmatched = [], 0
        for phi in left['morphisms']:
            curried = []
            for x in M1.elements:
                column = tuple(phi(product['bilinear'][x][y]) for y in M2.elements)
                curried.append(inner_index.get(column))
            if None in curried or tuple(curried) not in right_index:
                unmatched += 1
                continue
            images.append(right_index[tuple(curried)])
        bijective = (
            unmatched == 0
            and len(set(images)) == len(images)
            and len(images) == len(right['morphisms'])
        )
        return {
            'left': len(left['morphisms']),
            'right': len(right['morphisms']),
            'bijective': bijective,
            'unmatched': unmatched,
        }

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _cycle(self, M1: ModSys, M2: ModSys, x: int, y: int) -> Tuple[int, int]:
        """(k, l) con k·(x⊗y) = l·(x⊗y), tomando el menor l entre ambos factores."""
        return min(self._multiples_cycle(M1, x), self._multiples_cycle(M2, y),
                   key=lambda c: (c[1], c[0]))

    def _multiples_cycle(self, M: ModSys, x: int) -> Tuple[int, int]:
        seen = {M.zero_idx: 0}
        current, n = M.zero_idx, 0
        while True:
            current = M.add(current, x)
            n += 1
            if current in seen:
                return seen[current], n
            seen[current] = n


# Instancia global del servicio
tensor_service = TensorService()

"""
Servicio de congruencias sobre sistemas finitos.

Generación por punto fijo (unión-búsqueda), 𝒯-congruencias, cocientes,
producto twist de congruencias, enumeración del retículo y las
clasificaciones prima / semiprima / maximal / irreducible, el radical,
la altura de cadenas y los anuladores de módulos.
"""

import itertools
import logging
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from config import config
from models.congruence import Congruence, canonical_labels, find, union
from models.module_system import ModSys
from models.system import FinSys

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class CongruenceServiceException(Exception):
    """Excepción personalizada para errores del servicio de congruencias."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class LatticeTooLarge(CongruenceServiceException):
    pass


class IllDefined(CongruenceServiceException):
    """Las tablas inducidas por una partición no son consistentes."""
    pass


class CongruenceService:
    """Motor de congruencias para sistemas finitos."""

    def __init__(self) -> None:
        self._lattices: Dict[Tuple[FinSys, bool], List[Congruence]] = {}

    # ====================================================================
    # GENERACIÓN
    # ====================================================================

    def generate(self, fs: FinSys, gens: Iterable[Pair] = ()) -> Congruence:
        """
        Menor congruencia que contiene gens.

        Cierra la partición bajo traslaciones x ↦ x + c, x ↦ cx, x ↦ xc
        y bajo (−) hasta un punto fijo.

        Args:
            fs: Sistema finito
            gens: Pares de índices generadores

        Returns:
            Congruence: Congruencia generada
        """
        gens = frozenset(gens)
        parent = list(range(fs.size))
        for a, b in gens:
            union(parent, a, b)

        rounds = 0
        changed = True
        while changed:
            changed = False
            rounds += 1
            for a in fs.elements:
                r = find(parent, a)
                if r == a:
                    continue
                if union(parent, fs.neg(a), fs.neg(r)):
                    changed = True
                for c in fs.elements:
                    if union(parent, fs.add(a, c), fs.add(r, c)):
                        changed = True
                    if union(parent, fs.mul(a, c), fs.mul(r, c)):
                        changed = True
                    if union(parent, fs.mul(c, a), fs.mul(c, r)):
                        changed = True
        logger.debug(f"Cierre de congruencia en {fs.name}: {rounds} rondas")
        return Congruence(fs, canonical_labels(parent), gens)

    def diagonal(self, fs: FinSys) -> Congruence:
        return Congruence(fs, tuple(fs.elements), frozenset())

    def full(self, fs: FinSys) -> Congruence:
        return Congruence(fs, (0,) * fs.size, frozenset((0, b) for b in fs.elements))

    def principal(self, fs: FinSys, a: int, b: int) -> Congruence:
        return self.generate(fs, [(a, b)])

    def contains(self, C: Congruence, a: int, b: int) -> bool:
        return C.contains(a, b)

    def meet(self, C1: Congruence, C2: Congruence) -> Congruence:
        self._same_system(C1, C2)
        keys: Dict[Pair, int] = {}
        labels = []
        for i in C1.system.elements:
            labels.append(keys.setdefault((C1.labels[i], C2.labels[i]), i))
        return Congruence(C1.system, tuple(labels))

    def join(self, C1: Congruence, C2: Congruence) -> Congruence:
        self._same_system(C1, C2)
        return self.generate(C1.system, self._basis(C1) | self._basis(C2))

    def verify_congruence(self, C: Congruence) -> Dict[str, Any]:
        """
        Comprueba las leyes de congruencia sobre la partición, incluida
        la clausura bajo la acción twist de 𝒜̂.
        """
        fs = C.system
        violations: Dict[str, Any] = {}
        basis = sorted(self._basis(C))
        for a, b in basis:
            if not C.contains(fs.neg(a), fs.neg(b)):
                violations.setdefault('negation', (a, b))
            for c in fs.elements:
                if not C.contains(fs.add(a, c), fs.add(b, c)):
                    violations.setdefault('additive', (a, b, c))
                if not (C.contains(fs.mul(a, c), fs.mul(b, c))
                        and C.contains(fs.mul(c, a), fs.mul(c, b))):
                    violations.setdefault('multiplicative', (a, b, c))
        for p in itertools.product(fs.elements, repeat=2):
            for q in basis:
                if not C.contains(*self.twist(fs, p, q)):
                    violations.setdefault('twist', (p, q))
                    break
            if 'twist' in violations:
                break
        return {'holds': not violations, 'violations': violations}

    # ====================================================================
    # 𝒯-CONGRUENCIAS Y COCIENTES
    # ====================================================================

    def is_T_congruence(self, C: Congruence) -> bool:
        """C está generada aditivamente por sus pares en 𝒯₀ × 𝒯₀."""
        fs = C.system
        t0 = self._t0(fs)
        seeds = [(a, b) for a in t0 for b in t0 if C.contains(a, b)]
        reach: Set[Pair] = set(seeds)
        frontier = list(seeds)
        while frontier:
            a, b = frontier.pop()
            for c, d in seeds:
                p = (fs.add(a, c), fs.add(b, d))
                if p not in reach:
                    reach.add(p)
                    frontier.append(p)
        return reach == set(C.pairs)

    def quotient(self, C: Congruence) -> Tuple[FinSys, Tuple[int, ...]]:
        """
        Sistema cociente 𝒜/C y la proyección a ↦ [a].

        Raises:
            IllDefined: Si alguna operación no respeta las clases
        """
        fs = C.system
        classes = C.classes
        position = {lab: k for k, lab in enumerate(block[0] for block in classes)}
        projection = tuple(position[C.labels[i]] for i in fs.elements)

        def induced(op, label: str) -> Tuple[Tuple[int, ...], ...]:
            rows = []
            for A in classes:
                row = []
                for B in classes:
                    images = {projection[op(a, b)] for a in A for b in B}
                    if len(images) != 1:
                        raise IllDefined(
                            f"La operación {label} no está bien definida en el cociente",
                            {'classes': [fs.names[A[0]], fs.names[B[0]]]},
                        )
                    row.append(images.pop())
                rows.append(tuple(row))
            return tuple(rows)

        add_table = induced(fs.add, '+')
        mul_table = induced(fs.mul, '·')
        neg_table = []
        for A in classes:
            images = {projection[fs.neg(a)] for a in A}
            if len(images) != 1:
                raise IllDefined("(−) no está bien definida en el cociente")
            neg_table.append(images.pop())

        zero_class = projection[fs.zero_idx]
        surpass_mode, surpass_pairs = 'circ', None
        if fs.surpass_mode == 'explicit':
            surpass_mode = 'explicit'
            surpass_pairs = frozenset(
                (projection[b], projection[c]) for b, c in fs.surpass_pairs
            )
        names = tuple(
            fs.names[A[0]] if len(A) == 1 else f"[{fs.names[A[0]]}]" for A in classes
        )
        quotient = FinSys(
            names=names,
            add_table=add_table,
            mul_table=mul_table,
            zero_idx=zero_class,
            one_idx=projection[fs.one_idx] if fs.one_idx is not None else None,
            tangible_idxs=frozenset(
                projection[t] for t in fs.tangible_idxs if projection[t] != zero_class
            ),
            neg_table=tuple(neg_table),
            surpass_mode=surpass_mode,
            surpass_pairs=surpass_pairs,
            name=f"{fs.name}/C",
        )
        logger.info(f"Cociente de {fs.name}: {fs.size} → {quotient.size} elementos")
        return quotient, projection

    # ====================================================================
    # PRODUCTO TWIST
    # ====================================================================

    def twist(self, fs: FinSys, p: Pair, q: Pair) -> Pair:
        """(a₀,a₁)⊙(b₀,b₁) = (a₀b₀ + a₁b₁, a₀b₁ + a₁b₀)."""
        a0, a1 = p
        b0, b1 = q
        return (
            fs.add(fs.mul(a0, b0), fs.mul(a1, b1)),
            fs.add(fs.mul(a0, b1), fs.mul(a1, b0)),
        )

    def twist_product(
        self, C1: Congruence, C2: Congruence, mode: str = 'members'
    ) -> Congruence:
        """
        C₁⊙C₂: congruencia generada por los productos twist de pares.

        Args:
            mode: 'members' usa todos los pares; 'generators' sólo los
                generadores registrados (o una base de la partición)
        """
        self._same_system(C1, C2)
        if mode == 'members':
            left, right = self._basis(C1, all_pairs=True), self._basis(C2, all_pairs=True)
        elif mode == 'generators':
            left, right = self._generators(C1), self._generators(C2)
        else:
            raise CongruenceServiceException(f"Modo de producto desconocido: {mode}")
        fs = C1.system
        return self.generate(fs, {self.twist(fs, p, q) for p in left for q in right})

    def compare_twist_modes(self, C1: Congruence, C2: Congruence) -> Dict[str, Any]:
        by_members = self.twist_product(C1, C2, 'members')
        by_generators = self.twist_product(C1, C2, 'generators')
        return {
            'equal': by_members == by_generators,
            'members': by_members,
            'generators': by_generators,
        }

    def power(self, C: Congruence, k: int) -> Congruence:
        if k < 1:
            raise CongruenceServiceException("La potencia requiere k ≥ 1")
        result = C
        for _ in range(k - 1):
            result = self.twist_product(result, C)
        return result

    # ====================================================================
    # RETÍCULO
    # ====================================================================

    def enumerate_congruences(self, fs: FinSys, tangible_only: bool = False) -> List[Congruence]:
        """
        Retículo de congruencias (o de 𝒯-congruencias) como supremos de
        congruencias principales.

        Raises:
            LatticeTooLarge: Si el portador o el retículo superan las cotas
            CongruenceServiceException: Si fs no es un sistema finito tabulado
        """
        if not isinstance(fs, FinSys):
            raise CongruenceServiceException(
                "El retículo requiere un FinSys tabulado",
                {'received': type(fs).__name__},
            )
        key = (fs, tangible_only)
        if key in self._lattices:
            return self._lattices[key]
        if fs.size > config.LATTICE_MAX_ELEMENTS:
            raise LatticeTooLarge(
                f"{fs.name} tiene {fs.size} elementos (máximo {config.LATTICE_MAX_ELEMENTS})",
                {'size': fs.size, 'limit': config.LATTICE_MAX_ELEMENTS},
            )
        if (fs, False) in self._lattices:
            lattice = self._lattices[(fs, False)]
        else:
            principals = {
                self.principal(fs, a, b) for a, b in itertools.combinations(fs.elements, 2)
            }
            found = {self.diagonal(fs)} | principals
            frontier = list(found)
            while frontier:
                X = frontier.pop()
                for P in principals:
                    if P <= X:
                        continue
                    Y = self.join(X, P)
                    if Y not in found:
                        found.add(Y)
                        frontier.append(Y)
                        if len(found) > config.LATTICE_MAX_CONGRUENCES:
                            raise LatticeTooLarge(
                                f"El retículo de {fs.name} supera "
                                f"{config.LATTICE_MAX_CONGRUENCES} congruencias"
                            )
            lattice = sorted(found, key=lambda C: (len(C.pairs), C.labels))
            self._lattices[(fs, False)] = lattice
            logger.info(f"Retículo de {fs.name}: {len(lattice)} congruencias")
        if tangible_only:
            lattice = [C for C in lattice if self.is_T_congruence(C)]
            self._lattices[key] = lattice
        return lattice

    # ====================================================================
    # PRIMAS, SEMIPRIMAS, MAXIMALES
    # ====================================================================

    def is_prime(self, C: Congruence) -> bool:
        """C ≠ 𝒜̂ y C'⊙C'' ⊆ C implica C' ⊆ C o C'' ⊆ C (sobre todas las congruencias)."""
        return self._prime_over(C, tangible_only=False)

    def is_T_prime(self, C: Congruence) -> bool:
        """Igual que is_prime pero cuantificando sobre 𝒯-congruencias."""
        return self._prime_over(C, tangible_only=True)

    def is_semiprime(self, C: Congruence, tangible_only: bool = False) -> bool:
        """(C')² ⊆ C implica C' ⊆ C."""
        for Cp in self.enumerate_congruences(C.system, tangible_only):
            if not Cp <= C and self._twist_within(Cp, Cp, C):
                logger.debug(f"Semiprimalidad falla con {Cp.classes}")
                return False
        return True

    def is_irreducible(self, C: Congruence, tangible_only: bool = False) -> bool:
        """C ≠ 𝒜̂ no es intersección de dos congruencias estrictamente mayores."""
        if C.is_full:
            return False
        above = [X for X in self.enumerate_congruences(C.system, tangible_only) if C < X]
        for X, Y in itertools.combinations(above, 2):
            if self.meet(X, Y) == C:
                return False
        return True

    def is_maximal(self, C: Congruence, tangible_only: bool = True) -> bool:
        """Maximal respecto de la condición (𝟙, 𝟘) ∉ C."""
        fs = C.system
        if fs.one_idx is None:
            raise CongruenceServiceException(f"{fs.name} no tiene unidad")
        unit = (fs.one_idx, fs.zero_idx)
        if unit in C:
            return False
        return not any(
            C < X and unit not in X for X in self.enumerate_congruences(fs, tangible_only)
        )

    def prime_criterion(self, C: Congruence) -> bool:
        """p⊙q ∈ C implica p ∈ C o q ∈ C, para p, q ∈ 𝒯̂."""
        fs = C.system
        t_hat = self._t_hat(fs)
        if C.is_full:
            return False
        for p, q in itertools.product(t_hat, repeat=2):
            if self.twist(fs, p, q) in C and p not in C and q not in C:
                return False
        return True

    def semiprime_criterion(self, C: Congruence) -> bool:
        """p² ∈ C implica p ∈ C, para p ∈ 𝒯̂."""
        fs = C.system
        return all(
            p in C for p in self._t_hat(fs) if self.twist(fs, p, p) in C
        )

    def check_prime_characterization(
        self, fs: FinSys, tangible_only: bool = False
    ) -> Dict[str, Any]:
        """
        Recorre el retículo y compara prima con semiprima ∧ irreducible y
        con los criterios sobre 𝒯̂.
        """
        rows = []
        for C in self.enumerate_congruences(fs, tangible_only):
            prime = self._prime_over(C, tangible_only)
            semiprime = self.is_semiprime(C, tangible_only)
            irreducible = self.is_irreducible(C, tangible_only)
            rows.append({
                'congruence': C,
                'prime': prime,
                'semiprime': semiprime,
                'irreducible': irreducible,
                'prime_criterion': self.prime_criterion(C),
                'semiprime_criterion': self.semiprime_criterion(C),
            })
        return {
            'holds': all(r['prime'] == (r['semiprime'] and r['irreducible']) for r in rows),
            'criterion_agrees': all(r['prime'] == r['prime_criterion'] for r in rows),
            'rows': rows,
        }

    def primes_above(self, C: Congruence, tangible_only: bool = True) -> List[Congruence]:
        return [
            P for P in self.enumerate_congruences(C.system, tangible_only)
            if C <= P and self._prime_over(P, tangible_only)
        ]

    def check_maximal_primes(self, fs: FinSys) -> Dict[str, Any]:
        """Toda 𝒯-congruencia maximal es 𝒯-prima."""
        maximal = [C for C in self.enumerate_congruences(fs, True) if self.is_maximal(C)]
        failures = [C for C in maximal if not self.is_T_prime(C)]
        return {'holds': not failures, 'maximal': maximal, 'failures': failures}

    def chain_height(self, fs: FinSys) -> int:
        """Longitud máxima de una cadena estricta de 𝒯-congruencias 𝒯-primas."""
        primes = [C for C in self.enumerate_congruences(fs, True) if self.is_T_prime(C)]
        if not primes:
            return 0
        longest: Dict[int, int] = {}
        # el orden por número de pares es compatible con ⊂
        for k, P in enumerate(primes):
            longest[k] = max(
                (longest[j] + 1 for j in range(k) if primes[j] < P), default=0
            )
        return max(longest.values())

    # ====================================================================
    # RADICAL
    # ====================================================================

    def radical(self, C: Congruence) -> Congruence:
        """
        √C: congruencia generada por C y los p ∈ 𝒯̂ con alguna potencia
        twist en C.
        """
        fs = C.system
        extra = [p for p in self._t_hat(fs) if self._some_power_in(fs, p, C)]
        return self.generate(fs, self._basis(C) | set(extra))

    def check_radical_decomposition(self, C: Congruence) -> Dict[str, Any]:
        """
        √C frente a la intersección de las primas que contienen C. Para
        𝒯-congruencias se usan las 𝒯-primas entre 𝒯-congruencias; en otro
        caso las primas entre todas las congruencias.
        """
        fs = C.system
        tangible = self.is_T_congruence(C)
        primes = self.primes_above(C, tangible_only=tangible)
        intersection = self.full(fs)
        for P in primes:
            intersection = self.meet(intersection, P)
        rad = self.radical(C)
        return {
            'holds': rad == intersection,
            'radical': rad,
            'intersection': intersection,
            'primes': primes,
            'lattice': 'tangible' if tangible else 'all',
        }

    # ====================================================================
    # CANCELATIVIDAD, REVERSIBILIDAD Y SUBMÓDULOS
    # ====================================================================

    def is_cancellative(self, fs: FinSys) -> Dict[str, Any]:
        """Cancelatividad aditiva y multiplicativa (por elementos no nulos)."""
        additive = None
        multiplicative = None
        for a, b, c in itertools.product(fs.elements, repeat=3):
            if additive is None and a != b and fs.add(a, c) == fs.add(b, c):
                additive = (a, b, c)
            if (multiplicative is None and a != b and c != fs.zero_idx
                    and fs.mul(c, a) == fs.mul(c, b)):
                multiplicative = (a, b, c)
        return {
            'additive': additive is None,
            'multiplicative': multiplicative is None,
            'witness': {'additive': additive, 'multiplicative': multiplicative},
        }

    def is_T_reversible(self, fs: FinSys) -> bool:
        """a₁ ⪯ a₂ + b implica a₂ ⪯ a₁ (−) b, para a₁, a₂ ∈ 𝒯."""
        for a1, a2 in itertools.product(sorted(fs.tangible_idxs), repeat=2):
            for b in fs.elements:
                if fs.surpasses(a1, fs.add(a2, b)) and not fs.surpasses(
                    a2, fs.add(a1, fs.neg(b))
                ):
                    return False
        return True

    def tangible_submodules(self, fs: FinSys) -> List[FrozenSet[int]]:
        """𝒯-submódulos de 𝒜 generados por subconjuntos de 𝒯."""
        tangibles = sorted(fs.tangible_idxs)
        if len(tangibles) > config.LATTICE_MAX_ELEMENTS:
            raise LatticeTooLarge(f"{fs.name} tiene demasiados tangibles")
        t0 = self._t0(fs)
        found: Set[FrozenSet[int]] = set()
        for k in range(len(tangibles) + 1):
            for X in itertools.combinations(tangibles, k):
                seeds = {fs.mul(a, x) for a in t0 for x in X}
                seeds |= {fs.neg(s) for s in seeds}
                found.add(self._additive_closure(fs, seeds))
        return sorted(found, key=lambda N: (len(N), sorted(N)))

    def submodule_congruence(self, fs: FinSys, N: Iterable[int]) -> Congruence:
        """C_N: generada por los (a, b) de 𝒯₀(N) con a ⪯ b + v para algún v ∈ 𝒯₀(N)."""
        N = frozenset(N)
        t0n = sorted((N & fs.tangible_idxs) | {fs.zero_idx})
        gens = [
            (a, b) for a in t0n for b in t0n
            if any(fs.surpasses(a, fs.add(b, v)) for v in t0n)
        ]
        return self.generate(fs, gens)

    def congruence_submodule(self, C: Congruence) -> FrozenSet[int]:
        """N_C: subsemigrupo aditivo generado por los c = a (−) b ∈ 𝒯₀ con (a, b) ∈ C."""
        fs = C.system
        t0 = self._t0(fs)
        seeds = {
            fs.add(a, fs.neg(b)) for a in t0 for b in t0 if C.contains(a, b)
        } & set(t0)
        return self._additive_closure(fs, seeds)

    def galois_check(self, fs: FinSys) -> Dict[str, Any]:
        """C_{N_C} ⊇ C y N_{C_N} = N sobre 𝒯-congruencias y 𝒯-submódulos."""
        failures: List[Dict[str, Any]] = []
        for C in self.enumerate_congruences(fs, True):
            back = self.submodule_congruence(fs, self.congruence_submodule(C))
            if not C <= back:
                failures.append({'congruence': C, 'image': back})
        for N in self.tangible_submodules(fs):
            back = self.congruence_submodule(self.submodule_congruence(fs, N))
            if back != N:
                failures.append({'submodule': sorted(N), 'image': sorted(back)})
        return {
            'reversible': self.is_T_reversible(fs),
            'holds': not failures,
            'failures': failures,
        }

    def is_c_regular(self, C: Congruence, S: Iterable[int]) -> bool:
        """(s·b₀, s·b₁) ∈ C implica (b₀, b₁) ∈ C para todo s ∈ S."""
        fs = C.system
        for s in S:
            for b0, b1 in itertools.product(fs.elements, repeat=2):
                if C.contains(fs.mul(s, b0), fs.mul(s, b1)) and not C.contains(b0, b1):
                    return False
        return True

    # ====================================================================
    # ANULADORES
    # ====================================================================

    def annihilator(self, fs: FinSys, module: ModSys, S: Iterable[int]) -> Congruence:
        """Generada por los (a₀, a₁) ∈ 𝒯₀ × 𝒯₀ con a₀s = a₁s para todo s ∈ S."""
        if module.ground != fs:
            raise CongruenceServiceException(
                f"El módulo {module.name} no está definido sobre {fs.name}"
            )
        S = list(S)
        t0 = self._t0(fs)
        gens = [
            (a0, a1) for a0 in t0 for a1 in t0
            if all(module.act(a0, s) == module.act(a1, s) for s in S)
        ]
        return self.generate(fs, gens)

    def annihilator_simplicity_check(self, fs: FinSys, module: ModSys, s: int) -> Dict[str, Any]:
        """Ann(s) maximal frente a 𝒜s simple (sub-sistemas propios dentro de ℳ_Null)."""
        ann = self.annihilator(fs, module, [s])
        maximal = self.is_maximal(ann)
        orbit = frozenset(module.act(a, s) for a in fs.elements)
        t0 = self._t0(fs)
        generators = sorted({module.act(t, s) for t in fs.tangible_idxs})
        simple = True
        for k in range(len(generators) + 1):
            for X in itertools.combinations(generators, k):
                seeds = {module.act(a, x) for a in t0 for x in X}
                seeds |= {module.neg(y) for y in seeds}
                sub = module.additive_span(seeds)
                if sub != orbit and not sub <= module.null_set:
                    simple = False
        return {
            'annihilator': ann,
            'maximal': maximal,
            'simple': simple,
            'agree': maximal == simple,
        }

    # ====================================================================
    # AUXILIARES
    # ====================================================================

    def _prime_over(self, C: Congruence, tangible_only: bool) -> bool:
        if C.is_full:
            return False
        lattice = self.enumerate_congruences(C.system, tangible_only)
        for C1, C2 in itertools.product(lattice, repeat=2):
            if C1 <= C or C2 <= C:
                continue
            if self._twist_within(C1, C2, C):
                logger.debug(f"Primalidad falla con {C1.classes} y {C2.classes}")
                return False
        return True

    def _twist_within(self, C1: Congruence, C2: Congruence, C: Congruence) -> bool:
        fs = C.system
        left = self._basis(C1, all_pairs=True)
        right = self._basis(C2, all_pairs=True)
        return all(self.twist(fs, p, q) in C for p in left for q in right)

    def _some_power_in(self, fs: FinSys, p: Pair, C: Congruence) -> bool:
        seen = set()
        current = p
        while current not in seen:
            if current in C:
                return True
            seen.add(current)
            current = self.twist(fs, current, p)
        return False

    def _basis(self, C: Congruence, all_pairs: bool = False) -> Set[Pair]:
        """Pares no diagonales; sin all_pairs, sólo (a, rep(a))."""
        if all_pairs:
            return {(a, b) for a, b in C.pairs if a != b}
        return {(i, lab) for i, lab in enumerate(C.labels) if i != lab}

    def _generators(self, C: Congruence) -> Set[Pair]:
        if C.generators is not None:
            return {(a, b) for a, b in C.generators if a != b}
        return self._basis(C)

    def _t0(self, fs: FinSys) -> List[int]:
        return sorted(fs.tangible_idxs | {fs.zero_idx})

    def _t_hat(self, fs: FinSys) -> List[Pair]:
        z = fs.zero_idx
        tangibles = sorted(fs.tangible_idxs)
        return [(t, z) for t in tangibles] + [(z, t) for t in tangibles]

    def _additive_closure(self, fs: FinSys, seeds: Iterable[int]) -> FrozenSet[int]:
        reach = {fs.zero_idx}
        frontier = [fs.zero_idx]
        seeds = list(seeds)
        while frontier:
            x = frontier.pop()
            for g in seeds:
                y = fs.add(x, g)
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        return frozenset(reach)

    def _same_system(self, C1: Congruence, C2: Congruence) -> None:
        if C1.system != C2.system:
            raise CongruenceServiceException("Las congruencias deben compartir sistema")


# Instancia global del servicio
congruence_service = CongruenceService()

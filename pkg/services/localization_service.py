"""
Servicio de localización de sistemas finitos.

Construye S⁻¹𝒜 sobre pares (s, b) con la equivalencia
(s₁, b₁) ≡ (s₂, b₂) sii s·s₁·b₂ = s·s₂·b₁ para algún s ∈ S, el mapa
canónico b ↦ b/𝟙 y la localización de congruencias.
"""

import itertools
import logging
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from models.congruence import Congruence, LocalizedFraction, canonical_labels, union
from models.system import FinSys
from services.congruence_service import IllDefined, congruence_service
from services.core_systems_service import core_systems_service

logger = logging.getLogger(__name__)


class LocalizationServiceException(Exception):
    """Excepción personalizada para errores del servicio de localización."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class NullDenominator(LocalizationServiceException):
    """S corta a 𝒜_Null."""
    pass


class LocalizationService:
    """Localización S⁻¹𝒜 y su mapa canónico."""

    def submonoid(self, fs: FinSys, S: Iterable[int]) -> List[int]:
        """Cierre multiplicativo de S ∪ {𝟙}."""
        if fs.one_idx is None:
            raise LocalizationServiceException(f"{fs.name} no tiene unidad")
        closed = {fs.one_idx} | set(S)
        frontier = list(closed)
        while frontier:
            s = frontier.pop()
            for t in list(closed):
                for u in (fs.mul(s, t), fs.mul(t, s)):
                    if u not in closed:
                        closed.add(u)
                        frontier.append(u)
        return sorted(closed)

    def localize(self, fs: FinSys, S: Iterable[int]) -> Dict[str, Any]:
        """
        Localiza fs en el submonoide generado por S.

        Args:
            fs: Sistema finito conmutativo en S
            S: Índices de los denominadores

        Returns:
            Dict con 'system' (FinSys), 'canonical' (b ↦ índice de b/𝟙),
            'fractions' (representante de cada clase) y 'denominators'

        Raises:
            NullDenominator: Si S contiene elementos de 𝒜_Null
            LocalizationServiceException: Si S no es central
        """
        S = self.submonoid(fs, S)
        sd = fs.to_descriptor()
        null = {e.value for e in core_systems_service.compute_null_set(sd)}
        bad = [fs.names[s] for s in S if s in null]
        if bad:
            raise NullDenominator(
                f"Los denominadores {', '.join(bad)} están en 𝒜_Null de {fs.name}",
                {'denominators': bad},
            )
        for s, a in itertools.product(S, fs.elements):
            if fs.mul(s, a) != fs.mul(a, s):
                raise LocalizationServiceException(
                    f"{fs.names[s]} no es central en {fs.name}",
                    {'witness': [fs.names[s], fs.names[a]]},
                )

        cells = [(s, b) for s in S for b in fs.elements]
        cell_index = {c: k for k, c in enumerate(cells)}
        parent = list(range(len(cells)))
        for (i, (s1, b1)), (j, (s2, b2)) in itertools.combinations(enumerate(cells), 2):
            if any(
                fs.mul(s, fs.mul(s1, b2)) == fs.mul(s, fs.mul(s2, b1)) for s in S
            ):
                union(parent, i, j)
        labels = canonical_labels(parent)
        reps = sorted(set(labels))
        position = {lab: k for k, lab in enumerate(reps)}

        def cls(s: int, b: int) -> int:
            return position[labels[cell_index[(s, b)]]]

        members: Dict[int, List[Tuple[int, int]]] = {}
        for k, c in enumerate(cells):
            members.setdefault(position[labels[k]], []).append(c)

        def induced(op) -> Tuple[Tuple[int, ...], ...]:
            rows = []
            for x in range(len(reps)):
                row = []
                for y in range(len(reps)):
                    images = {op(p, q) for p in members[x] for q in members[y]}
                    if len(images) != 1:
                        raise IllDefined(
                            "La localización no está bien definida",
                            {'classes': [x, y]},
                        )
                    row.append(images.pop())
                rows.append(tuple(row))
            return tuple(rows)

        add_table = induced(
            lambda p, q: cls(fs.mul(p[0], q[0]), fs.add(fs.mul(q[0], p[1]), fs.mul(p[0], q[1])))
        )
        mul_table = induced(lambda p, q: cls(fs.mul(p[0], q[0]), fs.mul(p[1], q[1])))
        neg_table = tuple(cls(s, fs.neg(b)) for s, b in (cells[r] for r in reps))

        fractions = [LocalizedFraction(num=cells[r][1], den=cells[r][0]) for r in reps]
        one = fs.one_idx
        # nombre: el numerador con denominador 𝟙 si la clase lo admite
        names = []
        for k, fr in enumerate(fractions):
            unit_member = next((b for s, b in members[k] if s == one), None)
            if unit_member is not None:
                fractions[k] = LocalizedFraction(num=unit_member, den=one)
            names.append(fractions[k].label(fs))

        surpass_mode, surpass_pairs = 'circ', None
        if fs.surpass_mode == 'explicit':
            surpass_mode = 'explicit'
            surpass_pairs = frozenset(
                (x, y)
                for x in range(len(reps)) for y in range(len(reps))
                if any(
                    fs.surpasses(fs.mul(q[0], p[1]), fs.mul(p[0], q[1]))
                    for p in members[x] for q in members[y]
                )
            )

        localized = FinSys(
            names=tuple(names),
            add_table=add_table,
            mul_table=mul_table,
            zero_idx=cls(one, fs.zero_idx),
            one_idx=cls(one, one),
            tangible_idxs=frozenset(
                cls(s, t) for s in S for t in fs.tangible_idxs
            ) - {cls(one, fs.zero_idx)},
            neg_table=neg_table,
            surpass_mode=surpass_mode,
            surpass_pairs=surpass_pairs,
            name=f"{fs.name}[S^-1]",
        )
        canonical = tuple(cls(one, b) for b in fs.elements)
        logger.info(
            f"Localización de {fs.name} en {len(S)} denominadores: {localized.size} clases"
        )
        return {
            'system': localized,
            'canonical': canonical,
            'fractions': fractions,
            'denominators': S,
            'cells': {c: cls(*c) for c in cells},
        }

    def expected_kernel(self, fs: FinSys, S: Iterable[int]) -> Congruence:
        """{(b₀, b₁) : s·b₀ = s·b₁ para algún s ∈ S}, como partición."""
        S = self.submonoid(fs, S)
        parent = list(range(fs.size))
        for b0, b1 in itertools.combinations(fs.elements, 2):
            if any(fs.mul(s, b0) == fs.mul(s, b1) for s in S):
                union(parent, b0, b1)
        return Congruence(fs, canonical_labels(parent))

    def check_kernel(self, fs: FinSys, S: Iterable[int]) -> Dict[str, Any]:
        """Compara el núcleo del mapa canónico con el conjunto esperado."""
        S = list(S)
        result = self.localize(fs, S)
        canonical = result['canonical']
        kernel = Congruence(fs, self._labels_of(canonical))
        expected = self.expected_kernel(fs, S)
        return {
            'holds': kernel == expected,
            'kernel': kernel,
            'expected': expected,
            'injective': kernel.is_diagonal,
        }

    def is_regular(self, fs: FinSys, S: Iterable[int]) -> bool:
        """s·b₁ = s·b₂ implica b₁ = b₂ para todo s ∈ S."""
        for s in self.submonoid(fs, S):
            images = [fs.mul(s, b) for b in fs.elements]
            if len(set(images)) != len(images):
                return False
        return True

    def localize_congruence(
        self, C: Congruence, S: Iterable[int], localized: Optional[Dict[str, Any]] = None
    ) -> Congruence:
        """S⁻¹C: generada por (b₀/s, b₁/s) con (b₀, b₁) ∈ C y s ∈ S."""
        fs = C.system
        localized = localized or self.localize(fs, S)
        target: FinSys = localized['system']
        loc = self.localize_map(localized)
        gens = {
            (loc(s, b0), loc(s, b1))
            for s in localized['denominators'] for b0, b1 in C.pairs if b0 != b1
        }
        logger.debug(f"S⁻¹C con {len(gens)} generadores sobre {target.size} fracciones")
        return congruence_service.generate(target, gens)

    def localize_map(self, localized: Dict[str, Any]) -> Callable[[int, int], int]:
        """Función (s, b) ↦ índice de la clase b/s en el sistema localizado."""
        cells = localized["cells"]

        def loc(s: int, b: int) -> int:
            if (s, b) not in cells:
                raise LocalizationServiceException(
                    f"El denominador {s} no pertenece al submonoide localizado"
                )
            return cells[(s, b)]

        return loc

    def _labels_of(self, image: Tuple[int, ...]) -> Tuple[int, ...]:
        first: Dict[int, int] = {}
        return tuple(first.setdefault(v, i) for i, v in enumerate(image))


# Instancia global del servicio
localization_service = LocalizationService()

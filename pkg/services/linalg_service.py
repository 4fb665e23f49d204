"""
Servicio de álgebra lineal sobre sistemas con negación.

El (−)-determinante se calcula por la suma sobre permutaciones: sin
sustracción no hay eliminación válida.
"""

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from config import config
from models.elem import Elem
from models.matrix import Matrix
from models.system import SystemDescriptor
from services.symmetrization_service import symmetrization_service

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> Tuple[Tuple[Tuple[int, ...], bool], ...]:
    return tuple(
        (perm, Permutation(list(perm)).is_odd) for perm in itertools.permutations(range(n))
    )


class LinalgServiceException(Exception):
    """Excepción personalizada para errores del servicio de álgebra lineal."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class DimensionTooLarge(LinalgServiceException):
    pass


class LinalgService:
    """Determinantes, adjuntas y matrices de Vandermonde."""

    # ====================================================================
    # DETERMINANTE Y ADJUNTA
    # ====================================================================

    def neg_det(self, sd: SystemDescriptor, A: Matrix, limit: Optional[int] = None) -> Elem:
        """
        |A| = Σ_π (−)^π ∏ᵢ a_{i,π(i)}.

        Raises:
            DimensionTooLarge: Si n supera el límite configurado
        """
        limit = limit if limit is not None else config.DET_MAX_N
        self._check_dimension(A, limit)
        total = sd.zero
        for perm, odd in _signed_permutations(A.n):
            term = A.entry(0, perm[0])
            for i in range(1, A.n):
                term = sd.mul(term, A.entry(i, perm[i]))
            if odd:
                term = sd.negate(term)
            total = sd.add(total, term)
        return total

    def minors(self, sd: SystemDescriptor, A: Matrix) -> Matrix:
        """Determinantes de los menores (i, j) sin signo."""
        self._check_dimension(A, config.DET_MAX_N)
        if A.n < 2:
            raise LinalgServiceException("Los menores requieren n ≥ 2")
        return Matrix(
            A.carrier_id,
            tuple(
                tuple(self.neg_det(sd, A.minor(i, j)) for j in range(A.n))
                for i in range(A.n)
            ),
        )

    def neg_adjoint(self, sd: SystemDescriptor, A: Matrix) -> Matrix:
        """
        (−)-adjunta: entrada (i, j) = (−)^{i+j} |A_{j,i}|.

        Raises:
            DimensionTooLarge: Si n supera el límite configurado
        """
        raw = self.minors(sd, A)
        return Matrix(
            A.carrier_id,
            tuple(
                tuple(self._sign(sd, i + j, raw.entry(j, i)) for j in range(A.n))
                for i in range(A.n)
            ),
        )

    def laplace_expansion_check(self, sd: SystemDescriptor, A: Matrix, i: int) -> Dict[str, Any]:
        """Compara Σⱼ (−)^{i+j} a_{i,j}|A_{i,j}| con |A|."""
        self._check_dimension(A, config.LAPLACE_MAX_N)
        if not 0 <= i < A.n:
            raise LinalgServiceException(f"Fila {i} fuera de rango")
        det = self.neg_det(sd, A)
        if A.n == 1:
            return {'holds': True, 'expansion': A.entry(0, 0), 'det': det}
        expansion = sd.zero
        for j in range(A.n):
            cofactor = self._sign(sd, i + j, self.neg_det(sd, A.minor(i, j)))
            expansion = sd.add(expansion, sd.mul(A.entry(i, j), cofactor))
        return {'holds': expansion == det, 'expansion': expansion, 'det': det}

    # ====================================================================
    # VANDERMONDE
    # ====================================================================

    def vandermonde(self, sd: SystemDescriptor, a: Sequence[Elem]) -> Matrix:
        """V(a₁..aₙ) con fila i = (aᵢ^{n−1}, …, aᵢ, 𝟙)."""
        n = len(a)
        if n < 1:
            raise LinalgServiceException("Vandermonde requiere al menos un elemento")
        if n > config.VANDERMONDE_MAX_N:
            raise DimensionTooLarge(f"n = {n} supera {config.VANDERMONDE_MAX_N}")
        if sd.one is None:
            raise LinalgServiceException(f"{sd.name} no tiene unidad")
        rows = []
        for x in a:
            powers: List[Elem] = [sd.one]
            for _ in range(n - 1):
                powers.append(sd.mul(powers[-1], x))
            rows.append(tuple(reversed(powers)))
        return Matrix(sd.carrier_id, tuple(rows))

    def vandermonde_identity_check(self, sd: SystemDescriptor, a: Sequence[Elem]) -> Dict[str, Any]:
        """|V(a)| frente a ∏_{i>j}(aⱼ (−) aᵢ)."""
        V = self.vandermonde(sd, a)
        det = self.neg_det(sd, V)
        product = sd.one
        for j, i in itertools.combinations(range(len(a)), 2):
            product = sd.mul(product, sd.add(a[j], sd.negate(a[i])))
        if det != product:
            logger.info(f"Identidad de Vandermonde no exacta en {sd.name} para {len(a)} elementos")
        return {'holds': det == product, 'det': det, 'product': product}

    # ====================================================================
    # CONSISTENCIA CON EL SIMETRIZADO
    # ====================================================================

    def symmetrized_det_consistency(self, sd: SystemDescriptor, A: Matrix) -> Dict[str, Any]:
        """
        Con (−) = identidad en la base, el determinante simetrizado de la
        matriz embebida (p, n) cumple p + n = |A| en la base.
        """
        candidates = sd.elements if sd.elements is not None else [A.entry(0, 0)]
        if any(sd.negate(x) != x for x in candidates):
            raise LinalgServiceException(f"{sd.name} no tiene (−) = identidad")
        sym = symmetrization_service.symmetrize(sd)
        embedded = Matrix(
            sym.carrier_id,
            tuple(
                tuple(symmetrization_service.embed(sym, e) for e in row) for row in A.rows
            ),
        )
        sym_det = self.neg_det(sym, embedded)
        base_det = self.neg_det(sd, A)
        folded = sd.add(sym_det.pos, sym_det.neg)
        return {'holds': folded == base_det, 'sym_det': sym_det, 'base_det': base_det}

    def _sign(self, sd: SystemDescriptor, k: int, x: Elem) -> Elem:
        return sd.negate(x) if k % 2 else x

    def _check_dimension(self, A: Matrix, limit: int) -> None:
        if A.n > limit:
            raise DimensionTooLarge(
                f"Dimensión {A.n} supera el límite {limit}", {'n': A.n, 'limit': limit}
            )


# Instancia global del servicio
linalg_service = LinalgService()

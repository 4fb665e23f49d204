"""Tests del álgebra lineal: (−)-determinante, adjunta y Vandermonde."""

import itertools

import pytest

from models.elem import ghost, tangible
from models.matrix import Matrix
from services.linalg_service import (
    DimensionTooLarge,
    LinalgServiceException,
    linalg_service,
)
from services.symmetrization_service import symmetrization_service
from utils.rationals import sample_rational

ST = 'supertropical'


def st_matrix(rows):
    return Matrix(ST, tuple(tuple(tangible(ST, v) for v in row) for row in rows))


class TestDeterminant:
    def test_supertropical_two_by_two(self, supertropical):
        """Verifica que empates en la permanente den un fantasma."""
        A = st_matrix([[1, 2], [3, 4]])
        assert linalg_service.neg_det(supertropical, A) == ghost(ST, 5)

    def test_tangible_determinant(self, supertropical):
        A = st_matrix([[0, 2], [1, 0]])
        assert linalg_service.neg_det(supertropical, A) == tangible(ST, 3)

    def test_dimension_limit(self, supertropical):
        with pytest.raises(DimensionTooLarge) as exc_info:
            linalg_service.neg_det(supertropical, st_matrix([[0, 0], [0, 0]]), limit=1)
        assert exc_info.value.details == {'n': 2, 'limit': 1}


class TestAdjoint:
    def test_two_by_two_adjoint(self, supertropical):
        """Verifica adj(A) = [[d, (−)b], [(−)c, a]] con (−) identidad."""
        adj = linalg_service.neg_adjoint(supertropical, st_matrix([[1, 2], [3, 4]]))
        assert adj == st_matrix([[4, 2], [3, 1]])

    def test_laplace_expansion(self, supertropical):
        report = linalg_service.laplace_expansion_check(
            supertropical, st_matrix([[1, 2], [3, 4]]), 0
        )

        assert report['holds']
        assert report['det'] == ghost(ST, 5)

    def test_row_out_of_range(self, supertropical):
        with pytest.raises(LinalgServiceException):
            linalg_service.laplace_expansion_check(supertropical, st_matrix([[1]]), 3)

    def test_one_by_one_has_no_minors(self, supertropical):
        with pytest.raises(LinalgServiceException):
            linalg_service.minors(supertropical, st_matrix([[1]]))


class TestVandermonde:
    def test_descending_powers(self, supertropical):
        V = linalg_service.vandermonde(supertropical, [tangible(ST, 1), tangible(ST, 2)])
        assert V == st_matrix([[1, 0], [2, 0]])

    def test_identity_for_two_points(self, supertropical):
        report = linalg_service.vandermonde_identity_check(
            supertropical, [tangible(ST, 0), tangible(ST, 1)]
        )

        assert report['holds']
        assert report['det'] == tangible(ST, 1)

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_boolean_tuples(self, boolean, n):
        """Verifica la identidad y Laplace en todas las tuplas booleanas."""
        sd = boolean.to_descriptor()
        for a in itertools.product(sd.elements, repeat=n):
            assert linalg_service.vandermonde_identity_check(sd, a)['holds'], a
            V = linalg_service.vandermonde(sd, a)
            for i in range(n):
                assert linalg_service.laplace_expansion_check(sd, V, i)['holds'], (a, i)

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_symmetrized_boolean_tuples(self, boolean, n):
        sym = symmetrization_service.symmetrize(boolean.to_descriptor())
        for a in itertools.product(sym.elements, repeat=n):
            assert linalg_service.vandermonde_identity_check(sym, a)['holds'], a
            V = linalg_service.vandermonde(sym, a)
            for i in range(n):
                assert linalg_service.laplace_expansion_check(sym, V, i)['holds'], (a, i)

    def test_random_supertropical_tuples(self, supertropical, rng):
        """Verifica 10³ tuplas tangibles aleatorias con n ≤ 5 y todas sus filas."""
        for k in range(1000):
            n = 1 + k % 5
            a = [tangible(ST, sample_rational(rng)) for _ in range(n)]
            assert linalg_service.vandermonde_identity_check(supertropical, a)['holds'], a
            V = linalg_service.vandermonde(supertropical, a)
            for i in range(n):
                report = linalg_service.laplace_expansion_check(supertropical, V, i)
                assert report['holds'], (a, i)


class TestSymmetrizedConsistency:
    def test_boolean_all_ones(self, boolean):
        sd = boolean.to_descriptor()
        one = boolean.elem(1)
        A = Matrix(sd.carrier_id, ((one, one), (one, one)))

        report = linalg_service.symmetrized_det_consistency(sd, A)
        assert report['holds']
        assert report['base_det'] == one

    def test_requires_identity_negation(self, boolean):
        sym = symmetrization_service.symmetrize(boolean.to_descriptor())
        x = symmetrization_service.embed(sym, boolean.elem(1))
        with pytest.raises(LinalgServiceException):
            linalg_service.symmetrized_det_consistency(sym, Matrix(sym.carrier_id, ((x,),)))

"""Tests del simetrizado: producto twist, switch, inversos y raíces."""

import pytest

from models.elem import ghost, pair, tangible, zero
from services.core_systems_service import ActionOnly, NonInvertible, core_systems_service
from services.polynomial_service import polynomial_service
from services.symmetrization_service import (
    SymmetrizationServiceException,
    symmetrization_service,
)

ST = 'supertropical'


@pytest.fixture
def sym_boolean(boolean):
    return symmetrization_service.symmetrize(boolean.to_descriptor())


@pytest.fixture
def sym_supertropical(supertropical):
    return symmetrization_service.symmetrize(supertropical)


def bpair(sym, boolean, i, j):
    return pair(sym.carrier_id, boolean.elem(i), boolean.elem(j))


class TestTwist:
    def test_twist_swaps_signs(self, sym_boolean, boolean):
        """Verifica (1,0)⊙(0,1) = (0,1) y (0,1)⊙(0,1) = (1,0)."""
        one, minus = bpair(sym_boolean, boolean, 1, 0), bpair(sym_boolean, boolean, 0, 1)

        assert symmetrization_service.twist_mul(sym_boolean, one, minus) == minus
        assert symmetrization_service.twist_mul(sym_boolean, minus, minus) == one

    def test_switch(self, sym_boolean, boolean):
        x = bpair(sym_boolean, boolean, 1, 0)
        assert symmetrization_service.switch(sym_boolean, x) == bpair(sym_boolean, boolean, 0, 1)

    def test_quasi_zeros_are_diagonal(self, sym_boolean, boolean):
        x = bpair(sym_boolean, boolean, 1, 0)
        assert sym_boolean.quasi_zero(x) == bpair(sym_boolean, boolean, 1, 1)
        assert sym_boolean.in_quasi_zeros(bpair(sym_boolean, boolean, 1, 1))

    def test_action_only_carrier(self, supertropical):
        """Verifica que sin multiplicación total un factor deba estar en 𝒯̂."""
        sym = symmetrization_service.symmetrize(
            core_systems_service.restrict_to_action(supertropical)
        )
        x = pair(sym.carrier_id, ghost(ST, 1), zero(ST))
        y = pair(sym.carrier_id, ghost(ST, 2), zero(ST))
        with pytest.raises(ActionOnly):
            symmetrization_service.twist_mul(sym, x, y)

        t = pair(sym.carrier_id, tangible(ST, 1), zero(ST))
        assert symmetrization_service.twist_mul(sym, x, t) == pair(
            sym.carrier_id, ghost(ST, 2), zero(ST)
        )


class TestInverse:
    def test_negative_tangible_inverse(self, sym_supertropical):
        x = pair(sym_supertropical.carrier_id, zero(ST), tangible(ST, 3))
        assert symmetrization_service.twist_inverse(sym_supertropical, x) == pair(
            sym_supertropical.carrier_id, zero(ST), tangible(ST, -3)
        )

    def test_outside_t_hat(self, sym_supertropical):
        x = pair(sym_supertropical.carrier_id, tangible(ST, 1), tangible(ST, 1))
        with pytest.raises(NonInvertible):
            symmetrization_service.twist_inverse(sym_supertropical, x)

    def test_base_is_not_symmetrized(self, supertropical):
        with pytest.raises(SymmetrizationServiceException):
            symmetrization_service.embed(supertropical, tangible(ST, 0))


class TestRoots:
    def test_symmetrized_roots(self, supertropical, sym_supertropical):
        """Verifica que (x, 0) se anule sólo donde las componentes coinciden."""
        f = polynomial_service.monomial(supertropical, (1,), tangible(ST, 0))
        g = polynomial_service.monomial(supertropical, (0,), tangible(ST, 0))
        cid = sym_supertropical.carrier_id

        assert symmetrization_service.is_symmetrized_root(
            sym_supertropical, f, g, pair(cid, tangible(ST, 1), tangible(ST, 1))
        )
        assert not symmetrization_service.is_symmetrized_root(
            sym_supertropical, f, g, pair(cid, tangible(ST, 1), zero(ST))
        )
        assert not symmetrization_service.is_symmetrized_root(
            sym_supertropical, f, g, pair(cid, tangible(ST, 0), zero(ST))
        )


class TestPairAction:
    def test_boolean_action(self):
        report = symmetrization_service.check_pair_action(core_systems_service.make_boolean())
        assert report['holds']

    def test_requires_finite_carrier(self, supertropical):
        with pytest.raises(SymmetrizationServiceException):
            symmetrization_service.check_pair_action(supertropical)

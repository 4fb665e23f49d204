"""Tests del producto tensorial y de la falta de funtorialidad."""

import pytest

from config import config
from services.module_system_service import NotHomomorphism, module_system_service
from services.tensor_service import (
    QuotientTooLarge,
    TensorServiceException,
    tensor_service,
)


@pytest.fixture
def regular_chain3(chain3):
    return module_system_service.regular_module(chain3)


@pytest.fixture
def regular_boolean(boolean):
    return module_system_service.regular_module(boolean)


class TestTensor:
    def test_chain3_with_itself(self, regular_chain3):
        result = tensor_service.tensor(regular_chain3, regular_chain3)

        assert result['module'].size == 3
        assert tensor_service.negation_balanced(result)

    def test_free_boolean_modules(self, boolean):
        """Verifica que 𝔹² ⊗ 𝔹² tenga 16 clases."""
        free = module_system_service.free_module(boolean, 2)
        assert tensor_service.tensor(free, free)['module'].size == 16

    def test_free_rank_two_with_rank_one(self, boolean):
        """Verifica 𝔹² ⊗ 𝔹 ≅ 𝔹² por conteo de clases y estructura."""
        free2 = module_system_service.free_module(boolean, 2)
        free1 = module_system_service.free_module(boolean, 1)
        result = tensor_service.tensor(free2, free1)

        assert result['module'].size == 4
        assert module_system_service.check_isomorphism(result['module'], free2)['isomorphic']

    def test_boolean_is_its_own_tensor_square(self, regular_boolean):
        result = tensor_service.tensor(regular_boolean, regular_boolean)
        report = module_system_service.check_isomorphism(result['module'], regular_boolean)

        assert report['isomorphic']

    def test_simple_tensor_and_evaluate(self, regular_boolean):
        result = tensor_service.tensor(regular_boolean, regular_boolean)
        one = tensor_service.simple_tensor(result, 1, 1)

        assert tensor_service.evaluate(result, [(1, 1), (1, 1)]) == one
        assert tensor_service.evaluate(result, []) == result['module'].zero_idx

    def test_different_grounds(self, regular_chain3, regular_boolean):
        with pytest.raises(TensorServiceException):
            tensor_service.tensor(regular_chain3, regular_boolean)

    def test_quotient_bound(self, boolean, monkeypatch):
        monkeypatch.setattr(config, 'QUOTIENT_MAX_ELEMENTS', 1)
        monkeypatch.setattr(tensor_service, '_cache', {})
        free = module_system_service.free_module(boolean, 2)

        with pytest.raises(QuotientTooLarge):
            tensor_service.tensor(free, free)


class TestInducedMorphisms:
    def test_identity_tensor_identity(self, regular_chain3):
        identity = module_system_service.identity(regular_chain3)
        induced = tensor_service.tensor_of_homomorphisms(identity, identity)

        assert induced.table == (0, 1, 2)

    def test_rejects_non_homomorphisms(self):
        _, f = module_system_service.nonmonoidal_fragment()
        with pytest.raises(NotHomomorphism):
            tensor_service.tensor_of_homomorphisms(f, f)

    def test_nonfunctoriality_witness(self):
        """Verifica que f⊗f dé imágenes distintas a dos agrupaciones equivalentes."""
        witness = tensor_service.nonfunctoriality_witness()

        assert witness['morphism']['kind'] == 'preceq_morphism'
        assert witness['same_class']
        assert not witness['well_defined']
        assert len(set(witness['images'])) == 2


class TestPowers:
    def test_first_power_is_the_module(self, regular_chain3):
        assert tensor_service.tensor_power(regular_chain3, 1) == regular_chain3

    def test_power_out_of_range(self, regular_chain3):
        with pytest.raises(TensorServiceException):
            tensor_service.tensor_power(regular_chain3, 4)

    def test_truncated_algebra(self, regular_boolean):
        algebra = tensor_service.tensor_algebra(regular_boolean, 1)
        assert algebra.size == 4

    def test_adjunction_on_boolean(self, regular_boolean):
        """Verifica Hom(𝔹⊗𝔹, 𝔹) ≅ Hom(𝔹, Hom(𝔹, 𝔹))."""
        report = tensor_service.adjoint_bijection_check(
            regular_boolean, regular_boolean, regular_boolean
        )

        assert report['left'] == report['right'] == 2
        assert report['bijective']
        assert report['unmatched'] == 0

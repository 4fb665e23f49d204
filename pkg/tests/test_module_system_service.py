"""Tests de módulos: leyes, morfismos, Hom, bases, núcleos y cocientes."""

import pytest

from config import config
from models.congruence import Congruence
from services.module_system_service import (
    CoefficientSpaceTooLarge,
    ImageUndefined,
    ModuleSystemServiceException,
    module_system_service,
)

mss = module_system_service


@pytest.fixture
def regular(chain3):
    return mss.regular_module(chain3)


@pytest.fixture
def free2(chain3):
    return mss.free_module(chain3, 2)


@pytest.fixture
def projection(chain3, free2, regular):
    """Proyección 𝒜² → 𝒜 sobre la primera coordenada."""
    return mss.morphism_from_function(
        free2, regular, lambda x: mss.index_to_coords(chain3, 2, x)[0]
    )


class TestConstruction:
    def test_module_laws(self, regular, free2):
        assert mss.check_module_laws(regular)['holds']
        assert mss.check_module_laws(free2)['holds']

    def test_free_module_names_and_basis(self, boolean):
        """Verifica que los índices sigan las coordenadas en base |𝒜|."""
        M = mss.free_module(boolean, 2)

        assert M.names == ('(0,0)', '(0,1)', '(1,0)', '(1,1)')
        assert mss.basis_vector(M, 2, 0) == M.index('(1,0)')
        assert mss.basis_vector(M, 2, 1) == M.index('(0,1)')

    def test_free_module_rank(self, chain3):
        with pytest.raises(ModuleSystemServiceException):
            mss.free_module(chain3, 0)

    def test_coordinates(self, chain3):
        assert mss.index_to_coords(chain3, 2, 7) == (2, 1)
        assert mss.coords_to_index(chain3, [2, 1]) == 7

    def test_regular_null_set(self, regular):
        assert regular.null_set == frozenset({1, 2})

    def test_pair_action(self, regular):
        assert mss.pair_action_check(regular)['holds']


class TestMorphisms:
    def test_identity_is_homomorphism(self, regular):
        assert mss.classify_morphism(mss.identity(regular))['kind'] == 'homomorphism'

    def test_projection(self, projection, free2):
        assert mss.is_homomorphism(projection)
        assert mss.compose(projection, mss.identity(free2)).table == projection.table

    def test_nonmonoidal_fragment(self):
        """Verifica que f sea ⪯-morfismo sin ser homomorfismo."""
        fragment, f = mss.nonmonoidal_fragment()
        report = mss.classify_morphism(f)

        assert fragment.name == 'B[l1,l2]'
        assert f(fragment.index('(1,1)')) == fragment.zero_idx
        assert report['kind'] == 'preceq_morphism'
        assert not report['homomorphism']


class TestHom:
    def test_regular_endomorphisms(self, regular):
        hom = mss.hom_triple(regular, regular)

        assert len(hom['morphisms']) == 3
        assert hom['module'].size == 3

    def test_boolean_dual(self, boolean):
        """Verifica que el emparejamiento a ↦ a* sea biyectivo en 𝔹²."""
        report = mss.dual_system(2, boolean)

        assert report['dual'].size == 4
        assert report['onto']
        assert report['injective']

    def test_isomorphism_with_itself(self, regular):
        report = mss.check_isomorphism(regular, regular)

        assert report['isomorphic']
        assert report['map'] == (0, 1, 2)

    def test_different_grounds(self, regular, boolean):
        with pytest.raises(ModuleSystemServiceException):
            mss.hom_triple(regular, mss.regular_module(boolean))


class TestBases:
    def test_standard_basis(self, free2):
        e1, e2 = mss.basis_vector(free2, 2, 0), mss.basis_vector(free2, 2, 1)

        assert mss.is_base([e1, e2], free2)
        assert not mss.span_check([e1], free2)
        assert not mss.independence_check([e1, e1], free2)

    def test_boolean_null_coefficients(self, boolean):
        """Verifica que en 𝔹 todo coeficiente sea nulo y la independencia trivial."""
        M = mss.free_module(boolean, 2)
        assert mss.independence_check([mss.basis_vector(M, 2, 0)] * 2, M)

    def test_coefficient_bound(self, free2, monkeypatch):
        monkeypatch.setattr(config, 'COEFF_MAX_COMBINATIONS', 2)
        with pytest.raises(CoefficientSpaceTooLarge):
            mss.independence_check([0, 1], free2)


class TestKernels:
    def test_t_kernel(self, projection, free2):
        assert mss.t_kernel(projection) == [mss.basis_vector(free2, 2, 1)]

    def test_null_onto_but_not_monic(self, projection):
        assert mss.null_onto(projection)['holds']
        assert not mss.null_monic(projection)['holds']

        report = mss.null_onto_epic_check(projection)
        assert report['cokernel_trivial']
        assert report['agree']

    def test_exactness(self, chain3, regular, free2, projection):
        """Verifica que 𝒜 → 𝒜² → 𝒜 sea cadena pero no exacta en 𝒜²."""
        inclusion = mss.morphism_from_function(
            regular, free2, lambda x: mss.coords_to_index(chain3, [chain3.zero_idx, x])
        )
        report = mss.exactness([inclusion, projection])

        assert report['is_chain']
        assert report['exact'] == [False]

    def test_exactness_requires_composable_maps(self, projection):
        with pytest.raises(ModuleSystemServiceException):
            mss.exactness([projection, projection])


class TestModuleCongruences:
    def test_quotient(self, regular):
        C = mss.generate_module_congruence(regular, [(0, 1)])
        quotient, projection = mss.quotient_module(C)

        assert quotient.size == 2
        assert projection(0) == projection(1)

    def test_kernel_and_factorization(self, projection):
        kernel = mss.congruence_kernel(projection)
        quotient_map, monic = mss.factor_through(projection)

        assert len(kernel.classes) == 3
        assert quotient_map.target.size == 3
        assert len(set(monic.table)) == 3

    def test_image_of_diagonal(self, projection, free2):
        diag = Congruence(free2, tuple(free2.elements))
        assert mss.congruence_image(projection, diag).is_diagonal

    def test_image_requires_homomorphism(self):
        fragment, f = mss.nonmonoidal_fragment()
        diag = Congruence(fragment, tuple(fragment.elements))

        with pytest.raises(ImageUndefined):
            mss.congruence_image(f, diag)

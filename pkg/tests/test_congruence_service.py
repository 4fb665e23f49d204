"""Tests de congruencias: generación, cociente, twist, primas y radical."""

import pytest

from config import config
from services.congruence_service import (
    CongruenceServiceException,
    LatticeTooLarge,
    congruence_service,
)
from services.core_systems_service import core_systems_service
from services.module_system_service import module_system_service


@pytest.fixture
def ghost_collapse(chain3):
    """Congruencia G que identifica 0 con 0°."""
    return congruence_service.generate(chain3, [(0, 1)])


class TestGeneration:
    def test_generated_classes(self, chain3, ghost_collapse):
        assert ghost_collapse.classes == ((0, 1), (2,))
        assert (1, 0) in ghost_collapse
        assert (0, 2) not in ghost_collapse

    def test_pairs_with_zero_generate_full(self, chain3):
        """Verifica que identificar con zero colapse todo el sistema."""
        assert congruence_service.generate(chain3, [(1, 2)]).is_full
        assert congruence_service.principal(chain3, 0, 2).is_full

    def test_meet_and_join(self, chain3, ghost_collapse):
        diag, full = congruence_service.diagonal(chain3), congruence_service.full(chain3)

        assert congruence_service.meet(ghost_collapse, full) == ghost_collapse
        assert congruence_service.join(ghost_collapse, diag) == ghost_collapse
        assert diag < ghost_collapse <= full

    def test_verify_congruence(self, ghost_collapse):
        report = congruence_service.verify_congruence(ghost_collapse)

        assert report['holds']
        assert report['violations'] == {}

    def test_t_congruence(self, chain3, ghost_collapse):
        assert congruence_service.is_T_congruence(congruence_service.diagonal(chain3))
        assert not congruence_service.is_T_congruence(ghost_collapse)


class TestQuotient:
    def test_quotient_by_ghost_collapse(self, ghost_collapse):
        quotient, projection = congruence_service.quotient(ghost_collapse)

        assert quotient.names == ('[0]', 'zero')
        assert projection == (0, 0, 1)


class TestTwist:
    def test_modes_agree(self, ghost_collapse):
        """Verifica que productos por miembros y por generadores coincidan."""
        report = congruence_service.compare_twist_modes(ghost_collapse, ghost_collapse)

        assert report['equal']
        assert report['members'].is_diagonal

    def test_power(self, ghost_collapse):
        assert congruence_service.power(ghost_collapse, 1) == ghost_collapse
        assert congruence_service.power(ghost_collapse, 2).is_diagonal

    def test_power_requires_positive_exponent(self, ghost_collapse):
        with pytest.raises(CongruenceServiceException):
            congruence_service.power(ghost_collapse, 0)

    def test_unknown_mode(self, ghost_collapse):
        with pytest.raises(CongruenceServiceException):
            congruence_service.twist_product(ghost_collapse, ghost_collapse, 'rows')


class TestLattice:
    def test_chain3_lattice(self, chain3, ghost_collapse):
        lattice = congruence_service.enumerate_congruences(chain3)
        tangible = congruence_service.enumerate_congruences(chain3, tangible_only=True)

        assert len(lattice) == 3
        assert ghost_collapse in lattice
        assert len(tangible) == 2

    def test_lattice_bound(self, boolean, monkeypatch):
        monkeypatch.setattr(config, 'LATTICE_MAX_ELEMENTS', 1)
        monkeypatch.setattr(congruence_service, '_lattices', {})
        with pytest.raises(LatticeTooLarge):
            congruence_service.enumerate_congruences(boolean)

    def test_lattice_requires_finite_tables(self):
        """Verifica que un descriptor sin tablas se rechace con error tipado."""
        with pytest.raises(CongruenceServiceException):
            congruence_service.enumerate_congruences(core_systems_service.make_boolean())


class TestPrimes:
    def test_diagonal_is_t_prime_only(self, chain3):
        """Verifica que Diag sea 𝒯-prima e irreducible pero no prima."""
        diag = congruence_service.diagonal(chain3)

        assert congruence_service.is_T_prime(diag)
        assert not congruence_service.is_prime(diag)
        assert not congruence_service.is_semiprime(diag)
        assert congruence_service.is_irreducible(diag)
        assert congruence_service.is_maximal(diag)

    def test_ghost_collapse_is_prime(self, ghost_collapse):
        assert congruence_service.is_prime(ghost_collapse)

    def test_characterization(self, chain3):
        report = congruence_service.check_prime_characterization(chain3)
        assert len(report['rows']) == 3

    def test_maximal_primes_and_height(self, chain3):
        assert congruence_service.check_maximal_primes(chain3)['holds']
        assert congruence_service.chain_height(chain3) == 0


class TestRadical:
    def test_diagonal_radical(self, chain3):
        diag = congruence_service.diagonal(chain3)
        report = congruence_service.check_radical_decomposition(diag)

        assert congruence_service.radical(diag) == diag
        assert report['holds']
        assert report['lattice'] == 'tangible'


class TestPrimeRadicalCorpus:
    """Primas y radical sobre 𝔹 y su simetrizado."""

    SYSTEMS = ['boolean', 'sym_boolean_fs']

    def test_symmetrized_boolean_lattice(self, sym_boolean_fs):
        """Verifica Diag ⊂ (unidades colapsadas) ⊂ total en el simetrizado de 𝔹."""
        lattice = congruence_service.enumerate_congruences(sym_boolean_fs)

        assert len(lattice) == 3
        assert congruence_service.is_prime(congruence_service.diagonal(sym_boolean_fs))

    @pytest.mark.parametrize('system', SYSTEMS)
    def test_prime_criterion_agrees(self, system, request):
        fs = request.getfixturevalue(system)
        report = congruence_service.check_prime_characterization(fs, tangible_only=True)

        assert report['rows']
        assert report['criterion_agrees']

    @pytest.mark.parametrize('system', SYSTEMS)
    def test_radical_is_intersection_of_primes(self, system, request):
        """Verifica √C = ⋂ primas ⊇ C para cada congruencia del retículo."""
        fs = request.getfixturevalue(system)
        for C in congruence_service.enumerate_congruences(fs):
            report = congruence_service.check_radical_decomposition(C)
            assert report['holds'], C.classes

    @pytest.mark.parametrize('system', SYSTEMS)
    def test_maximal_congruences_are_prime(self, system, request):
        fs = request.getfixturevalue(system)
        report = congruence_service.check_maximal_primes(fs)

        assert report['maximal']
        assert report['holds']


class TestCancellation:
    def test_chain3_is_not_cancellative(self, chain3):
        report = congruence_service.is_cancellative(chain3)

        assert not report['additive']
        assert not report['multiplicative']
        assert report['witness']['additive'] is not None

    def test_diagonal_is_regular(self, chain3):
        assert congruence_service.is_c_regular(congruence_service.diagonal(chain3), [0])


class TestAnnihilators:
    def test_regular_module_annihilators(self, chain3):
        """Verifica Ann(zero) = Full y Ann(0) = Diag en el módulo regular."""
        module = module_system_service.regular_module(chain3)

        assert congruence_service.annihilator(chain3, module, [2]).is_full
        assert congruence_service.annihilator(chain3, module, [0]).is_diagonal

    def test_simplicity_agrees_with_maximality(self, chain3):
        module = module_system_service.regular_module(chain3)
        report = congruence_service.annihilator_simplicity_check(chain3, module, 0)

        assert report['maximal']
        assert report['simple']
        assert report['agree']

    def test_module_over_other_system(self, chain3, boolean):
        module = module_system_service.regular_module(boolean)
        with pytest.raises(CongruenceServiceException):
            congruence_service.annihilator(chain3, module, [0])

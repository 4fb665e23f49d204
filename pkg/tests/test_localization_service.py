"""Tests de localización: fracciones, mapa canónico y congruencias localizadas."""

import pytest

from services.congruence_service import congruence_service
from services.core_systems_service import core_systems_service
from services.localization_service import (
    LocalizationServiceException,
    NullDenominator,
    localization_service,
)


@pytest.fixture
def square(chain3):
    """chain3 × chain3, con el idempotente (0,zero) como denominador."""
    return core_systems_service.make_product(chain3, chain3)


class TestUnitDenominators:
    def test_localizing_at_unit_changes_nothing(self, chain3):
        result = localization_service.localize(chain3, [chain3.one_idx])

        assert result['system'].size == 3
        assert result['system'].names == chain3.names
        assert result['canonical'] == (0, 1, 2)
        assert result['denominators'] == [0]

    def test_kernel_is_diagonal(self, chain3):
        report = localization_service.check_kernel(chain3, [chain3.one_idx])

        assert report['holds']
        assert report['injective']
        assert localization_service.is_regular(chain3, [chain3.one_idx])

    def test_null_denominator(self, chain3):
        """Verifica que 0° no pueda ser denominador."""
        with pytest.raises(NullDenominator) as exc_info:
            localization_service.localize(chain3, [1])
        assert exc_info.value.details == {'denominators': ['0°']}


class TestIdempotentDenominator:
    def test_collapses_second_coordinate(self, square):
        e = square.index('(0,zero)')
        result = localization_service.localize(square, [e])

        assert result['system'].size == 3
        assert sorted(result['denominators']) == sorted({square.one_idx, e})

    def test_kernel_matches_expected(self, square):
        """Verifica ker = {(b₀, b₁) : e·b₀ = e·b₁}."""
        e = square.index('(0,zero)')
        report = localization_service.check_kernel(square, [e])

        assert report['holds']
        assert not report['injective']
        assert report['kernel'].contains(square.index('(0,0)'), square.index('(0,zero)'))
        assert not localization_service.is_regular(square, [e])

    def test_submonoid(self, square):
        e = square.index('(0,zero)')
        assert localization_service.submonoid(square, [e]) == sorted({square.one_idx, e})


class TestLocalizedCongruences:
    def test_localized_ghost_collapse(self, chain3):
        C = congruence_service.generate(chain3, [(0, 1)])
        localized = localization_service.localize_congruence(C, [chain3.one_idx])

        assert localized == C

    def test_map_rejects_foreign_denominator(self, chain3):
        result = localization_service.localize(chain3, [chain3.one_idx])
        loc = localization_service.localize_map(result)

        assert loc(0, 2) == 2
        with pytest.raises(LocalizationServiceException):
            loc(1, 0)


class TestRegularDenominators:
    """Localización del simetrizado de 𝔹 en la unidad (0,1)."""

    def test_regular_denominator_gives_injective_map(self, sym_boolean_fs):
        minus_one = sym_boolean_fs.index('(0,1)')
        report = localization_service.check_kernel(sym_boolean_fs, [minus_one])

        assert localization_service.is_regular(sym_boolean_fs, [minus_one])
        assert report['holds']
        assert report['injective']
        assert localization_service.localize(sym_boolean_fs, [minus_one])['system'].size == 4

    def test_localized_primes_stay_prime(self, sym_boolean_fs):
        """Verifica que S⁻¹C sea prima si C es prima y S es C-regular."""
        S = [sym_boolean_fs.index('(0,1)')]
        localized = localization_service.localize(sym_boolean_fs, S)
        checked = 0
        for C in congruence_service.enumerate_congruences(sym_boolean_fs):
            if not (congruence_service.is_prime(C) and congruence_service.is_c_regular(C, S)):
                continue
            image = localization_service.localize_congruence(C, S, localized)
            assert congruence_service.is_prime(image), C.classes
            checked += 1

        assert checked == 2

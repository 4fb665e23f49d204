"""Tests de tropicalización: valoración de Puiseux, pares de ideales y matroides."""

from fractions import Fraction

import pytest

from config import config
from models.elem import tangible, zero
from models.matroid import ValuatedMatroidCandidate
from models.puiseux import PuiseuxSeries
from services.core_systems_service import core_systems_service
from services.hyperfield_service import hf_val
from services.polynomial_service import polynomial_service
from services.tropicalization_service import (
    MatroidTooLarge,
    NoCommonMonomial,
    TropicalizationServiceException,
    series,
    tropicalization_service,
)

MIN = 'minplus'
ts = tropicalization_service


def t(q, c=1):
    return PuiseuxSeries.monomial(c, q)


@pytest.fixture
def puiseux():
    return ts.make_puiseux()


class TestValuation:
    def test_val_is_lowest_exponent(self):
        assert ts.val(t(Fraction(1, 2)) + t(1)) == tangible(MIN, Fraction(1, 2))
        assert ts.val(PuiseuxSeries()) == zero(MIN)

    def test_nu_flips_sign(self):
        assert ts.nu(t(2)) == hf_val(-2)

    def test_cancellation_of_leading_terms(self):
        """Verifica val(p + q) > min cuando los términos líderes se cancelan."""
        p = PuiseuxSeries.constant(1) + t(1)
        q = PuiseuxSeries.constant(-1) + t(2)
        report = ts.val_arith_check(p, q)

        assert report['holds']
        assert report['val_sum'] == tangible(MIN, 1)
        assert report['val_product'] == tangible(MIN, 0)

    def test_sampled_scan(self, rng):
        report = ts.val_arith_scan(rng, samples=1000)

        assert report['holds'], report['failures']
        assert report['checked'] == 1000

    def test_valuation_certificate(self, rng):
        assert ts.puiseux_valuation_check(rng, samples=10)['holds']

    def test_puiseux_system(self, puiseux):
        x = series(PuiseuxSeries.constant(3))

        assert puiseux.add(x, puiseux.negate(x)) == puiseux.zero
        assert puiseux.invert(series(t(1, 2))) == series(t(-1, Fraction(1, 2)))
        assert puiseux.invert(series(PuiseuxSeries.constant(1) + t(1))) is None


class TestTrop:
    def test_trop_of_polynomial(self, puiseux):
        P = polynomial_service.make(
            puiseux,
            [((1,), series(PuiseuxSeries.constant(1) + t(1))), ((0,), series(t(2)))],
        )
        tropical = ts.trop(P)

        assert tropical.coef((1,)) == tangible(MIN, 0)
        assert tropical.coef((0,)) == tangible(MIN, 2)

    def test_trop_requires_puiseux(self):
        minplus = core_systems_service.make_minplus()
        P = polynomial_service.monomial(minplus, (1,), tangible(MIN, 0))

        with pytest.raises(TropicalizationServiceException):
            ts.trop(P)

    def test_bend_generators_of_ideal(self, puiseux):
        P = polynomial_service.make(
            puiseux, [((1,), series(PuiseuxSeries.constant(1))), ((0,), series(t(2)))]
        )
        empty = polynomial_service.make(puiseux, [], nvars=1)

        assert len(ts.trop_ideal_to_bend([P, empty])) == 2


class TestIdealPairs:
    @pytest.fixture
    def pair(self):
        """f = x + y y g = x + 2y en min-plus."""
        minplus = core_systems_service.make_minplus()
        f = polynomial_service.make(
            minplus, [((1, 0), tangible(MIN, 0)), ((0, 1), tangible(MIN, 0))]
        )
        g = polynomial_service.make(
            minplus, [((1, 0), tangible(MIN, 0)), ((0, 1), tangible(MIN, 2))]
        )
        return f, g

    def test_eliminates_common_monomial(self, pair):
        f, g = pair
        report = ts.tropical_ideal_pair_check(f, g, monomial=(1, 0))

        assert report['holds']
        assert report['shifts'] == (0, 0)
        assert report['witness'].coef((1, 0)) is None
        assert report['witness'].coef((0, 1)) == tangible(MIN, 0)

    def test_monomial_must_be_common(self, pair):
        f, _ = pair
        minplus = core_systems_service.make_minplus()
        g = polynomial_service.make(minplus, [((0, 1), tangible(MIN, 1))])

        with pytest.raises(NoCommonMonomial):
            ts.tropical_ideal_pair_check(f, g, monomial=(1, 0))


class TestValuatedMatroids:
    def test_uniform(self):
        assert ts.valuated_matroid_check(ts.uniform_matroid(2, 3))['holds']

    def test_linear(self):
        c = ts.linear_matroid([[1, 0], [0, 1], [1, 1]])
        assert ts.valuated_matroid_check(c)['holds']

    def test_puiseux_columns(self):
        """Verifica v(e₁, e₃) = −val(t) = −1."""
        one, nil = PuiseuxSeries.constant(1), PuiseuxSeries()
        c = ts.puiseux_matroid([[one, nil], [nil, one], [one, t(1)]])

        assert c.v((0, 2)) == -1
        assert c.v((0, 1)) == 0
        assert ts.valuated_matroid_check(c)['holds']

    def test_asymmetric_candidate(self):
        c = ValuatedMatroidCandidate(ground=('a', 'b'), rank=2, values=(((0, 1), 0),))
        report = ts.valuated_matroid_check(c)

        assert not report['holds']
        assert report['axiom'] == 'symmetry'

    def test_empty_candidate(self):
        c = ValuatedMatroidCandidate(ground=('a', 'b'), rank=1)
        assert ts.valuated_matroid_check(c)['axiom'] == 'nontrivial'

    def test_size_limit(self, monkeypatch):
        monkeypatch.setattr(config, 'MATROID_MAX_RANK', 1)
        with pytest.raises(MatroidTooLarge):
            ts.valuated_matroid_check(ts.uniform_matroid(2, 3))

"""Tests de polinomios: aritmética, ∘-raíces y relación bend."""

from fractions import Fraction

import pytest

from models.elem import ghost, tangible, zero
from services.core_systems_service import NonInvertible, NotATriple
from services.polynomial_service import (
    PolynomialServiceException,
    polynomial_service,
)

ST = 'supertropical'
MP = 'maxplus'


def st_poly(sd, terms):
    return polynomial_service.make(sd, [((k,), tangible(ST, v)) for k, v in terms])


def mp_poly(sd, terms):
    return polynomial_service.make(sd, [((k,), tangible(MP, v)) for k, v in terms])


class TestArithmetic:
    def test_repeated_exponents_are_summed(self, maxplus):
        f = polynomial_service.make(
            maxplus, [((1,), tangible(MP, 1)), ((1,), tangible(MP, 2)), ((0,), zero(MP))]
        )

        assert f.terms == (((1,), tangible(MP, 2)),)

    def test_convolution(self, maxplus):
        """Verifica (x + 0)² = x² + x + 0 en max-plus."""
        f = mp_poly(maxplus, [(1, 0), (0, 0)])
        assert polynomial_service.conv_mul(maxplus, f, f) == mp_poly(
            maxplus, [(2, 0), (1, 0), (0, 0)]
        )

    def test_eval(self, maxplus):
        f = mp_poly(maxplus, [(1, 1), (0, 0)])
        assert polynomial_service.eval(maxplus, f, (tangible(MP, 2),)) == tangible(MP, 3)

    def test_laurent_eval_needs_invertible_point(self, maxplus):
        f = polynomial_service.make(maxplus, [((-1,), tangible(MP, 0))], laurent=True)
        with pytest.raises(NonInvertible):
            polynomial_service.eval(maxplus, f, (zero(MP),))

    def test_mismatched_shapes(self, maxplus, supertropical):
        with pytest.raises(PolynomialServiceException):
            polynomial_service.poly_add(
                maxplus, mp_poly(maxplus, [(0, 0)]), st_poly(supertropical, [(0, 0)])
            )


class TestRoots:
    def test_circ_roots(self, supertropical):
        """Verifica que x + 0 tenga la única ∘-raíz 0."""
        f = st_poly(supertropical, [(1, 0), (0, 0)])
        domain = [tangible(ST, v) for v in (-1, 0, 1)]

        assert polynomial_service.circ_roots(supertropical, f, domain) == [tangible(ST, 0)]

    def test_root_bound_linear(self, supertropical):
        report = polynomial_service.check_root_bound(
            supertropical, 1,
            [tangible(ST, 0), tangible(ST, 1)],
            [tangible(ST, v) for v in (-1, 0, 1, 2)],
        )

        assert report['holds']
        assert report['checked'] == 6

    @pytest.mark.parametrize('degree, checked', [(1, 20), (2, 100), (3, 500)])
    def test_root_bound_exhaustive(self, supertropical, degree, checked):
        """Verifica que ningún polinomio de grado n tenga más de n ∘-raíces tangibles."""
        report = polynomial_service.check_root_bound(
            supertropical, degree,
            [tangible(ST, v) for v in (0, 1, 2, 3)],
            [tangible(ST, v) for v in (-1, 0, 1, 2, 3)],
        )

        assert report['holds'], report['counterexample']
        assert report['checked'] == checked

    def test_root_bound_requires_triple(self, maxplus):
        with pytest.raises(NotATriple):
            polynomial_service.check_root_bound(maxplus, 1, [tangible(MP, 0)], [tangible(MP, 0)])

    def test_circ_supp(self, supertropical):
        f = polynomial_service.make(
            supertropical, [((1,), tangible(ST, 1)), ((0,), ghost(ST, 2))]
        )
        assert polynomial_service.circ_supp(supertropical, f) == [(1,)]

    def test_functional_tangibility(self, supertropical):
        f = st_poly(supertropical, [(1, 0), (0, 0)])
        report = polynomial_service.is_functionally_tangible(
            supertropical, f, [tangible(ST, v) for v in (-2, -1, 0, 1, 2)]
        )

        assert report['holds']
        assert report['exceptions'] == [tangible(ST, 0)]
        assert report['fraction'] == Fraction(4, 5)

    def test_circ_equiv_with_ghost_constant(self, supertropical):
        """Verifica x + 0 ≡_∘ x + 0° y que x + 1 no sea ∘-equivalente."""
        f = st_poly(supertropical, [(1, 0), (0, 0)])
        g = polynomial_service.make(
            supertropical, [((1,), tangible(ST, 0)), ((0,), ghost(ST, 0))]
        )
        h = st_poly(supertropical, [(1, 0), (0, 1)])
        domain = [tangible(ST, v) for v in (-2, -1, 0, 1, 2)]

        assert polynomial_service.circ_equiv(supertropical, f, g, domain)
        assert not polynomial_service.circ_equiv(supertropical, f, h, domain)

    def test_disjoint_root_sets(self, supertropical):
        """Verifica que las raíces del producto sean la unión de las raíces."""
        polys = [
            st_poly(supertropical, [(1, 0), (0, 0)]),
            st_poly(supertropical, [(1, 0), (0, 1)]),
        ]
        domain = [tangible(ST, v) for v in (0, 1, 2)]
        report = polynomial_service.disjoint_root_sets(supertropical, polys, domain)

        assert report['proper']
        assert report['holds']
        assert report['union_matches']
        assert report['non_root'] == tangible(ST, 2)


class TestBend:
    def test_identical_polynomials(self, maxplus):
        f = mp_poly(maxplus, [(2, 0), (0, 0)])
        assert polynomial_service.bend_equiv(maxplus, f, f) == {'equivalent': True, 'steps': 0}

    def test_dominated_monomial_is_added_in_one_step(self, maxplus):
        f = mp_poly(maxplus, [(2, 0), (0, 0)])
        g = mp_poly(maxplus, [(2, 0), (1, 0), (0, 0)])

        assert polynomial_service.bend_equiv(maxplus, f, g) == {'equivalent': True, 'steps': 1}

    def test_essential_monomial_breaks_equivalence(self, maxplus):
        f = mp_poly(maxplus, [(2, 0), (0, 0)])
        g = mp_poly(maxplus, [(2, 0), (1, 1), (0, 0)])

        assert polynomial_service.bend_equiv(maxplus, f, g) == {
            'equivalent': False, 'steps': None,
        }

    def test_generators(self, maxplus):
        f = mp_poly(maxplus, [(2, 0), (1, 0), (0, 0)])
        generators = polynomial_service.bend_generators(f)

        assert len(generators) == 3
        assert all(left == f and len(right) == 2 for left, right in generators)

    def test_supertropical_coefficients_rejected(self, supertropical):
        f = st_poly(supertropical, [(1, 0)])
        with pytest.raises(PolynomialServiceException):
            polynomial_service.bend_equiv(supertropical, f, st_poly(supertropical, [(0, 0)]))

    def test_forward_rewrite_keeps_bend_class(self, maxplus, rng):
        f = mp_poly(maxplus, [(2, 0), (0, 0)])
        g = polynomial_service.forward_rewrite(maxplus, f, rng, steps=1)

        assert polynomial_service.bend_equiv(maxplus, f, g)['equivalent']


class TestBendImpliesCircEquiv:
    def random_poly(self, sd, rng):
        exps = sorted({int(k) for k in rng.integers(0, 4, size=3)})
        return polynomial_service.make(
            sd, [((k,), tangible(MP, int(rng.integers(-3, 4)))) for k in exps], nvars=1
        )

    def test_forward_rewritten_pairs(self, maxplus, rng):
        """Verifica f ≡_∘ g en una malla de 50 puntos para 500 pares reescritos."""
        grid = [tangible(MP, Fraction(k, 4)) for k in range(-25, 25)]
        failures = []
        for _ in range(500):
            f = self.random_poly(maxplus, rng)
            g = polynomial_service.forward_rewrite(maxplus, f, rng)
            if not polynomial_service.circ_equiv(maxplus, f, g, grid):
                failures.append((f.to_dict(), g.to_dict()))

        assert failures == []

    def test_boolean_coefficients(self, boolean, rng):
        sd = boolean.to_descriptor()
        f = polynomial_service.make(sd, [((0,), sd.one), ((3,), sd.one)], nvars=1)
        g = polynomial_service.forward_rewrite(sd, f, rng, steps=6)

        assert polynomial_service.circ_equiv(sd, f, g, [sd.zero, sd.one])

"""Tests del servicio de sistemas base: portadores, predicados y sobrepaso."""

import json

import pytest
from hypothesis import given, strategies as st

from config import config
from models.elem import ghost, tangible, zero
from models.system import FinSys
from services.core_systems_service import (
    ActionOnly,
    CoreSystemsServiceException,
    EpsNotInvolutive,
    FinSysInvalid,
    core_systems_service,
)
from services.hyperfield_service import hyperfield_service
from services.symmetrization_service import symmetrization_service

ST = 'supertropical'

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)
st_elems = st.one_of(
    st.just(zero(ST)),
    rationals.map(lambda q: tangible(ST, q)),
    rationals.map(lambda q: ghost(ST, q)),
)


class TestSupertropical:
    def test_equal_tangibles_sum_to_ghost(self, supertropical):
        """Verifica que a + a sea el fantasma de a."""
        assert supertropical.add(tangible(ST, 3), tangible(ST, 3)) == ghost(ST, 3)
        assert core_systems_service.quasi_zero(supertropical, tangible(ST, 4)) == ghost(ST, 4)

    def test_larger_value_wins(self, supertropical):
        assert supertropical.add(tangible(ST, 2), ghost(ST, 1)) == tangible(ST, 2)
        assert supertropical.add(zero(ST), ghost(ST, 1)) == ghost(ST, 1)

    def test_ghost_factor_makes_ghost_product(self, supertropical):
        assert supertropical.mul(tangible(ST, 1), ghost(ST, 2)) == ghost(ST, 3)
        assert supertropical.mul(zero(ST), ghost(ST, 2)) == zero(ST)

    @given(st_elems, st_elems, st_elems)
    def test_addition_is_commutative_and_associative(self, x, y, z):
        """Verifica las leyes aditivas sobre elementos arbitrarios."""
        sd = core_systems_service.make_supertropical()
        assert sd.add(x, y) == sd.add(y, x)
        assert sd.add(sd.add(x, y), z) == sd.add(x, sd.add(y, z))

    @given(st_elems, st_elems, st_elems)
    def test_multiplication_distributes(self, x, y, z):
        sd = core_systems_service.make_supertropical()
        assert sd.mul(x, sd.add(y, z)) == sd.add(sd.mul(x, y), sd.mul(x, z))


class TestTabulate:
    def test_chain3_order_and_indices(self, chain3):
        """Verifica el orden canónico: tangibles, fantasmas y cero."""
        assert chain3.names == ('0', '0°', 'zero')
        assert chain3.zero_idx == 2
        assert chain3.one_idx == 0
        assert chain3.tangible_idxs == frozenset({0})
        assert chain3.is_triple

    def test_fragment_not_closed_is_rejected(self):
        """Verifica que un fragmento no cerrado bajo · se rechace."""
        with pytest.raises(FinSysInvalid) as exc_info:
            core_systems_service.tabulate(core_systems_service.make_supertropical([0, 1]))
        assert exc_info.value.axiom == 'closure'

    def test_product_of_booleans(self, boolean):
        product = core_systems_service.make_product(boolean, boolean)

        assert product.size == 4
        assert product.name == 'booleanxboolean'
        assert product.names[product.one_idx] == '(1,1)'
        assert [product.names[t] for t in product.tangible_idxs] == ['(1,1)']


class TestStructuralPredicates:
    def test_supertropical_fragment_predicates(self):
        """Verifica negación única, meta-tangibilidad y bipotencia en {0, ±1}."""
        sd = core_systems_service.make_supertropical([-1, 0, 1])

        assert core_systems_service.check_unique_negation(sd)['holds']
        assert core_systems_service.check_meta_tangible(sd)['holds']
        assert core_systems_service.check_bipotent(sd)['holds']

    def test_maxplus_fails_unique_negation(self):
        """Verifica que en max-plus todo sea cuasi-cero y falle la unicidad."""
        result = core_systems_service.check_unique_negation(
            core_systems_service.make_maxplus([0, 1])
        )

        assert not result['holds']
        assert result['witness'] is not None

    def test_parametric_carrier_requires_fragment(self, supertropical):
        with pytest.raises(CoreSystemsServiceException):
            core_systems_service.check_bipotent(supertropical)

    def test_triple_checks(self, chain3):
        assert core_systems_service.check_triple(chain3)['is_triple']

        report = core_systems_service.check_triple(core_systems_service.make_maxplus([0]))
        assert not report['is_triple']
        assert report['tangible_quasi_zeros'] == [tangible('maxplus', 0)]

    def test_semidomain(self, supertropical, boolean):
        assert core_systems_service.is_semidomain(supertropical)['holds']

        product = core_systems_service.make_product(boolean, boolean)
        assert not core_systems_service.is_semidomain(product)['holds']


class TestHeight:
    def test_supertropical_heights(self, supertropical):
        """Verifica que los fantasmas tengan altura 2 y los tangibles 1."""
        assert core_systems_service.height(supertropical, zero(ST)) == 0
        assert core_systems_service.height(supertropical, tangible(ST, 3)) == 1
        assert core_systems_service.height(supertropical, ghost(ST, 3)) == 2

    def test_chain3_ghost_height(self, chain3):
        assert core_systems_service.height(chain3, chain3.elem(1)) == 2

    def test_bound_must_be_positive(self, supertropical):
        with pytest.raises(CoreSystemsServiceException):
            core_systems_service.height(supertropical, ghost(ST, 1), bound=0)


class TestCharacteristicSubtriple:
    def test_boolean(self, boolean):
        assert core_systems_service.characteristic_subtriple(boolean)['tag'] == 'boolean'

    def test_supertropical_is_krasner_like(self, supertropical):
        """Verifica que 𝟙 genere {0, 0°} con (−)𝟙 = 𝟙."""
        result = core_systems_service.characteristic_subtriple(supertropical)

        assert result['tag'] == 'krasner-like'
        assert result['elements'] == [tangible(ST, 0), ghost(ST, 0)]
        assert result['subsystem'].size == 3

    def test_integers_mod_three(self):
        """Verifica que en ℤ/3 se tenga e = 𝟘 y por tanto e + 𝟙 = 𝟙."""
        fs = FinSys(
            names=('0', '1', '2'),
            add_table=((0, 1, 2), (1, 2, 0), (2, 0, 1)),
            mul_table=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
            zero_idx=0,
            one_idx=1,
            tangible_idxs=frozenset({1, 2}),
            neg_table=(0, 2, 1),
            name='z3',
        )
        assert core_systems_service.validate_finsys(fs)['valid']

        result = core_systems_service.characteristic_subtriple(fs)
        assert result['tag'] == 'integer-like'
        assert result['subsystem'].size == 3

    def test_naturals_have_no_finite_subtriple(self, monkeypatch):
        """Verifica que ℕ no se confunda con Krasner: e = 2 y e + 𝟙 = 3 ≠ e."""
        monkeypatch.setattr(config, 'CLOSURE_MAX_ELEMENTS', 16)
        nat = core_systems_service.make_nat()
        one = nat.one
        e = nat.add(one, nat.negate(one))

        assert e == tangible(core_systems_service.NAT, 2)
        assert nat.add(e, one) not in (one, e)
        with pytest.raises(CoreSystemsServiceException):
            core_systems_service.characteristic_subtriple(nat)

    def test_naturals_fragment_is_other(self):
        """Verifica que un cociente finito de ℕ con (−) = identidad no sea Krasner."""
        fs = FinSys(
            names=('0', '1', '2', '3'),
            add_table=((0, 1, 2, 3), (1, 2, 3, 3), (2, 3, 3, 3), (3, 3, 3, 3)),
            mul_table=((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 3), (0, 3, 3, 3)),
            zero_idx=0,
            one_idx=1,
            tangible_idxs=frozenset({1}),
            neg_table=(0, 1, 2, 3),
            name='nat-trunc',
        )
        assert core_systems_service.validate_finsys(fs)['valid']
        assert core_systems_service.characteristic_subtriple(fs)['tag'] == 'other'

    def test_symmetrized_boolean_is_sign_like(self, boolean):
        sym = symmetrization_service.symmetrize(boolean.to_descriptor())

        assert core_systems_service.characteristic_subtriple(sym)['tag'] == 'sign-like'

    def test_signs_hyperfield_system_is_sign_like(self):
        """Verifica que S(signos) tenga 𝟙 + 𝟙 = 𝟙 y (−)𝟙 ≠ 𝟙."""
        s_signs = hyperfield_service.build_S_of_H(hyperfield_service.make_signs())
        result = core_systems_service.characteristic_subtriple(s_signs)

        assert result['tag'] == 'sign-like'
        assert len(result['elements']) == 3

    def test_char4_like(self, fixtures_dir):
        """Verifica e + 𝟙 = (−)𝟙 y e + e = 2 = (−)2 en un sistema no bipotente."""
        data = json.loads((fixtures_dir / 'char4.json').read_text(encoding='utf-8'))
        fs = FinSys.from_dict(data)
        assert core_systems_service.validate_finsys(fs)['valid']
        assert fs.is_triple

        sd = fs.to_descriptor()
        one = sd.one
        e = sd.add(one, sd.negate(one))
        two = sd.add(one, one)

        assert sd.add(e, one) == sd.negate(one)
        assert sd.add(e, e) == sd.negate(two)
        assert sd.add(e, two) == e
        assert sd.add(sd.add(e, e), e) == e
        assert core_systems_service.characteristic_subtriple(fs)['tag'] == 'char-4-like'


class TestSurpassing:
    def test_chain3_is_t_surpassing_partial_order(self, chain3):
        report = core_systems_service.check_surpassing_axioms(chain3)

        assert report['holds']
        assert report['partial_order']
        assert report['t_surpassing']

    def test_supertropical_sampled(self, supertropical, rng):
        report = core_systems_service.check_surpassing_axioms(supertropical, rng, samples=10_000)

        assert report['holds']
        assert report['t_surpassing']

    def test_maxplus_fails_axiom_v(self, maxplus, rng):
        """Verifica que tangibles distintos se sobrepasen en max-plus."""
        report = core_systems_service.check_surpassing_axioms(maxplus, rng, samples=500)

        assert not report['holds']
        assert not report['axioms']['v']['holds']

    def test_null_set_of_chain3(self, chain3):
        """Verifica 𝒜_Null = {0°, zero} y su coincidencia con 𝒜^∘."""
        null = core_systems_service.compute_null_set(chain3)
        assert [chain3.names[e.value] for e in null] == ['0°', 'zero']

        report = core_systems_service.check_null_set_consistency(chain3)
        assert report['matches_zero_criterion']
        assert report['equals_quasi_zeros']
        assert core_systems_service.check_precpr_coincidence(chain3)['coincide']

    def test_circ_surpass_table_of_chain3(self, chain3):
        report = core_systems_service.circ_surpass_table(chain3)

        assert report['matches']
        assert report['table'] == [
            [True, True, False],
            [False, True, False],
            [False, True, True],
        ]


class TestNegationFromEpsilon:
    def test_non_involutive_epsilon(self, boolean):
        with pytest.raises(EpsNotInvolutive):
            core_systems_service.negation_from_epsilon(boolean, boolean.elem(0))

    def test_unit_epsilon_on_supertropical(self, supertropical):
        sd = core_systems_service.negation_from_epsilon(supertropical, tangible(ST, 0))

        assert sd.name == 'supertropical[eps]'
        assert sd.negate(ghost(ST, 2)) == ghost(ST, 2)

    def test_action_only_rejects_ghost_scalar(self, supertropical):
        action = core_systems_service.restrict_to_action(supertropical)

        assert action.mul(tangible(ST, 1), ghost(ST, 2)) == ghost(ST, 3)
        with pytest.raises(ActionOnly):
            action.mul(ghost(ST, 1), tangible(ST, 2))


class TestLaws:
    def test_chain3_laws(self, chain3):
        assert core_systems_service.check_system_laws(chain3)['holds']

    def test_supertropical_sampled_laws(self, supertropical, rng):
        report = core_systems_service.check_system_laws(supertropical, rng, samples=500)

        assert report['holds']
        assert report['violations'] == {}

    def test_validate_boolean(self, boolean):
        result = core_systems_service.validate_finsys(boolean)

        assert result['valid']
        assert result['size'] == 2

    def test_validate_non_involutive(self):
        """Verifica que una negación de orden 3 se rechace primero."""
        fs = FinSys(
            names=('0', '1', '2'),
            add_table=((0, 1, 2), (1, 1, 2), (2, 2, 2)),
            mul_table=((0, 0, 0), (0, 1, 2), (0, 2, 2)),
            zero_idx=0,
            one_idx=1,
            tangible_idxs=frozenset({1}),
            neg_table=(1, 2, 0),
            name='rotation',
        )
        with pytest.raises(FinSysInvalid) as exc_info:
            core_systems_service.validate_finsys(fs)
        assert exc_info.value.axiom == 'negation-involutive'

    def test_validate_non_commutative_sum(self):
        fs = FinSys(
            names=('0', '1'),
            add_table=((0, 1), (0, 1)),
            mul_table=((0, 0), (0, 1)),
            zero_idx=0,
            one_idx=1,
            tangible_idxs=frozenset({1}),
            neg_table=(0, 1),
        )
        with pytest.raises(FinSysInvalid) as exc_info:
            core_systems_service.validate_finsys(fs)
        assert exc_info.value.axiom == 'add-commutative'

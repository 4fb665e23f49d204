"""Tests del servicio de hipercuerpos: axiomas, S(H), funtores y valoraciones."""

import pytest

from models.elem import Elem, ElemKind, tangible, zero
from services.core_systems_service import core_systems_service
from services.hyperfield_service import (
    ImageUndefined,
    NotHomomorphism,
    ZeroDivisor,
    hf_neginf,
    hf_val,
    hyperfield_service,
)


def set_elem(h, *idxs):
    return Elem(f"S({h.name})", ElemKind.SET, frozenset(idxs))


def closure_of_hypersums(h):
    """Cierre por BFS de los singletons bajo suma y producto de conjuntos."""

    def set_add(A, B):
        return frozenset().union(*(h.hyperadd(a, b) for a in A for b in B))

    def set_mul(A, B):
        return frozenset(h.mul(a, b) for a in A for b in B)

    reached = {frozenset({i}) for i in h.elements}
    frontier = list(reached)
    while frontier:
        A = frontier.pop()
        for B in list(reached):
            for C in (set_add(A, B), set_mul(A, B)):
                if C not in reached:
                    reached.add(C)
                    frontier.append(C)
    return reached, set_add, set_mul


class TestHyperfieldAxioms:
    @pytest.mark.parametrize('factory', ['make_krasner', 'make_signs'])
    def test_finite_hyperfields(self, factory):
        """Verifica los axiomas de hipercuerpo en Krasner y signos."""
        h = getattr(hyperfield_service, factory)()
        report = hyperfield_service.check_hyperfield(h)

        assert report['holds'], report['violations']

    def test_tropical_sampled(self, rng):
        h = hyperfield_service.make_tropical_hyperfield()
        assert hyperfield_service.check_hyperfield(h, rng, samples=500)['holds']

    def test_krasner_one_plus_one(self):
        h = hyperfield_service.make_krasner()
        assert hyperfield_service.hypersum(h, h.elem(1), h.elem(1)) == set_elem(h, 0, 1)


class TestSOfH:
    def test_krasner_system(self):
        """Verifica que S(K) tenga {0}, {1} y {0,1} y sea un triple."""
        h = hyperfield_service.make_krasner()
        sd = hyperfield_service.build_S_of_H(h)

        assert [sd.label(e) for e in sd.elements] == ['{0}', '{1}', '{0,1}']
        assert sd.is_triple
        assert sd.add(set_elem(h, 1), set_elem(h, 1)) == set_elem(h, 0, 1)

    def test_signs_system_has_four_elements(self):
        h = hyperfield_service.make_signs()
        sd = hyperfield_service.build_S_of_H(h)

        assert len(sd.elements) == 4
        assert sd.surpass(set_elem(h, 1), set_elem(h, 0, 1, 2))
        assert not sd.surpass(set_elem(h, 0, 1, 2), set_elem(h, 1))

    @pytest.mark.parametrize('factory', ['make_krasner', 'make_signs'])
    def test_tables_match_closure_oracle(self, factory):
        """Verifica elementos, suma, producto y negación de S(H) contra el cierre por BFS."""
        h = getattr(hyperfield_service, factory)()
        sd = hyperfield_service.build_S_of_H(h)
        reached, set_add, set_mul = closure_of_hypersums(h)

        assert {x.value for x in sd.elements} == reached
        for x in sd.elements:
            assert sd.negate(x).value == frozenset(h.neg(a) for a in x.value)
            for y in sd.elements:
                assert sd.add(x, y).value == set_add(x.value, y.value)
                assert sd.mul(x, y).value == set_mul(x.value, y.value)

    def test_functor_c_name(self):
        sd = hyperfield_service.functor_c(hyperfield_service.make_krasner())
        assert sd.name == 'c(krasner)'

    def test_functor_a_members_are_singletons(self):
        h = hyperfield_service.make_signs()
        pair = hyperfield_service.functor_a(h)

        assert set(pair.members) == {set_elem(h, 1), set_elem(h, 2)}


class TestFunctors:
    def test_functor_t_rejects_zero_divisors(self, boolean):
        product = core_systems_service.make_product(boolean, boolean)
        with pytest.raises(ZeroDivisor):
            hyperfield_service.functor_t(product.to_descriptor())

    def test_functor_t_on_boolean(self, boolean):
        pair = hyperfield_service.functor_t(boolean.to_descriptor())
        assert pair.members == (boolean.elem(1),)

    def test_functor_e_on_boolean(self, boolean):
        """Verifica que e(t(𝔹)) tenga (−) identidad y sea sólo pseudo-triple."""
        sd = hyperfield_service.functor_e(hyperfield_service.functor_t(boolean.to_descriptor()))

        assert sd.name == 'e(boolean)'
        assert sd.negate(boolean.elem(1)) == boolean.elem(1)
        assert not sd.is_triple


class TestMorphisms:
    def test_identity_on_signs(self):
        h = hyperfield_service.make_signs()
        result = hyperfield_service.hyperfield_morphism_map(
            {'0': '0', '1': '1', '-1': '-1'}, h, h
        )

        assert result['preserves_add']
        assert result['preserves_mul']
        assert result['monotone']

    def test_sign_collapse_is_not_well_defined(self):
        """Verifica que {1} = 1 = 1 + 1 en S(signos) tenga imágenes {1} y {0,1} en S(K)."""
        signs = hyperfield_service.make_signs()
        krasner = hyperfield_service.make_krasner()

        with pytest.raises(ImageUndefined) as exc_info:
            hyperfield_service.hyperfield_morphism_map(
                {'0': '0', '1': '1', '-1': '1'}, signs, krasner
            )
        assert 'witness' in exc_info.value.details

    def test_krasner_identity_is_strict(self):
        h = hyperfield_service.make_krasner()
        result = hyperfield_service.hyperfield_morphism_map({'0': '0', '1': '1'}, h, h)

        assert result['strict']
        assert result['elementwise']
        assert result['map'][set_elem(h, 0, 1)] == set_elem(h, 0, 1)

    def test_non_homomorphism(self):
        krasner = hyperfield_service.make_krasner()
        signs = hyperfield_service.make_signs()
        with pytest.raises(NotHomomorphism):
            hyperfield_service.hyperfield_morphism_map({'0': '0', '1': '-1'}, krasner, signs)


class TestTropical:
    def test_isomorphism_with_supertropical(self, rng):
        assert hyperfield_service.check_tropical_isomorphism(rng, samples=1000)['holds']

    def test_round_trip_of_labels(self):
        ghost_like = hyperfield_service.supertropical_to_tropical(
            core_systems_service.make_supertropical().add(
                tangible('supertropical', 2), tangible('supertropical', 2)
            )
        )
        assert ghost_like.kind == ElemKind.INTERVAL
        assert hyperfield_service.tropical_to_supertropical(ghost_like).kind == ElemKind.GHOST

    def test_maxplus_identity_is_valuation(self, maxplus):
        """Verifica que la lectura directa de max-plus sea una valoración."""
        def nu(x):
            return hf_neginf() if x.kind == ElemKind.ZERO else hf_val(x.value)

        elements = [zero('maxplus')] + [tangible('maxplus', v) for v in (-2, 0, 1)]
        assert hyperfield_service.check_valuation(maxplus, nu, elements)['holds']

    def test_constant_valuation_is_trivial(self, maxplus):
        elements = [zero('maxplus'), tangible('maxplus', 1)]
        report = hyperfield_service.check_valuation(maxplus, lambda x: hf_neginf(), elements)

        assert report['violations'] == [('nontrivial', ())]

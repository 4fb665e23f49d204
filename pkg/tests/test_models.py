"""
Tests para los modelos de datos.
"""

import json
from fractions import Fraction

import pytest

from models.congruence import Congruence
from models.elem import Elem, ElemKind, ghost, pair, tangible, zero
from models.matrix import Matrix
from models.matroid import ValuatedMatroidCandidate
from models.polynomial import Polynomial
from models.puiseux import PuiseuxSeries
from models.system import FinSys
from utils.rationals import format_rational, parse_rational

ST = 'supertropical'


class TestRationals:
    """Tests para los racionales exactos."""

    def test_parse_forms(self):
        assert parse_rational('3/6') == Fraction(1, 2)
        assert parse_rational(4) == Fraction(4)
        assert format_rational(Fraction(-3, 4)) == '-3/4'
        assert format_rational(Fraction(6, 3)) == '2'

    @pytest.mark.parametrize('raw', ['0.5', '1e3', '', '1/0', True])
    def test_rejects_inexact_values(self, raw):
        """Verifica que decimales, vacíos y booleanos se rechacen."""
        with pytest.raises(ValueError):
            parse_rational(raw)


class TestElem:
    """Tests para la clase Elem."""

    def test_rational_kinds_are_normalized(self):
        assert tangible(ST, '2/4').value == Fraction(1, 2)
        assert ghost(ST, 3).label() == '3°'

    def test_floats_are_rejected(self):
        with pytest.raises(ValueError):
            tangible(ST, 0.5)

    def test_zero_has_no_value(self):
        assert zero(ST).label() == 'zero'
        with pytest.raises(ValueError):
            Elem(ST, ElemKind.ZERO, 1)

    def test_pair_components_share_carrier(self):
        with pytest.raises(ValueError):
            pair('sym', tangible(ST, 1), tangible('maxplus', 1))

    def test_sort_order(self):
        """Verifica tangibles antes que fantasmas y éstos antes que el cero."""
        elems = [zero(ST), ghost(ST, 0), tangible(ST, 1), tangible(ST, 0)]
        ordered = sorted(elems, key=lambda e: e.sort_key())

        assert ordered == [tangible(ST, 0), tangible(ST, 1), ghost(ST, 0), zero(ST)]

    def test_to_dict(self):
        assert ghost(ST, Fraction(1, 3)).to_dict() == {'kind': 'ghost', 'value': '1/3'}
        assert zero(ST).to_dict() == {'kind': 'zero'}
        assert pair('sym', tangible(ST, 1), zero(ST)).to_dict() == {
            'kind': 'pair',
            'pos': {'kind': 'tangible', 'value': '1'},
            'neg': {'kind': 'zero'},
        }


class TestFinSys:
    """Tests para la clase FinSys."""

    def test_from_dict(self, fixtures_dir):
        data = json.loads((fixtures_dir / 'boolean.json').read_text(encoding='utf-8'))
        fs = FinSys.from_dict(data)

        assert fs.name == 'boolean'
        assert fs.size == 2
        assert fs.one_idx == 1
        assert fs.add(1, 1) == 1
        assert fs.to_dict() == data

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            FinSys.from_dict({
                'names': ['0'], 'zero': '0', 'add': [['x']], 'mul': [['0']],
                'tangibles': [], 'neg': {'0': '0'},
            })

    def test_missing_fields(self):
        with pytest.raises(ValueError) as exc_info:
            FinSys.from_dict({'names': ['0']})
        assert 'zero' in str(exc_info.value)

    def test_duplicate_names(self):
        with pytest.raises(ValueError):
            FinSys(
                names=('a', 'a'),
                add_table=((0, 1), (1, 1)),
                mul_table=((0, 0), (0, 1)),
                zero_idx=0,
                one_idx=1,
                tangible_idxs=frozenset({1}),
                neg_table=(0, 1),
            )

    def test_explicit_mode_needs_pairs(self):
        with pytest.raises(ValueError):
            FinSys(
                names=('0',),
                add_table=((0,),),
                mul_table=((0,),),
                zero_idx=0,
                one_idx=None,
                tangible_idxs=frozenset(),
                neg_table=(0,),
                surpass_mode='explicit',
            )

    def test_chain3_quasi_zeros(self, chain3):
        assert chain3.quasi_zeros == frozenset({1, 2})
        assert chain3.surpasses(0, 1)
        assert not chain3.surpasses(1, 0)


class TestMatrix:
    """Tests para la clase Matrix."""

    def test_square_required(self):
        with pytest.raises(ValueError):
            Matrix(ST, ((tangible(ST, 1), tangible(ST, 2)),))

    def test_minor_and_transpose(self):
        A = Matrix(ST, tuple(tuple(tangible(ST, v) for v in row) for row in [[1, 2], [3, 4]]))

        assert A.minor(0, 0).rows == ((tangible(ST, 4),),)
        assert A.transpose().entry(0, 1) == tangible(ST, 3)


class TestPolynomial:
    """Tests para la clase Polynomial."""

    def test_terms_are_sorted(self):
        f = Polynomial(ST, 1, (((2,), tangible(ST, 0)), ((0,), tangible(ST, 1))))

        assert f.support() == [(0,), (2,)]
        assert f.coef((2,)) == tangible(ST, 0)
        assert f.coef((1,)) is None

    def test_negative_exponent_requires_laurent(self):
        with pytest.raises(ValueError):
            Polynomial(ST, 1, (((-1,), tangible(ST, 0)),))
        assert Polynomial(ST, 1, (((-1,), tangible(ST, 0)),), laurent=True).nvars == 1

    def test_mixed_carriers(self):
        with pytest.raises(ValueError):
            Polynomial(ST, 1, (((0,), tangible('maxplus', 0)),))


class TestPuiseuxSeries:
    """Tests para la clase PuiseuxSeries."""

    def test_cancellation_drops_terms(self):
        p = PuiseuxSeries.from_terms([(0, 1), (1, 2)])
        q = PuiseuxSeries.from_terms([(0, -1)])

        assert (p + q).terms == ((Fraction(1), Fraction(2)),)
        assert (p + q).order == 1

    def test_label(self):
        p = PuiseuxSeries.from_terms([(Fraction(1, 2), 3), (1, 1)])
        assert p.label() == '3t^(1/2) + t'

    def test_only_monomials_invert(self):
        assert PuiseuxSeries.monomial(2, 1).inverse() == PuiseuxSeries.monomial(
            Fraction(1, 2), -1
        )
        assert PuiseuxSeries.from_terms([(0, 1), (1, 1)]).inverse() is None

    def test_dict_format(self):
        p = PuiseuxSeries.from_terms([(Fraction(1, 3), 2)])

        assert p.to_dict() == {'terms': [{'exp': '1/3', 'coef': '2'}]}
        assert PuiseuxSeries.from_dict(p.to_dict()) == p

    def test_increasing_exponents(self):
        with pytest.raises(ValueError):
            PuiseuxSeries(((1, 1), (0, 1)))


class TestCongruence:
    """Tests para la clase Congruence."""

    def test_labels_must_be_canonical(self, chain3):
        with pytest.raises(ValueError):
            Congruence(chain3, (1, 1, 2))

    def test_classes_and_pairs(self, chain3):
        C = Congruence(chain3, (0, 0, 2))

        assert C.classes == ((0, 1), (2,))
        assert (1, 0) in C.pairs
        assert not C.is_full


class TestValuatedMatroidCandidate:
    """Tests para la clase ValuatedMatroidCandidate."""

    def test_values_are_normalized(self):
        c = ValuatedMatroidCandidate(ground=('a', 'b'), rank=1, values=(((1,), '1/2'), ((0,), 0)))

        assert c.values == (((0,), Fraction(0)), ((1,), Fraction(1, 2)))
        assert c.v((1,)) == Fraction(1, 2)

    def test_invalid_tuples(self):
        with pytest.raises(ValueError):
            ValuatedMatroidCandidate(ground=('a',), rank=1, values=(((3,), 0),))

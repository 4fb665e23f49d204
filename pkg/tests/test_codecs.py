"""Tests de la conversión JSON ↔ modelos."""

from fractions import Fraction

import pytest

from models.elem import ghost, pair, tangible, zero
from services.symmetrization_service import symmetrization_service
from utils.codecs import (
    CodecError,
    Encoder,
    dumps,
    load_json,
    parse_elem,
    parse_finsys,
    parse_matrix,
    parse_polynomial,
)

ST = 'supertropical'


class TestLoadJson:
    def test_inline(self):
        assert load_json('{"a": 1}') == {'a': 1}

    def test_file(self, fixtures_dir):
        data = load_json(str(fixtures_dir / 'boolean.json'))
        assert data['names'] == ['0', '1']

    def test_missing_file(self, tmp_path):
        with pytest.raises(CodecError):
            load_json(str(tmp_path / 'nada.json'))

    def test_invalid_json(self):
        with pytest.raises(CodecError):
            load_json('{"a": }')


class TestParseElem:
    def test_rational_shorthands(self, supertropical):
        """Verifica "p/q", "p/q°" y "zero" sobre el supertropical."""
        assert parse_elem(supertropical, '1/2') == tangible(ST, Fraction(1, 2))
        assert parse_elem(supertropical, '3°') == ghost(ST, 3)
        assert parse_elem(supertropical, 'zero') == zero(ST)
        assert parse_elem(supertropical, {'kind': 'ghost', 'value': '2'}) == ghost(ST, 2)

    def test_finite_names(self, boolean):
        sd = boolean.to_descriptor()

        assert parse_elem(sd, '1') == boolean.elem(1)
        assert parse_elem(sd, {'kind': 'symbol', 'value': '0'}) == boolean.elem(0)
        with pytest.raises(CodecError):
            parse_elem(sd, 'x')

    def test_pairs_over_base(self, supertropical):
        sym = symmetrization_service.symmetrize(supertropical)
        literal = {'kind': 'pair', 'pos': '1', 'neg': 'zero'}

        assert parse_elem(sym, literal) == pair(sym.carrier_id, tangible(ST, 1), zero(ST))

    def test_decimals_rejected(self, supertropical):
        with pytest.raises(CodecError):
            parse_elem(supertropical, '0.5')

    def test_missing_kind(self, supertropical):
        with pytest.raises(CodecError):
            parse_elem(supertropical, {'value': '1'})


class TestParseStructures:
    def test_polynomial_sums_repeated_exponents(self, supertropical):
        f = parse_polynomial(supertropical, {
            'terms': [{'exp': [1], 'coef': '1'}, {'exp': [1], 'coef': '1'}],
        })

        assert f.nvars == 1
        assert f.coef((1,)) == ghost(ST, 1)

    def test_polynomial_needs_terms(self, supertropical):
        with pytest.raises(CodecError):
            parse_polynomial(supertropical, {'nvars': 1})

    def test_matrix(self, supertropical, fixtures_dir):
        A = parse_matrix(supertropical, load_json(str(fixtures_dir / 'st_matrix.json')))

        assert A.n == 2
        assert A.entry(1, 0) == tangible(ST, 3)

    def test_matrix_size_mismatch(self, supertropical):
        with pytest.raises(CodecError):
            parse_matrix(supertropical, {'n': 3, 'rows': [['1']]})

    def test_finsys_errors_become_codec_errors(self):
        with pytest.raises(CodecError):
            parse_finsys({'names': ['0']})


class TestEncoder:
    def test_finite_elements_use_names(self, chain3):
        encoder = Encoder(chain3.to_descriptor())
        assert encoder.encode([chain3.elem(1)]) == [{'kind': 'symbol', 'value': '0°'}]

    def test_rationals_and_sets(self):
        encoder = Encoder()

        assert encoder.encode({'q': Fraction(2, 6)}) == {'q': '1/3'}
        assert encoder.encode(frozenset({3, 1, 2})) == [1, 2, 3]
        assert encoder.encode((1, (2,))) == [1, [2]]

    def test_elem_keys(self, supertropical):
        encoder = Encoder(supertropical)
        assert encoder.encode({tangible(ST, 1): True}) == {'1': True}

    def test_unserializable(self):
        with pytest.raises(CodecError):
            Encoder().encode(object())

    def test_dumps_is_canonical(self):
        assert dumps({'b': 1, 'a': [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'

"""Tests de la línea de comandos: salidas JSON y códigos de salida."""

import json
from pathlib import Path

import pytest

from cli import EXIT_OK, EXIT_PRECONDITION, main
from config import config


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestCoreCommands:
    def test_info(self, capsys):
        code, payload = run(capsys, 'info')

        assert code == EXIT_OK
        assert payload['success']
        assert 'chain3' in payload['data']['builtins']['finite']

    def test_sys_check_boolean(self, capsys, fixtures_dir):
        code, payload = run(capsys, 'sys-check', str(fixtures_dir / 'boolean.json'))

        assert code == EXIT_OK
        assert payload['data']['validation']['valid']
        assert payload['data']['laws']['holds']

    def test_sys_check_non_involutive(self, capsys, fixtures_dir):
        """Verifica que una negación de orden 3 termine con código 2."""
        code, payload = run(capsys, 'sys-check', str(fixtures_dir / 'rotation.json'))

        assert code == EXIT_PRECONDITION
        assert not payload['success']
        assert payload['error']['type'] == 'FinSysInvalid'
        assert 'negation-involutive' in json.dumps(payload['error'])

    def test_classify_boolean(self, capsys):
        code, payload = run(capsys, '--system', 'boolean', 'classify-char')

        assert code == EXIT_OK
        assert payload['data']['tag'] == 'boolean'

    def test_product_requires_finite_systems(self, capsys):
        code, payload = run(capsys, 'product', 'supertropical', 'boolean')

        assert code == EXIT_PRECONDITION
        assert payload['error']['type'] == 'CodecError'


class TestLinalgCommands:
    def test_det(self, capsys, fixtures_dir):
        """Verifica det [[1,2],[3,4]] = 5° en el supertropical por defecto."""
        code, payload = run(capsys, 'det', str(fixtures_dir / 'st_matrix.json'))

        assert code == EXIT_OK
        assert payload['data'] == {'kind': 'ghost', 'value': '5'}

    def test_det_with_bad_row(self, capsys, fixtures_dir):
        code, payload = run(capsys, 'det', str(fixtures_dir / 'st_matrix.json'), '--row', '5')

        assert code == EXIT_PRECONDITION
        assert payload['error']['type'] == 'LinalgServiceException'

    def test_inline_matrix_text_format(self, capsys):
        code = main(['--format', 'text', 'det', '{"n": 1, "rows": [["7"]]}'])
        out = capsys.readouterr().out

        assert code == EXIT_OK
        assert 'tangible' in out
        assert '7' in out


class TestPolynomialCommands:
    def test_bend_equiv_reflexive(self, capsys, fixtures_dir):
        f = str(fixtures_dir / 'bend_f.json')
        code, payload = run(capsys, 'bend-equiv', f, f)

        assert code == EXIT_OK
        assert payload['data'] == {'equiv': True, 'steps': 0}


class TestGlobalOptions:
    def test_non_positive_bound(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(['--bound', '0', 'info'])
        assert exc_info.value.code == EXIT_PRECONDITION

    def test_invalid_configuration(self, capsys, monkeypatch):
        monkeypatch.setattr(config, 'DET_MAX_N', 0)
        code, payload = run(capsys, 'info')

        assert code == EXIT_PRECONDITION
        assert payload['error']['type'] == 'ConfigError'


class TestCongruenceCommands:
    def test_quotient_projection(self, capsys):
        code, payload = run(capsys, '--system', 'chain3', 'cong', 'quotient', '[["0", "0°"]]')

        assert code == EXIT_OK
        assert payload['data']['projection'] == {'0': '[0]', '0°': '[0]', 'zero': 'zero'}


GOLDEN = Path(__file__).resolve().parent / 'golden'


class TestGoldenOutputs:
    @pytest.mark.parametrize('golden, argv', [
        ('det_supertropical.json', ['det', 'st_matrix.json']),
        ('bend_equiv_reflexive.json', ['bend-equiv', 'bend_f.json', 'bend_f.json']),
    ])
    def test_byte_stable_output(self, capsys, fixtures_dir, golden, argv):
        """Verifica que la salida JSON coincida byte a byte con el archivo dorado."""
        args = [argv[0]] + [str(fixtures_dir / a) for a in argv[1:]]
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == (GOLDEN / golden).read_text(encoding='utf-8')

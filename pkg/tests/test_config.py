"""Tests de la configuración Singleton."""

from config import Config, config


class TestConfig:
    def test_singleton(self):
        """Verifica que Config() devuelva siempre la misma instancia."""
        assert Config() is config

    def test_defaults_are_valid(self):
        valid, errors = config.validate()

        assert valid
        assert errors == []

    def test_non_positive_bound(self, monkeypatch):
        monkeypatch.setattr(config, 'DET_MAX_N', 0)
        valid, errors = config.validate()

        assert not valid
        assert 'DET_MAX_N debe ser positivo' in errors

    def test_unknown_log_level(self, monkeypatch):
        monkeypatch.setattr(config, 'LOG_LEVEL', 'LOUD')
        assert not config.validate()[0]

    def test_to_dict_formats_rationals(self):
        data = config.to_dict()

        assert isinstance(data['FUNCTIONAL_TANGIBLE_THRESHOLD'], str)
        assert data['LATTICE_MAX_ELEMENTS'] == config.LATTICE_MAX_ELEMENTS

"""Configuración común de pytest: carga automática de variables desde .env.

Este archivo se ejecuta antes de los tests y asegura que las cotas
definidas en .env estén disponibles vía os.getenv. Además expone los
sistemas de uso frecuente como fixtures.
"""

from pathlib import Path

import numpy as np
import pytest
from dotenv import load_dotenv


# Directorio raíz del proyecto (donde vive .env)
BASE_DIR = Path(__file__).resolve().parent.parent
ENV_PATH = BASE_DIR / ".env"
FIXTURES = Path(__file__).resolve().parent / "fixtures"

# Cargar variables de entorno desde .env si existe
load_dotenv(ENV_PATH)

from services.core_systems_service import core_systems_service  # noqa: E402
from services.symmetrization_service import symmetrization_service  # noqa: E402


@pytest.fixture
def boolean():
    """Semicampo booleano como sistema finito."""
    return core_systems_service.boolean_finsys()


@pytest.fixture
def chain3():
    """Fragmento supertropical {0, 0°, zero} tabulado."""
    return core_systems_service.tabulate(
        core_systems_service.make_supertropical([0]), name='chain3'
    )


@pytest.fixture
def sym_boolean_fs(boolean):
    """Simetrizado de 𝔹 tabulado, con cuatro elementos."""
    return core_systems_service.tabulate(
        symmetrization_service.symmetrize(boolean.to_descriptor()), name='sym-boolean'
    )


@pytest.fixture
def supertropical():
    return core_systems_service.make_supertropical()


@pytest.fixture
def maxplus():
    return core_systems_service.make_maxplus()


@pytest.fixture
def minplus():
    return core_systems_service.make_minplus()


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def fixtures_dir():
    return FIXTURES

"""
Módulo de servicios.

Exporta las instancias globales de los servicios y sus excepciones base.
"""

from services.congruence_service import (
    congruence_service,
    CongruenceService,
    CongruenceServiceException,
)
from services.core_systems_service import (
    core_systems_service,
    CoreSystemsService,
    CoreSystemsServiceException,
)
from services.hyperfield_service import (
    hyperfield_service,
    HyperfieldService,
    HyperfieldServiceException,
)
from services.linalg_service import linalg_service, LinalgService, LinalgServiceException
from services.localization_service import (
    localization_service,
    LocalizationService,
    LocalizationServiceException,
)
from services.module_system_service import (
    module_system_service,
    ModuleSystemService,
    ModuleSystemServiceException,
)
from services.polynomial_service import (
    polynomial_service,
    PolynomialService,
    PolynomialServiceException,
)
from services.symmetrization_service import (
    symmetrization_service,
    SymmetrizationService,
    SymmetrizationServiceException,
)
from services.tensor_service import tensor_service, TensorService, TensorServiceException
from services.tropicalization_service import (
    tropicalization_service,
    TropicalizationService,
    TropicalizationServiceException,
)

# Excepciones que la línea de comandos reporta como violación de precondición
SERVICE_EXCEPTIONS = (
    CongruenceServiceException,
    CoreSystemsServiceException,
    HyperfieldServiceException,
    LinalgServiceException,
    LocalizationServiceException,
    ModuleSystemServiceException,
    PolynomialServiceException,
    SymmetrizationServiceException,
    TropicalizationServiceException,
)

__all__ = [
    "congruence_service",
    "CongruenceService",
    "CongruenceServiceException",
    "core_systems_service",
    "CoreSystemsService",
    "CoreSystemsServiceException",
    "hyperfield_service",
    "HyperfieldService",
    "HyperfieldServiceException",
    "linalg_service",
    "LinalgService",
    "LinalgServiceException",
    "localization_service",
    "LocalizationService",
    "LocalizationServiceException",
    "module_system_service",
    "ModuleSystemService",
    "ModuleSystemServiceException",
    "polynomial_service",
    "PolynomialService",
    "PolynomialServiceException",
    "symmetrization_service",
    "SymmetrizationService",
    "SymmetrizationServiceException",
    "tensor_service",
    "TensorService",
    "TensorServiceException",
    "tropicalization_service",
    "TropicalizationService",
    "TropicalizationServiceException",
    "SERVICE_EXCEPTIONS",
]

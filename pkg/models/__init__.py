"""
Módulo de modelos de datos.

Exporta todas las clases de modelos para facilitar las importaciones.
"""

from models.congruence import Congruence, LocalizedFraction
from models.elem import Elem, ElemKind
from models.hyperfield import Hyperfield, HyperfieldKind, SemiringMonoidPair
from models.matrix import Matrix
from models.matroid import ValuatedMatroidCandidate
from models.module_system import ModSys, MorphismTable, TensorElem
from models.polynomial import Polynomial
from models.puiseux import PuiseuxSeries
from models.system import FinSys, SystemDescriptor, SystemKind

__all__ = [
    'Congruence',
    'LocalizedFraction',
    'Elem',
    'ElemKind',
    'Hyperfield',
    'HyperfieldKind',
    'SemiringMonoidPair',
    'Matrix',
    'ValuatedMatroidCandidate',
    'ModSys',
    'MorphismTable',
    'TensorElem',
    'Polynomial',
    'PuiseuxSeries',
    'FinSys',
    'SystemDescriptor',
    'SystemKind',
]

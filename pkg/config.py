"""
Módulo de configuración de la librería de sistemas con negación.

Implementa el patrón Singleton para garantizar una única instancia
de configuración durante el ciclo de vida del proceso. Todas las cotas
de búsqueda y de enumeración se leen aquí desde variables de entorno.
"""

import os
from fractions import Fraction
from typing import List, Tuple

from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()


class Config:
    """
    Clase de configuración con patrón Singleton.

    Centraliza las cotas de enumeración (retículos de congruencias,
    cocientes tensoriales, Hom), los parámetros de muestreo de racionales
    y el nivel de logging.
    """

    _instance = None

    def __new__(cls):
        """Implementación del patrón Singleton."""
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Inicializa la configuración desde variables de entorno."""
        if self._initialized:
            return

        # Logging y semilla
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()
        self.DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', '0'))

        # Muestreo de racionales exactos
        self.SAMPLE_MAX_DENOMINATOR = int(os.getenv('SAMPLE_MAX_DENOMINATOR', '16'))
        self.SAMPLE_MAX_NUMERATOR = int(os.getenv('SAMPLE_MAX_NUMERATOR', '48'))

        # Cotas de búsqueda
        self.HEIGHT_BOUND = int(os.getenv('HEIGHT_BOUND', '6'))
        self.BEND_STEP_BOUND = int(os.getenv('BEND_STEP_BOUND', '12'))
        self.BEND_MAX_STATES = int(os.getenv('BEND_MAX_STATES', '20000'))

        # Álgebra lineal
        self.DET_MAX_N = int(os.getenv('DET_MAX_N', '8'))
        self.VANDERMONDE_MAX_N = int(os.getenv('VANDERMONDE_MAX_N', '6'))
        self.LAPLACE_MAX_N = int(os.getenv('LAPLACE_MAX_N', '6'))

        # Polinomios
        self.ROOT_BOUND_MAX_DEGREE = int(os.getenv('ROOT_BOUND_MAX_DEGREE', '3'))
        self.FUNCTIONAL_TANGIBLE_THRESHOLD = Fraction(
            os.getenv('FUNCTIONAL_TANGIBLE_THRESHOLD', '1/2')
        )

        # Congruencias
        self.LATTICE_MAX_ELEMENTS = int(os.getenv('LATTICE_MAX_ELEMENTS', '12'))
        self.LATTICE_MAX_CONGRUENCES = int(os.getenv('LATTICE_MAX_CONGRUENCES', '4096'))

        # Hiperestructuras y módulos
        self.CLOSURE_MAX_ELEMENTS = int(os.getenv('CLOSURE_MAX_ELEMENTS', '4096'))
        self.HOM_MAX_CANDIDATES = int(os.getenv('HOM_MAX_CANDIDATES', '200000'))
        self.COEFF_MAX_COMBINATIONS = int(os.getenv('COEFF_MAX_COMBINATIONS', '200000'))
        self.QUOTIENT_MAX_ELEMENTS = int(os.getenv('QUOTIENT_MAX_ELEMENTS', '512'))
        self.ADMISSIBLE_SUMMAND_BOUND = int(os.getenv('ADMISSIBLE_SUMMAND_BOUND', '3'))

        # Matroides valuados
        self.MATROID_MAX_GROUND = int(os.getenv('MATROID_MAX_GROUND', '8'))
        self.MATROID_MAX_RANK = int(os.getenv('MATROID_MAX_RANK', '4'))

        self._initialized = True

    def validate(self) -> Tuple[bool, List[str]]:
        """
        Valida que las cotas configuradas sean utilizables.

        Returns:
            Tuple[bool, List[str]]: (es_válida, lista_de_errores)
        """
        errors = []

        positive = [
            'SAMPLE_MAX_DENOMINATOR',
            'SAMPLE_MAX_NUMERATOR',
            'HEIGHT_BOUND',
            'BEND_STEP_BOUND',
            'BEND_MAX_STATES',
            'DET_MAX_N',
            'VANDERMONDE_MAX_N',
            'LAPLACE_MAX_N',
            'ROOT_BOUND_MAX_DEGREE',
            'LATTICE_MAX_ELEMENTS',
            'LATTICE_MAX_CONGRUENCES',
            'CLOSURE_MAX_ELEMENTS',
            'HOM_MAX_CANDIDATES',
            'COEFF_MAX_COMBINATIONS',
            'QUOTIENT_MAX_ELEMENTS',
            'ADMISSIBLE_SUMMAND_BOUND',
            'MATROID_MAX_GROUND',
            'MATROID_MAX_RANK',
        ]
        for name in positive:
            if getattr(self, name) <= 0:
                errors.append(f"{name} debe ser positivo")

        if not (0 < self.FUNCTIONAL_TANGIBLE_THRESHOLD <= 1):
            errors.append("FUNCTIONAL_TANGIBLE_THRESHOLD debe estar en (0, 1]")

        if self.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"LOG_LEVEL desconocido: {self.LOG_LEVEL}")

        return len(errors) == 0, errors

    def to_dict(self) -> dict:
        """
        Convierte la configuración a diccionario serializable.

        Returns:
            dict: Configuración con racionales como cadenas "p/q"
        """
        return {
            'LOG_LEVEL': self.LOG_LEVEL,
            'DEFAULT_SEED': self.DEFAULT_SEED,
            'SAMPLE_MAX_DENOMINATOR': self.SAMPLE_MAX_DENOMINATOR,
            'SAMPLE_MAX_NUMERATOR': self.SAMPLE_MAX_NUMERATOR,
            'HEIGHT_BOUND': self.HEIGHT_BOUND,
            'BEND_STEP_BOUND': self.BEND_STEP_BOUND,
            'BEND_MAX_STATES': self.BEND_MAX_STATES,
            'DET_MAX_N': self.DET_MAX_N,
            'VANDERMONDE_MAX_N': self.VANDERMONDE_MAX_N,
            'LAPLACE_MAX_N': self.LAPLACE_MAX_N,
            'ROOT_BOUND_MAX_DEGREE': self.ROOT_BOUND_MAX_DEGREE,
            'FUNCTIONAL_TANGIBLE_THRESHOLD': str(self.FUNCTIONAL_TANGIBLE_THRESHOLD),
            'LATTICE_MAX_ELEMENTS': self.LATTICE_MAX_ELEMENTS,
            'LATTICE_MAX_CONGRUENCES': self.LATTICE_MAX_CONGRUENCES,
            'CLOSURE_MAX_ELEMENTS': self.CLOSURE_MAX_ELEMENTS,
            'HOM_MAX_CANDIDATES': self.HOM_MAX_CANDIDATES,
            'COEFF_MAX_COMBINATIONS': self.COEFF_MAX_COMBINATIONS,
            'QUOTIENT_MAX_ELEMENTS': self.QUOTIENT_MAX_ELEMENTS,
            'ADMISSIBLE_SUMMAND_BOUND': self.ADMISSIBLE_SUMMAND_BOUND,
            'MATROID_MAX_GROUND': self.MATROID_MAX_GROUND,
            'MATROID_MAX_RANK': self.MATROID_MAX_RANK,
        }


# Instancia global de configuración
config = Config()

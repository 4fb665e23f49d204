"""
Módulo de tests para los sistemas con negación.
"""

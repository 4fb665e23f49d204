"""
Módulo de subcomandos.

Cada área registra sus subcomandos sobre el parser principal.
"""

from commands.congruence_commands import register_congruence_commands
from commands.core_commands import register_core_commands
from commands.hyperfield_commands import register_hyperfield_commands
from commands.linalg_commands import register_linalg_commands
from commands.module_commands import register_module_commands
from commands.polynomial_commands import register_polynomial_commands
from commands.symmetrization_commands import register_symmetrization_commands
from commands.tropicalization_commands import register_tropicalization_commands

__all__ = [
    'register_congruence_commands',
    'register_core_commands',
    'register_hyperfield_commands',
    'register_linalg_commands',
    'register_module_commands',
    'register_polynomial_commands',
    'register_symmetrization_commands',
    'register_tropicalization_commands',
]

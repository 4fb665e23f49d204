"""
Punto de entrada de la línea de comandos de sistemas con negación.

Cada área registra sus subcomandos; el resultado se escribe en la salida
estándar como JSON canónico o como texto tabulado, y los registros van
a la salida de error para no alterar la salida.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from commands import (
    register_congruence_commands,
    register_core_commands,
    register_hyperfield_commands,
    register_linalg_commands,
    register_module_commands,
    register_polynomial_commands,
    register_symmetrization_commands,
    register_tropicalization_commands,
)
from config import config
from services import SERVICE_EXCEPTIONS
from utils.codecs import CodecError, Encoder, dumps
from utils.tables import render_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2


def build_parser() -> argparse.ArgumentParser:
    """Parser principal con las opciones globales y todos los subcomandos."""
    parser = argparse.ArgumentParser(
        prog='negsys',
        description='Sistemas con negación: semianillos, módulos y tropicalización.',
    )
    parser.add_argument('--format', choices=('json', 'text'), default='json',
                        help='Formato de salida')
    parser.add_argument('--seed', type=int, default=None,
                        help='Semilla de las comprobaciones muestreadas')
    parser.add_argument('--bound', type=int, default=None,
                        help='Cota de pasos de las búsquedas (altura, bend)')
    parser.add_argument('--system', default=None,
                        help='Sistema integrado o ruta a un FinSys JSON')

    subparsers = parser.add_subparsers(dest='command', required=True)
    register_core_commands(subparsers)
    register_linalg_commands(subparsers)
    register_polynomial_commands(subparsers)
    register_hyperfield_commands(subparsers)
    register_symmetrization_commands(subparsers)
    register_congruence_commands(subparsers)
    register_module_commands(subparsers)
    register_tropicalization_commands(subparsers)
    return parser


def error_payload(e: Exception) -> Dict[str, Any]:
    details = getattr(e, 'details', None) or {}
    try:
        details = Encoder().encode(details)
    except CodecError:
        details = {key: str(value) for key, value in details.items()}
    return {
        'success': False,
        'error': {
            'type': type(e).__name__,
            'message': str(e),
            'details': details,
        },
    }


def emit(payload: Dict[str, Any], fmt: str) -> None:
    text = render_text(payload) if fmt == 'text' else dumps(payload)
    sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta un subcomando.

    Returns:
        int: 0 si tuvo éxito, 2 ante una precondición violada, 1 ante un fallo interno
    """
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    is_valid, errors = config.validate()
    if not is_valid:
        logger.error("Error en la configuración:")
        for error in errors:
            logger.error(f"  - {error}")
        emit({
            'success': False,
            'error': {
                'type': 'ConfigError',
                'message': 'Configuración inválida',
                'details': {'errors': errors},
            },
        }, 'json')
        return EXIT_PRECONDITION

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound is not None and args.bound <= 0:
        parser.error("--bound debe ser positivo")

    try:
        payload = args.handler(args)
    except (*SERVICE_EXCEPTIONS, ValueError) as e:
        logger.warning(f"{args.command}: {type(e).__name__}: {e}")
        emit(error_payload(e), args.format)
        return EXIT_PRECONDITION
    except Exception as e:
        logger.exception(f"Error interno en {args.command}: {str(e)}")
        emit(error_payload(e), args.format)
        return EXIT_INTERNAL

    emit(payload, args.format)
    return EXIT_OK


# ============================================================================
# PUNTO DE ENTRADA
# ============================================================================

if __name__ == '__main__':
    sys.exit(main())

from fractions import Fraction
from typing import Union

import numpy as np

from config import config


RationalLike = Union[Fraction, int, str]


def parse_rational(raw: RationalLike) -> Fraction:
    if isinstance(raw, bool):
        raise ValueError(f"Valor racional inválido: {raw!r}")
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        text = raw.strip()
        if not text or '.' in text or 'e' in text.lower():
            raise ValueError(f"Racional exacto inválido: {raw!r} (use la forma 'p/q')")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Racional exacto inválido: {raw!r}: {str(e)}")
    raise ValueError(f"Tipo no soportado para racional: {type(raw).__name__}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sample_rational(
    rng: np.random.Generator,
    max_numerator: int = None,
    max_denominator: int = None,
) -> Fraction:
    max_numerator = max_numerator or config.SAMPLE_MAX_NUMERATOR
    max_denominator = max_denominator or config.SAMPLE_MAX_DENOMINATOR
    # numpy devuelve np.int64; Fraction necesita int nativo
    numerator = int(rng.integers(-max_numerator, max_numerator + 1))
    denominator = int(rng.integers(1, max_denominator + 1))
    return Fraction(numerator, denominator)

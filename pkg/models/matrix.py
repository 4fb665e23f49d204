"""
Modelo de matrices cuadradas sobre un portador.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from models.elem import Elem


@dataclass(frozen=True)
class Matrix:
    """
    Matriz n×n de elementos de un mismo portador.

    Attributes:
        carrier_id: Portador de las entradas
        rows: Filas de la matriz
    """
    carrier_id: str
    rows: Tuple[Tuple[Elem, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("Una matriz requiere n ≥ 1")
        if any(len(row) != n for row in rows):
            raise ValueError(f"La matriz debe ser cuadrada de tamaño {n}")
        if any(e.carrier_id != self.carrier_id for row in rows for e in row):
            raise ValueError("Todas las entradas deben compartir portador")
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Elem:
        return self.rows[i][j]

    def minor(self, i: int, j: int) -> 'Matrix':
        """Submatriz sin la fila i y la columna j."""
        if self.n < 2:
            raise ValueError("Una matriz 1×1 no tiene menores")
        return Matrix(
            self.carrier_id,
            tuple(
                tuple(e for c, e in enumerate(row) if c != j)
                for r, row in enumerate(self.rows) if r != i
            ),
        )

    def transpose(self) -> 'Matrix':
        return Matrix(self.carrier_id, tuple(zip(*self.rows)))

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'rows': [[e.to_dict() for e in row] for row in self.rows]}


def matrix_from_rows(carrier_id: str, rows: Sequence[Sequence[Elem]]) -> Matrix:
    return Matrix(carrier_id, tuple(tuple(row) for row in rows))


def identity_matrix(carrier_id: str, n: int, zero: Elem, one: Elem) -> Matrix:
    rows: List[Tuple[Elem, ...]] = [
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    ]
    return Matrix(carrier_id, tuple(rows))

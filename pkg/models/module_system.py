"""
Modelos de sistemas de módulos finitos.

ModSys es un módulo por tablas sobre un sistema base finito: suma,
acción del base, negación, tangibles y sobrepaso. MorphismTable es un
mapa total entre dos módulos y TensorElem una suma formal de tensores
simples que representa una clase del producto tensorial.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, FrozenSet, Optional, Tuple

from models.system import FinSys


@dataclass(frozen=True)
class ModSys:
    """
    Módulo finito sobre un sistema base.

    Attributes:
        ground: Sistema base (actúa por la izquierda)
        names: Símbolos de los elementos
        add_table: Tabla de suma
        action_table: action_table[a][m] = a·m para todo a del base
        zero_idx: Índice de 𝟘
        tangible_idxs: Índices tangibles
        neg_table: Tabla de la negación
        surpass_mode: 'circ' o 'explicit'
        surpass_pairs: Pares (b, c) con b ⪯ c en modo explícito
        name: Nombre del módulo
    """
    ground: FinSys
    names: Tuple[str, ...]
    add_table: Tuple[Tuple[int, ...], ...]
    action_table: Tuple[Tuple[int, ...], ...]
    zero_idx: int
    tangible_idxs: FrozenSet[int]
    neg_table: Tuple[int, ...]
    surpass_mode: str = 'circ'
    surpass_pairs: Optional[FrozenSet[Tuple[int, int]]] = None
    name: str = 'module'

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise ValueError("Un módulo requiere al menos el elemento 𝟘")
        if len(set(self.names)) != n:
            raise ValueError("Los nombres de los elementos deben ser únicos")
        if len(self.add_table) != n or any(len(row) != n for row in self.add_table):
            raise ValueError(f"La tabla add debe ser cuadrada de tamaño {n}")
        if len(self.action_table) != self.ground.size or any(
            len(row) != n for row in self.action_table
        ):
            raise ValueError("La tabla de acción debe tener una fila por elemento del base")
        for row in self.add_table + self.action_table:
            if any(not 0 <= v < n for v in row):
                raise ValueError("Las tablas contienen índices fuera de rango")
        if len(self.neg_table) != n or any(not 0 <= v < n for v in self.neg_table):
            raise ValueError("La tabla neg debe ser total sobre el portador")
        if not 0 <= self.zero_idx < n:
            raise ValueError("Índice de cero fuera de rango")
        if any(not 0 <= t < n for t in self.tangible_idxs):
            raise ValueError("Índice tangible fuera de rango")
        if self.surpass_mode not in ('circ', 'explicit'):
            raise ValueError(f"Modo de sobrepaso desconocido: {self.surpass_mode}")
        if self.surpass_mode == 'explicit' and self.surpass_pairs is None:
            raise ValueError("El modo explícito requiere la lista de pares")

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Elemento desconocido en {self.name}: {name!r}")

    def add(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def act(self, a: int, m: int) -> int:
        return self.action_table[a][m]

    def neg(self, i: int) -> int:
        return self.neg_table[i]

    def quasi_zero(self, i: int) -> int:
        return self.add_table[i][self.neg_table[i]]

    @cached_property
    def quasi_zeros(self) -> FrozenSet[int]:
        return frozenset(self.quasi_zero(i) for i in self.elements)

    @cached_property
    def surpass_matrix(self) -> Tuple[Tuple[bool, ...], ...]:
        n = self.size
        if self.surpass_mode == 'explicit':
            return tuple(
                tuple((b, c) in self.surpass_pairs for c in range(n)) for b in range(n)
            )
        rows = []
        for b in range(n):
            reach = {self.add_table[b][q] for q in self.quasi_zeros}
            rows.append(tuple(c in reach for c in range(n)))
        return tuple(rows)

    def surpasses(self, b: int, c: int) -> bool:
        """True si b ⪯ c."""
        return self.surpass_matrix[b][c]

    @cached_property
    def null_set(self) -> FrozenSet[int]:
        """ℳ_Null = {b : b + b' ⪰ b' para todo b'}."""
        return frozenset(
            b for b in self.elements
            if all(self.surpasses(bp, self.add(b, bp)) for bp in self.elements)
        )

    @cached_property
    def is_triple(self) -> bool:
        if self.tangible_idxs & self.quasi_zeros:
            return False
        return len(self.additive_span(self.tangible_idxs)) == self.size

    def additive_span(self, gens) -> FrozenSet[int]:
        """Sumas finitas de generadores, con 𝟘."""
        reach = {self.zero_idx}
        frontier = [self.zero_idx]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.add_table[x][g]
                if y not in reach:
                    reach.add(y)
                    frontier.append(y)
        return frozenset(reach)

    def to_dict(self) -> Dict[str, Any]:
        """Convierte el módulo al formato JSON de intercambio."""
        names = self.names
        data = {
            'name': self.name,
            'ground': self.ground.to_dict(),
            'names': list(names),
            'zero': names[self.zero_idx],
            'add': [[names[v] for v in row] for row in self.add_table],
            'action': {
                self.ground.names[a]: [names[v] for v in row]
                for a, row in enumerate(self.action_table)
            },
            'tangibles': [names[t] for t in sorted(self.tangible_idxs)],
            'neg': {names[i]: names[self.neg_table[i]] for i in self.elements},
        }
        if self.surpass_mode == 'circ':
            data['surpass'] = 'circ'
        else:
            data['surpass'] = [[names[b], names[c]] for b, c in sorted(self.surpass_pairs)]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any], ground: Optional[FinSys] = None) -> 'ModSys':
        """
        Crea un ModSys desde JSON; "action" asocia a cada elemento del
        base la fila de a·m.

        Raises:
            ValueError: Si faltan campos, filas de acción o nombres
        """
        required = ('names', 'zero', 'add', 'action', 'tangibles', 'neg')
        missing = [key for key in required if key not in data]
        if ground is None:
            if 'ground' not in data:
                missing.append('ground')
            else:
                ground = FinSys.from_dict(data['ground'])
        if missing:
            raise ValueError(f"Campos requeridos faltantes: {', '.join(missing)}")

        names = tuple(str(x) for x in data['names'])
        position = {x: i for i, x in enumerate(names)}

        def idx(raw) -> int:
            if raw not in position:
                raise ValueError(f"Elemento desconocido: {raw!r}")
            return position[raw]

        action_raw = data['action']
        if isinstance(action_raw, dict):
            absent = [a for a in ground.names if a not in action_raw]
            if absent:
                raise ValueError(f"Faltan filas de acción para: {', '.join(absent)}")
            rows = [action_raw[a] for a in ground.names]
        else:
            rows = list(action_raw)

        neg_raw = data['neg']
        if isinstance(neg_raw, dict):
            neg_table = tuple(idx(neg_raw[x]) for x in names)
        else:
            neg_table = tuple(idx(x) for x in neg_raw)

        surpass_raw = data.get('surpass', 'circ')
        if surpass_raw == 'circ':
            mode, pairs = 'circ', None
        else:
            mode = 'explicit'
            pairs = frozenset((idx(b), idx(c)) for b, c in surpass_raw)

        return cls(
            ground=ground,
            names=names,
            add_table=tuple(tuple(idx(v) for v in row) for row in data['add']),
            action_table=tuple(tuple(idx(v) for v in row) for row in rows),
            zero_idx=idx(data['zero']),
            tangible_idxs=frozenset(idx(t) for t in data['tangibles']),
            neg_table=neg_table,
            surpass_mode=mode,
            surpass_pairs=pairs,
            name=str(data.get('name', 'module')),
        )


@dataclass(frozen=True)
class MorphismTable:
    """
    Mapa total entre módulos finitos.

    Attributes:
        source: Módulo de partida
        target: Módulo de llegada
        table: Imagen de cada índice de source
    """
    source: ModSys
    target: ModSys
    table: Tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.source.size:
            raise ValueError("El morfismo debe ser total sobre el módulo de partida")
        if any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("Imagen fuera del módulo de llegada")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def to_dict(self) -> Dict[str, Any]:
        src, tgt = self.source.names, self.target.names
        return {
            'source': self.source.name,
            'target': self.target.name,
            'map': {src[i]: tgt[v] for i, v in enumerate(self.table)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], source: ModSys, target: ModSys) -> 'MorphismTable':
        raw = data.get('map', data)
        missing = [x for x in source.names if x not in raw]
        if missing:
            raise ValueError(f"El morfismo no está definido en: {', '.join(missing)}")
        return cls(source, target, tuple(target.index(str(raw[x])) for x in source.names))


@dataclass(frozen=True)
class TensorElem:
    """Suma formal de tensores simples x⊗y (índices en M₁ y M₂), ordenada."""
    terms: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(sorted(self.terms)))

    def label(self, m1: ModSys, m2: ModSys) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f"{m1.names[x]}⊗{m2.names[y]}" for x, y in self.terms)

    def to_dict(self, m1: ModSys, m2: ModSys) -> Dict[str, Any]:
        return {'terms': [[m1.names[x], m2.names[y]] for x, y in self.terms]}

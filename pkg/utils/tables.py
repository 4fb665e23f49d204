"""
Salida de texto con pandas.

Las tablas de operación (suma, producto, acción) se muestran como
DataFrame indexado por nombres; el resto de un resultado se aplana a
pares clave/valor.
"""

import json
from typing import Any, Dict, List, Mapping

import pandas as pd

TABLE_KEYS = ('add', 'mul', 'action')


def operation_frame(names: List[str], rows: List[List[str]]) -> pd.DataFrame:
    return pd.DataFrame(rows, index=names, columns=names)


def _is_system(value: Any) -> bool:
    return isinstance(value, Mapping) and 'names' in value and 'add' in value


def system_tables(data: Mapping[str, Any]) -> Dict[str, pd.DataFrame]:
    """Tablas de un FinSys o ModSys serializado."""
    names = data['names']
    frames = {'add': operation_frame(names, data['add'])}
    if 'mul' in data:
        frames['mul'] = operation_frame(names, data['mul'])
    if 'action' in data:
        action = data['action']
        frames['action'] = pd.DataFrame(
            [action[a] for a in action], index=list(action), columns=names
        )
    return frames


def _scalar(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def flatten(data: Any, prefix: str = '') -> List[List[str]]:
    """Aplana un resultado a filas [clave, valor], omitiendo tablas de sistemas."""
    rows: List[List[str]] = []
    if isinstance(data, Mapping):
        for key in sorted(data):
            value = data[key]
            path = f"{prefix}.{key}" if prefix else str(key)
            if _is_system(value):
                label = value.get('name', 'sistema')
                rows.append([path, f"<{label}: {len(value['names'])} elementos>"])
            elif isinstance(value, Mapping) and value and key not in TABLE_KEYS:
                rows.extend(flatten(value, path))
            else:
                rows.append([path, _scalar(value)])
    else:
        rows.append([prefix or 'valor', _scalar(data)])
    return rows


def render_text(payload: Mapping[str, Any]) -> str:
    """Texto determinista de una respuesta {'success': ..., 'data' | 'error': ...}."""
    body = payload.get('data', payload.get('error'))
    blocks: List[str] = []
    rows = flatten(body)
    if rows:
        frame = pd.DataFrame(rows, columns=['clave', 'valor'])
        blocks.append(frame.to_string(index=False))
    systems = {}
    if _is_system(body):
        systems[body.get('name', 'sistema')] = body
    elif isinstance(body, Mapping):
        systems = {key: value for key, value in sorted(body.items()) if _is_system(value)}
    for label, system in systems.items():
        for op, frame in system_tables(system).items():
            blocks.append(f"[{label} · {op}]\n{frame.to_string()}")
    return '\n\n'.join(blocks) + '\n'

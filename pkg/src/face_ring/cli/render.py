"""Report rendering: a YAML document, or the same tree as ``key: value`` lines."""

from enum import Enum
from typing import Any, List

import numpy as np
import yaml


def plain(value: Any) -> Any:
    """Convert a report tree to YAML-safe builtins (tuples, enums, numpy scalars)."""
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _scalar(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def _is_leaf(value: Any) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value) or all(
            isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v) for v in value
        )
    return True


def _lines(value: Any, indent: int, out: List[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if _is_leaf(item):
                out.append(f"{pad}{key}: {_scalar(item)}")
            else:
                out.append(f"{pad}{key}:")
                _lines(item, indent + 1, out)
    else:
        for item in value:
            if _is_leaf(item):
                out.append(f"{pad}- {_scalar(item)}")
            else:
                out.append(f"{pad}-")
                _lines(item, indent + 1, out)


def render_text(report: Any) -> str:
    out: List[str] = []
    _lines(plain(report), 0, out)
    return "\n".join(out) + "\n"


def render_structured(report: Any) -> str:
    return yaml.safe_dump(plain(report), sort_keys=False, allow_unicode=True)

"""Config loader - YAML settings with environment substitution, and complex input files."""

import copy
import logging
import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from ..error_handling.errors import InputError, SizeError
from ..error_handling.strategies import with_retry
from ..freeness.subgroup import SubgroupSpec
from ..powerset.subset import MAX_GROUND_SET
from ..simplicial.complex import SimplicialComplex, from_maximal_faces


logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    "app": {"name": "face-ring", "version": "0.1.0"},
    "computation": {
        "field": "GF2",
        "policy": "smallest",
    },
    "resources": {
        "process_memory_mb": 256,
        "reserved_ram_percent": 0.25,
        "max_workers": None,
        "parallel_threshold": 64,
    },
    "sweep": {"random_sizes": [5, 6], "random_count": 20, "max_generators": None},
    "notifications": {"enabled": True, "url": "", "timeout_seconds": 10.0, "max_attempts": 3},
    "logging": {
        "level": "WARNING",
        "console": {"enabled": True},
        "file": {"enabled": False},
    },
}


def _substitute_env_vars(data: Any) -> Any:
    """
    Recursively replace ``${VAR_NAME}`` with the environment value.

    ``${VAR_NAME:-default}`` falls back to the default silently; other
    missing variables become the empty string, with a warning.
    """
    if isinstance(data, dict):
        return {key: _substitute_env_vars(value) for key, value in data.items()}
    if isinstance(data, list):
        return [_substitute_env_vars(item) for item in data]
    if isinstance(data, str):

        def replace_env_var(match: re.Match) -> str:
            var_name, has_default, default = match.group(1).partition(":-")
            value = os.environ.get(var_name)
            if value is None and has_default:
                return default
            if value is None:
                logger.warning(f"Environment variable '${{{var_name}}}' not found, using empty string")
                return ""
            return value

        return re.sub(r"\$\{([^}]+)\}", replace_env_var, data)
    return data


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    out = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


@with_retry(max_attempts=3, wait_min=0.1, wait_max=1.0, exceptions=(TimeoutError, BlockingIOError))
def _read_text(path: Path) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _mark_position(error: yaml.YAMLError) -> Optional[str]:
    mark = getattr(error, "problem_mark", None)
    if mark is None:
        return None
    return f"line {mark.line + 1}, column {mark.column + 1}"


def load_yaml_config(file_path: str | Path) -> Dict[str, Any]:
    """
    Load a YAML configuration file and substitute ``${VAR}`` references.

    Args:
        file_path: Path to the YAML file

    Returns:
        Configuration dictionary (empty for an empty file)

    Raises:
        FileNotFoundError: If the file does not exist
        InputError: If the YAML is invalid
    """
    file_path = Path(file_path)
    if not file_path.exists():
        error_msg = f"Configuration file not found: {file_path}"
        logger.error(error_msg)
        raise FileNotFoundError(error_msg)

    try:
        config = yaml.safe_load(_read_text(file_path))
    except yaml.YAMLError as e:
        raise InputError(f"invalid YAML in {file_path}", position=_mark_position(e)) from e

    if config is None:
        logger.warning(f"Configuration file is empty: {file_path}")
        return {}
    if not isinstance(config, dict):
        raise InputError(f"{file_path} must contain a mapping")
    logger.debug(f"Loaded configuration from: {file_path}")
    return _substitute_env_vars(config)


def load_all_configs(config_dir: Optional[Path] = None) -> Dict[str, Any]:
    """
    Built-in defaults overlaid with ``main.yaml`` and ``logging.yaml``.

    A missing directory or file keeps the defaults for that part.

    Args:
        config_dir: Directory containing the configuration files

    Returns:
        Combined configuration dictionary
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if config_dir is None:
        return _substitute_env_vars(config)
    config_dir = Path(config_dir)
    if not config_dir.is_dir():
        logger.info(f"Configuration directory not found: {config_dir}, using built-in defaults")
        return _substitute_env_vars(config)

    main_path = config_dir / "main.yaml"
    if main_path.exists():
        config = _merge(config, load_yaml_config(main_path))
    else:
        logger.debug(f"Main config not found: {main_path}, using defaults")

    logging_path = config_dir / "logging.yaml"
    if logging_path.exists():
        logging_config = load_yaml_config(logging_path)
        if "logging" in logging_config:
            config["logging"] = _merge(config["logging"], logging_config["logging"])
    else:
        logger.debug(f"Logging config not found: {logging_path}, using defaults")

    logger.info(f"Configuration loaded from {config_dir}")
    return _substitute_env_vars(config)


# Input documents


@dataclass(frozen=True)
class ComplexDocument:
    """A parsed complex file, with its optional subgroup block."""

    complex: SimplicialComplex
    subgroup: Optional[SubgroupSpec]
    source: str


def _load_document(path: str | Path) -> Tuple[Dict[str, Any], str]:
    path = Path(path)
    try:
        text = _read_text(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise InputError(f"{path} is not valid YAML/JSON", position=_mark_position(e)) from e
    if not isinstance(data, dict):
        raise InputError(f"{path} must contain a mapping with 'm' and 'maximal_faces'", position="top level")
    return data, str(path)


def _int_field(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"expected an integer, got {value!r}", position=path)
    return value


def _int_rows(value: Any, path: str) -> List[List[int]]:
    if not isinstance(value, list):
        raise InputError(f"expected a list of lists, got {type(value).__name__}", position=path)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise InputError(f"expected a list, got {row!r}", position=f"{path}[{i}]")
        rows.append([_int_field(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
    return rows


def parse_complex(data: Dict[str, Any]) -> SimplicialComplex:
    """
    Build a complex from ``{"m": int, "maximal_faces": [[...], ...]}``.

    Raises:
        InputError: With the key path of the offending entry
    """
    if "m" not in data:
        raise InputError("missing field 'm'", position="m")
    m = _int_field(data["m"], "m")
    if m < 1 or m > MAX_GROUND_SET:
        raise SizeError(f"ground-set size must lie in [1, {MAX_GROUND_SET}], got {m}", position="m")
    faces = _int_rows(data.get("maximal_faces", []), "maximal_faces")
    for i, face in enumerate(faces):
        for j, element in enumerate(face):
            if not 1 <= element <= m:
                raise InputError(f"vertex {element} outside [1, {m}]", position=f"maximal_faces[{i}][{j}]")
        if len(set(face)) != len(face):
            raise InputError(f"repeated vertex in {face}", position=f"maximal_faces[{i}]")
    return from_maximal_faces(m, faces)


def parse_subgroup(data: Any, m: int, path: str = "subgroup") -> SubgroupSpec:
    """
    Build a subgroup from ``{"kind": "real"|"torus", "generators": [[...], ...]}``.

    Raises:
        InputError: With the key path of the offending entry
    """
    if not isinstance(data, dict):
        raise InputError("subgroup block must be a mapping", position=path)
    if "kind" not in data:
        raise InputError("missing field 'kind'", position=f"{path}.kind")
    rows = _int_rows(data.get("generators", []), f"{path}.generators")
    for i, row in enumerate(rows):
        if len(row) != m:
            raise InputError(f"generator has {len(row)} entries, expected {m}", position=f"{path}.generators[{i}]")
    try:
        return SubgroupSpec.from_rows(data["kind"], rows, m)
    except InputError as e:
        raise InputError(e.message, position=f"{path}.{e.position}" if e.position else path) from e


def load_complex_file(path: str | Path) -> ComplexDocument:
    """
    Read a complex file (YAML or JSON).

    Example document::

        m: 3
        maximal_faces: [[1, 2], [2, 3], [1, 3]]
        subgroup:
          kind: torus
          generators: [[1, 1, 1]]

    Raises:
        InputError: If the file is unreadable or malformed
    """
    data, source = _load_document(path)
    try:
        K = parse_complex(data)
        subgroup = parse_subgroup(data["subgroup"], K.m) if "subgroup" in data else None
    except InputError as e:
        raise type(e)(f"{source}: {e.message}", position=e.position) from e
    logger.info(f"Loaded {K} from {source}")
    return ComplexDocument(K, subgroup, source)


def load_subgroup_file(path: str | Path, m: int) -> SubgroupSpec:
    """Read a standalone subgroup document ``{kind, generators}``, or a file with a ``subgroup`` block."""
    data, source = _load_document(path)
    block, prefix = (data["subgroup"], "subgroup") if "subgroup" in data else (data, "")
    try:
        return parse_subgroup(block, m, path=prefix or "subgroup")
    except InputError as e:
        raise type(e)(f"{source}: {e.message}", position=e.position) from e

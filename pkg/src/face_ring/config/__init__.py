"""Configuration module - YAML settings and input documents."""

from .config_loader import (
    DEFAULT_CONFIG,
    ComplexDocument,
    load_all_configs,
    load_complex_file,
    load_subgroup_file,
    load_yaml_config,
    parse_complex,
    parse_subgroup,
)

__all__ = [
    "DEFAULT_CONFIG",
    "ComplexDocument",
    "load_all_configs",
    "load_complex_file",
    "load_subgroup_file",
    "load_yaml_config",
    "parse_complex",
    "parse_subgroup",
]

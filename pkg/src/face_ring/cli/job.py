"""Job description for one command-line invocation."""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional

from ..compress.certificate import CompressionPolicy
from ..error_handling.errors import InputError
from ..linalg.matrix import FieldTag
from ..macx.poincare import DegreeVector


class Command(str, Enum):
    MOBIUS = "mobius"
    BETTI = "betti"
    POINCARE = "poincare"
    COMPRESS = "compress"
    ORACLE_CHECK = "oracle-check"
    FREENESS = "freeness"
    HC_VERIFY = "hc-verify"
    SWEEP = "sweep"

    @property
    def needs_input(self) -> bool:
        return self is not Command.SWEEP


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


@dataclass
class JobConfig:
    """
    Attributes:
        command: What to run
        input_path: Complex file (every command but sweep)
        field: Coefficient field; None takes ``computation.field`` from the configuration
        kappa: Per-vertex degrees for ``poincare``; None reports both specializations
        subgroup_path: Separate subgroup file for ``freeness`` / ``hc-verify``
        policy: Compression tie-break; None takes ``computation.policy``
        output_format: ``text`` or ``structured``
        m: Ground-set size for ``sweep``
        exhaustive: Sweep every complex on [m]
        random_count: Number of random complexes in a sweep
        seed: Seed of the random sweep
        config_dir: Directory with main.yaml / logging.yaml
        verbose: DEBUG logging on stderr
    """

    command: Command
    input_path: Optional[Path] = None
    field: Optional[FieldTag] = None
    kappa: Optional[DegreeVector] = None
    subgroup_path: Optional[Path] = None
    policy: Optional[CompressionPolicy] = None
    output_format: OutputFormat = OutputFormat.TEXT
    m: Optional[int] = None
    exhaustive: bool = False
    random_count: int = 0
    seed: Optional[int] = None
    config_dir: Optional[Path] = None
    verbose: bool = False

    def __post_init__(self) -> None:
        try:
            self.command = Command(self.command)
            self.output_format = OutputFormat(self.output_format)
        except ValueError as e:
            raise InputError(str(e)) from e
        if self.field is not None:
            self.field = FieldTag.parse(self.field)
        if self.policy is not None:
            self.policy = CompressionPolicy.parse(self.policy)
        if self.command.needs_input and self.input_path is None:
            raise InputError(f"'{self.command.value}' needs an input file")
        if self.m is not None and self.m < 1:
            raise InputError(f"--m must be at least 1, got {self.m}")
        if self.command is Command.SWEEP:
            if not self.exhaustive and self.random_count <= 0:
                raise InputError("sweep needs --exhaustive and/or --random N")
            if self.random_count < 0:
                raise InputError(f"--random must be positive, got {self.random_count}")
            if self.random_count and self.seed is None and self.output_format is OutputFormat.STRUCTURED:
                raise InputError("--seed is required for a random sweep with structured output")
            if self.exhaustive and self.m is None:
                raise InputError("--exhaustive needs --m")

    def resolve_defaults(self, computation: Dict[str, Any]) -> None:
        """Fill field and policy left unset on the command line from the ``computation`` section."""
        if self.field is None:
            self.field = FieldTag.parse(computation.get("field", FieldTag.GF2.value))
        if self.policy is None:
            self.policy = CompressionPolicy.parse(computation.get("policy", CompressionPolicy.SMALLEST.value))

"""Command-line module - Jobs, dispatch, sweeps and report rendering."""

from .job import Command, JobConfig, OutputFormat
from .render import render_structured, render_text
from .runner import EXIT_FAILED, EXIT_INPUT_ERROR, EXIT_OK, run
from .sweep import CaseResult, check_case, run_sweep

__all__ = [
    "Command",
    "JobConfig",
    "OutputFormat",
    "render_structured",
    "render_text",
    "EXIT_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "run",
    "CaseResult",
    "check_case",
    "run_sweep",
]

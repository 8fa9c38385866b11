"""Dispatch a JobConfig and map outcomes to exit statuses."""

import logging
import sys
from typing import Any, Dict, Optional, TextIO

from ..config.config_loader import load_complex_file
from ..core.session import Session
from ..error_handling.errors import FaceRingError, InputError, MalformedComplexError, NicenessError
from .commands import run_single
from .job import Command, JobConfig, OutputFormat
from .render import render_structured, render_text
from .sweep import run_sweep


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_FAILED = 3


def execute(job: JobConfig, session: Session) -> tuple[Dict[str, Any], bool]:
    """Run the job and return its report tree with the overall verdict."""
    job.resolve_defaults(session.computation)
    if job.command is Command.SWEEP:
        return run_sweep(job, session)
    doc = load_complex_file(job.input_path)
    return run_single(doc, job, session)


def run(
    job: JobConfig,
    session: Optional[Session] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Execute one command and write its report.

    Returns:
        0 if every checked identity holds, 2 on input errors, 3 when a check
        fails or an internal assertion trips
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    owns_session = session is None
    try:
        if session is None:
            session = Session(config_dir=job.config_dir, verbose=job.verbose)
        report, ok = execute(job, session)
    except InputError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT_ERROR
    except (MalformedComplexError, NicenessError, AssertionError) as e:
        logger.error(f"Internal check failed: {e}", exc_info=True)
        print(f"internal error: {e}", file=stderr)
        return EXIT_FAILED
    except FaceRingError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT_ERROR
    finally:
        if owns_session and session is not None:
            session.close()

    if job.output_format is OutputFormat.STRUCTURED:
        stdout.write(render_structured(report))
    else:
        stdout.write(render_text(report))
    return EXIT_OK if ok else EXIT_FAILED

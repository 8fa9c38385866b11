"""Threading module - Process pool for independent computations."""

from .process_pool import ProcessPool

__all__ = ["ProcessPool"]

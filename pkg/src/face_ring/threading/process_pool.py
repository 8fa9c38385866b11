"""Process pool - Ordered parallel map with an in-process path for small batches."""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Sequence


logger = logging.getLogger(__name__)


class ProcessPool:
    """
    Worker processes for independent computations (Betti columns, sweep cases).

    Results always come back in input order. Batches smaller than
    ``parallel_threshold``, or a pool of one worker, run in the calling
    process so no pickling happens.
    """

    def __init__(
        self,
        max_workers: Optional[int] = None,
        resource_manager: Optional[Any] = None,
        parallel_threshold: int = 64,
    ) -> None:
        """
        Args:
            max_workers: Maximum concurrent processes. If None, auto-calculated.
            resource_manager: ResourceManager used when max_workers is None
            parallel_threshold: Minimum batch size sent to worker processes
        """
        if max_workers is None and resource_manager is not None:
            max_workers = resource_manager.get_max_processes()
        elif max_workers is None:
            max_workers = os.cpu_count() or 1
        self._max_workers = max(1, int(max_workers))
        self.parallel_threshold = parallel_threshold
        self._executor: Optional[ProcessPoolExecutor] = None
        self.batches_run = 0
        logger.debug(f"ProcessPool initialized (max_workers={self._max_workers})")

    @property
    def max_workers(self) -> int:
        return self._max_workers

    def _use_workers(self, count: int) -> bool:
        return self._max_workers > 1 and count >= self.parallel_threshold

    def map(self, func: Callable, items: Sequence[Any], task_name: str = "batch") -> List[Any]:
        """
        Apply a module-level function to every item.

        Args:
            func: Picklable function of one argument
            items: Arguments
            task_name: Label used in log lines

        Returns:
            Results in the order of ``items``
        """
        items = list(items)
        self.batches_run += 1
        if not self._use_workers(len(items)):
            logger.debug(f"Batch '{task_name}': {len(items)} items in-process")
            return [func(item) for item in items]

        if self._executor is None:
            self._executor = ProcessPoolExecutor(max_workers=self._max_workers)
        chunksize = max(1, len(items) // (4 * self._max_workers))
        logger.info(f"Batch '{task_name}': {len(items)} items on {self._max_workers} workers")
        results = list(self._executor.map(func, items, chunksize=chunksize))
        logger.debug(f"Batch '{task_name}' completed")
        return results

    def shutdown(self, wait: bool = True) -> None:
        if self._executor is not None:
            logger.debug(f"Shutting down process pool (wait={wait})")
            self._executor.shutdown(wait=wait)
            self._executor = None

    def __enter__(self) -> "ProcessPool":
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        self.shutdown(wait=True)

"""Retry strategy for transient I/O failures."""

import logging
from functools import wraps
from typing import Any, Callable, Tuple, Type

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_exponential


logger = logging.getLogger(__name__)


def with_retry(
    max_attempts: int = 3,
    wait_min: float = 1.0,
    wait_max: float = 10.0,
    exceptions: Tuple[Type[Exception], ...] = (Exception,),
) -> Callable:
    """
    Decorator for automatic retry with exponential backoff.

    Only the listed exception types are retried; the last failure is re-raised.

    Args:
        max_attempts: Maximum number of attempts
        wait_min: Minimum wait between attempts (seconds)
        wait_max: Maximum wait between attempts (seconds)
        exceptions: Exception types that trigger a retry

    Example:
        >>> @with_retry(max_attempts=5, exceptions=(httpx.TransportError,))
        ... def post_report(client, payload):
        ...     return client.post(url, json=payload)
    """

    def decorator(func: Callable) -> Callable:
        @retry(
            stop=stop_after_attempt(max_attempts),
            wait=wait_exponential(min=wait_min, max=wait_max),
            retry=retry_if_exception_type(exceptions),
            reraise=True,
        )
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except exceptions as e:
                logger.warning(f"Attempt of {func.__name__} failed: {e}")
                raise

        return wrapper

    return decorator

"""Webhook notifier for identities that fail during a sweep."""

import logging
from datetime import datetime, timezone
from typing import Any, Dict, Optional

import httpx

from .strategies import with_retry


logger = logging.getLogger(__name__)


class ViolationNotifier:
    """
    Posts a JSON description of a counterexample to a webhook.

    Disabled when no URL is configured. Transport errors are retried; any
    remaining failure is logged and reported as ``False``, never raised.
    """

    def __init__(
        self,
        webhook_url: Optional[str] = None,
        timeout: float = 10.0,
        enabled: bool = True,
        max_attempts: int = 3,
        retry_wait: float = 0.5,
        transport: Optional[httpx.BaseTransport] = None,
    ) -> None:
        """
        Args:
            webhook_url: Target URL; empty or None disables the notifier
            timeout: Request timeout in seconds
            enabled: Master switch from configuration
            max_attempts: Attempts per notification on transport errors
            retry_wait: Minimum backoff between attempts (seconds)
            transport: Optional httpx transport (tests use ``httpx.MockTransport``)
        """
        self.webhook_url = webhook_url or None
        self.timeout = timeout
        self.enabled = enabled and self.webhook_url is not None
        self.sent = 0
        self._transport = transport
        self._post = with_retry(
            max_attempts=max_attempts,
            wait_min=retry_wait,
            wait_max=max(retry_wait, retry_wait * 8),
            exceptions=(httpx.TransportError,),
        )(self._post_once)

        if self.enabled:
            logger.info(f"ViolationNotifier initialized (URL: {self.webhook_url})")
        else:
            logger.debug("ViolationNotifier disabled (no URL configured)")

    @classmethod
    def from_config(cls, config: Dict[str, Any], transport: Optional[httpx.BaseTransport] = None) -> "ViolationNotifier":
        section = config.get("notifications", {})
        return cls(
            webhook_url=section.get("url") or None,
            timeout=float(section.get("timeout_seconds", 10.0)),
            enabled=bool(section.get("enabled", True)),
            max_attempts=int(section.get("max_attempts", 3)),
            transport=transport,
        )

    def _build_payload(self, check: str, details: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "check": check,
            "details": details,
        }

    def _post_once(self, payload: Dict[str, Any]) -> httpx.Response:
        with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
            response = client.post(self.webhook_url, json=payload)
            response.raise_for_status()
            return response

    def notify_violation(self, check: str, details: Dict[str, Any]) -> bool:
        """
        Send one violation report.

        Args:
            check: Name of the failed check (e.g. ``parity``)
            details: Serializable description of the complex and the numbers involved

        Returns:
            True if the webhook accepted the payload
        """
        if not self.enabled:
            logger.debug("Violation notifications disabled, skipping")
            return False
        try:
            self._post(self._build_payload(check, details))
        except httpx.HTTPError as e:
            logger.error(f"Violation webhook failed: {e}")
            return False
        self.sent += 1
        logger.info(f"Violation notification sent: {check}")
        return True

    def on_violation(self, event: Dict[str, Any]) -> None:
        """EventBus callback for ``sweep.violation``."""
        self.notify_violation(event.get("check", "unknown"), event)

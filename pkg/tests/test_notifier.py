"""Tests for the violation webhook notifier."""

import json

import httpx

from face_ring.core.event_bus import VIOLATION
from face_ring.core.session import Session
from face_ring.config.config_loader import DEFAULT_CONFIG
from face_ring.error_handling.violation_notifier import ViolationNotifier

URL = "http://hooks.test/face-ring"


def recording_transport(received, status=200):
    def handler(request: httpx.Request) -> httpx.Response:
        received.append(json.loads(request.content))
        return httpx.Response(status)

    return httpx.MockTransport(handler)


def test_disabled_without_url():
    notifier = ViolationNotifier(webhook_url="")
    assert not notifier.enabled
    assert notifier.notify_violation("parity", {}) is False


def test_posts_payload():
    received = []
    notifier = ViolationNotifier(URL, transport=recording_transport(received))
    assert notifier.notify_violation("parity[gf2]", {"complex": {"m": 3}})
    assert notifier.sent == 1
    assert received[0]["check"] == "parity[gf2]"
    assert received[0]["details"] == {"complex": {"m": 3}}
    assert "timestamp" in received[0]


def test_http_errors_are_reported_not_raised():
    notifier = ViolationNotifier(URL, transport=recording_transport([], status=500), retry_wait=0.0)
    assert notifier.notify_violation("oracle[rational]", {}) is False
    assert notifier.sent == 0


def test_transport_errors_are_retried():
    attempts = []

    def flaky(request: httpx.Request) -> httpx.Response:
        attempts.append(request)
        if len(attempts) < 3:
            raise httpx.ConnectError("connection refused", request=request)
        return httpx.Response(204)

    notifier = ViolationNotifier(URL, max_attempts=3, retry_wait=0.0, transport=httpx.MockTransport(flaky))
    assert notifier.notify_violation("support_bound[gf2]", {})
    assert len(attempts) == 3


def test_from_config_respects_switch():
    config = {"notifications": {"enabled": False, "url": URL}}
    assert not ViolationNotifier.from_config(config).enabled
    config = {"notifications": {"url": URL, "timeout_seconds": 2}}
    notifier = ViolationNotifier.from_config(config)
    assert notifier.enabled and notifier.timeout == 2.0


def test_session_forwards_violations():
    received = []
    notifier = ViolationNotifier(URL, transport=recording_transport(received))
    with Session(config=DEFAULT_CONFIG, configure_logging=False, notifier=notifier) as session:
        session.event_bus.publish(VIOLATION, {"check": "compression[smallest]", "complex": {"m": 2}})
    assert [payload["check"] for payload in received] == ["compression[smallest]"]

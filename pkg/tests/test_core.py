"""Tests for the event bus, resource limits, worker pool and session wiring."""

from face_ring.config.config_loader import DEFAULT_CONFIG
from face_ring.core.event_bus import CASE_CHECKED, VIOLATION, EventBus
from face_ring.core.resource_manager import ResourceManager
from face_ring.core.session import Session
from face_ring.threading.process_pool import ProcessPool


def square(x: int) -> int:
    return x * x


def test_event_bus_delivers_in_order():
    bus = EventBus()
    seen = []
    bus.subscribe(CASE_CHECKED, lambda data: seen.append(("first", data)))
    bus.subscribe(CASE_CHECKED, lambda data: seen.append(("second", data)))
    bus.publish(CASE_CHECKED, 1)
    assert seen == [("first", 1), ("second", 1)]
    assert bus.published[CASE_CHECKED] == 1


def test_failing_subscriber_does_not_block_others():
    bus = EventBus()
    seen = []

    def broken(data):
        raise RuntimeError("boom")

    bus.subscribe(VIOLATION, broken)
    bus.subscribe(VIOLATION, seen.append)
    bus.publish(VIOLATION, {"check": "parity"})
    assert seen == [{"check": "parity"}]


def test_unsubscribe_and_clear():
    bus = EventBus()
    bus.subscribe(VIOLATION, print)
    bus.unsubscribe(VIOLATION, print)
    assert bus.get_subscriber_count(VIOLATION) == 0
    bus.subscribe(CASE_CHECKED, print)
    bus.clear()
    assert bus.get_subscriber_count(CASE_CHECKED) == 0


def test_resource_manager_limits():
    resources = ResourceManager(process_memory_mb=128).get_system_resources()
    assert 1 <= resources.max_processes <= resources.cpu_count


def test_pool_small_batches_run_in_process():
    pool = ProcessPool(max_workers=4, parallel_threshold=100)
    assert pool.map(square, range(5)) == [0, 1, 4, 9, 16]
    assert pool._executor is None
    assert pool.batches_run == 1


def test_pool_keeps_order_across_workers():
    with ProcessPool(max_workers=2, parallel_threshold=1) as pool:
        assert pool.map(square, range(20), task_name="squares") == [x * x for x in range(20)]


def test_session_uses_configured_workers():
    config = {**DEFAULT_CONFIG, "resources": {**DEFAULT_CONFIG["resources"], "max_workers": 1}}
    with Session(config=config, configure_logging=False) as session:
        assert session.pool.max_workers == 1
        assert session.computation["field"] == "GF2"
        assert not session.notifier.enabled
        assert session.event_bus.get_subscriber_count(VIOLATION) == 1
    assert session.event_bus.get_subscriber_count(VIOLATION) == 0

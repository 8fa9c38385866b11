"""Session - Configuration, logging, worker pool and notifier for one invocation."""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from ..config import load_all_configs
from ..error_handling.violation_notifier import ViolationNotifier
from ..logging import setup_logging
from ..threading.process_pool import ProcessPool
from .event_bus import VIOLATION, EventBus
from .resource_manager import ResourceManager


logger = logging.getLogger(__name__)


class Session:
    """
    Owns the shared components of a run.

    Loads ``.env`` and the YAML configuration, configures logging, and wires
    the violation notifier to the event bus. Use as a context manager so the
    worker pool is shut down.
    """

    def __init__(
        self,
        config_dir: Optional[Path] = None,
        verbose: bool = False,
        configure_logging: bool = True,
        config: Optional[Dict[str, Any]] = None,
        notifier: Optional[ViolationNotifier] = None,
    ) -> None:
        """
        Args:
            config_dir: Directory with main.yaml / logging.yaml; defaults to ./config
            verbose: DEBUG logging on the console
            configure_logging: Install handlers on the root logger
            config: Ready-made configuration, bypassing the files
            notifier: Ready-made notifier, bypassing the configuration
        """
        load_dotenv()
        if config is None:
            config = load_all_configs(Path(config_dir) if config_dir is not None else Path("config"))
        self.config = config
        if configure_logging:
            setup_logging(self.config, verbose=verbose)

        resources = self.config.get("resources", {})
        self.event_bus = EventBus()
        self.resource_manager = ResourceManager(
            process_memory_mb=resources.get("process_memory_mb", ResourceManager.DEFAULT_PROCESS_MEMORY_MB),
            reserved_ram_percent=resources.get("reserved_ram_percent", ResourceManager.DEFAULT_RESERVED_RAM_PERCENT),
        )
        self.pool = ProcessPool(
            max_workers=resources.get("max_workers"),
            resource_manager=self.resource_manager,
            parallel_threshold=resources.get("parallel_threshold", 64),
        )
        self.notifier = notifier if notifier is not None else ViolationNotifier.from_config(self.config)
        self.event_bus.subscribe(VIOLATION, self.notifier.on_violation)
        logger.debug("Session initialized")

    @property
    def computation(self) -> Dict[str, Any]:
        return self.config.get("computation", {})

    def close(self) -> None:
        self.pool.shutdown(wait=True)
        self.event_bus.clear()

    def __enter__(self) -> "Session":
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        self.close()

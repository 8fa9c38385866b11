"""Resource manager - Worker limits from available memory and CPU count."""

import logging
import platform
from dataclasses import dataclass

import psutil


logger = logging.getLogger(__name__)

# Upper bound on worker processes per CPU, by operating system.
_PLATFORM_PROCESS_FACTOR = {"Windows": 2, "Darwin": 2, "Linux": 4}


@dataclass
class SystemResources:
    """
    Attributes:
        total_ram_gb: Total RAM in gigabytes
        available_ram_gb: Available RAM in gigabytes
        cpu_count: Logical CPUs
        max_processes: Recommended concurrent worker processes
    """

    total_ram_gb: float
    available_ram_gb: float
    cpu_count: int
    max_processes: int


class ResourceManager:
    """
    Computes how many worker processes a sweep may start.

    The limit is the smallest of: usable RAM divided by the per-process
    estimate, the CPU count, and a per-platform cap.
    """

    DEFAULT_PROCESS_MEMORY_MB = 256
    DEFAULT_RESERVED_RAM_PERCENT = 0.25

    def __init__(
        self,
        process_memory_mb: int = DEFAULT_PROCESS_MEMORY_MB,
        reserved_ram_percent: float = DEFAULT_RESERVED_RAM_PERCENT,
    ) -> None:
        self.process_memory_mb = process_memory_mb
        self.reserved_ram_percent = reserved_ram_percent

    def get_system_resources(self) -> SystemResources:
        mem = psutil.virtual_memory()
        total_ram_gb = mem.total / (1024**3)
        available_ram_gb = mem.available / (1024**3)
        cpu_count = psutil.cpu_count(logical=True) or 1

        usable_ram_mb = max(0.0, (available_ram_gb - total_ram_gb * self.reserved_ram_percent) * 1024)
        max_processes_ram = max(1, int(usable_ram_mb / self.process_memory_mb))
        platform_cap = cpu_count * _PLATFORM_PROCESS_FACTOR.get(platform.system(), 2)
        max_processes = min(max_processes_ram, cpu_count, platform_cap)

        logger.debug(
            f"System resources: RAM={total_ram_gb:.2f}GB (available={available_ram_gb:.2f}GB), "
            f"CPUs={cpu_count}, max_processes={max_processes}"
        )
        return SystemResources(
            total_ram_gb=total_ram_gb,
            available_ram_gb=available_ram_gb,
            cpu_count=cpu_count,
            max_processes=max_processes,
        )

    def get_max_processes(self) -> int:
        return self.get_system_resources().max_processes

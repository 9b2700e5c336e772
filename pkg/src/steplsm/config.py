"""Store configuration and the enums shared across modules."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidConfigError


class Policy(enum.Enum):
    BASIC = "basic"
    EAGER = "eager"
    ADAPTIVE = "adaptive"


class CompactionMode(enum.Enum):
    LEVELED = "leveled"
    STEPPED = "stepped"


class IndexKind(enum.Enum):
    VANILLA = "vanilla"
    THREE_LEVEL = "three-level"


class WalSyncMode(enum.Enum):
    # fsync on every append (tests, crash-safety runs)
    EVERY_WRITE = "every-write"
    # fsync at most once per interval; appends are still buffered writes
    INTERVAL = "interval"


@dataclass
class StoreConfig:
    """Tuning knobs for one store instance.

    growth_factor is both the level size ratio and the sub-level fan-in of
    stepped compaction. active_fraction and pipeline_cap are the accordion
    memstore parameters (recommended ranges 0.02..0.05 and 2..5); pipeline
    cap 0 disables the pipeline entirely, flushing each sealed segment
    straight to level 0.
    """

    growth_factor: int = 8
    memstore_budget: int = 4 * 2 ** 20
    active_fraction: float = 0.02
    pipeline_cap: int = 5
    policy: Policy = Policy.BASIC
    compaction_mode: CompactionMode = CompactionMode.STEPPED
    index_kind: IndexKind = IndexKind.THREE_LEVEL
    block_size: int = 4096
    # adaptive policy merges before flush when the pipeline's unique-key
    # fraction falls below this threshold
    adaptive_threshold: float = 0.8
    # level-0 byte capacity for leveled compaction; None = 4x memstore
    # budget so roughly four flushed snapshots fit before the cascade
    base_bytes: int | None = None
    wal_sync: WalSyncMode = WalSyncMode.EVERY_WRITE
    wal_sync_interval_ms: int = 100

    def validate(self) -> "StoreConfig":
        if not 2 <= self.growth_factor <= 64:
            raise InvalidConfigError(f"growth_factor {self.growth_factor} outside [2, 64]")
        if not 0.0 < self.active_fraction < 1.0:
            raise InvalidConfigError(f"active_fraction {self.active_fraction} outside (0, 1)")
        if self.pipeline_cap < 0:
            raise InvalidConfigError("pipeline_cap must be >= 0")
        if self.memstore_budget <= 0:
            raise InvalidConfigError("memstore_budget must be positive")
        if self.block_size < 256:
            raise InvalidConfigError("block_size must be at least 256 bytes")
        if not 0.0 < self.adaptive_threshold < 1.0:
            raise InvalidConfigError("adaptive_threshold outside (0, 1)")
        if self.base_bytes is not None and self.base_bytes <= 0:
            raise InvalidConfigError("base_bytes must be positive")
        return self

    @property
    def seal_threshold(self) -> float:
        """Active segment seals once its encoded size exceeds this."""
        return self.active_fraction * self.memstore_budget

    @property
    def level0_bytes(self) -> int:
        return self.base_bytes if self.base_bytes is not None else 4 * self.memstore_budget

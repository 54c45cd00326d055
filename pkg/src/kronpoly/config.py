"""Process-wide settings: oracle size limits and the cache directory."""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

import platformdirs

DEFAULT_MAX_N = 30
# The two-row Schur-Weyl backend is polynomial in n; this only guards runaway input.
DEFAULT_MAX_N_TWO_ROW = 400


@dataclass
class Settings:
    max_n: int = DEFAULT_MAX_N
    max_n_two_row: int = DEFAULT_MAX_N_TWO_ROW
    cache_dir: Path | None = None
    use_disk_cache: bool = True

    def resolved_cache_dir(self) -> Path:
        if self.cache_dir is not None:
            return Path(self.cache_dir)
        env = os.environ.get("KRON_CACHE_DIR")
        if env:
            return Path(env)
        return Path(platformdirs.user_cache_dir()) / "kronpoly"


settings = Settings()


@contextmanager
def override(**kwargs):
    """Temporarily change settings (used by the CLI and tests)."""
    old = {k: getattr(settings, k) for k in kwargs}
    for k, v in kwargs.items():
        setattr(settings, k, v)
    try:
        yield settings
    finally:
        for k, v in old.items():
            setattr(settings, k, v)

"""Scan configuration shared by the CLI and the verification suites."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

DEFAULT_MAX_SCAN_M = 6
DEFAULT_SAMPLE = 0
DEFAULT_SEED = 0
DEFAULT_LOG_FILE = "kasami.log"


class ScanConfigError(ValueError):
    """Raised when a scan setting from the CLI or environment is malformed."""


@dataclass(frozen=True)
class ScanConfig:
    workers: int
    max_scan_m: int
    sample: int
    seed: int
    log_file: str


def _resolve_int(cli_value: Optional[int], env_name: str, default: int, minimum: int) -> int:
    if cli_value is not None:
        value = int(cli_value)
        source = "command line"
    else:
        raw = (os.getenv(env_name) or "").strip()
        if not raw:
            return default
        try:
            value = int(raw)
        except ValueError as e:
            raise ScanConfigError(f"{env_name} must be an integer, got {raw!r}") from e
        source = env_name
    if value < minimum:
        raise ScanConfigError(f"{source} value for {env_name} must be >= {minimum}, got {value}")
    return value


def load_scan_config(
    *,
    workers: Optional[int] = None,
    max_scan_m: Optional[int] = None,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
    log_file: Optional[str] = None,
) -> ScanConfig:
    """Resolve scan settings: explicit argument, else env (or .env), else default.

    Env vars:
      KASAMI_WORKERS (default: CPU count)
      KASAMI_MAX_SCAN_M (default 6)
      KASAMI_SAMPLE (default 0, meaning exhaustive)
      KASAMI_SEED (default 0)
      KASAMI_LOG_FILE (default kasami.log)
    """
    if log_file is not None:
        resolved_log = log_file.strip() or DEFAULT_LOG_FILE
    else:
        resolved_log = (os.getenv("KASAMI_LOG_FILE") or "").strip() or DEFAULT_LOG_FILE

    return ScanConfig(
        workers=_resolve_int(workers, "KASAMI_WORKERS", os.cpu_count() or 1, 1),
        max_scan_m=_resolve_int(max_scan_m, "KASAMI_MAX_SCAN_M", DEFAULT_MAX_SCAN_M, 2),
        sample=_resolve_int(sample, "KASAMI_SAMPLE", DEFAULT_SAMPLE, 0),
        seed=_resolve_int(seed, "KASAMI_SEED", DEFAULT_SEED, 0),
        log_file=resolved_log,
    )

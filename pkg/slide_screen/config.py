# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.
"""Settings read from the environment."""

import logging
import os
from pathlib import Path
from typing import Optional

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

THREADS_VARIABLE = "SLIDE_SCREEN_THREADS"
LOG_DIR_VARIABLE = "SLIDE_SCREEN_LOG_DIR"


def worker_cap() -> int:
    """The most enumeration workers allowed by the environment."""
    raw = os.environ.get(THREADS_VARIABLE)
    if raw is None:
        return os.cpu_count() or 1

    try:
        cap = int(raw)
    except ValueError:
        log.warning("Ignoring %s=%r: not an integer", THREADS_VARIABLE, raw)
        return 1

    if cap < 1:
        log.warning("Ignoring %s=%r: must be at least 1", THREADS_VARIABLE, raw)
        return 1
    return cap


def resolve_workers(requested: Optional[int] = None) -> int:
    """Workers to use: the request (or the cap), never above the cap."""
    cap = worker_cap()
    if requested is None:
        return cap
    workers = max(1, min(requested, cap))
    if workers != requested:
        log.debug("Using %d workers instead of %d", workers, requested)
    return workers


def log_directory() -> Optional[Path]:
    """Directory for log files, if one is configured."""
    raw = os.environ.get(LOG_DIR_VARIABLE)
    return Path(raw) if raw else None

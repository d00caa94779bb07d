# utils/tracking.py
"""
Step tracking helper for the resolution engine.
-----------------------------------------------
- Safe, no-fail logging of per-step sizes and timings
- Called once per resolution step by resolution.engine
"""

import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterator

logger = logging.getLogger(__name__)


def track_step(algebra_name: str, step: int, sizes: Dict[str, int], elapsed_ms: int) -> None:
    """
    Logs the dimensions handled in one resolution step.
    Never throws.
    """
    try:
        logger.info(
            "Resolution step — algebra=%s i=%d %s elapsed_ms=%d",
            algebra_name,
            step,
            " ".join(f"{k}={v}" for k, v in sizes.items()),
            elapsed_ms,
        )
    except Exception:
        # never block a computation on logging
        pass


@contextmanager
def stopwatch() -> Iterator[Dict[str, int]]:
    """with stopwatch() as t: ...; t["ms"] holds the elapsed milliseconds afterwards."""
    box = {"ms": 0}
    start = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int((time.perf_counter() - start) * 1000)

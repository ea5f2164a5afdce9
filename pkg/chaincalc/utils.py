import logging
import os
import re
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple, TypeVar

T = TypeVar("T")

_log = logging.getLogger(__name__)

THREADS_ENV = "CHAINCALC_THREADS"

_LEVELS = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")


@lru_cache()
def get_thread_count() -> int:
    """
    Size of the case-level worker pool, read once from ``CHAINCALC_THREADS``.

    Missing, malformed or non-positive values fall back to 1.
    """
    raw = os.getenv(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        _log.warning("%s=%r is not an integer, using 1 thread", THREADS_ENV, raw)
        return 1
    if value < 1:
        _log.warning("%s=%d is not positive, using 1 thread", THREADS_ENV, value)
        return 1
    return value


def parse_levels(text: str) -> Tuple[int, int]:
    """
    Parse ``"a..b"`` (or a single ``"a"``) into an inclusive level range.

    Example:
    ```python
    parse_levels("2..8")  # (2, 8)
    parse_levels("5")     # (5, 5)
    ```
    """
    match = _LEVELS.match(text)
    if match is None:
        raise ValueError(f"levels must look like 'a..b', got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise ValueError(f"empty level range {text!r}")
    return lo, hi


def run_ordered(tasks: Sequence[Callable[[], T]], threads: int = 1) -> List[T]:
    """
    Run zero-argument callables, possibly on a thread pool, returning
    results in task order.
    """
    if threads <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(task) for task in tasks]
        return [f.result() for f in futures]


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")

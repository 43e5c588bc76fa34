"""Process-level parallelism for independent computations.

TORUSQ_THREADS caps the worker count (default: the machine's CPU count).
Results are always returned in input order, so output is deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from .errors import PreconditionError

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    raw = os.environ.get("TORUSQ_THREADS")
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise PreconditionError(f"TORUSQ_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise PreconditionError(f"TORUSQ_THREADS must be a positive integer, got {raw!r}")
    return n


def pmap(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map ``fn`` over ``items``, in worker processes when more than one is allowed.

    ``fn`` must be a picklable module-level callable.
    """
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))

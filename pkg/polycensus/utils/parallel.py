"""
Worker pool for sharded census runs
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from polycensus.core.config import settings

T = TypeVar("T")
R = TypeVar("R")


def shard_ranges(size: int, chunk: int) -> List[Tuple[int, int]]:
    """Split [0, size) into consecutive [start, stop) ranges of at most chunk indices"""
    if chunk <= 0:
        raise ValueError("Chunk size must be positive")
    return [(start, min(start + chunk, size)) for start in range(0, size, chunk)]


def run_sharded(
    func: Callable[[T], R],
    tasks: Sequence[T],
    workers: Optional[int] = None,
) -> List[R]:
    """
    Apply func to every task, in task order

    A single worker (or a single task) runs in-process; otherwise the tasks
    are spread over a process pool. Results come back in task order, so a
    combination by addition does not depend on the worker count.
    """
    workers = workers or settings.worker_count()
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    workers = min(workers, len(tasks))
    logger.debug(f"Dispatching {len(tasks)} shards to {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


def combine_counts(results: Iterable[Tuple[int, ...]]) -> Tuple[int, ...]:
    """Component-wise sum of count tuples"""
    totals: Optional[List[int]] = None
    for result in results:
        if totals is None:
            totals = list(result)
        else:
            totals = [a + b for a, b in zip(totals, result)]
    return tuple(totals or ())

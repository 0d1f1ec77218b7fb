"""Worker-pool plumbing; TOURNEY_THREADS caps the thread count (default 1).

All parallel reductions in this package sum integers, so results never
depend on the schedule.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    raw = os.environ.get("TOURNEY_THREADS", "")
    try:
        w = int(raw)
    except ValueError:
        return 1
    return max(1, w)


def map_jobs(fn, jobs, workers: int | None = None) -> list:
    """Run fn over jobs, possibly on a thread pool; result order matches jobs."""
    jobs = list(jobs)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))

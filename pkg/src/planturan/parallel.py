"""
Worker pool for partitioned scans.

A task is any top-level function ``task(part, parts, *args)``; the pool
runs every part and returns the results in part order, so aggregation is
independent of scheduling.
"""
import functools
import logging

from joblib import Parallel, delayed

logger = logging.getLogger(__name__)


def partitioned(task):
    """Mark `task` as a partitioned task; calling it runs part 0 of 1"""
    @functools.wraps(task)
    def wrapper(part=0, parts=1, *args, **kwargs):
        return task(part, parts, *args, **kwargs)
    wrapper.partitioned = True
    return wrapper


def run_partitioned(task, parts, *args, jobs=1, **kwargs):
    """
    Run `task` on all `parts` partitions.

    Args:
        jobs: worker processes; 1 runs in this process, -1 uses all cores
    """
    if jobs == 1 or parts == 1:
        return [task(j, parts, *args, **kwargs) for j in range(parts)]
    logger.debug('running %s on %d partitions with %d workers',
                 getattr(task, '__name__', task), parts, jobs)
    return Parallel(n_jobs=jobs)(delayed(task)(j, parts, *args, **kwargs) for j in range(parts))


def parts_for(jobs):
    """Number of partitions used for `jobs` workers"""
    if jobs == 1:
        return 1
    if jobs < 0:
        import joblib
        jobs = joblib.cpu_count()
    return 4 * jobs

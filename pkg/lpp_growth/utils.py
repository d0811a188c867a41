# -*- coding: utf-8 -*-
"""
Common utilities that don't fit elsewhere in lpp_growth
"""
from concurrent.futures import ProcessPoolExecutor
import logging
from os import environ

L = logging.getLogger(__name__)

THREADS_ENV = 'LPP_THREADS'
''' Environment variable that caps the number of worker processes '''


def FCN(cls):
    return str(cls.__module__) + '.' + str(cls.__name__)


def chunked(seq, n):
    "Split a sequence into at most `n` contiguous, nearly equal chunks"
    seq = list(seq)
    n = max(1, min(n, len(seq)))
    size, extra = divmod(len(seq), n)
    res = []
    start = 0
    for i in range(n):
        end = start + size + (1 if i < extra else 0)
        res.append(seq[start:end])
        start = end
    return res


def worker_count(workers=None):
    '''
    Resolve the number of worker processes to use

    Parameters
    ----------
    workers : int, optional
        An explicit count. If not given, ``LPP_THREADS`` is consulted, and if that isn't
        set, a single worker is used

    Returns
    -------
    int
        A count of at least 1
    '''
    if workers is None:
        env = environ.get(THREADS_ENV)
        if env:
            try:
                workers = int(env)
            except ValueError:
                L.warning('Ignoring non-integer %s=%r', THREADS_ENV, env)
    if workers is None:
        return 1
    return max(1, int(workers))


def parallel_map(func, tasks, workers=None):
    '''
    Map `func` over `tasks`, in worker processes if more than one worker is allowed.

    Results come back in task order whatever the worker count.

    Parameters
    ----------
    func : callable
        A module-level (picklable) function of one argument
    tasks : list
        The arguments
    workers : int, optional
        Worker count. See `worker_count`
    '''
    tasks = list(tasks)
    workers = min(worker_count(workers), len(tasks))
    if workers <= 1:
        return [func(t) for t in tasks]
    L.debug('Fanning %d tasks out to %d workers', len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks))

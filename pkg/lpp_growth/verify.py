'''
Comparison of observed last passage partitions with the exact Schur process measures.

Exact comparisons enumerate every truncated weight assignment of the cells a path reads
and add up the exact probabilities of the partition sequences they produce. Monte Carlo
comparisons bin sampled sequences. Both report a total variation distance against the
exact measure.
'''
from collections import Counter
from fractions import Fraction
from itertools import product
from math import sqrt
import logging

import numpy as np

from .exceptions import BudgetExceeded, BadParameter, BadEndpoints, ConservationViolation
from .greene import brute_g_k, brute_h_k, STATE_BUDGET
from .growth import grow_rectangle, greene_prefix
from .lpp import (observe, symmetric_matrix, sample_replicas, trial_stream, full_cells)
from .matrix import WeightMatrix
from .measure import probability, enumerate_sequences
from .paths import shape_of, strict_lower
from .utils import parallel_map, chunked

L = logging.getLogger(__name__)

ENUMERATION_BUDGET = 10 ** 7
''' Default cap on the number of weight assignments an exact comparison enumerates '''

EXACT = 'exact-truncated'
MONTE_CARLO = 'monte-carlo'

LOCALITY_PROBES = 3


def _seq_json(seq):
    return [list(lam) for lam in seq]


def _number(v):
    if isinstance(v, Fraction):
        return {'exact': str(v), 'float': float(v)}
    return float(v)


class ComparisonReport(object):
    '''
    The outcome of comparing observed sequence frequencies with the exact measure

    Attributes
    ----------
    mode : str
        ``'exact-truncated'`` or ``'monte-carlo'``
    side : str
        ``'full'`` or ``'half'``
    path : lpp_growth.paths.DownRightPath
    rows : list of tuple
        ``(sequence, observed, exact)`` for each sequence compared
    tv_distance : fractions.Fraction or float
    tolerance : fractions.Fraction or float
        The distance allowed for a pass
    passed : bool
    extra : dict
        Mode-specific values: truncation and truncated mass for exact reports, sample
        count, overflow and histogram for Monte Carlo ones
    '''

    def __init__(self, mode, side, path, rows, tv_distance, tolerance, **extra):
        self.mode = mode
        self.side = side
        self.path = path
        self.rows = rows
        self.tv_distance = tv_distance
        self.tolerance = tolerance
        self.passed = tv_distance <= tolerance and not extra.get('locality_discrepancy', False)
        self.extra = extra

    @property
    def exit_status(self):
        return 0 if self.passed else 1

    def to_json(self):
        res = {'mode': self.mode,
               'side': self.side,
               'path': self.path.to_json(),
               'tv_distance': _number(self.tv_distance),
               'tolerance': _number(self.tolerance),
               'pass': self.passed}
        for k, v in self.extra.items():
            res[k] = _number(v) if isinstance(v, (Fraction, float)) else v
        res['table'] = [{'sequence': _seq_json(seq),
                         'observed': _number(obs),
                         'exact': _number(exact)} for seq, obs, exact in self.rows]
        return res

    def __repr__(self):
        return 'ComparisonReport(mode={!r}, side={!r}, tv_distance={}, pass={})'.format(
                self.mode, self.side, self.tv_distance, self.passed)


class CheckReport(object):
    '''
    The outcome of a randomized check: how many trials ran and which failed

    Attributes
    ----------
    name : str
    trials : int
    failures : list of dict
        One JSON-ready description per failing trial
    '''

    def __init__(self, name, trials, failures, **extra):
        self.name = name
        self.trials = trials
        self.failures = failures
        self.extra = extra

    @property
    def passed(self):
        return not self.failures

    @property
    def exit_status(self):
        return 0 if self.passed else 1

    def to_json(self):
        res = {'check': self.name, 'trials': self.trials, 'pass': self.passed}
        res.update(self.extra)
        res['failures'] = self.failures
        return res


def build_matrix(side, size, cells, values):
    '''
    The matrix with ``values[t]`` at ``cells[t]``, mirrored across the diagonal for half
    space, and zero elsewhere
    '''
    if side == 'full':
        return WeightMatrix.from_cells(size[0], size[1], dict(zip(cells, values)))
    return symmetric_matrix(size[0], cells, values)


class _Window(object):
    '''
    The cells an exact comparison enumerates

    For full space these are the cells of the path's shape; for half space the diagonal
    cells ``(i, i)``, ``i <= N``, and the shape's cells strictly below the diagonal, one
    per symmetric pair.
    '''

    def __init__(self, gamma, params):
        self.gamma = gamma
        self.params = params
        if params.side == 'full':
            if not gamma.is_full:
                raise BadEndpoints(gamma, 'from the y-axis to the x-axis')
            self.size = (gamma.end.x, gamma.start.y)
            self.cells = sorted(shape_of(gamma).cells, key=lambda c: (c.row, c.col))
        else:
            if not gamma.is_half:
                raise BadEndpoints(gamma, 'from the diagonal to the x-axis')
            N = gamma.start.x
            self.size = (gamma.end.x, gamma.end.x)
            self.cells = sorted([(i, i) for i in range(1, N + 1)] + list(strict_lower(gamma)),
                                key=lambda c: (c[1], c[0]))
        params.validate(self.cells)

    def all_cells(self):
        ''' Every cell whose value the path could read, one per symmetric pair '''
        m, n = self.size
        if self.params.side == 'full':
            return full_cells(m, n)
        N = self.gamma.start.y
        return [(i, j) for j in range(1, N + 1) for i in range(j, m + 1)]

    def other_cells(self):
        mine = set(tuple(c) for c in self.cells)
        return [c for c in self.all_cells() if tuple(c) not in mine]

    def everything(self):
        ''' Enumerate every cell the path could read rather than only its shape '''
        self.cells = self.all_cells()
        self.params.validate(self.cells)

    def matrix(self, values):
        return build_matrix(self.params.side, self.size, self.cells, values)


def _firewall(W, gamma):
    '''
    Check that growth agrees with both brute-force oracles at every vertex of `gamma`
    '''
    table = grow_rectangle(W, W.m, W.n)
    for u, v in gamma.vertices:
        if u == 0 or v == 0:
            continue
        window = W.window(u, v)
        for k in range(1, min(u, v) + 1):
            grown = greene_prefix(table, (u, v), k)
            g = brute_g_k(window, k)
            h = brute_h_k(window, k)
            if not grown == g == h:
                raise ConservationViolation(
                        'greene firewall',
                        'at {} with k={}: growth {}, g {}, h {} for {}'.format(
                            (u, v), k, grown, g, h, window))


def _enumerate_chunk(task):
    gamma, params, cells, size, T, first, firewall = task
    qs = [params.q(*c) for c in cells]
    heads = [(first,)] if first is not None else [()]
    rest = len(cells) - (1 if first is not None else 0)
    res = {}
    for head in heads:
        for tail in product(range(T + 1), repeat=rest):
            values = head + tail
            W = build_matrix(params.side, size, cells, values)
            if firewall:
                _firewall(W, gamma)
            seq = observe(W, gamma).lambdas
            mass = Fraction(1)
            for q, w in zip(qs, values):
                mass *= (1 - q) * q ** w
            res[seq] = res.get(seq, Fraction(0)) + mass
    return res


def _perturbation_consistent(window, T, rng):
    others = window.other_cells()
    if not others:
        return True
    for _ in range(LOCALITY_PROBES):
        values = [int(v) for v in rng.integers(0, T + 1, size=len(window.cells))]
        W = window.matrix(values)
        base = observe(W, window.gamma).lambdas
        entries = {(i, j): W[i, j] for i, j in W.cells()}
        for (i, j) in others:
            v = int(rng.integers(1, T + 2))
            entries[(i, j)] = v
            entries[(j, i) if window.params.side == 'half' else (i, j)] = v
        perturbed = WeightMatrix.from_cells(W.m, W.n, entries)
        if observe(perturbed, window.gamma).lambdas != base:
            return False
    return True


def exact_compare(gamma, params, T, budget=ENUMERATION_BUDGET, firewall=True,
                  locality=True, workers=None, seed=0, progress=None):
    '''
    Compare the truncated law of the sequence along `gamma` with the exact measure

    Every assignment of values ``0..T`` to the cells `gamma` reads is enumerated; its
    exact probability is the product of the geometric point masses ``(1 - q) q^w``. The
    total variation distance over the sequences seen is at most the mass the truncation
    drops, which is bounded by the sum of ``q^(T + 1)`` over the cells.

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
    params : lpp_growth.lpp.FullSpaceParams or lpp_growth.lpp.HalfSpaceParams
    T : int
        Largest weight enumerated
    budget : int
        Most weight assignments to enumerate
    firewall : bool
        Check growth against `~lpp_growth.greene.brute_g_k` and
        `~lpp_growth.greene.brute_h_k` for every assignment
    locality : bool
        Confirm first that cells outside of the enumerated set leave the sequence alone
    workers : int, optional
        Worker processes; the result does not depend on it
    seed : int
        Seed of the locality probes
    progress : tqdm.tqdm, optional
        Updated once per finished chunk

    Returns
    -------
    ComparisonReport

    Raises
    ------
    BudgetExceeded
        If more than `budget` assignments would be enumerated
    '''
    if T < 0:
        raise BadParameter('Truncation must be non-negative, not {}'.format(T))
    window = _Window(gamma, params)
    flagged = False
    if locality:
        if not _perturbation_consistent(window, T, trial_stream(seed, 0)):
            L.warning('Cells outside of the shape of %s changed the observed sequence;'
                      ' enumerating the whole %dx%d window', gamma, window.size[0], window.size[1])
            flagged = True
            window.everything()
    count = (T + 1) ** len(window.cells)
    if count > budget:
        raise BudgetExceeded(count, budget)
    L.debug('Enumerating %d weight assignments over %d cells', count, len(window.cells))

    firsts = list(range(T + 1)) if window.cells else [None]
    tasks = [(gamma, params, window.cells, window.size, T, f, firewall)
             for f in firsts]
    lhs = {}
    for chunk in parallel_map(_enumerate_chunk, tasks, workers):
        for seq, mass in chunk.items():
            lhs[seq] = lhs.get(seq, Fraction(0)) + mass
        if progress is not None:
            progress.update(1)

    rows = []
    distance = Fraction(0)
    rhs_total = Fraction(0)
    for seq in sorted(lhs):
        exact = probability(gamma, params, seq)
        rows.append((seq, lhs[seq], exact))
        distance += abs(lhs[seq] - exact)
        rhs_total += exact
    tv = distance / 2
    truncated = sum((params.q(*c) ** (T + 1) for c in window.cells), Fraction(0))
    return ComparisonReport(EXACT, params.side, gamma, rows, tv, truncated,
                            truncation=T,
                            truncated_mass=truncated,
                            lhs_total=sum(lhs.values(), Fraction(0)),
                            rhs_total=rhs_total,
                            cells=[list(c) for c in window.cells],
                            locality_discrepancy=flagged)


def exact_compare_full(gamma, params, T, **kwargs):
    '''
    `exact_compare` for a full path and `~lpp_growth.lpp.FullSpaceParams`
    '''
    if params.side != 'full':
        raise BadParameter('Full-space comparison needs x and y parameters')
    return exact_compare(gamma, params, T, **kwargs)


def exact_compare_half(gamma, params, T, **kwargs):
    '''
    `exact_compare` for a half path and `~lpp_growth.lpp.HalfSpaceParams`. The diagonal
    cells ``(i, i)``, ``i <= N``, and the cells strictly below the diagonal are
    enumerated; each off-diagonal value is mirrored.
    '''
    if params.side != 'half':
        raise BadParameter('Half-space comparison needs x and c parameters')
    return exact_compare(gamma, params, T, **kwargs)


def _observe_chunk(task):
    gamma, side, cells, size, rows = task
    return [observe(build_matrix(side, size, cells, values), gamma).lambdas for values in rows]


def mc_compare(gamma, params, n_samples, seed, cap, workers=None, emit_hist=False,
               progress=None):
    '''
    Compare the empirical law of the sequence along `gamma` over `n_samples` sampled
    matrices with the exact measure

    Sequences with a part above `cap` share one overflow bin. The comparison passes when
    the total variation distance is at most ``3 * sqrt(S / n_samples)`` where ``S`` is
    the number of sequences with parts at most `cap`.

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
    params : lpp_growth.lpp.FullSpaceParams or lpp_growth.lpp.HalfSpaceParams
    n_samples : int
    seed : int
    cap : int
    workers : int, optional
    emit_hist : bool
        Include the histogram of observed sequences in the report
    progress : tqdm.tqdm, optional

    Returns
    -------
    ComparisonReport
    '''
    if n_samples < 1:
        raise BadParameter('At least one sample is needed')
    if params.side == 'full':
        if not gamma.is_full:
            raise BadEndpoints(gamma, 'from the y-axis to the x-axis')
        size = (gamma.end.x, gamma.start.y)
        cells = full_cells(*size)
    else:
        if not gamma.is_half:
            raise BadEndpoints(gamma, 'from the diagonal to the x-axis')
        size = (gamma.end.x, gamma.end.x)
        cells = [(i, j) for i in range(1, size[0] + 1) for j in range(1, i + 1)]
    draws = sample_replicas(params, cells, seed, n_samples)
    if cells:
        distinct, inverse = np.unique(draws, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)
    else:
        distinct, inverse = np.zeros((1, 0), dtype=np.int64), np.zeros(n_samples, dtype=np.int64)
    L.debug('%d samples give %d distinct weight assignments', n_samples, len(distinct))

    rows = [tuple(int(v) for v in r) for r in distinct]
    tasks = [(gamma, params.side, cells, size, chunk)
             for chunk in chunked(rows, max(1, len(rows) // 1000))]
    observed = []
    for res in parallel_map(_observe_chunk, tasks, workers):
        observed.extend(res)
        if progress is not None:
            progress.update(len(res))

    counts = Counter(observed[t] for t in inverse)
    support = list(enumerate_sequences(gamma, cap, side=params.side))
    exact = {seq: probability(gamma, params, seq) for seq in support}
    overflow = 0
    in_support = Counter()
    for seq, c in counts.items():
        if seq in exact:
            in_support[seq] += c
        else:
            overflow += c
    table = []
    distance = 0.0
    for seq in support:
        emp = in_support[seq] / n_samples
        table.append((seq, emp, exact[seq]))
        distance += abs(emp - float(exact[seq]))
    exact_overflow = 1 - float(sum(exact.values(), Fraction(0)))
    distance += abs(overflow / n_samples - exact_overflow)
    tv = distance / 2
    tolerance = 3 * sqrt(len(support) / n_samples)
    extra = dict(sample_count=n_samples, seed=seed, cap=cap, support_size=len(support),
                 overflow=overflow, exact_overflow=exact_overflow)
    if emit_hist:
        extra['histogram'] = [{'sequence': _seq_json(seq), 'count': c}
                              for seq, c in sorted(counts.items())]
    return ComparisonReport(MONTE_CARLO, params.side, gamma,
                            [r for r in table if r[1] or r[2]], tv, tolerance, **extra)


def greene_check(rows, cols, max_entry, trials, seed, budget=STATE_BUDGET, progress=None):
    '''
    Compare growth prefix sums with `~lpp_growth.greene.brute_g_k` and
    `~lpp_growth.greene.brute_h_k` on random matrices

    Parameters
    ----------
    rows : int
    cols : int
    max_entry : int
    trials : int
    seed : int

    Returns
    -------
    CheckReport
        Each failure carries the matrix, ``k`` and the three values
    '''
    if rows < 0 or cols < 0 or max_entry < 0 or trials < 0:
        raise BadParameter('Sizes, entries and trial counts are non-negative')
    failures = []
    for t in range(trials):
        rng = trial_stream(seed, t)
        A = WeightMatrix(rng.integers(0, max_entry + 1, size=(rows, cols)).tolist())
        table = grow_rectangle(A, A.m, A.n)
        for k in range(1, min(A.m, A.n) + 2):
            grown = greene_prefix(table, (A.m, A.n), k)
            g = brute_g_k(A, k, budget=budget)
            h = brute_h_k(A, k, budget=budget)
            if not grown == g == h:
                L.info('Trial %d: k=%d growth=%d g=%d h=%d', t, k, grown, g, h)
                failures.append({'trial': t, 'k': k, 'matrix': A.to_json(),
                                 'growth': grown, 'g': g, 'h': h})
        if progress is not None:
            progress.update(1)
    return CheckReport('greene-check', trials, failures,
                       rows=rows, cols=cols, max_entry=max_entry, seed=seed)


__all__ = ['ComparisonReport', 'CheckReport', 'exact_compare', 'exact_compare_full',
           'exact_compare_half', 'mc_compare', 'greene_check']

'''
Geometric last passage percolation in full and half space.

Noise is drawn from one counter-based stream per cell, so the value at a cell depends only
on the seed and the cell. Enlarging a window extends the noise rather than reshuffling
it, and the `r`-th draw of every stream together form the `r`-th replica of a Monte Carlo
run.
'''
from collections import namedtuple
from fractions import Fraction
import logging

import numpy as np

from .configure import parse_rational, format_rational
from .exceptions import BadParameter, OutOfSupport
from .growth import grow_rectangle
from .matrix import WeightMatrix
from .partition import Cell, Partition

L = logging.getLogger(__name__)


def _rationals(values, name):
    try:
        values = tuple(parse_rational(v) for v in values)
    except TypeError:
        raise BadParameter('{} must be a list of rationals'.format(name))
    for i, v in enumerate(values, 1):
        if v < 0:
            raise BadParameter('{}_{} = {} is negative'.format(name, i, v))
    return values


def _variable(values, name, i):
    if not 1 <= i <= len(values):
        raise BadParameter('No parameter {}_{}: only {} given'.format(name, i, len(values)))
    return values[i - 1]


class FullSpaceParams(namedtuple('FullSpaceParams', ('x', 'y'))):
    '''
    Parameters of full-space geometric LPP: ``w(i, j) ~ Geom(x_i * y_j)``

    Parameters
    ----------
    x : list of rational
        Column parameters, non-negative
    y : list of rational
        Row parameters, non-negative
    '''

    def __new__(cls, x, y):
        return super(FullSpaceParams, cls).__new__(cls, _rationals(x, 'x'), _rationals(y, 'y'))

    side = 'full'

    def q(self, i, j):
        ''' The geometric parameter of cell ``(i, j)`` '''
        return _variable(self.x, 'x', i) * _variable(self.y, 'y', j)

    def x_at(self, i):
        return _variable(self.x, 'x', i)

    def y_at(self, j):
        return _variable(self.y, 'y', j)

    def validate(self, cells):
        '''
        Confirm ``0 <= q < 1`` at each of `cells`

        Raises
        ------
        BadParameter
        '''
        for c in cells:
            q = self.q(*c)
            if q >= 1:
                raise BadParameter('x_{0} * y_{1} = {2} at cell ({0}, {1}) is not below 1'.format(
                    c[0], c[1], q))

    def to_json(self):
        return {'x': [format_rational(v) for v in self.x],
                'y': [format_rational(v) for v in self.y]}


class HalfSpaceParams(namedtuple('HalfSpaceParams', ('x', 'c'))):
    '''
    Parameters of half-space geometric LPP: ``w(i, j) = w(j, i) ~ Geom(x_i * x_j)`` off the
    diagonal and ``w(i, i) ~ Geom(c * x_i)``

    Parameters
    ----------
    x : list of rational
    c : rational
        The diagonal parameter
    '''

    def __new__(cls, x, c):
        c = parse_rational(c)
        if c < 0:
            raise BadParameter('c = {} is negative'.format(c))
        return super(HalfSpaceParams, cls).__new__(cls, _rationals(x, 'x'), c)

    side = 'half'

    @property
    def y(self):
        return self.x

    def q(self, i, j):
        if i == j:
            return self.c * _variable(self.x, 'x', i)
        return _variable(self.x, 'x', i) * _variable(self.x, 'x', j)

    def x_at(self, i):
        return _variable(self.x, 'x', i)

    y_at = x_at

    def validate(self, cells):
        '''
        Confirm ``0 <= q < 1`` at each of `cells`

        Raises
        ------
        BadParameter
        '''
        for c in cells:
            q = self.q(*c)
            if q >= 1:
                if c[0] == c[1]:
                    raise BadParameter('c * x_{} = {} is not below 1'.format(c[0], q))
                raise BadParameter('x_{} * x_{} = {} is not below 1'.format(c[0], c[1], q))

    def to_json(self):
        return {'x': [format_rational(v) for v in self.x],
                'c': format_rational(self.c)}


def params_from_json(ob):
    '''
    Parameters from ``{"x": [...], "y": [...]}`` (full space) or ``{"x": [...], "c": ...}``
    (half space)

    Raises
    ------
    BadParameter
    '''
    if not isinstance(ob, dict) or 'x' not in ob:
        raise BadParameter('Parameters are given as {"x": [...], "y": [...]} or '
                           '{"x": [...], "c": "p/q"}')
    if 'c' in ob:
        if 'y' in ob:
            raise BadParameter('Give either "y" (full space) or "c" (half space), not both')
        return HalfSpaceParams(ob['x'], ob['c'])
    if 'y' not in ob:
        raise BadParameter('Full-space parameters need "y"')
    return FullSpaceParams(ob['x'], ob['y'])


def cell_stream(seed, i, j):
    '''
    The random stream of cell ``(i, j)``

    Returns
    -------
    numpy.random.Generator
        Over a `~numpy.random.Philox` bit generator keyed by ``(seed, i, j)``
    '''
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(i, j))))


def trial_stream(seed, *key):
    ''' A random stream for trial number `key` of a seeded run '''
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=key)))


def _check_q(q):
    q = Fraction(q)
    if q < 0 or q >= 1:
        raise BadParameter('Geometric parameter {} is not in [0, 1)'.format(q))
    return q


def sample_geometric(q, rng):
    '''
    A draw ``k`` with probability ``q**k * (1 - q)``, by inversion of one uniform draw

    Parameters
    ----------
    q : rational
        In ``[0, 1)``. It is converted to a float for the inversion
    rng : numpy.random.Generator

    Returns
    -------
    int

    Raises
    ------
    BadParameter
        If `q` is not in ``[0, 1)``
    '''
    q = _check_q(q)
    if q == 0:
        return 0
    return int(sample_geometric_array(q, rng, 1)[0])


def sample_geometric_array(q, rng, size):
    '''
    `size` independent draws of `sample_geometric`, the `r`-th from the `r`-th uniform of
    `rng`

    Returns
    -------
    numpy.ndarray
        ``int64`` values
    '''
    q = _check_q(q)
    if q == 0:
        return np.zeros(size, dtype=np.int64)
    u = rng.random(size)
    return np.floor(np.log1p(-u) / np.log(float(q))).astype(np.int64)


def _require_seed(seed):
    if seed is None:
        raise BadParameter('A seed is required for reproducible sampling')
    if int(seed) < 0:
        raise BadParameter('Seeds are non-negative, not {}'.format(seed))
    return int(seed)


def full_cells(m, n):
    return [Cell(i, j) for j in range(1, n + 1) for i in range(1, m + 1)]


def half_free_cells(n):
    ''' The cells ``(i, j)`` with ``j <= i <= n``: one per symmetric pair, diagonal included '''
    return [Cell(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


def sample_replicas(params, cells, seed, count):
    '''
    `count` replicas of the noise on `cells`, replica `r` made of the `r`-th draw of each
    cell stream

    Returns
    -------
    numpy.ndarray
        Shape ``(count, len(cells))``; column ``t`` holds the draws of ``cells[t]``
    '''
    seed = _require_seed(seed)
    params.validate(cells)
    res = np.zeros((count, len(cells)), dtype=np.int64)
    for t, (i, j) in enumerate(cells):
        res[:, t] = sample_geometric_array(params.q(i, j), cell_stream(seed, i, j), count)
    return res


def sample_full_replicas(params, m, n, seed, count):
    '''
    `count` replicas of `sample_full`

    Returns
    -------
    tuple
        ``(cells, draws)`` as from `sample_replicas` over the cells of the window
    '''
    cells = full_cells(m, n)
    return cells, sample_replicas(params, cells, seed, count)


def sample_half_replicas(params, n, seed, count):
    '''
    `count` replicas of `sample_half`, one column per symmetric pair of cells

    Returns
    -------
    tuple
        ``(cells, draws)`` with `cells` from `half_free_cells`
    '''
    cells = half_free_cells(n)
    return cells, sample_replicas(params, cells, seed, count)


def sample_full(params, m, n, seed):
    '''
    An `m` by `n` matrix of independent ``Geom(x_i * y_j)`` weights

    Parameters
    ----------
    params : FullSpaceParams
    m : int
        Columns
    n : int
        Rows
    seed : int

    Returns
    -------
    lpp_growth.matrix.WeightMatrix

    Raises
    ------
    BadParameter
        If ``x_i * y_j >= 1`` for a cell of the window
    '''
    cells, draws = sample_full_replicas(params, m, n, seed, 1)
    draws = draws[0]
    return WeightMatrix.from_cells(m, n, {c: int(v) for c, v in zip(cells, draws)})


def symmetric_matrix(n, cells, values):
    ''' The `n` by `n` symmetric matrix with ``values[t]`` at ``cells[t]`` and its mirror '''
    entries = {}
    for (i, j), v in zip(cells, values):
        entries[(i, j)] = int(v)
        entries[(j, i)] = int(v)
    return WeightMatrix.from_cells(n, n, entries)


def sample_half(params, n, seed):
    '''
    An `n` by `n` symmetric matrix with ``Geom(x_i * x_j)`` weights off the diagonal and
    ``Geom(c * x_i)`` on it

    Parameters
    ----------
    params : HalfSpaceParams
    n : int
    seed : int

    Returns
    -------
    lpp_growth.matrix.WeightMatrix
    '''
    cells, draws = sample_half_replicas(params, n, seed, 1)
    draws = draws[0]
    return symmetric_matrix(n, cells, draws)


class LppObservation(namedtuple('LppObservation', ('path', 'lambdas'))):
    '''
    The partitions ``lam(u, v)`` at the vertices of a down-right path
    '''

    def g_times(self, i, depth=None):
        return g_times(self, i, depth)

    def to_json(self):
        return {'path': self.path.to_json(),
                'lambdas': [list(lam) for lam in self.lambdas]}


def observe(W, gamma):
    '''
    The partitions ``lam(u, v)`` of the windows of `W` cut off by the vertices of `gamma`

    The prefix sums of ``lam(u, v)`` are the higher-rank last passage times of the
    window of columns ``1..u`` and rows ``1..v``.

    Parameters
    ----------
    W : lpp_growth.matrix.WeightMatrix
    gamma : lpp_growth.paths.DownRightPath

    Returns
    -------
    LppObservation

    Raises
    ------
    OutOfSupport
        If a vertex of `gamma` lies outside of `W`
    NotSymmetric
        If `gamma` is a half path and the square of `W` it reads is not symmetric
    '''
    if gamma.is_half and not gamma.is_full:
        W = half_window(W, gamma)
    inner = [v for v in gamma.vertices if v.x and v.y]
    m = max((v.x for v in inner), default=0)
    n = max((v.y for v in inner), default=0)
    if m > W.m or n > W.n:
        raise OutOfSupport((m, n), W.m, W.n)
    table = grow_rectangle(W, m, n)
    return LppObservation(gamma, table.along(gamma))


def half_window(W, path):
    '''
    The square of a symmetric matrix that a half path reads: columns and rows ``1..N``
    for a path ending at ``(N, 0)``

    Raises
    ------
    OutOfSupport
        If `W` is smaller than ``N`` by ``N``
    NotSymmetric
        If the square is not symmetric
    '''
    window = W.window(path.end.x, path.end.x)
    window.require_symmetric()
    return window


def g_times(obs, i, depth=None):
    '''
    ``G_k`` at vertex `i` for ``k = 1..depth``: the prefix sums of the partition there

    Parameters
    ----------
    obs : LppObservation
    i : int
        Vertex index
    depth : int, optional
        How many ``G_k`` to return. Defaults to the length of the partition, or 1 if it
        is empty

    Returns
    -------
    tuple of int
    '''
    lam = Partition(obs.lambdas[i])
    if depth is None:
        depth = max(1, len(lam))
    res = []
    total = 0
    for k in range(1, depth + 1):
        total += lam.part(k)
        res.append(total)
    return tuple(res)


def last_passage_time(W, u, v):
    '''
    The greatest weight of a single up-right path from ``(1, 1)`` to ``(u, v)``, by the
    usual recurrence ``G(i, j) = w(i, j) + max(G(i - 1, j), G(i, j - 1))``
    '''
    if u == 0 or v == 0:
        return 0
    G = [[0] * (v + 1) for _ in range(u + 1)]
    for i in range(1, u + 1):
        for j in range(1, v + 1):
            G[i][j] = W[i, j] + max(G[i - 1][j], G[i][j - 1])
    return G[u][v]

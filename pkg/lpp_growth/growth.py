'''
Growth diagrams: the local rule that turns three partitions and a weight into a fourth,
its inverse, and RSK along a down-right path built from them.

Every cell ``(u, v)`` of a shape gets a partition computed from its neighbors

::

    nu = T[u - 1, v]    lam = T[u, v]
    rho = T[u - 1, v - 1]   mu = T[u, v - 1]

with ``T[u, v]`` empty whenever ``u == 0`` or ``v == 0``.
'''
import logging

from .exceptions import (PreconditionViolation, ConservationViolation, ShapeMismatch,
                         NotInImage, NotSymmetric, BadEndpoints, LengthMismatch)
from .partition import EMPTY, Cell, Partition, interlaces
from .paths import (FerrersShape, Filling, ROW_MAJOR, RIGHT, elementary_growth_sequence,
                    growth_order, shape_of)

L = logging.getLogger(__name__)


def _forward(rho, mu, nu, m, lower, upper):
    carry = m
    lam = []
    i = 1
    while True:
        mu_i, nu_i = mu.part(i), nu.part(i)
        lam_i = upper(mu_i, nu_i) + carry
        if lam_i == 0:
            break
        lam.append(lam_i)
        carry = lower(mu_i, nu_i) - rho.part(i)
        i += 1
    return lam


def forward_f1(rho, mu, nu, m):
    '''
    The forward local rule

    Parameters
    ----------
    rho : Partition
        Partition at the south-west corner; interlaced by both `mu` and `nu`
    mu : Partition
        Partition at the south-east corner
    nu : Partition
        Partition at the north-west corner
    m : int
        The weight of the cell

    Returns
    -------
    Partition
        The partition at the north-east corner. It interlaces `mu` and `nu`, and
        ``|lam| + |rho| == m + |mu| + |nu|``

    Raises
    ------
    PreconditionViolation
        If `mu` or `nu` do not interlace `rho`, or if `m` is negative
    '''
    if m < 0:
        raise PreconditionViolation('forward_f1', 'negative weight {}'.format(m))
    if not interlaces(mu, rho) or not interlaces(nu, rho):
        raise PreconditionViolation(
                'forward_f1', '{} and {} must both interlace {}'.format(
                    list(mu), list(nu), list(rho)))
    lam = Partition(_forward(rho, mu, nu, m, min, max))
    if sum(lam) + sum(rho) != m + sum(mu) + sum(nu):
        raise ConservationViolation(
                'mass conservation',
                'F1({}, {}, {}, {}) = {}'.format(list(rho), list(mu), list(nu), m, list(lam)))
    return lam


def backward_b1(lam, mu, nu):
    '''
    The backward local rule, inverse to `forward_f1`

    Parameters
    ----------
    lam : Partition
        Interlaces both `mu` and `nu`
    mu : Partition
    nu : Partition

    Returns
    -------
    tuple
        ``(rho, m)`` with ``forward_f1(rho, mu, nu, m) == lam``

    Raises
    ------
    PreconditionViolation
        If `lam` does not interlace `mu` or `nu`
    '''
    if not interlaces(lam, mu) or not interlaces(lam, nu):
        raise PreconditionViolation(
                'backward_b1', '{} must interlace both {} and {}'.format(
                    list(lam), list(mu), list(nu)))
    carry = 0
    rho = [0] * len(lam)
    for i in range(len(lam), 0, -1):
        mu_i, nu_i = mu.part(i), nu.part(i)
        rho[i - 1] = min(mu_i, nu_i) - carry
        carry = lam.part(i) - max(mu_i, nu_i)
    return Partition(rho), carry


class GrowthTable(object):
    '''
    The partitions of a growth diagram over a Ferrers shape

    ``table[u, v]`` is the partition at cell ``(u, v)``, or the empty partition when
    ``u == 0`` or ``v == 0``.
    '''

    def __init__(self, shape, entries=None):
        self.shape = shape
        self.entries = dict() if entries is None else dict(entries)

    def __getitem__(self, cell):
        u, v = cell
        if u == 0 or v == 0:
            return EMPTY
        return self.entries[Cell(u, v)]

    def __setitem__(self, cell, lam):
        self.entries[Cell(*cell)] = lam

    def __eq__(self, other):
        if not isinstance(other, GrowthTable):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return 'GrowthTable({!r}, {} entries)'.format(self.shape, len(self.entries))

    def along(self, path):
        ''' The partitions at the vertices of `path`, in order '''
        return tuple(self[v] for v in path.vertices)

    def check(self):
        '''
        Confirm every entry interlaces its south and west neighbors

        Raises
        ------
        NotInImage
            Naming the first cell where the invariant fails
        '''
        for cell in growth_order(self.shape):
            u, v = cell
            lam = self[cell]
            if not interlaces(lam, self[u - 1, v]) or not interlaces(lam, self[u, v - 1]):
                raise NotInImage(cell, 'growth table entry does not interlace its neighbors')

    def to_json(self):
        return {'{},{}'.format(c.col, c.row): list(lam)
                for c, lam in sorted(self.entries.items(), key=lambda it: (it[0].row, it[0].col))}


def grow(filling, order=ROW_MAJOR, rule=forward_f1):
    '''
    Build the growth table of a filling

    Parameters
    ----------
    filling : lpp_growth.paths.Filling
    order : str
        Cell order, ``'row'`` or ``'column'``. The table does not depend on it
    rule : callable
        The local rule. `forward_f1` unless testing a different one

    Returns
    -------
    GrowthTable
    '''
    return _grow_cells(filling, growth_order(filling.shape, order), rule)


def _grow_cells(filling, cells, rule):
    table = GrowthTable(filling.shape)
    for cell in cells:
        u, v = cell
        table[cell] = rule(table[u - 1, v - 1], table[u, v - 1], table[u - 1, v],
                           filling[cell])
    return table


def _require_full(gamma):
    if not gamma.is_full:
        raise BadEndpoints(gamma, 'from the y-axis to the x-axis')


def rsk_gamma(f, gamma, order=ROW_MAJOR, rule=forward_f1):
    '''
    RSK along a down-right path: the partitions the growth diagram of `f` puts on the
    vertices of `gamma`

    Parameters
    ----------
    f : lpp_growth.paths.Filling
        A filling of ``shape_of(gamma)``
    gamma : lpp_growth.paths.DownRightPath
        A full path

    Returns
    -------
    tuple of Partition
        One per vertex. The first and last are empty; each ``R`` step moves to a partition
        that interlaces the previous one and each ``D`` step to one the previous
        interlaces.

    Raises
    ------
    ShapeMismatch
        If `f` is not a filling of the path's shape
    '''
    _require_full(gamma)
    shape = shape_of(gamma)
    if f.shape != shape:
        raise ShapeMismatch(shape.cells, f.shape.cells)
    steps = elementary_growth_sequence(gamma, order)
    return _grow_cells(f, [step.cell for step in steps], rule).along(gamma)


def check_sequence(seq, gamma):
    '''
    Confirm `seq` has the interlacing pattern RSK produces along `gamma`

    Raises
    ------
    LengthMismatch
    NotInImage
    '''
    if len(seq) != len(gamma.vertices):
        raise LengthMismatch(len(gamma.vertices), len(seq))
    for i, v in enumerate(gamma.vertices):
        if (v.x == 0 or v.y == 0) and seq[i]:
            raise NotInImage(i, 'partitions on the axes must be empty, got {}'.format(
                list(seq[i])))
        if len(seq[i]) > min(v.x, v.y):
            raise NotInImage(i, '{} has more than {} parts'.format(
                list(seq[i]), min(v.x, v.y)))
    for i, s in enumerate(gamma.word, 1):
        if s == RIGHT:
            ok = interlaces(seq[i], seq[i - 1])
        else:
            ok = interlaces(seq[i - 1], seq[i])
        if not ok:
            raise NotInImage(i, 'step {} breaks interlacing: {} to {}'.format(
                s, list(seq[i - 1]), list(seq[i])))


def rsk_gamma_inverse(seq, gamma, order=ROW_MAJOR):
    '''
    The filling whose RSK along `gamma` is `seq`

    Cells are peeled off with `backward_b1` in the reverse of the order in which
    `~lpp_growth.paths.elementary_growth_sequence` adds them.

    Raises
    ------
    NotInImage
        If `seq` does not have the interlacing pattern of an image
    '''
    _require_full(gamma)
    seq = tuple(Partition(p) for p in seq)
    check_sequence(seq, gamma)
    shape = shape_of(gamma)
    at = dict(zip(gamma.vertices, seq))

    def value(u, v):
        if u == 0 or v == 0:
            return EMPTY
        return at[(u, v)]

    values = {}
    for step in reversed(elementary_growth_sequence(gamma, order)):
        cell = step.cell
        u, v = cell
        try:
            rho, m = backward_b1(at.pop((u, v)), value(u, v - 1), value(u - 1, v))
        except PreconditionViolation as e:
            raise NotInImage(gamma.vertices.index((u, v)) if (u, v) in gamma.vertices
                             else None, str(e)) from e
        if (u == 1 or v == 1) and rho:
            raise NotInImage(None, 'a partition on the axes would be {}'.format(list(rho)))
        values[cell] = m
        if u > 1 and v > 1:
            at[(u - 1, v - 1)] = rho
    return Filling(shape, values)


def grow_rectangle(W, m, n, rule=forward_f1):
    '''
    The growth table of the `m` by `n` corner of `W`

    ``table[u, v]`` is the partition whose prefix sums are the last passage times of
    ``W`` restricted to columns ``1..u`` and rows ``1..v``.

    Parameters
    ----------
    W : lpp_growth.matrix.WeightMatrix
    m : int
    n : int

    Returns
    -------
    GrowthTable
    '''
    shape = FerrersShape([n] * m)
    table = GrowthTable(shape)
    for v in range(1, n + 1):
        for u in range(1, m + 1):
            table[u, v] = rule(table[u - 1, v - 1], table[u, v - 1], table[u - 1, v],
                               W[u, v])
    return table


def grow_columns(W, n, rule=forward_f1):
    '''
    Stream the growth table of ``W`` one column at a time, keeping only the previous
    column in memory

    Yields
    ------
    tuple
        ``(u, column)`` where ``column[v - 1]`` is the partition at ``(u, v)``
    '''
    previous = [EMPTY] * (n + 1)
    for u in range(1, W.m + 1):
        current = [EMPTY] * (n + 1)
        for v in range(1, n + 1):
            current[v] = rule(previous[v - 1], current[v - 1], previous[v], W[u, v])
        yield u, tuple(current[1:])
        previous = current


def rsk_symmetric(f, gamma_sym):
    '''
    RSK restricted to symmetric fillings along a symmetric path

    Parameters
    ----------
    f : lpp_growth.paths.Filling
        A filling with ``f[i, j] == f[j, i]``
    gamma_sym : lpp_growth.paths.DownRightPath
        A full path symmetric about the diagonal

    Returns
    -------
    tuple of Partition
        The second half of `rsk_gamma`, starting at the diagonal vertex. The first half is
        its mirror image

    Raises
    ------
    NotSymmetric
        If the path or the filling is not symmetric
    '''
    _require_full(gamma_sym)
    if not gamma_sym.is_symmetric:
        raise NotSymmetric('path {}'.format(gamma_sym))
    if not f.is_symmetric():
        witness = next((c for c, v in sorted(f.values.items())
                        if f.values.get(Cell(c.row, c.col)) != v), None)
        raise NotSymmetric('filling', witness)
    seq = rsk_gamma(f, gamma_sym)
    last = len(seq) - 1
    for i in range(len(seq) // 2):
        if seq[i] != seq[last - i]:
            raise ConservationViolation(
                    'symmetric palindrome',
                    'vertex {} has {} but vertex {} has {}'.format(
                        i, list(seq[i]), last - i, list(seq[last - i])))
    return seq[last // 2:]


def rsk_symmetric_inverse(half_seq, gamma_sym):
    '''
    The symmetric filling whose `rsk_symmetric` image along `gamma_sym` is `half_seq`
    '''
    if not gamma_sym.is_symmetric:
        raise NotSymmetric('path {}'.format(gamma_sym))
    half_seq = tuple(Partition(p) for p in half_seq)
    if 2 * (len(half_seq) - 1) != len(gamma_sym):
        raise LengthMismatch(len(gamma_sym) // 2 + 1, len(half_seq))
    full = tuple(reversed(half_seq[1:])) + half_seq
    return rsk_gamma_inverse(full, gamma_sym)


def greene_prefix(table, cell, k):
    '''
    ``lam_1 + ... + lam_k`` for the partition at `cell` of a growth table

    By Greene's theorem this is the greatest weight of `k` disjoint NE-chains in the
    part of the filling south-west of `cell`.
    '''
    return sum(table[cell][:k])

'''
Partitions, the cells of their Young diagrams, and the handful of operations on them
that growth diagrams and Schur processes need.

Diagrams use one coordinate system throughout: cell ``(col, row)`` with both coordinates
at least 1 and row 1 the longest row. A partition ``lam`` has the cells ``(i, j)`` with
``1 <= j <= len(lam)`` and ``1 <= i <= lam[j - 1]``.
'''
from collections import namedtuple
from fractions import Fraction
from itertools import zip_longest
import numbers

from .exceptions import NotAPartition


class Cell(namedtuple('Cell', ('col', 'row'))):
    '''
    A box in canonical diagram coordinates, or an entry of a matrix (column, row)
    '''

    __slots__ = ()

    def to_json(self):
        return [self.col, self.row]


class Partition(tuple):
    '''
    A non-increasing sequence of positive integers, stored without trailing zeros.

    Trailing zeros given to the constructor are dropped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. Use `part` to read a part with the zero extension.
    '''

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = list(parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        checked = []
        previous = None
        for p in parts[:end]:
            if not isinstance(p, numbers.Integral):
                raise NotAPartition(parts, 'parts must be integers')
            p = int(p)
            if p < 0:
                raise NotAPartition(parts, 'parts must be non-negative')
            if previous is not None and p > previous:
                raise NotAPartition(parts, 'parts must be non-increasing')
            checked.append(p)
            previous = p
        return super(Partition, cls).__new__(cls, checked)

    def __repr__(self):
        return 'Partition({})'.format(tuple.__repr__(self))

    def part(self, i):
        '''
        The `i`-th part, counting from 1, or 0 past the end
        '''
        if i < 1:
            raise IndexError('Parts are numbered from 1')
        return self[i - 1] if i <= len(self) else 0

    @property
    def weight(self):
        ''' The sum of the parts, :math:`|\\lambda|` '''
        return sum(self)

    def alternating_sum(self):
        ''' :math:`\\lambda_1 - \\lambda_2 + \\lambda_3 - \\cdots` '''
        return sum(self[0::2]) - sum(self[1::2])

    def to_json(self):
        return list(self)


EMPTY = Partition()
''' The empty partition '''


def normalize(parts):
    '''
    Strip trailing zeros from a non-increasing part list

    Parameters
    ----------
    parts : iterable of int
        Non-increasing, non-negative integers

    Returns
    -------
    Partition

    Raises
    ------
    NotAPartition
        If the parts are not non-increasing or any is negative
    '''
    if isinstance(parts, Partition):
        return parts
    return Partition(parts)


def interlaces(lam, mu):
    '''
    Whether :math:`\\lambda_1 \\ge \\mu_1 \\ge \\lambda_2 \\ge \\mu_2 \\ge \\cdots`

    This is the relation written ``lam ⪰ mu`` elsewhere. Both arguments are read with the
    zero extension.
    '''
    lam = normalize(lam)
    mu = normalize(mu)
    if len(lam) < len(mu) or len(lam) > len(mu) + 1:
        return False
    for i, a in enumerate(lam):
        b = mu[i] if i < len(mu) else 0
        if a < b:
            return False
        if i + 1 < len(lam) and b < lam[i + 1]:
            return False
    return True


def _power(x, e):
    # 0**0 is 1, as Python already does for Fraction and int
    return Fraction(x) ** e


def skew_schur_mono(lam, mu, x):
    '''
    The skew Schur polynomial :math:`s_{\\lambda/\\mu}` in the single variable `x`

    Parameters
    ----------
    lam : Partition
    mu : Partition
    x : fractions.Fraction or int
        Non-negative

    Returns
    -------
    fractions.Fraction
        ``x ** (|lam| - |mu|)`` if `lam` interlaces `mu`, and 0 otherwise
    '''
    if not interlaces(lam, mu):
        return Fraction(0)
    return _power(x, sum(lam) - sum(mu))


def tau(lam, c):
    '''
    :math:`c^{\\lambda_1 - \\lambda_2 + \\lambda_3 - \\cdots}`, the weight the diagonal
    parameter puts on the first partition of a half-space sequence
    '''
    return _power(c, Partition(lam).alternating_sum())


def part_min(lam, mu):
    ''' Componentwise minimum: the intersection of the two diagrams '''
    return Partition(min(a, b) for a, b in zip(lam, mu))


def part_max(lam, mu):
    ''' Componentwise maximum: the union of the two diagrams '''
    return Partition(max(a, b) for a, b in zip_longest(lam, mu, fillvalue=0))


def contains(lam, mu):
    ''' Whether the diagram of `lam` contains the diagram of `mu` '''
    if len(mu) > len(lam):
        return False
    return all(a >= b for a, b in zip(lam, mu))


def cells(lam):
    '''
    The cells of the diagram of `lam`

    Returns
    -------
    set of Cell
    '''
    return {Cell(i, j) for j, p in enumerate(lam, 1) for i in range(1, p + 1)}


def interior(lam):
    '''
    The cells ``(i, j)`` of `lam` whose south-east neighbor ``(i + 1, j + 1)`` is also in
    `lam`, as a partition
    '''
    return Partition(max(lam[j + 1] - 1, 0) for j in range(len(lam) - 1))


def boundary(lam):
    '''
    The cells of `lam` that are not in its `interior`

    Read in order of increasing column, the boundary is a chain that runs from the bottom
    of the first column to the end of the first row.

    Returns
    -------
    set of Cell
    '''
    inner = interior(lam)
    return {Cell(i, j)
            for j, p in enumerate(lam, 1)
            for i in range(inner.part(j) + 1, p + 1)}


def min_diagram_containing(cell_set):
    '''
    The smallest diagram that contains every cell in `cell_set`

    Parameters
    ----------
    cell_set : iterable of Cell
        Cells in canonical coordinates

    Returns
    -------
    Partition
    '''
    widest = {}
    for col, row in cell_set:
        if col < 1 or row < 1:
            raise ValueError('Cell ({}, {}) is not in the positive quadrant'.format(col, row))
        widest[row] = max(widest.get(row, 0), col)
    if not widest:
        return EMPTY
    parts = []
    running = 0
    for row in range(max(widest), 0, -1):
        running = max(running, widest.get(row, 0))
        parts.append(running)
    return Partition(reversed(parts))


def partitions_in_box(max_part, max_length):
    '''
    All partitions with parts at most `max_part` and length at most `max_length`, in
    lexicographic order

    Yields
    ------
    Partition
    '''
    def rec(prefix, bound, remaining):
        yield Partition(prefix)
        if remaining == 0:
            return
        for p in range(1, bound + 1):
            yield from rec(prefix + [p], p, remaining - 1)

    if max_part < 0 or max_length < 0:
        return
    yield from rec([], max_part, max_length)

'''
Dense non-negative integer weight matrices indexed by ``(column, row)``
'''
from .exceptions import OutOfSupport, NotSymmetric
from .partition import Cell


class WeightMatrix(object):
    '''
    An `m` by `n` matrix of non-negative integers

    Entries are addressed as ``W[i, j]`` with column ``1 <= i <= m`` and row
    ``1 <= j <= n``, the same way cells are addressed.

    Parameters
    ----------
    rows : list of list of int
        ``rows[j - 1][i - 1]`` is the entry at column ``i``, row ``j``
    '''

    __slots__ = ('m', 'n', 'rows')

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError('Rows of a weight matrix must all have the same length')
        if any(v < 0 for r in rows for v in r):
            raise ValueError('Weight matrices have non-negative entries')
        self.m = m
        self.n = len(rows) if m else 0
        self.rows = rows if m else ()

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * m for _ in range(n)]) if m and n else cls([])

    @classmethod
    def from_cells(cls, m, n, values):
        '''
        A matrix that is zero except at the given cells

        Parameters
        ----------
        values : dict
            Maps ``(i, j)`` to an entry
        '''
        rows = [[0] * m for _ in range(n)]
        for (i, j), v in values.items():
            if not (1 <= i <= m and 1 <= j <= n):
                raise OutOfSupport((i, j), m, n)
            rows[j - 1][i - 1] = v
        return cls(rows)

    def __getitem__(self, cell):
        i, j = cell
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise OutOfSupport(cell, self.m, self.n)
        return self.rows[j - 1][i - 1]

    def get(self, cell, default=0):
        i, j = cell
        if 1 <= i <= self.m and 1 <= j <= self.n:
            return self.rows[j - 1][i - 1]
        return default

    def cells(self):
        ''' Cells in row-major order '''
        return [Cell(i, j) for j in range(1, self.n + 1) for i in range(1, self.m + 1)]

    def window(self, m, n):
        ''' The restriction to columns ``1..m`` and rows ``1..n`` '''
        if m > self.m or n > self.n:
            raise OutOfSupport((m, n), self.m, self.n)
        if m == 0 or n == 0:
            return type(self)([])
        return type(self)([r[:m] for r in self.rows[:n]])

    def transpose(self):
        return type(self)([list(col) for col in zip(*self.rows)])

    def is_symmetric(self):
        return self.m == self.n and self.rows == tuple(zip(*self.rows))

    def require_symmetric(self):
        if self.m != self.n:
            raise NotSymmetric('{}x{} matrix'.format(self.m, self.n))
        for j in range(1, self.n + 1):
            for i in range(j + 1, self.m + 1):
                if self[i, j] != self[j, i]:
                    raise NotSymmetric('matrix', (i, j))

    @property
    def total(self):
        return sum(sum(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.m, self.n, self.rows))

    def __repr__(self):
        return 'WeightMatrix({})'.format([list(r) for r in self.rows])

    def to_json(self):
        return {'m': self.m, 'n': self.n, 'rows': [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, ob):
        if isinstance(ob, list):
            return cls(ob)
        res = cls(ob['rows'])
        if (res.m, res.n) != (ob.get('m', res.m), ob.get('n', res.n)):
            raise ValueError('Matrix rows do not match the declared {}x{} size'.format(
                ob.get('m'), ob.get('n')))
        return res

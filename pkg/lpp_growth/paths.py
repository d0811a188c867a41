'''
Down-right paths, the Ferrers shapes they cut out, fillings of those shapes, and the
chain predicates used by last passage times.

A down-right path is a start vertex and a word over ``R`` (one step right) and ``D`` (one
step down). A "full" path runs from the y-axis to the x-axis; a "half" path runs from a
point on the diagonal to the x-axis and stays on or below the diagonal.
'''
from collections import namedtuple
from functools import cached_property
import logging

from .exceptions import NegativeCoordinate, BadEndpoints, ShapeMismatch, NotSymmetric
from .partition import Cell, Partition

L = logging.getLogger(__name__)

RIGHT = 'R'
DOWN = 'D'

ROW_MAJOR = 'row'
COLUMN_MAJOR = 'column'
GROWTH_ORDERS = (ROW_MAJOR, COLUMN_MAJOR)


class Vertex(namedtuple('Vertex', ('x', 'y'))):
    ''' A lattice point '''

    __slots__ = ()

    def to_json(self):
        return [self.x, self.y]


GrowthStep = namedtuple('GrowthStep', ('path', 'cell'))
''' One step of an elementary growth sequence: the path after the step and the added cell '''


def _swap(word):
    return word.translate(str.maketrans('RD', 'DR'))


class DownRightPath(object):
    '''
    A lattice path with steps right and down

    Parameters
    ----------
    start : tuple of int
        The first vertex
    word : str
        Steps, each ``R`` or ``D``
    '''

    def __init__(self, start, word):
        start = Vertex(*(int(c) for c in start))
        word = ''.join(word).upper()
        bad = set(word) - {RIGHT, DOWN}
        if bad:
            raise ValueError('Path words may only contain R and D, not {}'.format(
                ''.join(sorted(bad))))
        vertices = [start]
        x, y = start
        if x < 0 or y < 0:
            raise NegativeCoordinate(start, word, 0, start)
        for i, s in enumerate(word, 1):
            if s == RIGHT:
                x += 1
            else:
                y -= 1
                if y < 0:
                    raise NegativeCoordinate(start, word, i, (x, y))
            vertices.append(Vertex(x, y))
        self.start = start
        self.word = word
        self.vertices = tuple(vertices)

    def vertex(self, i):
        ''' The vertex after `i` steps '''
        return self.vertices[i]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self):
        return len(self.word)

    @property
    def right_count(self):
        return self.word.count(RIGHT)

    @property
    def down_count(self):
        return self.word.count(DOWN)

    @property
    def is_full(self):
        ''' Whether the path runs from the y-axis to the x-axis '''
        return self.start.x == 0 and self.end.y == 0

    @property
    def is_half(self):
        ''' Whether the path runs from the diagonal to the x-axis, never crossing above it '''
        return (self.start.x == self.start.y and self.end.y == 0 and
                all(v.x >= v.y for v in self.vertices))

    @property
    def is_symmetric(self):
        ''' Whether the vertex set is symmetric about the diagonal '''
        return set(self.vertices) == {Vertex(y, x) for x, y in self.vertices}

    def __eq__(self, other):
        if not isinstance(other, DownRightPath):
            return NotImplemented
        return self.start == other.start and self.word == other.word

    def __hash__(self):
        return hash((self.start, self.word))

    def __repr__(self):
        return 'DownRightPath({}, {!r})'.format(tuple(self.start), self.word)

    __str__ = __repr__

    def to_json(self):
        return {'start': [self.start.x, self.start.y], 'word': self.word}

    @classmethod
    def from_json(cls, ob):
        try:
            return cls(ob['start'], ob['word'])
        except (KeyError, TypeError) as e:
            raise ValueError('A path is given as {"start": [x, y], "word": "..."}') from e

    @cached_property
    def column_heights(self):
        '''
        Height of the path over each column ``1..end.x``, for a full path

        Column ``i`` is crossed by the ``R`` step that ends at x-coordinate ``i``.
        '''
        heights = []
        for s, v in zip(self.word, self.vertices[1:]):
            if s == RIGHT:
                heights.append(v.y)
        return tuple(heights)


def path_from_word(start, word):
    '''
    Make a path from its start vertex and word

    Raises
    ------
    NegativeCoordinate
        If a vertex falls below the x-axis
    '''
    return DownRightPath(start, word)


class FerrersShape(object):
    '''
    A finite set of cells closed under moving left and down, described by the heights of
    its columns
    '''

    def __init__(self, heights=()):
        heights = tuple(int(h) for h in heights)
        while heights and heights[-1] == 0:
            heights = heights[:-1]
        if any(a < b for a, b in zip(heights, heights[1:])) or any(h < 0 for h in heights):
            raise ValueError('Column heights {} do not describe a Ferrers shape'.format(heights))
        self.heights = heights

    @classmethod
    def from_cells(cls, cell_set):
        '''
        Make a shape from an explicit cell set

        Raises
        ------
        ValueError
            If the cells are not closed under moving left and down
        '''
        cell_set = set(cell_set)
        heights = {}
        for c, r in cell_set:
            heights[c] = max(heights.get(c, 0), r)
        res = cls([heights.get(i, 0) for i in range(1, max(heights, default=0) + 1)])
        if res.cells != cell_set:
            raise ValueError('Cells are not closed under moving left and down')
        return res

    @classmethod
    def from_rows(cls, rows):
        ''' Make a shape from its row lengths, row 1 first '''
        return cls(_conjugate(Partition(rows)))

    @property
    def rows(self):
        ''' Row lengths as a `Partition` '''
        return Partition(_conjugate(self.heights))

    @cached_property
    def cells(self):
        return frozenset(Cell(i, j) for i, h in enumerate(self.heights, 1)
                         for j in range(1, h + 1))

    @property
    def width(self):
        return len(self.heights)

    @property
    def height(self):
        return self.heights[0] if self.heights else 0

    def __contains__(self, cell):
        col, row = cell
        return 1 <= col <= len(self.heights) and 1 <= row <= self.heights[col - 1]

    def __iter__(self):
        return iter(sorted(self.cells, key=lambda c: (c.row, c.col)))

    def __len__(self):
        return sum(self.heights)

    def __eq__(self, other):
        if not isinstance(other, FerrersShape):
            return NotImplemented
        return self.heights == other.heights

    def __hash__(self):
        return hash(self.heights)

    def __repr__(self):
        return 'FerrersShape({})'.format(self.heights)

    def boundary_path(self, m, n):
        '''
        The down-right path from ``(0, n)`` to ``(m, 0)`` that outlines this shape

        Parameters
        ----------
        m : int
            Width of the box
        n : int
            Height of the box
        '''
        heights = list(self.heights) + [0] * (m - len(self.heights))
        if len(heights) > m or (heights and heights[0] > n):
            raise ValueError('{} does not fit in a {}x{} box'.format(self, m, n))
        word = []
        current = n
        for h in heights:
            word.append(DOWN * (current - h))
            word.append(RIGHT)
            current = h
        word.append(DOWN * current)
        return DownRightPath((0, n), ''.join(word))


def _conjugate(parts):
    parts = list(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1))


def cells_below(path):
    '''
    The cells ``(a, b)``, both coordinates at least 1, such that ``(a + d, b + d)`` is a
    vertex of `path` for some ``d >= 0``
    '''
    res = set()
    for x, y in path.vertices:
        d = 0
        while x - d >= 1 and y - d >= 1:
            res.add(Cell(x - d, y - d))
            d += 1
    return res


def symmetric_closure(path):
    '''
    The path symmetric about the diagonal whose second half is the given half path

    For a half path from ``(N, N)`` to ``(M + N, 0)`` this is a path from ``(0, M + N)``
    to ``(M + N, 0)`` whose vertex ``len(path)`` is ``(N, N)``.
    '''
    if not path.is_half:
        raise BadEndpoints(path, 'from the diagonal to the x-axis')
    return DownRightPath((0, path.end.x), _swap(path.word)[::-1] + path.word)


def half_of(path):
    '''
    The second half of a symmetric full path: the inverse of `symmetric_closure`
    '''
    if not (path.is_full and path.is_symmetric):
        raise NotSymmetric('path {}'.format(path))
    half = len(path) // 2
    return DownRightPath(path.vertex(half), path.word[half:])


def reflect(path):
    ''' The path traversed through the mirror images of `path`'s vertices, in order '''
    return DownRightPath((path.end.y, path.end.x), _swap(path.word)[::-1])


def shape_of(path):
    '''
    The Ferrers shape cut out by a path

    For a full path this is the set of cells south-west of the path. For a half path it
    is the shape of the `symmetric_closure`; `half_cells` and `strict_lower` give the
    parts on the path's side of the diagonal.

    Raises
    ------
    BadEndpoints
        If the path is neither full nor half
    '''
    if path.is_full:
        return FerrersShape(path.column_heights)
    if path.is_half:
        return FerrersShape(symmetric_closure(path).column_heights)
    raise BadEndpoints(path, 'from the y-axis or the diagonal down to the x-axis')


def half_cells(path):
    ''' Cells of a half path's shape on or below the diagonal (column >= row) '''
    return {c for c in shape_of(path).cells if c.col >= c.row}


def strict_lower(path):
    ''' Cells of a half path's shape strictly below the diagonal (column > row) '''
    if not path.is_half:
        raise BadEndpoints(path, 'from the diagonal to the x-axis')
    return {c for c in shape_of(path).cells if c.col > c.row}


def inversion_count(word):
    ''' The number of pairs of an ``R`` followed, anywhere later, by a ``D`` '''
    rights = 0
    res = 0
    for s in word:
        if s == RIGHT:
            rights += 1
        else:
            res += rights
    return res


def growth_order(shape, order=ROW_MAJOR):
    '''
    The cells of a shape in an order in which every prefix is itself a shape
    '''
    if order == ROW_MAJOR:
        return sorted(shape.cells, key=lambda c: (c.row, c.col))
    elif order == COLUMN_MAJOR:
        return sorted(shape.cells, key=lambda c: (c.col, c.row))
    raise ValueError('Unknown growth order {!r}; expected one of {}'.format(
        order, GROWTH_ORDERS))


def elementary_growth_sequence(path, order=ROW_MAJOR):
    '''
    Grow the shape of a full path one cell at a time

    Parameters
    ----------
    path : DownRightPath
        A full path from ``(0, n)`` to ``(m, 0)``
    order : str
        ``'row'`` or ``'column'``

    Returns
    -------
    list of GrowthStep
        One step per cell; the path in the last step is `path` itself
    '''
    if not path.is_full:
        raise BadEndpoints(path, 'from the y-axis to the x-axis')
    m, n = path.end.x, path.start.y
    heights = [0] * m
    res = []
    for cell in growth_order(shape_of(path), order):
        heights[cell.col - 1] += 1
        res.append(GrowthStep(FerrersShape(heights).boundary_path(m, n), cell))
    return res


def flip_corner(path, i):
    '''
    Turn the ``RD`` at letters ``i, i + 1`` (counted from 1) into ``DR``

    Returns
    -------
    tuple
        The new path and the cell, ``path.vertex(i)``, that it no longer encloses
    '''
    if not (1 <= i < len(path.word)) or path.word[i - 1:i + 1] != RIGHT + DOWN:
        raise ValueError('Letters {} and {} of {} are not RD'.format(i, i + 1, path.word))
    word = path.word[:i - 1] + DOWN + RIGHT + path.word[i + 1:]
    return DownRightPath(path.start, word), Cell(*path.vertex(i))


def is_ne_chain(vertices):
    '''
    Whether the vertices increase weakly in both coordinates and strictly as pairs
    '''
    return all(a[0] <= b[0] and a[1] <= b[1] and tuple(a) != tuple(b)
               for a, b in zip(vertices, vertices[1:]))


def is_up_right(vertices):
    ''' Whether each vertex is one step up or one step right of the one before it '''
    return all((b[0] - a[0], b[1] - a[1]) in ((0, 1), (1, 0))
               for a, b in zip(vertices, vertices[1:]))


def is_diagram_chain(cells):
    '''
    Whether the cells form a chain in diagram coordinates: columns weakly increase while
    rows weakly decrease, and no cell repeats
    '''
    return all(a[0] <= b[0] and a[1] >= b[1] and tuple(a) != tuple(b)
               for a, b in zip(cells, cells[1:]))


def chain_weight(A, chain):
    '''
    Sum of the entries of `A` at the vertices of `chain`

    Raises
    ------
    OutOfSupport
        If a vertex is outside of `A`
    '''
    return sum(A[v] for v in chain)


class Filling(object):
    '''
    Non-negative integers on the cells of a Ferrers shape

    Parameters
    ----------
    shape : FerrersShape
    values : dict
        Maps each `~lpp_growth.partition.Cell` of `shape`, and nothing else, to a
        non-negative integer
    '''

    __slots__ = ('shape', 'values')

    def __init__(self, shape, values):
        values = {Cell(*k): int(v) for k, v in values.items()}
        if set(values) != shape.cells:
            raise ShapeMismatch(shape.cells, values)
        negative = [c for c, v in values.items() if v < 0]
        if negative:
            raise ValueError('Fillings are non-negative; negative at {}'.format(sorted(negative)))
        self.shape = shape
        self.values = values

    def __getitem__(self, cell):
        return self.values[cell]

    def __eq__(self, other):
        if not isinstance(other, Filling):
            return NotImplemented
        return self.shape == other.shape and self.values == other.values

    def __hash__(self):
        return hash((self.shape, frozenset(self.values.items())))

    def __repr__(self):
        return 'Filling({!r}, {})'.format(self.shape, self.to_json()['rows'])

    @property
    def total(self):
        return sum(self.values.values())

    @classmethod
    def zero(cls, shape):
        return cls(shape, {c: 0 for c in shape.cells})

    @classmethod
    def from_matrix(cls, W, shape):
        ''' The restriction of a weight matrix to a shape '''
        return cls(shape, {c: W[c] for c in shape.cells})

    def is_symmetric(self):
        return all(self.values.get(Cell(r, c)) == v for (c, r), v in self.values.items())

    def to_json(self):
        '''
        Row-major form: ``{"shape": row lengths, "rows": [[f(1,1), f(2,1), ...], ...]}``
        '''
        rows = self.shape.rows
        return {'shape': list(rows),
                'rows': [[self.values[Cell(i, j)] for i in range(1, length + 1)]
                         for j, length in enumerate(rows, 1)]}

    @classmethod
    def from_json(cls, ob):
        rows = ob['rows']
        shape = FerrersShape.from_rows([len(r) for r in rows])
        if 'shape' in ob and list(Partition(ob['shape'])) != list(shape.rows):
            raise ValueError('Filling rows do not have the lengths {}'.format(ob['shape']))
        return cls(shape, {Cell(i, j): v
                           for j, row in enumerate(rows, 1)
                           for i, v in enumerate(row, 1)})


__all__ = ['Vertex', 'DownRightPath', 'FerrersShape', 'Filling', 'GrowthStep',
           'path_from_word', 'shape_of', 'cells_below', 'half_cells', 'strict_lower',
           'symmetric_closure', 'half_of', 'reflect', 'elementary_growth_sequence',
           'growth_order', 'flip_corner', 'inversion_count', 'is_ne_chain', 'is_up_right',
           'is_diagram_chain', 'chain_weight']

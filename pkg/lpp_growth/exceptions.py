'''
Errors raised across lpp_growth.

Errors that come from bad input derive from `~lpp_growth.command_util.GenericUserError`
so that the command line reports them as a message rather than a traceback.
'''
from .command_util import GenericUserError


class NotAPartition(GenericUserError, ValueError):
    '''
    Thrown when a sequence of parts is not a non-increasing sequence of non-negative
    integers
    '''
    def __init__(self, parts, explanation=None):
        msg = '{!r} is not a partition'.format(tuple(parts))
        if explanation:
            msg += ': ' + explanation
        super(NotAPartition, self).__init__(msg)
        self.parts = tuple(parts)


class NegativeCoordinate(GenericUserError, ValueError):
    '''
    Thrown when a lattice path leaves the non-negative quadrant
    '''
    def __init__(self, start, word, index, vertex):
        msg = 'Path {} from {} leaves the quadrant at step {}: {}'.format(
                word, tuple(start), index, tuple(vertex))
        super(NegativeCoordinate, self).__init__(msg)
        self.start = start
        self.word = word
        self.index = index
        self.vertex = vertex


class BadEndpoints(GenericUserError, ValueError):
    '''
    Thrown when a path does not run between the endpoints an operation requires
    '''
    def __init__(self, path, expected):
        msg = 'Path {} does not run {}'.format(path, expected)
        super(BadEndpoints, self).__init__(msg)
        self.path = path


class PreconditionViolation(GenericUserError, ValueError):
    '''
    Thrown when a local growth rule receives partitions that do not interlace as required
    '''
    def __init__(self, operation, explanation):
        super(PreconditionViolation, self).__init__(
                '{}: {}'.format(operation, explanation))
        self.operation = operation


class ConservationViolation(AssertionError):
    '''
    Thrown when an internal conservation law fails. Reaching this indicates corrupted
    state, not bad input
    '''
    def __init__(self, law, detail):
        super(ConservationViolation, self).__init__('{} violated: {}'.format(law, detail))
        self.law = law


class ShapeMismatch(GenericUserError, ValueError):
    '''
    Thrown when a filling's cells differ from the shape of the path it is used with
    '''
    def __init__(self, expected, actual):
        expected = set(expected)
        actual = set(actual)
        missing = sorted(expected - actual)
        extra = sorted(actual - expected)
        msg = 'Filling does not match the shape of the path'
        if missing:
            msg += '; missing cells {}'.format(missing)
        if extra:
            msg += '; unexpected cells {}'.format(extra)
        super(ShapeMismatch, self).__init__(msg)
        self.missing = missing
        self.extra = extra


class NotInImage(GenericUserError, ValueError):
    '''
    Thrown when a partition sequence cannot be the image of a filling under RSK along the
    given path
    '''
    def __init__(self, index, explanation):
        where = '' if index is None else ' at position {}'.format(index)
        super(NotInImage, self).__init__(
                'Sequence is not in the image of RSK{}: {}'.format(where, explanation))
        self.index = index


class NotSymmetric(GenericUserError, ValueError):
    '''
    Thrown when a path or filling is required to be symmetric about the diagonal and is
    not
    '''
    def __init__(self, what, witness=None):
        msg = '{} is not symmetric'.format(what)
        if witness is not None:
            msg += ' (first asymmetry at {})'.format(witness)
        super(NotSymmetric, self).__init__(msg)
        self.witness = witness


class OutOfSupport(GenericUserError, IndexError):
    '''
    Thrown when a cell lies outside of a weight matrix
    '''
    def __init__(self, cell, m, n):
        super(OutOfSupport, self).__init__(
                'Cell {} is outside of the {}x{} matrix'.format(tuple(cell), m, n))
        self.cell = cell


class TooLarge(GenericUserError):
    '''
    Thrown when a brute-force oracle would exceed its state budget
    '''
    def __init__(self, states, budget):
        super(TooLarge, self).__init__(
                'Enumeration needs {} states, more than the budget of {}'.format(
                    states, budget))
        self.states = states
        self.budget = budget


class BudgetExceeded(TooLarge):
    '''
    Thrown when an exact comparison would enumerate more weight assignments than allowed
    '''


class NotDisjoint(GenericUserError, ValueError):
    '''
    Thrown when chains that must be vertex-disjoint share a vertex
    '''
    def __init__(self, shared):
        shared = sorted(shared)
        super(NotDisjoint, self).__init__('Chains share vertices {}'.format(shared))
        self.shared = shared


class ChainNotContained(GenericUserError, ValueError):
    '''
    Thrown when a chain has cells outside of the diagram it must lie in
    '''
    def __init__(self, cells, lam):
        cells = sorted(cells)
        super(ChainNotContained, self).__init__(
                'Cells {} are not in the diagram {}'.format(cells, list(lam)))
        self.cells = cells


class NotOptimal(AssertionError):
    '''
    Thrown when straightening a chain family loses weight. Reaching this indicates a bug
    '''
    def __init__(self, before, after):
        super(NotOptimal, self).__init__(
                'Straightened paths weigh {}, less than the chains at {}'.format(
                    after, before))
        self.before = before
        self.after = after


class BadParameter(GenericUserError, ValueError):
    '''
    Thrown when a model parameter is out of its allowed range
    '''


class LengthMismatch(GenericUserError, ValueError):
    '''
    Thrown when a partition sequence has the wrong length for a path
    '''
    def __init__(self, expected, actual):
        super(LengthMismatch, self).__init__(
                'Expected a sequence of {} partitions, got {}'.format(expected, actual))
        self.expected = expected
        self.actual = actual


class BadConf(GenericUserError):
    '''
    Thrown when a configuration file or configuration value is unusable
    '''


class BadInput(GenericUserError):
    '''
    Thrown when an input file cannot be read or does not have the expected JSON form
    '''
    def __init__(self, source, explanation):
        super(BadInput, self).__init__('Could not read {}: {}'.format(source, explanation))
        self.source = source

'''
Exact Schur and Pfaffian Schur process probabilities of partition sequences along a
down-right path, and enumeration of the sequences they charge.

A sequence ``lam^0, ..., lam^N`` along a path with vertices ``v_0, ..., v_N`` is weighted
step by step. With ``v_{i-1} = (a, b)``:

* a ``D`` step contributes ``s_{lam^{i-1}/lam^i}(y_b)``;
* an ``R`` step, into column ``a + 1``, contributes ``s_{lam^i/lam^{i-1}}(x_{a+1})``.

Half-space measures read ``y`` as ``x`` and weight the first partition by
`~lpp_growth.partition.tau`.
'''
from collections import namedtuple
from fractions import Fraction
import logging

from .exceptions import LengthMismatch, BadParameter, BadEndpoints
from .growth import backward_b1
from .lpp import FullSpaceParams, HalfSpaceParams
from .partition import (EMPTY, Partition, interlaces, skew_schur_mono, tau,
                        partitions_in_box)
from .paths import RIGHT, shape_of, strict_lower, flip_corner

L = logging.getLogger(__name__)

QFactor = namedtuple('QFactor', ('step', 'letter', 'variable', 'index', 'value'))
''' One transition factor: step number, letter, ``'x'`` or ``'y'``, its index, and value '''


class SequenceWeight(namedtuple('SequenceWeight', ('sequence', 'probability', 'normalization',
                                                   'indicator', 'tau', 'factors'))):
    '''
    The probability of a sequence with every factor that went into it

    ``probability == normalization * indicator * tau * product(f.value for f in factors)``
    '''

    def recompute(self):
        res = self.normalization * self.indicator * self.tau
        for f in self.factors:
            res *= f.value
        return res

    def to_json(self):
        return {'sequence': [list(lam) for lam in self.sequence],
                'probability': str(self.probability),
                'normalization': str(self.normalization),
                'indicator': self.indicator,
                'tau': str(self.tau),
                'factors': [{'step': f.step, 'letter': f.letter,
                             'variable': '{}_{}'.format(f.variable, f.index),
                             'value': str(f.value)} for f in self.factors]}


def _normalization_full(gamma, params):
    cells = shape_of(gamma).cells
    params.validate(cells)
    Z = Fraction(1)
    for a, b in cells:
        Z *= 1 - params.q(a, b)
    return Z


def _normalization_half(gamma, params):
    N = gamma.start.x
    diagonal = [(i, i) for i in range(1, N + 1)]
    lower = strict_lower(gamma)
    params.validate(diagonal)
    params.validate(lower)
    Z = Fraction(1)
    for i, _ in diagonal:
        Z *= 1 - params.q(i, i)
    for a, b in lower:
        Z *= 1 - params.q(a, b)
    return Z


def normalization(gamma, params):
    '''
    The constant ``Z`` of the measure on `gamma`

    For full space, the product of ``1 - x_a y_b`` over the shape of `gamma`. For half
    space, the product of ``1 - c x_i`` over ``i <= N`` times the product of
    ``1 - x_a x_b`` over the shape's cells strictly below the diagonal.
    '''
    if params.side == 'full':
        return _normalization_full(gamma, params)
    return _normalization_half(gamma, params)


def _check_path(gamma, params):
    if params.side == 'full' and not gamma.is_full:
        raise BadEndpoints(gamma, 'from the y-axis to the x-axis')
    if params.side == 'half' and not gamma.is_half:
        raise BadEndpoints(gamma, 'from the diagonal to the x-axis')


def sequence_weight(gamma, params, seq):
    '''
    The probability of `seq` along `gamma`, with its factors

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
        A full path for `~lpp_growth.lpp.FullSpaceParams`, a half path for
        `~lpp_growth.lpp.HalfSpaceParams`
    params : FullSpaceParams or HalfSpaceParams
    seq : list of Partition
        One per vertex of `gamma`

    Returns
    -------
    SequenceWeight

    Raises
    ------
    LengthMismatch
        If `seq` does not have one partition per vertex
    BadParameter
        If a needed parameter is missing or a cell parameter is not below 1
    '''
    _check_path(gamma, params)
    seq = tuple(Partition(p) for p in seq)
    if len(seq) != len(gamma.vertices):
        raise LengthMismatch(len(gamma.vertices), len(seq))
    Z = normalization(gamma, params)
    if params.side == 'full':
        indicator = int(not seq[0] and not seq[-1])
        weight = Fraction(1)
    else:
        indicator = int(not seq[-1])
        weight = tau(seq[0], params.c)
    factors = []
    for i, s in enumerate(gamma.word, 1):
        a, b = gamma.vertex(i - 1)
        if s == RIGHT:
            value = skew_schur_mono(seq[i], seq[i - 1], params.x_at(a + 1))
            factors.append(QFactor(i, s, 'x', a + 1, value))
        else:
            value = skew_schur_mono(seq[i - 1], seq[i], params.y_at(b))
            factors.append(QFactor(i, s, 'y', b, value))
    res = SequenceWeight(seq, Fraction(0), Z, indicator, weight, tuple(factors))
    return res._replace(probability=res.recompute())


def fs_probability(gamma, params, seq):
    '''
    The full-space Schur process probability of `seq` along `gamma`

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
        From ``(0, N)`` to ``(M, 0)``
    params : lpp_growth.lpp.FullSpaceParams
    seq : list of Partition

    Returns
    -------
    fractions.Fraction
    '''
    if not isinstance(params, FullSpaceParams):
        raise BadParameter('Full-space probabilities need x and y parameters')
    return sequence_weight(gamma, params, seq).probability


def hs_probability(gamma, params, seq):
    '''
    The half-space Pfaffian Schur process probability of `seq` along `gamma`

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
        From ``(N, N)`` to ``(M + N, 0)``
    params : lpp_growth.lpp.HalfSpaceParams
    seq : list of Partition

    Returns
    -------
    fractions.Fraction
    '''
    if not isinstance(params, HalfSpaceParams):
        raise BadParameter('Half-space probabilities need x and c parameters')
    return sequence_weight(gamma, params, seq).probability


def probability(gamma, params, seq):
    ''' `fs_probability` or `hs_probability`, according to `params` '''
    return sequence_weight(gamma, params, seq).probability


def _right_steps(mu, cap, bound):
    count = min(len(mu) + 1, bound)
    if count < len(mu):
        return []
    res = [[]]
    for j in range(1, count + 1):
        low = mu.part(j)
        high = cap if j == 1 else mu.part(j - 1)
        res = [r + [p] for r in res for p in range(low, high + 1)]
    return [Partition(r) for r in res]


def _down_steps(mu, bound):
    res = [[]]
    for j in range(1, len(mu) + 1):
        res = [r + [p] for r in res for p in range(mu.part(j + 1), mu.part(j) + 1)]
    return [lam for lam in (Partition(r) for r in res) if len(lam) <= bound]


def enumerate_sequences(gamma, cap, side=None):
    '''
    Every sequence along `gamma` that its measure can charge and whose parts are at most
    `cap`, in lexicographic order

    Consecutive partitions interlace in the direction of each step, the last partition
    is empty, and the partition at ``(u, v)`` has at most ``min(u, v)`` parts. For full
    paths the first partition is empty; for half paths it has at most ``N`` parts.

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
    cap : int
        Largest part allowed anywhere
    side : str, optional
        ``'full'`` or ``'half'``. Inferred from the path if not given

    Yields
    ------
    tuple of Partition
    '''
    if cap < 0:
        raise BadParameter('cap must be non-negative, not {}'.format(cap))
    if side is None:
        side = 'full' if gamma.is_full else 'half'
    vertices = gamma.vertices
    if side == 'full':
        firsts = [EMPTY]
    else:
        N = gamma.start.x
        firsts = sorted(partitions_in_box(cap, N))

    def rec(prefix):
        i = len(prefix)
        if i == len(vertices):
            yield tuple(prefix)
            return
        v = vertices[i]
        bound = min(v.x, v.y)
        mu = prefix[-1]
        if gamma.word[i - 1] == RIGHT:
            options = _right_steps(mu, cap, bound)
        else:
            options = _down_steps(mu, bound)
        for lam in sorted(options):
            yield from rec(prefix + [lam])

    for first in firsts:
        yield from rec([first])


def normalization_defect(gamma, params, cap):
    '''
    ``1 -`` the total probability of the sequences with parts at most `cap`

    Returns
    -------
    fractions.Fraction
        Non-negative, and decreasing to 0 as `cap` grows
    '''
    total = Fraction(0)
    for seq in enumerate_sequences(gamma, cap, side=params.side):
        total += probability(gamma, params, seq)
    return 1 - total


CornerStep = namedtuple('CornerStep', ('path', 'sequence', 'weight', 'factor',
                                       'lhs', 'rhs'))
'''
The two sides of removing one corner cell: `lhs` is the probability of the original
sequence; `rhs` is the probability of `sequence` along `path` times `factor`
'''


def corner_step(gamma, params, i, seq):
    '''
    Remove the outer corner at vertex `i` of `gamma` from the measure

    With ``gamma'`` the path with the corner flipped and ``(rho, w) =
    backward_b1(lam^i, lam^{i-1}, lam^{i+1})``, the probability of `seq` along `gamma`
    equals the probability along ``gamma'`` of `seq` with ``rho`` at `i`, times the
    geometric weight ``(1 - q) q^w`` of the removed cell. If `seq` does not interlace at
    `i` both sides are 0.

    Parameters
    ----------
    gamma : lpp_growth.paths.DownRightPath
    params : FullSpaceParams or HalfSpaceParams
    i : int
        A vertex of `gamma` between an ``R`` and a ``D`` step
    seq : list of Partition

    Returns
    -------
    CornerStep
    '''
    seq = [Partition(p) for p in seq]
    if len(seq) != len(gamma.vertices):
        raise LengthMismatch(len(gamma.vertices), len(seq))
    flipped, cell = flip_corner(gamma, i)
    q = params.q(cell.col, cell.row)
    lhs = probability(gamma, params, seq)
    lam, nu, mu = seq[i], seq[i - 1], seq[i + 1]
    if not interlaces(lam, mu) or not interlaces(lam, nu):
        return CornerStep(flipped, None, None, Fraction(0), lhs, Fraction(0))
    rho, w = backward_b1(lam, mu, nu)
    new_seq = seq[:i] + [rho] + seq[i + 1:]
    factor = (1 - q) * q ** w
    rhs = probability(flipped, params, new_seq) * factor
    return CornerStep(flipped, tuple(new_seq), w, factor, lhs, rhs)

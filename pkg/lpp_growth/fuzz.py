'''
Randomized cross-checks of the growth engine, the brute-force oracles and the chain
constructions, with counterexample shrinking.

Each registered property takes a small random weight matrix and the local rule under
test, and raises `AssertionError` (or any other exception) when it fails. A failing
matrix is shrunk by dropping its last row or column and lowering entries for as long as
the property keeps failing.
'''
from collections import OrderedDict
import logging

from .exceptions import BadParameter
from .greene import (brute_g_k, brute_h_k, optimal_chains, twist, layers_decompose,
                     check_offdiag, maximalize, straighten, to_diagram)
from .growth import (_forward, forward_f1, grow_rectangle, rsk_gamma, rsk_gamma_inverse,
                     greene_prefix)
from .lpp import trial_stream
from .matrix import WeightMatrix
from .partition import (Partition, boundary, interior, contains, min_diagram_containing,
                        cells as partition_cells)
from .paths import Filling, FerrersShape, is_diagram_chain
from .verify import CheckReport

L = logging.getLogger(__name__)

DEFAULT_BUDGET = 200
''' Trials shared among all properties by default '''

MAX_SIZE = 4
MAX_ENTRY = 3

PROPERTIES = OrderedDict()
''' Registered properties by name '''


def fuzz_property(name):
    '''
    Register a function ``f(A, rule)`` as the property `name`
    '''
    def decorator(f):
        PROPERTIES[name] = f
        return f
    return decorator


def swapped_min_max(rho, mu, nu, m):
    '''
    The forward rule with the roles of ``min`` and ``max`` exchanged: a deliberately wrong
    rule for checking that the properties notice
    '''
    return Partition(_forward(rho, mu, nu, m, max, min))


MUTANTS = {'swap-min-max': swapped_min_max}


def _grown(A, rule):
    return grow_rectangle(A, A.m, A.n, rule=rule)


def _rectangle_filling(A):
    shape = FerrersShape([A.n] * A.m)
    return Filling(shape, {c: A[c] for c in A.cells()})


def _rectangle_path(A):
    return FerrersShape([A.n] * A.m).boundary_path(A.m, A.n)


@fuzz_property('rsk-round-trip')
def rsk_round_trip(A, rule):
    f = _rectangle_filling(A)
    gamma = _rectangle_path(A)
    seq = rsk_gamma(f, gamma, rule=rule)
    back = rsk_gamma_inverse(seq, gamma)
    assert back == f, 'inverse gives {!r}'.format(back)


@fuzz_property('greene-consistency')
def greene_consistency(A, rule):
    table = _grown(A, rule)
    for k in range(1, min(A.m, A.n) + 2):
        grown = greene_prefix(table, (A.m, A.n), k)
        g = brute_g_k(A, k)
        h = brute_h_k(A, k)
        assert grown == g == h, 'k={}: growth {}, g {}, h {}'.format(k, grown, g, h)


@fuzz_property('symmetric-palindrome')
def symmetric_palindrome(A, rule):
    size = max(A.m, A.n)
    S = WeightMatrix.from_cells(size, size, {
        (i, j): A.get((max(i, j), min(i, j))) for i in range(1, size + 1)
        for j in range(1, size + 1)})
    f = _rectangle_filling(S)
    seq = rsk_gamma(f, _rectangle_path(S), rule=rule)
    assert seq == seq[::-1], 'sequence {} is not a palindrome'.format(
        [list(lam) for lam in seq])


@fuzz_property('concavity')
def concavity(A, rule):
    table = _grown(A, rule)
    lam = table[A.m, A.n]
    h = [greene_prefix(table, (A.m, A.n), k) for k in range(0, len(lam) + 3)]
    for k in range(1, len(h) - 1):
        assert h[k] - h[k - 1] >= h[k + 1] - h[k], 'h = {}'.format(h)


@fuzz_property('transpose')
def transpose(A, rule):
    a = _grown(A, rule)[A.m, A.n]
    T = A.transpose()
    b = _grown(T, rule)[T.m, T.n]
    assert a == b, '{} for the matrix, {} for its transpose'.format(list(a), list(b))


@fuzz_property('mass-conservation')
def mass_conservation(A, rule):
    lam = _grown(A, rule)[A.m, A.n]
    assert sum(lam) == A.total, '|{}| != {}'.format(list(lam), A.total)


def _optimal_diagram_chains(A, k):
    _, family = optimal_chains(A, k)
    return [to_diagram(c, A.n) for c in family]


@fuzz_property('twist')
def twist_properties(A, rule):
    if min(A.m, A.n) < 2:
        return
    chi1, chi2 = _optimal_diagram_chains(A, 2)
    a, b = twist(chi1, chi2)
    assert not set(a) & set(b), 'twisted chains intersect'
    assert set(a) | set(b) == set(chi1) | set(chi2), 'twist changed the union'
    lam = min_diagram_containing(a)
    assert set(a) <= boundary(lam), 'first chain is off the boundary'
    assert set(b) <= partition_cells(interior(lam)), 'second chain is not interior'
    assert is_diagram_chain(list(a)) and is_diagram_chain(list(b)), 'not chains'


@fuzz_property('layers')
def layers(A, rule):
    k = min(A.m, A.n, 3)
    chains = _optimal_diagram_chains(A, k)
    rect = Partition([A.m] * A.n)
    lams = layers_decompose(chains, rect)
    assert contains(rect, lams[-1]), 'outer layer leaves the rectangle'
    for inner, outer in zip(lams, lams[1:]):
        assert contains(interior(outer), inner), '{} not inside the interior of {}'.format(
            list(inner), list(outer))
    covered = set().union(*(boundary(lam) for lam in lams))
    union = {c for chain in chains for c in chain}
    assert union <= covered, 'cells {} are on no boundary'.format(sorted(union - covered))


@fuzz_property('offdiag')
def offdiag(A, rule):
    for k in range(1, min(A.m, A.n) + 1):
        _, family = optimal_chains(A, k)
        maximal = maximalize(list(family), A.m, A.n)
        chains = [to_diagram(c, A.n) for c in maximal]
        assert check_offdiag(chains, A.m, A.n, k), 'k={}: corners missing'.format(k)


@fuzz_property('straighten')
def straighten_weight(A, rule):
    for k in range(1, min(A.m, A.n) + 1):
        h, family = optimal_chains(A, k)
        paths = straighten(list(family), A, k)
        g = brute_g_k(A, k)
        assert paths.weight(A) == h == g, 'k={}: paths {}, h {}, g {}'.format(
            k, paths.weight(A), h, g)


def _fails(prop, A, rule):
    try:
        prop(A, rule)
    except Exception as e:
        return '{}: {}'.format(type(e).__name__, e)
    return None


def _shrink_candidates(A):
    rows = [list(r) for r in A.rows]
    if A.n > 1:
        yield WeightMatrix(rows[:-1])
    if A.m > 1:
        yield WeightMatrix([r[:-1] for r in rows])
    for j, r in enumerate(rows):
        for i, v in enumerate(r):
            if v > 0:
                smaller = [list(x) for x in rows]
                smaller[j][i] = v - 1
                yield WeightMatrix(smaller)


def shrink(prop, A, rule):
    '''
    A smaller matrix on which `prop` still fails

    Returns
    -------
    tuple
        ``(matrix, message)``
    '''
    message = _fails(prop, A, rule)
    improved = True
    while improved:
        improved = False
        for candidate in _shrink_candidates(A):
            m = _fails(prop, candidate, rule)
            if m is not None:
                A, message, improved = candidate, m, True
                break
    return A, message


def random_matrix(rng, max_size=MAX_SIZE, max_entry=MAX_ENTRY):
    m = int(rng.integers(1, max_size + 1))
    n = int(rng.integers(1, max_size + 1))
    return WeightMatrix(rng.integers(0, max_entry + 1, size=(n, m)).tolist())


def fuzz_suite(seed, budget=DEFAULT_BUDGET, mutant=None, properties=None, progress=None,
               max_size=MAX_SIZE, max_entry=MAX_ENTRY):
    '''
    Run the registered properties on random matrices

    Trial ``t`` runs property ``t mod P`` on a matrix drawn from the stream of trial ``t``.

    Parameters
    ----------
    seed : int
    budget : int
        Total number of trials
    mutant : str, optional
        Name of a deliberately wrong local rule to run the properties against
    properties : list of str, optional
        Names of the properties to run. All of them by default
    progress : tqdm.tqdm, optional
    max_size : int, optional
        Most rows and columns of a trial matrix
    max_entry : int, optional
        Largest entry of a trial matrix

    Returns
    -------
    lpp_growth.verify.CheckReport
        With one shrunk counterexample per failing property
    '''
    if budget < 0:
        raise BadParameter('budget must be non-negative, not {}'.format(budget))
    if max_size < 1 or max_entry < 0:
        raise BadParameter('Trial matrices need max_size >= 1 and max_entry >= 0,'
                           ' not {} and {}'.format(max_size, max_entry))
    if mutant is None:
        rule = forward_f1
    else:
        try:
            rule = MUTANTS[mutant]
        except KeyError:
            raise BadParameter('Unknown mutant {!r}; expected one of {}'.format(
                mutant, sorted(MUTANTS)))
    names = list(PROPERTIES) if properties is None else list(properties)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise BadParameter('Unknown properties {}'.format(unknown))

    counts = OrderedDict((n, 0) for n in names)
    failures = OrderedDict()
    for t in range(budget if names else 0):
        name = names[t % len(names)]
        counts[name] += 1
        A = random_matrix(trial_stream(seed, t), max_size, max_entry)
        if name not in failures and _fails(PROPERTIES[name], A, rule) is not None:
            small, message = shrink(PROPERTIES[name], A, rule)
            L.info('Property %s fails on trial %d', name, t)
            failures[name] = {'property': name, 'trial': t, 'message': message,
                              'matrix': small.to_json()}
        if progress is not None:
            progress.update(1)
    return CheckReport('fuzz', budget, list(failures.values()), seed=seed, mutant=mutant,
                       properties=counts)

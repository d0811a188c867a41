'''
Brute-force last passage times and the chain rearrangements behind their equality.

Two coordinate systems meet here:

* matrix coordinates ``(i, j)``, column ``i`` and row ``j`` of a weight matrix, where
  NE-chains increase weakly in both coordinates and up-right paths step right or up.
  `brute_g_k`, `brute_h_k`, `optimal_chains`, `augment_greedily`, `maximalize` and
  `straighten` use these;
* diagram coordinates, the canonical cell coordinates of `lpp_growth.partition`, where a
  chain has weakly increasing columns and weakly decreasing rows. `twist`,
  `layers_decompose` and `check_offdiag` use these.

`to_diagram` and `to_matrix` convert between the two for an `n`-row rectangle.
'''
from itertools import product
from math import comb
import logging

from .exceptions import (TooLarge, NotDisjoint, ChainNotContained, NotOptimal,
                         BadParameter, ConservationViolation)
from .matrix import WeightMatrix
from .partition import (Cell, Partition, part_max, part_min, boundary, interior,
                        contains, cells as partition_cells, min_diagram_containing)
from .paths import is_ne_chain, is_up_right, is_diagram_chain, chain_weight

L = logging.getLogger(__name__)

STATE_BUDGET = 10 ** 7
''' Default cap on the number of states a brute-force oracle may visit '''


def to_diagram(cells, n):
    ''' Map matrix cells of an `n`-row matrix to diagram cells: ``(i, j) -> (i, n + 1 - j)`` '''
    return [Cell(i, n + 1 - j) for i, j in cells]


to_matrix = to_diagram
''' The inverse of `to_diagram`, which is the same reflection '''


def matrix_order(chain):
    return tuple(sorted((Cell(*c) for c in chain), key=lambda c: (c.col, c.row)))


def diagram_order(chain):
    return tuple(sorted((Cell(*c) for c in chain), key=lambda c: (c.col, -c.row)))


class DisjointChainFamily(object):
    '''
    A sequence of pairwise vertex-disjoint chains

    Parameters
    ----------
    chains : list of list of Cell

    Raises
    ------
    NotDisjoint
        If two chains share a vertex
    '''

    def __init__(self, chains):
        self.chains = tuple(tuple(Cell(*c) for c in chain) for chain in chains)
        seen = set()
        shared = set()
        for chain in self.chains:
            here = set(chain)
            shared |= seen & here
            seen |= here
        if shared:
            raise NotDisjoint(shared)

    def __iter__(self):
        return iter(self.chains)

    def __len__(self):
        return len(self.chains)

    def __getitem__(self, i):
        return self.chains[i]

    def union(self):
        return {c for chain in self.chains for c in chain}

    def weight(self, A):
        return sum(chain_weight(A, chain) for chain in self.chains)

    def __repr__(self):
        return 'DisjointChainFamily({})'.format([list(c) for c in self.chains])

    def to_json(self):
        return [[list(c) for c in chain] for chain in self.chains]


def _check_k(k):
    if k < 1:
        raise BadParameter('k must be at least 1, not {}'.format(k))


def optimal_chains(A, k, budget=STATE_BUDGET):
    '''
    `brute_h_k` with a witness

    Cells are scanned column by column, bottom to top, which is an order every NE-chain
    respects. A state records the row of the last cell of each of the `k` chains.

    Returns
    -------
    tuple
        ``(value, family)`` where `family` is a `DisjointChainFamily` of `k` NE-chains in
        matrix coordinates, some possibly empty, achieving `value`
    '''
    _check_k(k)
    m, n = A.m, A.n
    k_eff = min(k, m * n)
    if k_eff == 0:
        return 0, DisjointChainFamily([()] * k)
    states = comb(n + k_eff, k_eff)
    if states * m * n > budget:
        raise TooLarge(states * m * n, budget)
    empty = tuple((0, ()) for _ in range(k_eff))
    best = {tuple(0 for _ in range(k_eff)): (0, empty)}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            w = A[i, j]
            nxt = dict(best)
            for state, (val, chains) in best.items():
                tried = set()
                for t, (last, chain) in enumerate(chains):
                    if last > j or last in tried:
                        continue
                    tried.add(last)
                    new_chains = list(chains)
                    new_chains[t] = (j, chain + (Cell(i, j),))
                    new_chains.sort(key=lambda lc: lc[0])
                    key = tuple(lc[0] for lc in new_chains)
                    current = nxt.get(key)
                    if current is None or current[0] < val + w:
                        nxt[key] = (val + w, tuple(new_chains))
            best = nxt
    value, chains = max(best.values(), key=lambda vc: vc[0])
    family = [c for _, c in chains] + [()] * (k - k_eff)
    return value, DisjointChainFamily(family)


def brute_h_k(A, k, budget=STATE_BUDGET):
    '''
    The greatest total weight of `k` pairwise disjoint NE-chains in `A`

    Parameters
    ----------
    A : lpp_growth.matrix.WeightMatrix
    k : int
        At least 1
    budget : int
        Cap on visited states

    Returns
    -------
    int

    Raises
    ------
    TooLarge
        If the search would visit more than `budget` states
    '''
    return optimal_chains(A, k, budget)[0]


def _exits(entry, n):
    ranges = []
    for t, a in enumerate(entry):
        top = entry[t + 1] - 1 if t + 1 < len(entry) else n
        ranges.append(range(a, top + 1))
    return product(*ranges)


def brute_g_k(A, k, witness=False, budget=STATE_BUDGET):
    '''
    The greatest total weight of `k` pairwise disjoint up-right paths, the `i`-th from
    ``(1, i)`` to ``(m, n - k + i)``

    For ``k > min(m, n)`` no such paths exist and the value is the total mass of `A`.

    Columns are processed left to right. In each column the `i`-th path climbs from the
    row it entered on to the row it leaves on; the state is the tuple of rows the paths
    enter the next column on.

    Parameters
    ----------
    A : lpp_growth.matrix.WeightMatrix
    k : int
        At least 1
    witness : bool
        If true, return the optimal paths as well

    Returns
    -------
    int or tuple
        The value, or ``(value, family)`` if `witness` is given. `family` is None when
        ``k > min(m, n)``

    Raises
    ------
    TooLarge
        If the search would visit more than `budget` transitions
    '''
    _check_k(k)
    m, n = A.m, A.n
    if k > min(m, n):
        return (A.total, None) if witness else A.total
    start = tuple(range(1, k + 1))
    end = tuple(range(n - k + 1, n + 1))
    layer = {start: 0}
    pointers = []
    visited = 0
    for c in range(1, m + 1):
        pre = [0]
        for r in range(1, n + 1):
            pre.append(pre[-1] + A[c, r])
        nxt = {}
        back = {}
        for entry, val in layer.items():
            for exit_rows in _exits(entry, n):
                visited += 1
                if visited > budget:
                    raise TooLarge(visited, budget)
                if c == m and exit_rows != end:
                    continue
                gain = sum(pre[b] - pre[a - 1] for a, b in zip(entry, exit_rows))
                if exit_rows not in nxt or nxt[exit_rows] < val + gain:
                    nxt[exit_rows] = val + gain
                    back[exit_rows] = entry
        pointers.append(back)
        layer = nxt
    value = layer[end]
    if not witness:
        return value
    paths = [[] for _ in range(k)]
    exit_rows = end
    for c in range(m, 0, -1):
        entry = pointers[c - 1][exit_rows]
        for t in range(k):
            paths[t][:0] = [Cell(c, r) for r in range(entry[t], exit_rows[t] + 1)]
        exit_rows = entry
    return value, DisjointChainFamily(paths)


def _diagram_of(chain):
    return min_diagram_containing(chain)


def twist(chi1, chi2):
    '''
    Rearrange two disjoint diagram chains so that one lies on the boundary of the union of
    their diagrams and the other inside it

    With ``lam = part_max(λ(chi1), λ(chi2))`` and ``mu = part_min(...)``, where ``λ(χ)``
    is the smallest diagram containing ``χ``, the result is
    ``(boundary(lam) ∩ U, (boundary(mu) - boundary(lam)) ∩ U)`` for the union ``U`` of
    the two chains.

    Returns
    -------
    tuple
        Two chains, each sorted along the chain

    Raises
    ------
    NotDisjoint
        If the chains share a cell
    '''
    chi1 = {Cell(*c) for c in chi1}
    chi2 = {Cell(*c) for c in chi2}
    if chi1 & chi2:
        raise NotDisjoint(chi1 & chi2)
    union = chi1 | chi2
    lam1, lam2 = _diagram_of(chi1), _diagram_of(chi2)
    outer = boundary(part_max(lam1, lam2))
    inner = boundary(part_min(lam1, lam2)) - outer
    return diagram_order(outer & union), diagram_order(inner & union)


def layers_decompose(chains, lam):
    '''
    Nested diagrams whose boundaries cover a family of disjoint diagram chains

    Parameters
    ----------
    chains : list
        `k` disjoint chains in diagram coordinates, all inside `lam`
    lam : Partition

    Returns
    -------
    list of Partition
        ``[lam_1, ..., lam_k]`` with ``lam_i`` inside the interior of ``lam_{i + 1}``,
        ``lam_k`` inside `lam`, and every chain cell on some ``boundary(lam_i)``

    Raises
    ------
    ChainNotContained
        If a chain has a cell outside of `lam`
    NotDisjoint
        If two chains share a cell
    '''
    lam = Partition(lam)
    family = DisjointChainFamily(chains)
    outside = family.union() - partition_cells(lam)
    if outside:
        raise ChainNotContained(outside, lam)
    return _layers([list(c) for c in family], lam)


def _layers(chains, lam):
    k = len(chains)
    if k == 0:
        return []
    chains = list(chains)
    for t in range(k - 1):
        chains[k - 1], chains[t] = twist(chains[k - 1], chains[t])
    top = _diagram_of(chains[k - 1])
    if not contains(lam, top):
        raise ConservationViolation('layer containment', '{} is not inside {}'.format(
            list(top), list(lam)))
    L.debug('Layer %d: %s', k, list(top))
    return _layers(chains[:-1], interior(top)) + [top]


def offdiag_corners(m, n, k):
    '''
    The cells, in diagram coordinates, that every maximal union of `k` disjoint chains in
    the `m` by `n` rectangle contains: ``(j, n - k + j)`` and ``(m - j + 1, k + 1 - j)``
    for ``j = 1..k``
    '''
    res = set()
    for j in range(1, k + 1):
        res.add(Cell(j, n - k + j))
        res.add(Cell(m - j + 1, k + 1 - j))
    return res


def check_offdiag(chains, m, n, k):
    '''
    Whether the union of `chains` (diagram coordinates, inside the `m` by `n` rectangle)
    contains all of the `offdiag_corners`
    '''
    if k > min(m, n):
        raise BadParameter('k = {} is more than min(m, n) = {}'.format(k, min(m, n)))
    union = {Cell(*c) for chain in chains for c in chain}
    return offdiag_corners(m, n, k) <= union


def augment_greedily(chains, m, n):
    '''
    Add free cells of the `m` by `n` matrix to NE-chains (matrix coordinates) until no
    cell can be added to any chain

    Returns
    -------
    DisjointChainFamily
    '''
    chains = [list(matrix_order(c)) for c in chains]
    used = {c for chain in chains for c in chain}
    changed = True
    while changed:
        changed = False
        for cell in (Cell(i, j) for j in range(1, n + 1) for i in range(1, m + 1)):
            if cell in used:
                continue
            for chain in chains:
                candidate = matrix_order(chain + [cell])
                if is_ne_chain(candidate):
                    chain[:] = candidate
                    used.add(cell)
                    changed = True
                    break
    return DisjointChainFamily(chains)


def maximalize(chains, m, n, budget=STATE_BUDGET):
    '''
    A family of as many NE-chains whose union contains the union of `chains` and is
    maximal under inclusion among unions of that many disjoint chains

    The chains are augmented greedily first. Maximality is then certified by a weighted
    `optimal_chains` search in which cells of the current union outweigh all other cells
    together; if that finds a larger union, its family is returned instead.

    Returns
    -------
    DisjointChainFamily
    '''
    k = len(chains)
    greedy = augment_greedily(chains, m, n)
    union = greedy.union()
    big = m * n + 1
    W = WeightMatrix.from_cells(m, n, {(i, j): big if (i, j) in union else 1
                                       for j in range(1, n + 1) for i in range(1, m + 1)})
    _, certified = optimal_chains(W, k, budget)
    if len(certified.union()) > len(union):
        L.debug('Greedy augmentation stopped at %d cells; %d are reachable',
                len(union), len(certified.union()))
        return certified
    return greedy


def straighten(chains, A, k, budget=STATE_BUDGET):
    '''
    Turn `k` disjoint NE-chains into `k` disjoint up-right paths of at least the same
    weight

    The union of the chains is made maximal, decomposed into nested diagrams with
    `layers_decompose`, and the boundary of the `i`-th diagram becomes a path that
    finishes horizontally along row ``n - i + 1`` rather than vertically.

    Parameters
    ----------
    chains : list
        `k` disjoint NE-chains in matrix coordinates
    A : lpp_growth.matrix.WeightMatrix
    k : int
        At most ``min(A.m, A.n)``

    Returns
    -------
    DisjointChainFamily
        Paths ``p_1, ..., p_k``, ``p_i`` running from ``(1, k - i + 1)`` to
        ``(m, n - i + 1)``

    Raises
    ------
    NotOptimal
        If the paths weigh less than the chains
    '''
    m, n = A.m, A.n
    _check_k(k)
    if k > min(m, n):
        raise BadParameter('k = {} is more than min(m, n) = {}'.format(k, min(m, n)))
    chains = list(chains) + [()] * (k - len(chains))
    if len(chains) != k:
        raise BadParameter('Expected {} chains, got {}'.format(k, len(chains)))
    original = DisjointChainFamily(chains)
    for chain in original:
        if not is_ne_chain(matrix_order(chain)):
            raise BadParameter('{} is not an NE-chain'.format(list(chain)))
    before = original.weight(A)

    family = maximalize(original, m, n, budget)
    diagram_chains = [to_diagram(c, n) for c in family]
    layers = layers_decompose(diagram_chains, Partition([m] * n))

    paths = []
    for i, lam in enumerate(layers, 1):
        path = list(matrix_order(to_matrix(boundary(lam), n)))
        if not path or path[0] != (1, k - i + 1) or not is_up_right(path):
            raise ConservationViolation(
                    'layer boundary',
                    'boundary of {} is not an up-right path from {}'.format(
                        list(lam), (1, k - i + 1)))
        turn = Cell(m - k + i, n - i + 1)
        try:
            cut = path.index(turn)
        except ValueError:
            raise ConservationViolation(
                    'layer boundary',
                    'boundary of {} misses {}'.format(list(lam), tuple(turn)))
        path = path[:cut + 1] + [Cell(c, turn.row) for c in range(turn.col + 1, m + 1)]
        paths.append(path)

    result = DisjointChainFamily(paths)
    after = result.weight(A)
    if after < before:
        raise NotOptimal(before, after)
    return result


def random_chain_family(rng, m, n, k, stop=0.3):
    '''
    `k` random disjoint chains in diagram coordinates inside the `m` by `n` rectangle

    Each chain starts at a random free cell and repeatedly moves to a random free cell to
    its north-east (higher or equal column, lower or equal row), stopping with
    probability `stop` at each step.

    Parameters
    ----------
    rng : numpy.random.Generator
    '''
    free = {Cell(i, j) for i in range(1, m + 1) for j in range(1, n + 1)}
    chains = []
    for _ in range(k):
        chain = []
        options = sorted(free)
        while options:
            cell = options[rng.integers(len(options))]
            chain.append(cell)
            free.discard(cell)
            if rng.random() < stop:
                break
            options = sorted(c for c in free
                             if c.col >= cell.col and c.row <= cell.row)
        chains.append(diagram_order(chain))
    return chains


__all__ = ['DisjointChainFamily', 'brute_g_k', 'brute_h_k', 'optimal_chains', 'twist',
           'layers_decompose', 'check_offdiag', 'offdiag_corners', 'augment_greedily',
           'maximalize', 'straighten', 'to_diagram', 'to_matrix', 'random_chain_family',
           'is_diagram_chain']

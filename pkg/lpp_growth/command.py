'''
The ``lpp`` command: one method per sub-command, turned into a command line by
`~lpp_growth.cli_command_wrapper.CLICommandWrapper`.
'''
import json
import logging

from .command_util import IVar, GeneratorWithData, default_progress_reporter
from .configure import Configurable, Configuration, RunConfig, default_config
from .exceptions import BadParameter
from .fuzz import DEFAULT_BUDGET, MAX_ENTRY, MAX_SIZE, fuzz_suite
from .greene import STATE_BUDGET, layers_decompose
from .growth import rsk_gamma, rsk_gamma_inverse, rsk_symmetric, rsk_symmetric_inverse
from .lpp import sample_full, sample_half, observe as observe_path
from .measure import enumerate_sequences, sequence_weight
from .paths import DownRightPath
from .serialization import (read_json, read_params, read_matrix, read_filling,
                            read_sequence, read_chains, parse_shape, make_path)
from .verify import ENUMERATION_BUDGET, exact_compare, mc_compare, greene_check

L = logging.getLogger(__name__)


class LPP(Configurable):
    """
    Growth-diagram RSK, geometric last passage percolation and the Schur process measures
    of its observables
    """

    config = IVar(doc='JSON run configuration with any of "side", "path", "params",'
                      ' "seed" and "lpp.*" settings. Command line options override it')

    def __init__(self):
        '''
        Attributes
        ----------
        progress_reporter : `tqdm`-like
            A callable returning a context manager for a progress bar. It must accept
            ``total``, ``unit``, ``file`` and ``leave`` options, and the bar must have an
            ``update`` method
        '''
        super(LPP, self).__init__(conf=default_config())
        self.progress_reporter = default_progress_reporter
        self._loaded = None

    @IVar.property(None, value_type=str)
    def threads(self):
        '''
        Most worker processes to run. Defaults to the lpp.threads setting, then
        $LPP_THREADS, then 1
        '''
        if self._threads is not None:
            return self._threads
        return self.int_value('lpp.threads')

    @threads.setter
    def threads(self, val):
        if val is None:
            self._threads = None
            return
        try:
            self._threads = int(val)
        except ValueError:
            raise BadParameter('--threads takes an integer, not {!r}'.format(val))
        if self._threads < 1:
            raise BadParameter('--threads must be at least 1')

    def _run_config(self):
        if self._loaded is None:
            if self.config:
                loaded = Configuration.open(self.config)
                conf = Configuration().copy(default_config())
                conf.copy({k: v for k, v in loaded.items() if k.startswith('lpp.')})
                self.conf = conf
                self._loaded = RunConfig.from_conf(loaded)
            else:
                self._loaded = RunConfig.empty()
            L.debug('Run configuration %s', self._loaded)
        return self._loaded

    def _side(self, side=None, params=None):
        if side is not None:
            return side
        run = self._run_config()
        if run.side is not None:
            return run.side
        return params.side if params is not None else 'full'

    def _params(self, params, side=None):
        res = read_params(params) if params else self._run_config().params
        if res is None:
            raise BadParameter('No parameters: give --params or a --config with "params"')
        if side is not None and res.side != side:
            raise BadParameter('{}-space parameters given for a {}-space run'.format(
                res.side, side))
        return res

    def _path(self, path, start, side):
        if path:
            return make_path(path, start, side)
        res = self._run_config().path
        if res is None:
            raise BadParameter('No path: give --path or a --config with "path"')
        return res

    def _seed(self, seed):
        if seed is not None:
            return seed
        run_seed = self._run_config().seed
        return 0 if run_seed is None else run_seed

    def _budget(self, key, default):
        self._run_config()
        return self.int_value(key, default)

    def sample_full(self, cols, rows, params=None, seed=None):
        '''
        Sample a full-space weight matrix

        Parameters
        ----------
        cols : int
            Number of columns, m
        rows : int
            Number of rows, n
        params : str
            JSON file with {"x": [...], "y": [...]}. Defaults to the --config parameters
        seed : int
            Random seed. Defaults to the --config seed, then 0
        '''
        return sample_full(self._params(params, 'full'), cols, rows, self._seed(seed))

    def sample_half(self, size, params=None, seed=None):
        '''
        Sample a symmetric half-space weight matrix

        Parameters
        ----------
        size : int
            Number of rows and columns
        params : str
            JSON file with {"x": [...], "c": "p/q"}. Defaults to the --config parameters
        seed : int
            Random seed. Defaults to the --config seed, then 0
        '''
        return sample_half(self._params(params, 'half'), size, self._seed(seed))

    def observe(self, matrix, path=None, start=None, side=None):
        '''
        Print the partitions that growth puts on the vertices of a down-right path

        The prefix sums of each partition are the last passage times of the matrix
        restricted to the columns and rows up to the vertex.

        Parameters
        ----------
        matrix : str
            JSON file holding a weight matrix, or - for standard input
        path : str
            Path word of R and D steps
        start : str
            First vertex as x,y. Defaults to (0, #D) for a full path and (#D, #D) for a
            half path
        side : str
            full or half. Only used to choose the default start
        '''
        W = read_matrix(matrix)
        return observe_path(W, self._path(path, start, self._side(side)))

    def rsk(self, filling, path=None, start=None, symmetric=False):
        '''
        Print the sequence of partitions RSK assigns to a filling along a down-right path

        Parameters
        ----------
        filling : str
            JSON file with {"shape": [row lengths], "rows": [[...], ...]}
        path : str
            Path word. Defaults to the boundary of the filling's shape
        start : str
            First vertex as x,y. Defaults to (0, #D)
        symmetric : bool
            Use the symmetric map: the filling and path must be symmetric and only the
            half of the sequence from the diagonal on is printed
        '''
        f = read_filling(filling)
        if path:
            gamma = make_path(path, start, 'full')
        else:
            gamma = f.shape.boundary_path(f.shape.width, f.shape.height)
        seq = rsk_symmetric(f, gamma) if symmetric else rsk_gamma(f, gamma)
        return {'path': gamma.to_json(), 'sequence': [list(lam) for lam in seq]}

    def rsk_inverse(self, sequence, path=None, start=None, symmetric=False):
        '''
        Print the filling whose RSK image along a path is the given sequence

        Parameters
        ----------
        sequence : str
            JSON file with a list of partitions, or the output of rsk
        path : str
            Path word. Defaults to the path recorded in the sequence file
        start : str
            First vertex as x,y. Defaults to (0, #D)
        symmetric : bool
            Read the sequence as the half from the diagonal on of a symmetric image
        '''
        seq = read_sequence(sequence)
        if path:
            gamma = make_path(path, start, 'full')
        else:
            gamma = self._recorded_path(sequence)
        if symmetric:
            return rsk_symmetric_inverse(seq, gamma)
        return rsk_gamma_inverse(seq, gamma)

    def _recorded_path(self, sequence):
        ob = read_json(sequence)
        if isinstance(ob, dict) and 'path' in ob:
            try:
                return DownRightPath.from_json(ob['path'])
            except ValueError as e:
                raise BadParameter(str(e)) from e
        return self._path(None, None, 'full')

    def measure(self, seq, side=None, path=None, start=None, params=None, audit=False):
        '''
        Print the exact probability of a partition sequence under the Schur process
        (full) or Pfaffian Schur process (half) measure of a path

        Parameters
        ----------
        seq : str
            JSON file with a list of partitions, one per path vertex
        side : str
            full or half. Defaults to the side of the parameters
        path : str
            Path word
        start : str
            First vertex as x,y
        params : str
            JSON parameters file. Defaults to the --config parameters
        audit : bool
            Also print the normalization, indicator, tau and every transition factor
        '''
        p = self._params(params, side)
        side = self._side(side, p)
        gamma = self._path(path, start, side)
        weight = sequence_weight(gamma, p, read_sequence(seq))
        res = {'probability': str(weight.probability),
               'float': float(weight.probability)}
        if audit:
            res['audit'] = weight.to_json()
        return res

    def enumerate(self, cap, side=None, path=None, start=None, params=None):
        '''
        Stream every sequence along a path that the measure can charge, with parts at most
        the cap, as JSON lines

        Parameters
        ----------
        cap : int
            Largest part allowed
        side : str
            full or half. Defaults to the side of the parameters, then to the path's
        path : str
            Path word
        start : str
            First vertex as x,y
        params : str
            JSON parameters file. When given, each line carries the sequence's probability
        '''
        p = read_params(params) if params else self._run_config().params
        side = self._side(side, p)
        gamma = self._path(path, start, side)

        def gen():
            for seq in enumerate_sequences(gamma, cap, side=side):
                res = {'sequence': [list(lam) for lam in seq]}
                if p is not None:
                    res['probability'] = str(sequence_weight(gamma, p, seq).probability)
                yield res

        return GeneratorWithData(gen(),
                                 header=['Sequence', 'Probability'],
                                 columns=[lambda r: json.dumps(r['sequence']),
                                          lambda r: r.get('probability', '')])

    def greene_check(self, rows=3, cols=3, max_entry=3, trials=100, seed=None):
        '''
        Compare growth prefix sums with both brute-force Greene oracles on random
        matrices

        Parameters
        ----------
        rows : int
            Rows of each matrix. Default is 3
        cols : int
            Columns of each matrix. Default is 3
        max_entry : int
            Largest matrix entry. Default is 3
        trials : int
            Number of matrices. Default is 100
        seed : int
            Random seed. Defaults to the --config seed, then 0
        '''
        with self.progress_reporter(total=trials, unit=' matrices', leave=False) as progress:
            return greene_check(rows, cols, max_entry, trials, self._seed(seed),
                                budget=self._budget('lpp.state_budget', STATE_BUDGET),
                                progress=progress)

    def layers(self, chains, shape):
        '''
        Decompose disjoint NE-chains into nested partitions whose boundaries carry them

        Parameters
        ----------
        chains : str
            JSON file with a list of chains, each a list of [column, row] cells in
            diagram coordinates
        shape : str
            Enclosing partition as comma-separated parts, like 5,4,4,3,2
        '''
        lams = layers_decompose(read_chains(chains), parse_shape(shape))
        return {'layers': [list(lam) for lam in lams]}

    def verify(self, side, mode='exact', path=None, start=None, params=None, trunc=6,
               samples=100000, cap=6, seed=None, out=None, emit_hist=False,
               no_firewall=False):
        '''
        Compare the law of the growth partitions along a path with the exact measure

        In exact mode every weight assignment with entries up to the truncation is
        enumerated; the comparison passes when the total variation distance is within the
        truncated mass. In mc mode sampled matrices are compared with the measure; it
        passes when the distance is within 3 sqrt(S / samples), S being the number of
        sequences with parts up to the cap. Exits with status 1 when the comparison fails.

        Parameters
        ----------
        side : str
            full or half
        mode : str
            exact or mc. Default is exact
        path : str
            Path word
        start : str
            First vertex as x,y. Defaults to (0, #D) for full and (#D, #D) for half
        params : str
            JSON parameters file. Defaults to the --config parameters
        trunc : int
            Largest weight enumerated in exact mode. Default is 6
        samples : int
            Number of sampled matrices in mc mode. Default is 100000
        cap : int
            Largest part binned separately in mc mode. Default is 6
        seed : int
            Random seed. Defaults to the --config seed, then 0
        out : str
            Also write the report to this file
        emit_hist : bool
            Add the histogram of observed sequences to mc reports
        no_firewall : bool
            Skip checking growth against the brute-force oracles in exact mode
        '''
        p = self._params(params, side)
        gamma = self._path(path, start, side)
        seed = self._seed(seed)
        if mode == 'exact':
            with self.progress_reporter(unit=' chunks', leave=False) as progress:
                report = exact_compare(
                        gamma, p, trunc,
                        budget=self._budget('lpp.enumeration_budget', ENUMERATION_BUDGET),
                        firewall=not no_firewall,
                        workers=self.threads,
                        seed=seed,
                        progress=progress)
        elif mode == 'mc':
            with self.progress_reporter(unit=' chunks', leave=False) as progress:
                report = mc_compare(gamma, p, samples, seed, cap,
                                    workers=self.threads,
                                    emit_hist=emit_hist,
                                    progress=progress)
        else:
            raise BadParameter('--mode is exact or mc, not {!r}'.format(mode))
        if out:
            with open(out, 'w') as f:
                json.dump(report.to_json(), f, indent=2)
                f.write('\n')
        if not report.passed:
            L.warning('Comparison failed: distance %s exceeds %s',
                      report.tv_distance, report.tolerance)
        return report

    def fuzz(self, seed=None, budget=DEFAULT_BUDGET, mutant=None, max_size=MAX_SIZE,
             max_entry=MAX_ENTRY):
        '''
        Run the randomized cross-checks of the growth rules, the oracles and the chain
        constructions, shrinking any counterexample

        Parameters
        ----------
        seed : int
            Random seed. Defaults to the --config seed, then 0
        budget : int
            Trials shared among the checks. Default is 200
        mutant : str
            Run against a deliberately broken local rule (swap-min-max)
        max_size : int
            Most rows and columns of each random matrix. Default is 4
        max_entry : int
            Largest entry of each random matrix. Default is 3
        '''
        with self.progress_reporter(total=budget, unit=' trials', leave=False) as progress:
            return fuzz_suite(self._seed(seed), budget, mutant=mutant, progress=progress,
                              max_size=max_size, max_entry=max_entry)


__all__ = ['LPP']

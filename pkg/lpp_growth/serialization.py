'''
Reading the JSON inputs of the command line: parameters, matrices, fillings, partition
sequences and chains, plus the small comma-separated forms used in options.

Every reader accepts ``-`` for standard input.
'''
import json
import logging
import sys

from .exceptions import BadInput, BadParameter, NegativeCoordinate
from .lpp import params_from_json
from .matrix import WeightMatrix
from .partition import Cell, Partition
from .paths import DownRightPath, Filling

L = logging.getLogger(__name__)


def read_json(file_name):
    '''
    Decode the JSON document in `file_name`

    Raises
    ------
    BadInput
        If the file is missing or does not hold JSON
    '''
    try:
        if file_name == '-':
            return json.load(sys.stdin)
        with open(file_name) as f:
            return json.load(f)
    except OSError as e:
        raise BadInput(file_name, e.strerror or str(e)) from e
    except json.JSONDecodeError as e:
        raise BadInput(file_name, str(e)) from e


def _convert(file_name, convert, form):
    ob = read_json(file_name)
    try:
        return convert(ob)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, BadParameter):
            raise
        raise BadInput(file_name, 'expected {} ({})'.format(form, e)) from e


def read_params(file_name):
    return _convert(file_name, params_from_json,
                    '{"x": [...], "y": [...]} or {"x": [...], "c": ...}')


def read_matrix(file_name):
    return _convert(file_name, WeightMatrix.from_json, '{"m": .., "n": .., "rows": [[...]]}')


def read_filling(file_name):
    return _convert(file_name, Filling.from_json, '{"shape": [...], "rows": [[...]]}')


def _sequence(ob):
    if isinstance(ob, dict):
        ob = ob['sequence']
    if not isinstance(ob, list):
        raise TypeError('not a list of partitions')
    return tuple(Partition(p) for p in ob)


def read_sequence(file_name):
    '''
    A partition sequence given as a list of part lists, or as the ``sequence`` member of an
    object such as the output of ``lpp rsk``
    '''
    return _convert(file_name, _sequence, 'a list of partitions')


def _chains(ob):
    return [[Cell(*c) for c in chain] for chain in ob]


def read_chains(file_name):
    ''' Chains given as lists of ``[column, row]`` cells '''
    return _convert(file_name, _chains, 'a list of chains of [column, row] cells')


def _integers(text, what):
    try:
        return tuple(int(s) for s in str(text).split(',') if s.strip())
    except ValueError:
        raise BadParameter('{} is written as comma-separated integers, not {!r}'.format(
            what, text))


def parse_start(text):
    ''' A vertex written ``x,y`` '''
    res = _integers(text, 'A start vertex')
    if len(res) != 2:
        raise BadParameter('A start vertex is written x,y, not {!r}'.format(text))
    return res


def parse_shape(text):
    ''' A partition written as comma-separated parts, ``5,4,4,3,2`` '''
    return Partition(_integers(text, 'A shape'))


def default_start(word, side):
    '''
    Where a path with `word` starts when no start is given: ``(0, #D)`` for a full path,
    ``(#D, #D)`` for a half path, so that either ends on the x-axis
    '''
    downs = word.upper().count('D')
    return (0, downs) if side != 'half' else (downs, downs)


def make_path(word, start=None, side=None):
    '''
    A `~lpp_growth.paths.DownRightPath` from a word and an optional ``x,y`` start

    Raises
    ------
    BadParameter
        If the word has letters other than ``R`` and ``D``
    '''
    start = default_start(word, side) if start is None else parse_start(start)
    try:
        return DownRightPath(start, word)
    except NegativeCoordinate:
        raise
    except ValueError as e:
        raise BadParameter(str(e)) from e

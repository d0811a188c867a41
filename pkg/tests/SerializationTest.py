from io import StringIO
import unittest
from unittest.mock import patch

from pytest import raises

from lpp_growth.exceptions import BadInput, BadParameter, NegativeCoordinate
from lpp_growth.lpp import FullSpaceParams, HalfSpaceParams
from lpp_growth.matrix import WeightMatrix
from lpp_growth.partition import Cell, Partition as P, EMPTY
from lpp_growth.paths import DownRightPath
from lpp_growth.serialization import (read_json, read_params, read_matrix, read_filling,
                                      read_sequence, read_chains, parse_start, parse_shape,
                                      default_start, make_path)

from .TestUtilities import write_json


def test_read_json_missing(tmpdir):
    with raises(BadInput):
        read_json(str(tmpdir.join('absent.json')))


def test_read_json_garbage(tmpdir):
    p = tmpdir.join('bad.json')
    p.write('{"x": ')
    with raises(BadInput):
        read_json(str(p))


def test_read_json_stdin():
    with patch('sys.stdin', StringIO('[1, 2]')):
        assert read_json('-') == [1, 2]


def test_read_full_params(tmpdir):
    fname = write_json(tmpdir, 'p.json', {'x': ['1/2'], 'y': ['1/3']})
    assert isinstance(read_params(fname), FullSpaceParams)


def test_read_half_params(tmpdir):
    fname = write_json(tmpdir, 'p.json', {'x': ['1/2'], 'c': '1/3'})
    assert isinstance(read_params(fname), HalfSpaceParams)


def test_read_params_error_passes_through(tmpdir):
    fname = write_json(tmpdir, 'p.json', {'x': ['1/2']})
    with raises(BadParameter):
        read_params(fname)


def test_read_matrix(tmpdir):
    fname = write_json(tmpdir, 'm.json', {'m': 2, 'n': 2, 'rows': [[1, 3], [2, 4]]})
    assert read_matrix(fname) == WeightMatrix([[1, 3], [2, 4]])


def test_read_matrix_list(tmpdir):
    fname = write_json(tmpdir, 'm.json', [[1, 3]])
    assert read_matrix(fname).m == 2


def test_read_matrix_size_mismatch(tmpdir):
    fname = write_json(tmpdir, 'm.json', {'m': 3, 'n': 2, 'rows': [[1, 3], [2, 4]]})
    with raises(BadInput):
        read_matrix(fname)


def test_read_matrix_negative(tmpdir):
    fname = write_json(tmpdir, 'm.json', [[1, -3]])
    with raises(BadInput):
        read_matrix(fname)


def test_read_filling(tmpdir):
    fname = write_json(tmpdir, 'f.json', {'shape': [2, 1], 'rows': [[1, 2], [3]]})
    f = read_filling(fname)
    assert f[Cell(2, 1)] == 2
    assert f[Cell(1, 2)] == 3


def test_read_filling_wrong_shape(tmpdir):
    fname = write_json(tmpdir, 'f.json', {'shape': [2, 2], 'rows': [[1, 2], [3]]})
    with raises(BadInput):
        read_filling(fname)


class ReadSequenceTest(unittest.TestCase):

    def setUp(self):
        import tempfile
        self.dir = tempfile.TemporaryDirectory()
        self.addCleanup(self.dir.cleanup)

    def write(self, text):
        import os
        fname = os.path.join(self.dir.name, 'seq.json')
        with open(fname, 'w') as f:
            f.write(text)
        return fname

    def test_list(self):
        self.assertEqual(read_sequence(self.write('[[], [3], [8, 2], [4], []]')),
                         (EMPTY, P((3,)), P((8, 2)), P((4,)), EMPTY))

    def test_object(self):
        self.assertEqual(read_sequence(self.write('{"sequence": [[], [1], []]}')),
                         (EMPTY, P((1,)), EMPTY))

    def test_not_a_partition(self):
        with self.assertRaises(BadInput):
            read_sequence(self.write('[[1, 2]]'))

    def test_no_sequence_key(self):
        with self.assertRaises(BadInput):
            read_sequence(self.write('{"lambdas": []}'))

    def test_not_a_list(self):
        with self.assertRaises(BadInput):
            read_sequence(self.write('3'))


def test_read_chains(tmpdir):
    fname = write_json(tmpdir, 'c.json', [[[1, 3], [4, 3]], [[2, 1]]])
    assert read_chains(fname) == [[Cell(1, 3), Cell(4, 3)], [Cell(2, 1)]]


class OptionFormsTest(unittest.TestCase):

    def test_start(self):
        self.assertEqual(parse_start('0,2'), (0, 2))

    def test_start_one_number(self):
        with self.assertRaises(BadParameter):
            parse_start('2')

    def test_start_not_integers(self):
        with self.assertRaises(BadParameter):
            parse_start('a,b')

    def test_shape(self):
        self.assertEqual(parse_shape('5,4,4,3,2'), P((5, 4, 4, 3, 2)))

    def test_default_start_full(self):
        self.assertEqual(default_start('RRDD', 'full'), (0, 2))

    def test_default_start_half(self):
        self.assertEqual(default_start('rdd', 'half'), (2, 2))

    def test_make_path(self):
        self.assertEqual(make_path('RRDD'), DownRightPath((0, 2), 'RRDD'))

    def test_make_path_half(self):
        self.assertEqual(make_path('RD', side='half'), DownRightPath((1, 1), 'RD'))

    def test_make_path_start(self):
        self.assertEqual(make_path('RD', '3,4').start, (3, 4))

    def test_make_path_bad_letter(self):
        with self.assertRaises(BadParameter):
            make_path('RX')

    def test_make_path_below_axis(self):
        with self.assertRaises(NegativeCoordinate):
            make_path('DD', '0,1')

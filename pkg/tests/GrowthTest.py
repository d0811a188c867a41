import unittest

from hypothesis import given

from lpp_growth.exceptions import (PreconditionViolation, NotInImage, LengthMismatch,
                                   NotSymmetric, ShapeMismatch, BadEndpoints)
from lpp_growth.growth import (forward_f1, backward_b1, grow, grow_rectangle, grow_columns,
                               rsk_gamma, rsk_gamma_inverse, rsk_symmetric,
                               rsk_symmetric_inverse, check_sequence, greene_prefix)
from lpp_growth.matrix import WeightMatrix
from lpp_growth.partition import EMPTY, Partition as P
from lpp_growth.paths import (DownRightPath, FerrersShape, Filling, ROW_MAJOR, COLUMN_MAJOR,
                              shape_of, elementary_growth_sequence)

from .strategies import weight_matrices, filled_paths, symmetric_filled_paths


def example_matrix():
    ''' w(1,1) = 1, w(2,1) = 3, w(1,2) = 2, w(2,2) = 4 '''
    return WeightMatrix([[1, 3], [2, 4]])


def square_path():
    return DownRightPath((0, 2), 'RRDD')


def square_filling(rows):
    W = WeightMatrix(rows)
    return Filling.from_matrix(W, FerrersShape([W.n] * W.m))


class LocalRuleTest(unittest.TestCase):

    def test_forward_from_empty(self):
        self.assertEqual(forward_f1(EMPTY, EMPTY, EMPTY, 3), P((3,)))

    def test_forward_no_weight(self):
        self.assertEqual(forward_f1(P((1,)), P((2,)), P((1,)), 0), P((2,)))

    def test_forward_carry(self):
        self.assertEqual(forward_f1(P((1, 1)), P((2, 1)), P((1, 1)), 2), P((4, 1)))

    def test_forward_new_row(self):
        self.assertEqual(forward_f1(P((1,)), P((4,)), P((3,)), 4), P((8, 2)))

    def test_forward_negative_weight(self):
        with self.assertRaises(PreconditionViolation):
            forward_f1(EMPTY, EMPTY, EMPTY, -1)

    def test_forward_not_interlaced(self):
        with self.assertRaises(PreconditionViolation):
            forward_f1(EMPTY, P((1, 1)), EMPTY, 0)

    def test_backward_from_single_row(self):
        self.assertEqual(backward_b1(P((3,)), EMPTY, EMPTY), (EMPTY, 3))

    def test_backward_no_weight(self):
        self.assertEqual(backward_b1(P((2,)), P((2,)), P((1,))), (P((1,)), 0))

    def test_backward_carry(self):
        self.assertEqual(backward_b1(P((4, 1)), P((2, 1)), P((1, 1))), (P((1, 1)), 2))

    def test_backward_all_equal(self):
        lam = P((2, 2, 1))
        self.assertEqual(backward_b1(lam, lam, lam), (lam, 0))

    def test_backward_not_interlaced(self):
        with self.assertRaises(PreconditionViolation):
            backward_b1(P((1,)), P((2,)), EMPTY)


class GrowthTableTest(unittest.TestCase):

    def test_corner(self):
        table = grow_rectangle(example_matrix(), 2, 2)
        self.assertEqual(table[2, 2], P((8, 2)))

    def test_axes_empty(self):
        table = grow_rectangle(example_matrix(), 2, 2)
        self.assertEqual(table[0, 2], EMPTY)

    def test_edges(self):
        table = grow_rectangle(example_matrix(), 2, 2)
        self.assertEqual((table[1, 1], table[2, 1], table[1, 2]), (P((1,)), P((4,)), P((3,))))

    def test_greene_prefix(self):
        table = grow_rectangle(example_matrix(), 2, 2)
        self.assertEqual([greene_prefix(table, (2, 2), k) for k in (1, 2, 3)], [8, 10, 10])

    def test_columns(self):
        self.assertEqual(list(grow_columns(example_matrix(), 2)),
                         [(1, (P((1,)), P((3,)))), (2, (P((4,)), P((8, 2))))])

    def test_to_json(self):
        table = grow_rectangle(example_matrix(), 2, 2)
        self.assertEqual(table.to_json(), {'1,1': [1], '2,1': [4], '1,2': [3], '2,2': [8, 2]})

    def test_check(self):
        grow_rectangle(example_matrix(), 2, 2).check()


class RSKTest(unittest.TestCase):

    def test_identity_filling(self):
        f = square_filling([[1, 0], [0, 1]])
        self.assertEqual(rsk_gamma(f, square_path()),
                         (EMPTY, P((1,)), P((2,)), P((1,)), EMPTY))

    def test_inverse(self):
        f = square_filling([[1, 0], [0, 1]])
        self.assertEqual(rsk_gamma_inverse(rsk_gamma(f, square_path()), square_path()), f)

    def test_shape_mismatch(self):
        f = Filling(FerrersShape((1,)), {(1, 1): 1})
        with self.assertRaises(ShapeMismatch):
            rsk_gamma(f, square_path())

    def test_half_path(self):
        f = Filling(FerrersShape((1,)), {(1, 1): 1})
        with self.assertRaises(BadEndpoints):
            rsk_gamma(f, DownRightPath((1, 1), 'D'))

    def test_inverse_breaks_interlacing(self):
        with self.assertRaises(NotInImage):
            rsk_gamma_inverse([EMPTY, P((2,)), P((1,)), P((1,)), EMPTY], square_path())

    def test_inverse_nonempty_on_axis(self):
        with self.assertRaises(NotInImage):
            rsk_gamma_inverse([P((1,)), P((1,)), P((2,)), P((1,)), EMPTY], square_path())

    def test_inverse_too_many_parts(self):
        with self.assertRaises(NotInImage):
            check_sequence([EMPTY, P((1, 1)), P((1, 1)), P((1,)), EMPTY], square_path())

    def test_inverse_wrong_length(self):
        with self.assertRaises(LengthMismatch):
            rsk_gamma_inverse([EMPTY, EMPTY], square_path())

    def test_grows_in_elementary_growth_order(self):
        gamma = DownRightPath((0, 3), 'RDRRDD')
        shape = shape_of(gamma)
        f = Filling(shape, {c: i for i, c in enumerate(sorted(shape.cells))})
        seen = []

        def recording(rho, mu, nu, m):
            seen.append(m)
            return forward_f1(rho, mu, nu, m)
        rsk_gamma(f, gamma, order=COLUMN_MAJOR, rule=recording)
        self.assertEqual(seen, [f[step.cell] for step in
                                elementary_growth_sequence(gamma, COLUMN_MAJOR)])


class SymmetricRSKTest(unittest.TestCase):

    def test_half_sequence(self):
        f = square_filling([[1, 2], [2, 0]])
        self.assertEqual(rsk_symmetric(f, square_path()), (P((3, 2)), P((3,)), EMPTY))

    def test_inverse(self):
        f = square_filling([[1, 2], [2, 0]])
        self.assertEqual(rsk_symmetric_inverse(rsk_symmetric(f, square_path()),
                                               square_path()), f)

    def test_asymmetric_filling(self):
        f = square_filling([[1, 2], [3, 0]])
        with self.assertRaises(NotSymmetric):
            rsk_symmetric(f, square_path())

    def test_asymmetric_path(self):
        path = DownRightPath((0, 2), 'RDDR')
        with self.assertRaises(NotSymmetric):
            rsk_symmetric(Filling.zero(shape_of(path)), path)

    def test_inverse_wrong_length(self):
        with self.assertRaises(LengthMismatch):
            rsk_symmetric_inverse([EMPTY], square_path())


@given(filled_paths())
def test_rsk_round_trip(pf):
    path, f = pf
    assert rsk_gamma_inverse(rsk_gamma(f, path), path) == f


@given(filled_paths())
def test_rsk_image_interlaces(pf):
    path, f = pf
    check_sequence(rsk_gamma(f, path), path)


@given(filled_paths())
def test_growth_order_irrelevant(pf):
    _, f = pf
    assert grow(f, ROW_MAJOR) == grow(f, COLUMN_MAJOR)


@given(filled_paths())
def test_inverse_in_column_order(pf):
    path, f = pf
    assert rsk_gamma_inverse(rsk_gamma(f, path), path, order=COLUMN_MAJOR) == f


@given(weight_matrices())
def test_backward_inverts_forward(W):
    table = grow_rectangle(W, W.m, W.n)
    for u in range(1, W.m + 1):
        for v in range(1, W.n + 1):
            assert backward_b1(table[u, v], table[u, v - 1], table[u - 1, v]) == \
                    (table[u - 1, v - 1], W[u, v])


@given(weight_matrices())
def test_corner_holds_total_mass(W):
    assert grow_rectangle(W, W.m, W.n)[W.m, W.n].weight == W.total


@given(weight_matrices())
def test_table_interlaces(W):
    grow_rectangle(W, W.m, W.n).check()


@given(symmetric_filled_paths())
def test_symmetric_round_trip(pf):
    path, f = pf
    assert rsk_symmetric_inverse(rsk_symmetric(f, path), path) == f

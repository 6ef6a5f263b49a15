import random

from mckay.poly import IntPolynomial
from mckay.polymatrix import (
    det_int_bareiss,
    det_poly_bareiss,
    det_poly_cofactor,
    interpolation_nodes,
    poly_matrix_det,
)

P = IntPolynomial


def test_interpolation_nodes():
    assert interpolation_nodes(5) == [0, 1, -1, 2, -2]
    assert interpolation_nodes(1) == [0]


def test_det_int_bareiss():
    assert det_int_bareiss([]) == 1
    assert det_int_bareiss([[5]]) == 5
    assert det_int_bareiss([[1, 2], [3, 4]]) == -2
    assert det_int_bareiss([[0, 1], [1, 0]]) == -1
    assert det_int_bareiss([[1, 2], [2, 4]]) == 0


def test_identity_3x3():
    eye = [[P.one() if i == j else P.zero() for j in range(3)] for i in range(3)]
    assert poly_matrix_det(eye) == P.one()


def test_diagonal_2x2():
    m = [[P((1, -1)), P.zero()], [P.zero(), P((1, 1))]]
    assert poly_matrix_det(m) == P((1, 0, -1))


def test_zero_determinant():
    m = [[P((1, 1)), P((1, 1))], [P((2, 2)), P((2, 2))]]
    assert poly_matrix_det(m).is_zero()
    assert det_poly_bareiss(m).is_zero()


def _random_poly_matrix(rng, n, maxdeg):
    return [
        [
            P([rng.randrange(-3, 4) for _ in range(rng.randrange(maxdeg + 2))])
            for _ in range(n)
        ]
        for _ in range(n)
    ]


def test_agrees_with_cofactor_expansion():
    rng = random.Random(2024)
    for n in range(1, 5):
        for _ in range(8):
            m = _random_poly_matrix(rng, n, 2)
            expected = det_poly_cofactor(m)
            assert poly_matrix_det(m) == expected
            assert det_poly_bareiss(m) == expected


def test_interpolation_matches_bareiss_larger():
    rng = random.Random(5)
    m = _random_poly_matrix(rng, 6, 3)
    assert poly_matrix_det(m) == det_poly_bareiss(m)


def test_empty_matrix():
    assert poly_matrix_det([]) == P.one()

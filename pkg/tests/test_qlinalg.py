import random

import pytest

from qgain.generate import random_unit
from qgain.qlinalg import QMatrix, RankSide, is_hermitian, left_scale_row, rank
from qgain.quat import I, J, ONE, ZERO, Quaternion

from conftest import adjoint_rank

ROW_LEFT, ROW_RIGHT, COL_LEFT, COL_RIGHT = RankSide

A_PRIME = QMatrix.from_rows([[ONE, I], [-I, ONE]])
A = QMatrix.from_rows([[ONE - J * I, J + I], [-I, ONE]])


def random_matrix(rng, rows, cols, density=0.7, palette=None):
    pal = palette or rng.choice(["basis", "rational"])
    return QMatrix(rows, cols, tuple(random_unit(rng, pal) if rng.random() < density else ZERO
                                     for _ in range(rows * cols)))


def low_rank_matrix(rng, rows, cols, r):
    """rows that are left combinations of ``r`` random rows."""
    base = random_matrix(rng, r, cols, density=1.0)
    out = []
    for _ in range(rows):
        coeffs = [random_unit(rng, "basis") if rng.random() < 0.7 else ZERO for _ in range(r)]
        row = []
        for j in range(cols):
            acc = ZERO
            for t in range(r):
                acc = acc + coeffs[t] * base[t, j]
            row.append(acc)
        out.append(row)
    return QMatrix.from_rows(out)


def test_example_matrix_ranks():
    assert [rank(A, s) for s in (ROW_LEFT, ROW_RIGHT, COL_LEFT, COL_RIGHT)] == [1, 2, 2, 1]
    assert [rank(A_PRIME, s) for s in RankSide] == [1, 1, 1, 1]


def test_example_matrix_is_left_row_operation_of_a_prime():
    # A is A' with j * (row 2) added to row 1
    rows = A_PRIME.to_rows()
    rows[0] = [a + J * b for a, b in zip(rows[0], rows[1])]
    assert QMatrix.from_rows(rows) == A


@pytest.mark.parametrize("side", list(RankSide))
def test_degenerate(side):
    assert rank(QMatrix.zeros(3, 5), side) == 0
    assert rank(QMatrix.zeros(0, 0), side) == 0
    assert rank(QMatrix.identity(4), side) == 4


def test_left_scaling_preserves_row_left_rank():
    rng = random.Random(3)
    for _ in range(500):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        r = rng.randrange(m)
        c = random_unit(rng, "rational") * Quaternion(rng.randint(1, 3))
        assert rank(left_scale_row(M, r, c), ROW_LEFT) == rank(M, ROW_LEFT)


def test_left_scale_row_basics():
    assert left_scale_row(A, 1, ONE) == A
    with pytest.raises(ValueError):
        left_scale_row(A, 0, ZERO)
    # scaling by j on the left leaves the row-left rank alone but can move the row-right rank
    B = left_scale_row(A_PRIME, 0, J)
    assert rank(B, ROW_LEFT) == 1
    assert rank(A, ROW_RIGHT) != rank(A_PRIME, ROW_RIGHT)


def test_duality_random():
    rng = random.Random(8)
    for _ in range(200):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        M = low_rank_matrix(rng, m, n, rng.randint(1, 4)) if rng.random() < 0.5 else random_matrix(rng, m, n)
        assert rank(M, ROW_LEFT) == rank(M, COL_RIGHT)
        assert rank(M, ROW_RIGHT) == rank(M, COL_LEFT)
        for s in RankSide:
            assert rank(M, s) <= min(m, n)


def test_row_left_matches_complex_adjoint_oracle():
    rng = random.Random(21)
    for _ in range(150):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        M = low_rank_matrix(rng, m, n, rng.randint(1, 3)) if rng.random() < 0.5 else random_matrix(rng, m, n)
        assert rank(M, ROW_LEFT) == adjoint_rank(M)
        assert rank(M, ROW_RIGHT) == adjoint_rank(M.transpose())


def test_row_manipulations():
    rng = random.Random(4)
    for _ in range(100):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        M = random_matrix(rng, m, n, palette="basis")
        ranks = [rank(M, s) for s in RankSide]
        rows = M.to_rows()
        dup = QMatrix.from_rows(rows + [rows[rng.randrange(m)]])
        assert rank(dup, ROW_LEFT) == ranks[0]
        zero = QMatrix.from_rows(rows + [[ZERO] * n])
        assert [rank(zero, s) for s in RankSide] == ranks
        perm = rows[:]
        rng.shuffle(perm)
        assert [rank(QMatrix.from_rows(perm), s) for s in RankSide] == ranks


def test_hermitian_self_adjoint():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(1, 6)
        M = random_matrix(rng, n, n)
        H = QMatrix.from_rows([[M[i, j] + M[j, i].conj() for j in range(n)] for i in range(n)])
        assert is_hermitian(H)
        assert rank(H, ROW_LEFT) == rank(H.conj_transpose(), COL_RIGHT) == rank(H, COL_RIGHT)


def test_is_hermitian():
    assert is_hermitian(QMatrix.identity(3))
    assert not is_hermitian(QMatrix.from_rows([[ZERO, I], [I, ZERO]]))
    assert is_hermitian(QMatrix.from_rows([[ZERO, I], [-I, ZERO]]))
    assert not is_hermitian(QMatrix.zeros(2, 3))


def test_rank_does_not_mutate():
    before = A.entries
    for s in RankSide:
        rank(A, s)
    assert A.entries == before


def test_shape_validation():
    with pytest.raises(ValueError):
        QMatrix(2, 2, (ONE,))
    with pytest.raises(ValueError):
        QMatrix.from_rows([[ONE], [ONE, ONE]])


def test_side_parse():
    assert RankSide.parse("row-left") is ROW_LEFT
    assert RankSide.parse("COL_RIGHT") is COL_RIGHT
    with pytest.raises(ValueError):
        RankSide.parse("diagonal")

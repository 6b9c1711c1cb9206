from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from qgain.qlinalg import QMatrix
from qgain.quat import Quaternion

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=6)
quaternions = st.builds(Quaternion, small_fracs, small_fracs, small_fracs, small_fracs)
nonzero_quaternions = quaternions.filter(lambda q: not q.is_zero())


def complex_adjoint(M: QMatrix) -> np.ndarray:
    """2m x 2n complex matrix of ``M = A + B j`` (A, B complex): [[A, B], [-conj B, conj A]]."""
    A = np.zeros((M.rows, M.cols), dtype=complex)
    B = np.zeros((M.rows, M.cols), dtype=complex)
    for i in range(M.rows):
        for j in range(M.cols):
            q = M[i, j]
            A[i, j] = complex(float(q.x0), float(q.x1))
            B[i, j] = complex(float(q.x2), float(q.x3))
    return np.block([[A, B], [-B.conj(), A.conj()]])


def adjoint_rank(M: QMatrix) -> int:
    """Float oracle: half the complex rank of the adjoint matrix."""
    if M.rows == 0 or M.cols == 0:
        return 0
    r = np.linalg.matrix_rank(complex_adjoint(M), tol=1e-9)
    assert r % 2 == 0
    return r // 2


def hamilton(a, b):
    """Independent Hamilton product on plain 4-tuples of Fractions."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@pytest.fixture
def frac():
    return Fraction

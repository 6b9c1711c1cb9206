"""Dense quaternion matrices and their four one-sided ranks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quat import ONE, ZERO, Quaternion

__all__ = ["QMatrix", "RankSide", "rank", "is_hermitian", "left_scale_row"]


class RankSide(enum.Enum):
    ROW_LEFT = "row-left"
    ROW_RIGHT = "row-right"
    COL_LEFT = "col-left"
    COL_RIGHT = "col-right"

    @classmethod
    def parse(cls, text: str) -> "RankSide":
        key = text.strip().lower().replace("_", "-")
        for side in cls:
            if side.value == key:
                return side
        raise ValueError(f"unknown rank side {text!r}; expected one of "
                         + ", ".join(s.value for s in cls))


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[Quaternion, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"expected {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Quaternion]]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(q for r in rows for q in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Quaternion:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Quaternion]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Quaternion]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def conj_transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       tuple(self[i, j].conj() for j in range(self.cols) for i in range(self.rows)))

    def to_strings(self) -> list[list[list[str]]]:
        return [[q.to_strings() for q in r] for r in self.to_rows()]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(q) for q in r) + "]" for r in self.to_rows())


def _row_rank(rows: Iterable[Sequence[Quaternion]], ncols: int, left: bool) -> int:
    """Count pivots of an echelon form reached with one-sided row operations.

    ``left=True`` only ever multiplies rows by scalars from the left, so the
    left row space is preserved; ``left=False`` does the mirror image.
    """
    work = [list(r) for r in rows]
    m = len(work)
    r = 0
    for col in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if not work[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        pinv = prow[col].inverse()
        # normalise the pivot to 1; keeps later coefficients equal to the entry itself
        if left:
            prow = [ZERO if q.is_zero() else pinv * q for q in prow]
        else:
            prow = [ZERO if q.is_zero() else q * pinv for q in prow]
        work[r] = prow
        support = [c for c in range(col + 1, ncols) if not prow[c].is_zero()]
        for i in range(r + 1, m):
            row = work[i]
            f = row[col]
            if f.is_zero():
                continue
            row[col] = ZERO
            if left:
                for c in support:
                    row[c] = row[c] - f * prow[c]
            else:
                for c in support:
                    row[c] = row[c] - prow[c] * f
        r += 1
    return r


def rank(M: QMatrix, side: RankSide = RankSide.ROW_LEFT) -> int:
    """Rank of ``M`` for the requested notion of one-sided linear independence.

    Column ranks are row ranks of the transpose with the same side: a column
    combination ``sum(col_j * c_j)`` is a row combination of ``M.T`` with the
    coefficients still on the right.
    """
    if M.rows == 0 or M.cols == 0:
        return 0
    if side is RankSide.ROW_LEFT:
        return _row_rank(M.to_rows(), M.cols, left=True)
    if side is RankSide.ROW_RIGHT:
        return _row_rank(M.to_rows(), M.cols, left=False)
    T = M.transpose()
    if side is RankSide.COL_LEFT:
        return _row_rank(T.to_rows(), T.cols, left=True)
    return _row_rank(T.to_rows(), T.cols, left=False)


def is_hermitian(M: QMatrix) -> bool:
    if M.rows != M.cols:
        return False
    n = M.rows
    for i in range(n):
        for j in range(i, n):
            if M[j, i] != M[i, j].conj():
                return False
    return True


def left_scale_row(M: QMatrix, r: int, c: Quaternion) -> QMatrix:
    """Return ``M`` with row ``r`` replaced by ``c * row`` (entrywise, on the left)."""
    if c.is_zero():
        raise ValueError("row scaling by zero is not an elementary operation")
    if not 0 <= r < M.rows:
        raise IndexError(f"row {r} out of range for {M.rows} rows")
    entries = list(M.entries)
    for j in range(M.cols):
        entries[r * M.cols + j] = c * entries[r * M.cols + j]
    return QMatrix(M.rows, M.cols, tuple(entries))

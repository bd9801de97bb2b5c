"""Bit-packed linear algebra over F2.

Vectors are plain Python ints: bit j holds coordinate j, i.e. variable
x_{j+1} under the 1-based naming used in ANF text. Matrices keep one int
per row. Everything is immutable and every function is pure, so values
can be shared freely between threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

MAX_COLS = 64


def dot(a: int, b: int) -> int:
    """Standard dot product of two packed vectors, reduced mod 2."""
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class F2Matrix:
    """Row-major binary matrix; ``rows[i]`` has bit j = entry (i, j)."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if not 0 <= self.ncols <= MAX_COLS:
            raise ValueError(f"ncols must be in 0..{MAX_COLS}, got {self.ncols}")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError(f"row {r:#x} does not fit in {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]], ncols: int | None = None) -> F2Matrix:
        """Build from a list of 0/1 rows, column 0 leftmost."""
        if ncols is None:
            ncols = len(bits[0]) if bits else 0
        rows = []
        for row in bits:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum((1 << j) for j, b in enumerate(row) if b & 1))
        return cls(tuple(rows), ncols)

    def to_bits(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls((0,) * nrows, ncols)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> F2Matrix:
        cols = []
        for j in range(self.ncols):
            c = 0
            for i, r in enumerate(self.rows):
                c |= ((r >> j) & 1) << i
            cols.append(c)
        return F2Matrix(tuple(cols), len(self.rows))

    def mat_vec(self, v: int) -> int:
        """Matrix-vector product; v and the result are packed vectors."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= dot(r, v) << i
        return out

    def mat_mul(self, other: F2Matrix) -> F2Matrix:
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        ot = other.transpose()
        rows = []
        for r in self.rows:
            out = 0
            for j, c in enumerate(ot.rows):
                out |= dot(r, c) << j
            rows.append(out)
        return F2Matrix(tuple(rows), other.ncols)

    def __str__(self) -> str:
        return "\n".join("".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows)


def rref_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form on raw packed rows.

    Returns (nonzero rows, pivot columns). Pivots are chosen at the
    lowest-index column available for each row, which makes the result
    the unique RREF of the row space.
    """
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        src = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if src is None:
            continue
        work[r], work[src] = work[src], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rref(m: F2Matrix) -> tuple[F2Matrix, tuple[int, ...]]:
    """Unique RREF of m with zero rows dropped, plus ordered pivot columns."""
    rows, pivots = rref_rows(m.rows, m.ncols)
    return F2Matrix(tuple(rows), m.ncols), tuple(pivots)


def rank_of_rows(rows: Iterable[int]) -> int:
    """F2 rank of packed rows without building the echelon form."""
    basis: dict[int, int] = {}
    rank = 0
    for v in rows:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                rank += 1
                break
            v ^= b
    return rank


def rank(m: F2Matrix) -> int:
    """Number of pivots of rref(m)."""
    return rank_of_rows(m.rows)


def kernel_rows(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """RREF basis of the null space {v : M v = 0}, as (rows, pivots)."""
    red, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            v |= ((red[i] >> free) & 1) << p
        basis.append(v)
    # The raw free-column basis need not be in echelon form; canonicalize.
    return rref_rows(basis, ncols)


def kernel_basis(m: F2Matrix) -> F2Matrix:
    """RREF generator matrix of the null space; has ncols - rank(m) rows."""
    rows, _ = kernel_rows(m.rows, m.ncols)
    return F2Matrix(tuple(rows), m.ncols)


def select_columns(m: F2Matrix, cols: Iterable[int]) -> F2Matrix:
    """Submatrix of the given columns, in increasing column order."""
    sel = sorted(set(cols))
    for c in sel:
        if not 0 <= c < m.ncols:
            raise ValueError(f"column {c} out of range for {m.ncols} columns")
    rows = []
    for r in m.rows:
        out = 0
        for j, c in enumerate(sel):
            out |= ((r >> c) & 1) << j
        rows.append(out)
    return F2Matrix(tuple(rows), len(sel))


def invert(m: F2Matrix) -> F2Matrix:
    """Inverse of a square invertible matrix; ValueError if singular."""
    n = m.ncols
    if m.nrows != n:
        raise ValueError("matrix is not square")
    # Augment each row with the identity in the high bits.
    work = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    r = 0
    for c in range(n):
        bit = 1 << c
        src = next((i for i in range(r, n) if work[i] & bit), None)
        if src is None:
            raise ValueError("matrix is singular")
        work[r], work[src] = work[src], work[r]
        for i in range(n):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        r += 1
    return F2Matrix(tuple(w >> n for w in work), n)

"""Enumeration of k-subspaces and k-flats of F2^n.

A k-subspace is represented by its unique reduced-row-echelon-form
generator matrix, so equal subspaces compare equal. Enumeration walks
pivot-column patterns in lexicographic order; within a pattern the free
entries run in counting order, which makes every stream deterministic
and restartable. The pattern blocks are also the natural units for
partitioned (parallel) counting: block results merge by plain addition.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapacityError
from .f2linalg import F2Matrix, kernel_rows, rref_rows

MAX_DIM = 24
DEFAULT_BUDGET = 1 << 28


@dataclass(frozen=True)
class SubspaceRref:
    """A k-subspace of F2^n, canonically represented.

    ``gen`` is the unique k x n full-rank RREF matrix whose row space is
    the subspace; ``pivots`` are its pivot columns in increasing order.
    Instances built by this module always satisfy the invariants; use
    :func:`subspace_from_basis` to canonicalize arbitrary spanning sets.
    """

    n: int
    k: int
    gen: F2Matrix
    pivots: tuple[int, ...]

    def points(self) -> list[int]:
        """All 2^k elements, in counting order of basis subsets."""
        pts = [0]
        for row in self.gen.rows:
            pts += [p ^ row for p in pts]
        return pts

    def contains(self, v: int) -> bool:
        for row, p in zip(self.gen.rows, self.pivots):
            if (v >> p) & 1:
                v ^= row
        return v == 0

    def validate(self) -> None:
        """Check the RREF invariants; raises ValueError if violated."""
        rows, pivots = rref_rows(self.gen.rows, self.n)
        if tuple(rows) != self.gen.rows or tuple(pivots) != self.pivots:
            raise ValueError("generator matrix is not in canonical RREF")
        if len(pivots) != self.k or self.gen.ncols != self.n:
            raise ValueError("dimension mismatch")


@dataclass(frozen=True)
class Flat:
    """A k-flat (coset U + rep) with a canonical representative.

    The representative is the unique coset element whose pivot
    coordinates are all zero.
    """

    subspace: SubspaceRref
    rep: int

    def points(self) -> list[int]:
        return [p ^ self.rep for p in self.subspace.points()]


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-subspaces of F2^n (2-binomial coefficient), exact."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (k - i)) - 1
    return num // den


def flat_total(n: int, k: int) -> int:
    """Number of k-flats of F2^n: 2^(n-k) per subspace."""
    return gaussian_binomial(n, k) << (n - k)


def free_cell_positions(n: int, pivots: Sequence[int]) -> list[tuple[int, int]]:
    """Row-major (row, col) positions free to vary in an RREF generator.

    Cell (i, c) is free when c lies right of row i's pivot and is not
    itself a pivot column.
    """
    pset = set(pivots)
    cells = []
    for i, p in enumerate(pivots):
        cells.extend((i, c) for c in range(p + 1, n) if c not in pset)
    return cells


def enumerated_subspace_count(n: int, k: int) -> int:
    """Stream length of iter_subspaces, from its own block structure.

    Sums 2^(#free cells) over pivot patterns, which is exactly how many
    generator matrices the enumerator emits; no product formula involved.
    """
    _check_dims(n, k)
    return sum(1 << len(free_cell_positions(n, p)) for p in combinations(range(n), k))


def _check_dims(n: int, k: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"need 1 <= n <= {MAX_DIM}, got n={n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")


def _check_budget(items: int, budget: int | None, what: str) -> None:
    if budget is not None and items > budget:
        raise CapacityError(f"{what} would yield {items} items, over budget {budget}")


def iter_pattern_chunks(
    n: int, k: int, pivots: tuple[int, ...], *, chunk_size: int = 1 << 16
) -> Iterator[np.ndarray]:
    """Generator matrices of one pivot pattern, chunked.

    Each chunk has shape (chunk, k), dtype uint32, one packed row per
    generator row; free-entry codes run in counting order across chunks.
    Bit j of the code drives the j-th free cell in row-major order.
    """
    cells = free_cell_positions(n, pivots)
    base = np.array([1 << p for p in pivots], dtype=np.uint32)
    total = 1 << len(cells)
    for lo in range(0, total, chunk_size):
        hi = min(lo + chunk_size, total)
        codes = np.arange(lo, hi, dtype=np.uint64)
        rows = np.broadcast_to(base, (hi - lo, k)).copy()
        for j, (ri, c) in enumerate(cells):
            rows[:, ri] |= ((codes >> np.uint64(j)) & np.uint64(1)).astype(np.uint32) << np.uint32(c)
        yield rows


def iter_rref_blocks(
    n: int,
    k: int,
    *,
    budget: int | None = DEFAULT_BUDGET,
    chunk_size: int = 1 << 16,
) -> Iterator[tuple[tuple[int, ...], np.ndarray]]:
    """Yield (pivots, rows) chunks covering every RREF generator matrix.

    Pivot patterns arrive in lexicographic order; this is the
    partitioning hook for parallel counting, since pattern results
    merge by plain addition.
    """
    _check_dims(n, k)
    _check_budget(gaussian_binomial(n, k), budget, f"subspace enumeration ({n},{k})")
    for pivots in combinations(range(n), k):
        for rows in iter_pattern_chunks(n, k, pivots, chunk_size=chunk_size):
            yield pivots, rows


def iter_subspaces(
    n: int, k: int, *, budget: int | None = DEFAULT_BUDGET
) -> Iterator[SubspaceRref]:
    """Yield each k-subspace of F2^n exactly once, deterministically."""
    for pivots, rows in iter_rref_blocks(n, k, budget=budget):
        for rlist in rows.tolist():
            yield SubspaceRref(n, k, F2Matrix(tuple(rlist), n), pivots)


def coset_reps(n: int, pivots: Sequence[int]) -> np.ndarray:
    """All 2^(n-k) canonical coset representatives for a pivot pattern.

    Representatives are the vectors supported on non-pivot coordinates,
    emitted in counting order (so index 0 is the zero vector).
    """
    nonpivots = [c for c in range(n) if c not in set(pivots)]
    codes = np.arange(1 << len(nonpivots), dtype=np.uint64)
    reps = np.zeros(codes.shape, dtype=np.uint32)
    for j, c in enumerate(nonpivots):
        reps |= ((codes >> np.uint64(j)) & np.uint64(1)).astype(np.uint32) << np.uint32(c)
    return reps


def iter_flats(
    n: int, k: int, *, budget: int | None = DEFAULT_BUDGET
) -> Iterator[Flat]:
    """Yield each k-flat exactly once, subspace-major.

    The first flat of each subspace is the subspace itself (rep 0).
    """
    _check_dims(n, k)
    _check_budget(flat_total(n, k), budget, f"flat enumeration ({n},{k})")
    last_pivots: tuple[int, ...] | None = None
    reps: list[int] = []
    for pivots, rows in iter_rref_blocks(n, k, budget=None):
        if pivots != last_pivots:
            reps = coset_reps(n, pivots).tolist()
            last_pivots = pivots
        for rlist in rows.tolist():
            sub = SubspaceRref(n, k, F2Matrix(tuple(rlist), n), pivots)
            for rep in reps:
                yield Flat(sub, rep)


def canonical_rep(u: SubspaceRref, a: int) -> int:
    """The unique element of U + a with zeros at all pivot coordinates."""
    if a < 0 or a >> u.n:
        raise ValueError(f"vector {a:#x} does not fit in {u.n} bits")
    for row, p in zip(u.gen.rows, u.pivots):
        if (a >> p) & 1:
            a ^= row
    return a


def subspace_from_basis(vectors: Sequence[int], n: int) -> SubspaceRref:
    """Canonicalize the span of packed vectors to a SubspaceRref.

    The all-zero span yields the 0-dimensional subspace with an empty
    generator matrix.
    """
    _check_dims(n, 0)
    mask = (1 << n) - 1
    for v in vectors:
        if v < 0 or v & ~mask:
            raise ValueError(f"vector {v:#x} does not fit in {n} bits")
    rows, pivots = rref_rows(vectors, n)
    return SubspaceRref(n, len(pivots), F2Matrix(tuple(rows), n), tuple(pivots))


def orthogonal_complement(u: SubspaceRref) -> SubspaceRref:
    """U-perp under the standard dot product; an involution.

    Equals the kernel of the generator matrix, of dimension n - k.
    """
    rows, pivots = kernel_rows(u.gen.rows, u.n)
    return SubspaceRref(u.n, len(pivots), F2Matrix(tuple(rows), u.n), tuple(pivots))

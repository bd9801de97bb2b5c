"""Counting nonvanishing k-flats: brute force, the rank technique,
closed forms, sum-freeness and complement duality.

A k-flat A is nonvanishing for F when the XOR of F over A's points is
nonzero. N_k counts nonvanishing k-subspaces, N_{A,k} nonvanishing
k-flats. For functions of algebraic degree exactly k every coset of a
subspace has the same sum, so flat counts are 2^(n-k) times subspace
counts and subspace-only scans suffice; the engines exploit that where
stated and never otherwise.

The rank technique: a k-subspace is nonvanishing for a degree-k
monomial m exactly when the columns Var(m) of its RREF generator form
an invertible k x k block, and a k-homogeneous function is nonvanishing
on U exactly when an odd number of its terms are. One pass over the
generator matrices with vectorized invertibility tests gives N_k.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .boolfun import AnfPoly, algebraic_degree, is_homogeneous
from .errors import CapacityError
from .f2linalg import F2Matrix, kernel_rows, rank_of_rows
from .subspace import (
    DEFAULT_BUDGET,
    Flat,
    SubspaceRref,
    _check_dims,
    coset_reps,
    flat_total,
    gaussian_binomial,
    iter_pattern_chunks,
    iter_subspaces,
)
from .vecfun import VectorialFn, degree, is_homogeneous_vectorial, vect_complement

BRUTE = "brute"
RANK = "rank"
CLOSED_FORM = "closed_form"
WALSH = "walsh"

LISTING_CAP = 1 << 20

# Memory caps for the vectorized scans.
_ROW_CHUNK = 1 << 14
_SLAB_ELEMS = 1 << 21


@dataclass(frozen=True)
class NonvanishingReport:
    """Counts of nonvanishing k-subspaces and k-flats of one function.

    ``subspace_count`` is None when the method cannot produce it (the
    spectrum method sees flats only). ``is_sum_free`` means every
    k-flat is nonvanishing, i.e. flat_count == flat_total(n, k).
    ``listing``, when collected, holds the nonvanishing SubspaceRref or
    Flat values in enumeration order, capped at LISTING_CAP entries.
    """

    n: int
    k: int
    subspace_count: int | None
    flat_count: int
    method: str
    is_sum_free: bool
    listing: tuple | None = None


def _pivot_patterns(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def _points_matrix(rows: np.ndarray, k: int) -> np.ndarray:
    """All subset XORs of each generator's rows: shape (chunk, 2^k)."""
    pts = np.zeros((rows.shape[0], 1 << k), dtype=np.uint32)
    for s in range(1, 1 << k):
        low = (s & -s).bit_length() - 1
        pts[:, s] = pts[:, s ^ (s & -s)] ^ rows[:, low]
    return pts


def _gather_columns(rows: np.ndarray, cols: Sequence[int]) -> np.ndarray:
    """Pack the selected columns of each generator into small k-bit rows."""
    small = np.zeros_like(rows)
    for j, c in enumerate(cols):
        small |= ((rows >> np.uint32(c)) & np.uint32(1)) << np.uint32(j)
    return small


def _invertible_mask(small: np.ndarray) -> np.ndarray:
    """Which of the k x k packed-row matrices have full rank.

    A square F2 matrix is invertible iff every nonzero XOR combination
    of its rows is nonzero; with k <= 24 rows that is 2^k - 1 vector
    tests, each over the whole chunk at once.
    """
    count, k = small.shape
    ok = np.ones(count, dtype=bool)
    combos = np.zeros((count, 1 << k), dtype=np.uint32)
    for s in range(1, 1 << k):
        low = (s & -s).bit_length() - 1
        combos[:, s] = combos[:, s ^ (s & -s)] ^ small[:, low]
        ok &= combos[:, s] != 0
    return ok


def _mono_cols(mask: int) -> list[int]:
    cols = []
    while mask:
        low = mask & -mask
        cols.append(low.bit_length() - 1)
        mask ^= low
    return cols


def _run_patterns(patterns, task, threads):
    """Run one task per pivot pattern, preserving pattern order."""
    if threads <= 1:
        return [task(p) for p in patterns]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(task, patterns))


def flat_is_nonvanishing(fn: VectorialFn, flat: Flat) -> bool:
    """True when F's values over the flat XOR to something nonzero."""
    if flat.subspace.n != fn.n:
        raise ValueError("flat and function dimensions disagree")
    acc = 0
    vt = fn.value_table
    for p in flat.points():
        acc ^= vt[p]
    return acc != 0


def monomial_nonvanishing_test(u: SubspaceRref, monomial: int) -> bool:
    """Rank test: is the k-subspace nonvanishing for a degree-k monomial?

    Checks that the generator's columns at the monomial's variables form
    an invertible k x k block.
    """
    if monomial.bit_count() != u.k:
        raise ValueError(f"monomial degree {monomial.bit_count()} != subspace dim {u.k}")
    cols = _mono_cols(monomial)
    small = []
    for r in u.gen.rows:
        packed = 0
        for j, c in enumerate(cols):
            packed |= ((r >> c) & 1) << j
        small.append(packed)
    return rank_of_rows(small) == u.k


def count_nonvanishing_flats_brute(
    fn: VectorialFn,
    k: int,
    *,
    budget: int | None = DEFAULT_BUDGET,
    collect_listing: bool = False,
    threads: int = 1,
) -> NonvanishingReport:
    """Exact N_k and N_{A,k} by enumerating every k-flat.

    No structural shortcuts: each flat's point set is summed directly,
    which makes this the oracle the other methods are checked against.
    """
    n = fn.n
    total = flat_total(n, k)
    if budget is not None and total > budget:
        raise CapacityError(f"brute flat scan needs {total} flats, over budget {budget}")
    vt = fn.numpy_values()

    def scan(pivots):
        reps = coset_reps(n, pivots)
        nrep = reps.shape[0]
        nk = nak = 0
        items: list[Flat] | None = [] if collect_listing else None
        for rows in iter_pattern_chunks(n, k, pivots, chunk_size=_ROW_CHUNK):
            pts = _points_matrix(rows, k)
            count = rows.shape[0]
            rep_step = max(1, _SLAB_ELEMS // max(1, count << k))
            for lo in range(0, nrep, rep_step):
                rslice = reps[lo : lo + rep_step]
                sums = np.bitwise_xor.reduce(
                    vt[pts[:, None, :] ^ rslice[None, :, None]], axis=2
                )
                nak += int(np.count_nonzero(sums))
                if lo == 0:
                    nk += int(np.count_nonzero(sums[:, 0]))
                if items is not None:
                    for i, j in zip(*np.nonzero(sums)):
                        sub = SubspaceRref(
                            n, k, F2Matrix(tuple(int(r) for r in rows[i]), n), pivots
                        )
                        items.append(Flat(sub, int(rslice[j])))
        return nk, nak, items

    results = _run_patterns(_pivot_patterns(n, k), scan, threads)
    nk = sum(r[0] for r in results)
    nak = sum(r[1] for r in results)
    listing: tuple | None = None
    if collect_listing and nak <= LISTING_CAP:
        listing = tuple(item for r in results for item in r[2])
    return NonvanishingReport(n, k, nk, nak, BRUTE, nak == total, listing)


def _term_columns(f: AnfPoly, k: int) -> list[list[int]]:
    if not is_homogeneous(f, k):
        raise ValueError(f"function is not {k}-homogeneous; strip lower terms first")
    return [_mono_cols(m) for m in f.terms]


def count_nonvanishing_homogeneous(
    f: AnfPoly,
    k: int,
    *,
    budget: int | None = DEFAULT_BUDGET,
    collect_listing: bool = False,
    threads: int = 1,
) -> NonvanishingReport:
    """N_k of a k-homogeneous Boolean function by the rank technique.

    One pass over all generator matrices; a subspace counts when an odd
    number of terms pass the invertibility test. Flat count follows as
    2^(n-k) N_k, valid because the function has degree exactly k (or is
    zero, in which case both counts are zero).
    """
    return _count_homogeneous_multi(
        f.n,
        k,
        [_term_columns(f, k)],
        budget=budget,
        collect_listing=collect_listing,
        threads=threads,
    )


def count_nonvanishing_homogeneous_vectorial(
    fn: VectorialFn,
    k: int,
    *,
    budget: int | None = DEFAULT_BUDGET,
    collect_listing: bool = False,
    threads: int = 1,
) -> NonvanishingReport:
    """Rank-technique N_k for a k-homogeneous (n, m)-function.

    A subspace is nonvanishing when any coordinate sums to 1 over it,
    i.e. when any coordinate has an odd number of passing terms.
    """
    if not is_homogeneous_vectorial(fn, k):
        raise ValueError(f"function is not {k}-homogeneous; strip lower terms first")
    return _count_homogeneous_multi(
        fn.n,
        k,
        [_term_columns(c, k) for c in fn.coords],
        budget=budget,
        collect_listing=collect_listing,
        threads=threads,
    )


def _count_homogeneous_multi(n, k, coord_cols, *, budget, collect_listing, threads):
    _check_dims(n, k)
    total_subspaces = gaussian_binomial(n, k)
    if budget is not None and total_subspaces > budget:
        raise CapacityError(
            f"rank scan needs {total_subspaces} subspaces, over budget {budget}"
        )

    def scan(pivots):
        nk = 0
        items: list[SubspaceRref] | None = [] if collect_listing else None
        for rows in iter_pattern_chunks(n, k, pivots, chunk_size=_ROW_CHUNK):
            nonvanishing = np.zeros(rows.shape[0], dtype=bool)
            for cols_list in coord_cols:
                parity = np.zeros(rows.shape[0], dtype=bool)
                for cols in cols_list:
                    parity ^= _invertible_mask(_gather_columns(rows, cols))
                nonvanishing |= parity
            nk += int(np.count_nonzero(nonvanishing))
            if items is not None:
                for i in np.nonzero(nonvanishing)[0]:
                    items.append(
                        SubspaceRref(n, k, F2Matrix(tuple(int(r) for r in rows[i]), n), pivots)
                    )
        return nk, items

    results = _run_patterns(_pivot_patterns(n, k), scan, threads)
    nk = sum(r[0] for r in results)
    flat_count = nk << (n - k)
    listing: tuple | None = None
    if collect_listing and nk <= LISTING_CAP:
        listing = tuple(item for r in results for item in r[1])
    return NonvanishingReport(
        n, k, nk, flat_count, RANK, nk == total_subspaces, listing
    )


def inclusion_exclusion_count(
    f: AnfPoly, k: int, *, budget: int | None = DEFAULT_BUDGET
) -> int:
    """N_k via the alternating sum over term subsets.

    Sums (-2)^(l-1) |N_k(m_1) cap ... cap N_k(m_l)| over all nonempty
    subsets; each joint size comes from vectorized rank tests. Costs
    2^t intersection scans, so it is a cross-check for the one-pass
    parity engine, not a production path.
    """
    n = f.n
    _check_dims(n, k)
    term_cols = _term_columns(f, k)
    t = len(term_cols)
    work = gaussian_binomial(n, k) * (1 << t)
    if budget is not None and work > budget:
        raise CapacityError(f"subset scan needs {work} rank tests, over budget {budget}")
    size_sums = [0] * (t + 1)
    for pivots in _pivot_patterns(n, k):
        for rows in iter_pattern_chunks(n, k, pivots, chunk_size=_ROW_CHUNK):
            masks = [_invertible_mask(_gather_columns(rows, cols)) for cols in term_cols]

            def visit(start, acc, depth):
                for i in range(start, t):
                    joint = masks[i] if acc is None else acc & masks[i]
                    hits = int(np.count_nonzero(joint))
                    size_sums[depth + 1] += hits
                    if hits:
                        visit(i + 1, joint, depth + 1)

            visit(0, None, 0)
    return sum((-2) ** (l - 1) * size_sums[l] for l in range(1, t + 1))


def _check_profile(n: int, k: int, d: int, t: int) -> None:
    if t < 1:
        raise ValueError("need at least one term")
    if not 0 <= d <= k - 1:
        raise ValueError(f"need 0 <= d <= k-1, got d={d}, k={k}")
    if d + t * (k - d) > n:
        raise ValueError(
            f"no {d}-intersecting witness with {t} degree-{k} terms fits in {n} variables"
        )


def d_intersecting_intersection_count(n: int, k: int, d: int, t: int) -> int:
    """Joint count |N_k(m_1) cap ... cap N_k(m_t)| for d-intersecting terms.

    Closed form 2^{k(n - tk + (t-1)d)} prod_{i=0}^{k-d-1} (2^k - 2^{i+d})^{t-1}.
    """
    _check_profile(n, k, d, t)
    result = 1 << (k * (n - t * k + (t - 1) * d))
    for i in range(k - d):
        result *= ((1 << k) - (1 << (i + d))) ** (t - 1)
    return result


def d_intersecting_count(n: int, k: int, d: int, t: int) -> int:
    """N_k of any d-intersecting k-homogeneous function with t terms.

    Alternating sum over subset sizes; every l-subset of the terms is
    itself d-intersecting, so the joint sizes depend on l alone.
    """
    _check_profile(n, k, d, t)
    total = 0
    for l in range(1, t + 1):
        total += (-2) ** (l - 1) * comb(t, l) * d_intersecting_intersection_count(n, k, d, l)
    return total


def zero_intersecting_count(n: int, k: int, t: int) -> int:
    """N_k for variable-disjoint terms, in closed form.

    (2^{kn-1}/G) (1 - (1 - G/2^{k^2-1})^t) with G = prod (2^k - 2^i),
    evaluated in exact rationals; the result is asserted integral.
    """
    _check_profile(n, k, 0, t)
    g = 1
    for i in range(k):
        g *= (1 << k) - (1 << i)
    value = Fraction(1 << (k * n - 1), g) * (1 - (1 - Fraction(g, 1 << (k * k - 1))) ** t)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {value}; this is a bug")
    return int(value)


def is_sum_free(
    fn: VectorialFn, k: int, *, budget: int | None = DEFAULT_BUDGET
) -> bool:
    """True when the function has no vanishing k-flats at all.

    For algebraic degree exactly k, subspace sums determine all coset
    sums, so only subspaces are scanned; otherwise every flat is, with
    an early exit at the first vanishing one.
    """
    n = fn.n
    vt = fn.numpy_values()
    if degree(fn) == k:
        if budget is not None and gaussian_binomial(n, k) > budget:
            raise CapacityError("subspace scan over budget")
        for pivots in _pivot_patterns(n, k):
            for rows in iter_pattern_chunks(n, k, pivots, chunk_size=_ROW_CHUNK):
                sums = np.bitwise_xor.reduce(vt[_points_matrix(rows, k)], axis=1)
                if not sums.all():
                    return False
        return True
    total = flat_total(n, k)
    if budget is not None and total > budget:
        raise CapacityError("flat scan over budget")
    for pivots in _pivot_patterns(n, k):
        reps = coset_reps(n, pivots)
        for rows in iter_pattern_chunks(n, k, pivots, chunk_size=_ROW_CHUNK):
            pts = _points_matrix(rows, k)
            count = rows.shape[0]
            rep_step = max(1, _SLAB_ELEMS // max(1, count << k))
            for lo in range(0, reps.shape[0], rep_step):
                rslice = reps[lo : lo + rep_step]
                sums = np.bitwise_xor.reduce(
                    vt[pts[:, None, :] ^ rslice[None, :, None]], axis=2
                )
                if not sums.all():
                    return False
    return True


def duality_check(
    f: AnfPoly, *, budget: int | None = DEFAULT_BUDGET
) -> bool:
    """Exhaustively test: U nonvanishing for f iff U-perp is for f's complement.

    Requires a homogeneous constant-free input; the equivalence can
    fail otherwise, so mixed-degree functions are refused. Each side is
    evaluated independently (parity of rank tests on U, and on the
    kernel-derived generator of U-perp).
    """
    if f.is_zero:
        raise ValueError("zero function has no degree to pair with")
    k = algebraic_degree(f)
    if not is_homogeneous(f, k) or 0 in f.terms:
        raise ValueError("duality check requires a homogeneous, constant-free function")
    from .boolfun import complement_function

    n = f.n
    fbar = complement_function(f)
    cols_f = [_mono_cols(m) for m in f.terms]
    cols_fbar = [_mono_cols(m) for m in fbar.terms]

    def parity(rows_list, dim, cols_lists):
        acc = 0
        for cols in cols_lists:
            small = []
            for r in rows_list:
                packed = 0
                for j, c in enumerate(cols):
                    packed |= ((r >> c) & 1) << j
                small.append(packed)
            acc ^= rank_of_rows(small) == dim
        return acc

    for u in iter_subspaces(n, k, budget=budget):
        left = parity(u.gen.rows, k, cols_f)
        perp_rows, _ = kernel_rows(u.gen.rows, n)
        right = parity(perp_rows, n - k, cols_fbar)
        if left != right:
            return False
    return True


def sum_free_complement(fn: VectorialFn, k: int) -> VectorialFn:
    """Complement of a k-homogeneous function.

    The input is kth-order sum-free exactly when the result is
    (n-k)th-order sum-free; strip lower-degree terms before calling.
    """
    if not is_homogeneous_vectorial(fn, k):
        raise ValueError(f"function is not {k}-homogeneous; strip lower terms first")
    return vect_complement(fn)

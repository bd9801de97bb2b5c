"""Degree-r equivalence: G = outer o F o inner + addend.

``inner`` and ``outer`` are affine permutations (invertible linear part
plus offset) and the addend is any function of algebraic degree at most
r. Applying a degree-(k-1) equivalence never changes the number of
nonvanishing k-flats, which is what the invariance battery exercises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .boolfun import AnfPoly
from .f2linalg import F2Matrix, invert, rank_of_rows
from .vecfun import VectorialFn, degree


@dataclass(frozen=True)
class AffinePermutation:
    """x -> M x + c with an invertible matrix M."""

    matrix: F2Matrix
    offset: int

    def __post_init__(self) -> None:
        n = self.matrix.ncols
        if self.matrix.nrows != n:
            raise ValueError("matrix must be square")
        if rank_of_rows(self.matrix.rows) != n:
            raise ValueError("linear part must be invertible")
        if self.offset < 0 or self.offset >> n:
            raise ValueError("offset does not fit")

    @property
    def n(self) -> int:
        return self.matrix.ncols

    def apply(self, x: int) -> int:
        return self.matrix.mat_vec(x) ^ self.offset

    def table(self) -> np.ndarray:
        out = np.empty(1 << self.n, dtype=np.int64)
        for x in range(1 << self.n):
            out[x] = self.apply(x)
        return out

    def inverse(self) -> AffinePermutation:
        inv = invert(self.matrix)
        return AffinePermutation(inv, inv.mat_vec(self.offset))

    @classmethod
    def identity(cls, n: int) -> AffinePermutation:
        return cls(F2Matrix.identity(n), 0)


@dataclass(frozen=True)
class DegreeREquivalence:
    """The data of one equivalence move: inner/outer permutations + addend."""

    inner: AffinePermutation
    outer: AffinePermutation
    addend: VectorialFn
    r: int

    def __post_init__(self) -> None:
        if self.addend.n != self.inner.n or self.addend.m != self.outer.n:
            raise ValueError("addend dimensions must match the permutations")
        if degree(self.addend) > self.r:
            raise ValueError(f"addend degree {degree(self.addend)} exceeds r={self.r}")

    @classmethod
    def identity(cls, n: int, m: int, r: int = 0) -> DegreeREquivalence:
        zero = VectorialFn(tuple(AnfPoly.zero(n) for _ in range(m)))
        return cls(AffinePermutation.identity(n), AffinePermutation.identity(m), zero, r)


def random_affine_permutation(n: int, seed: int) -> AffinePermutation:
    """Uniform invertible linear part (rejection sampling) plus offset."""
    rng = random.Random(seed)
    while True:
        rows = tuple(rng.getrandbits(n) for _ in range(n))
        if rank_of_rows(rows) == n:
            break
    return AffinePermutation(F2Matrix(rows, n), rng.getrandbits(n))


def random_bounded_degree_fn(n: int, m: int, max_degree: int, seed: int) -> VectorialFn:
    """Random (n, m)-function with every term of degree <= max_degree."""
    rng = random.Random(seed)
    eligible = [mask for mask in range(1 << n) if mask.bit_count() <= max_degree]
    coords = []
    for _ in range(m):
        terms = tuple(mask for mask in eligible if rng.getrandbits(1))
        coords.append(AnfPoly(n, terms))
    return VectorialFn(coords)


def random_equivalence(n: int, m: int, r: int, seed: int) -> DegreeREquivalence:
    """Seeded random degree-r equivalence (deterministic per seed)."""
    return DegreeREquivalence(
        random_affine_permutation(n, seed * 3 + 1),
        random_affine_permutation(m, seed * 3 + 2),
        random_bounded_degree_fn(n, m, r, seed * 3 + 3),
        r,
    )


def apply_equivalence(fn: VectorialFn, eq: DegreeREquivalence) -> VectorialFn:
    """Compute outer(F(inner(x))) + addend(x) on tables, then re-derive ANF."""
    if eq.inner.n != fn.n or eq.outer.n != fn.m:
        raise ValueError("equivalence dimensions do not match the function")
    inner_t = eq.inner.table()
    outer_t = eq.outer.table()
    values = outer_t[fn.numpy_values()[inner_t]] ^ eq.addend.numpy_values()
    return VectorialFn.from_value_table(fn.n, fn.m, values)


def complement_transport(linear: F2Matrix) -> F2Matrix:
    """Inverse-transpose of an invertible linear map.

    If g agrees with f o L up to lower-degree terms (f, g both
    r-homogeneous), then the complement of g agrees with the complement
    of f composed with this matrix, again up to terms of degree at most
    n - r - 1.
    """
    return invert(linear).transpose()

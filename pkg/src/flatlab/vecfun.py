"""Vectorial (n, m)-functions over F2.

A function is a tuple of coordinate ANFs. Evaluation tables (one truth
table per coordinate, plus a packed value table) are computed at
construction, never lazily, so instances are immutable and can be
shared between threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from .boolfun import (
    AnfPoly,
    TruthTable,
    algebraic_degree,
    anf_from_truth_table,
    complement_function,
    homogeneous_part,
    is_homogeneous,
    parse_anf_tokens,
    tokenize_anf,
    truth_table_from_anf,
    xor_butterfly,
    _check_table_size,
)


class VectorialFn:
    """An (n, m)-function with precomputed evaluation tables.

    ``value_table[x]`` packs the m output bits of the point with packed
    coordinates x; ``tables[j]`` is the truth table of coordinate j.
    """

    __slots__ = ("n", "m", "coords", "tables", "value_table", "_vt")

    def __init__(self, coords: Sequence[AnfPoly]):
        coords = tuple(coords)
        if not coords:
            raise ValueError("need at least one coordinate")
        n = coords[0].n
        if any(c.n != n for c in coords):
            raise ValueError("coordinates disagree on the variable count")
        _check_table_size(n)
        self.n = n
        self.m = len(coords)
        self.coords = coords
        self.tables = tuple(truth_table_from_anf(c) for c in coords)
        vt = np.zeros(1 << n, dtype=np.int64)
        for j, t in enumerate(self.tables):
            vt |= np.array(t.bits, dtype=np.int64) << j
        self._vt = vt
        self.value_table = tuple(vt.tolist())

    def __call__(self, x: int) -> int:
        return self.value_table[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorialFn):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"VectorialFn(n={self.n}, m={self.m})"

    def numpy_values(self) -> np.ndarray:
        """Read-only view of the packed value table as an int64 array."""
        return self._vt

    @classmethod
    def from_value_table(cls, n: int, m: int, values: Sequence[int]) -> VectorialFn:
        """Recover coordinate ANFs from packed output values."""
        _check_table_size(n)
        arr = np.asarray(values, dtype=np.int64)
        if arr.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} values")
        if arr.min() < 0 or arr.max() >> m:
            raise ValueError(f"values must fit in {m} bits")
        coords = []
        for j in range(m):
            bits = ((arr >> j) & 1).astype(np.uint8)
            xor_butterfly(bits)
            coords.append(AnfPoly(n, tuple(int(t) for t in np.nonzero(bits)[0])))
        return cls(coords)

    @classmethod
    def from_boolean(cls, f: AnfPoly) -> VectorialFn:
        return cls((f,))

    @classmethod
    def identity(cls, n: int) -> VectorialFn:
        return cls(tuple(AnfPoly(n, (1 << j,)) for j in range(n)))


def evaluate(fn: VectorialFn, x: int) -> int:
    """Value of the function at packed point x, as a packed m-bit int."""
    return fn.value_table[x]


def set_sum(fn: VectorialFn, points: Iterable[int]) -> int:
    """XOR of the function's values over a point set (0 for the empty set)."""
    acc = 0
    vt = fn.value_table
    for p in points:
        acc ^= vt[p]
    return acc


def component(fn: VectorialFn, b: int) -> AnfPoly:
    """The Boolean function <b, F(x)>; b = 0 gives the zero function."""
    if b < 0 or b >> fn.m:
        raise ValueError(f"component selector {b:#x} does not fit in {fn.m} bits")
    terms: set[int] = set()
    for j in range(fn.m):
        if (b >> j) & 1:
            terms.symmetric_difference_update(fn.coords[j].terms)
    return AnfPoly(fn.n, tuple(terms))


def degree(fn: VectorialFn) -> int:
    """Maximum algebraic degree over the coordinates."""
    return max(algebraic_degree(c) for c in fn.coords)


def is_zero(fn: VectorialFn) -> bool:
    return all(c.is_zero for c in fn.coords)


def is_homogeneous_vectorial(fn: VectorialFn, k: int) -> bool:
    """True when every coordinate is k-homogeneous (zero coords allowed)."""
    return all(is_homogeneous(c, k) for c in fn.coords)


def derivative(fn: VectorialFn, a: int) -> VectorialFn:
    """Derivative in direction a, normalized to have no constant term.

    Computed on value tables and converted back to ANF:
    x -> F(x) + F(x+a) + F(a) + F(0).
    """
    if a < 0 or a >> fn.n:
        raise ValueError(f"direction {a:#x} does not fit in {fn.n} bits")
    vt = fn.numpy_values()
    idx = np.arange(1 << fn.n, dtype=np.intp)
    new = vt ^ vt[idx ^ a] ^ vt[a] ^ vt[0]
    return VectorialFn.from_value_table(fn.n, fn.m, new)


def higher_derivative(fn: VectorialFn, directions: Sequence[int]) -> VectorialFn:
    """Iterated derivative along the given directions, left to right."""
    for a in directions:
        fn = derivative(fn, a)
    return fn


def homogeneous_part_vectorial(fn: VectorialFn, k: int) -> VectorialFn:
    """Keep only degree-k terms in every coordinate."""
    return VectorialFn(tuple(homogeneous_part(c, k) for c in fn.coords))


def vect_complement(fn: VectorialFn) -> VectorialFn:
    """Coordinate-wise monomial complement; an involution.

    Requires every coordinate to be constant-free.
    """
    return VectorialFn(tuple(complement_function(c) for c in fn.coords))


def format_vectorial(fn: VectorialFn) -> str:
    from .boolfun import format_anf

    return " ; ".join(format_anf(c) for c in fn.coords)


def parse_vectorial_anf(text: str, n: int, m: int | None = None) -> VectorialFn:
    """Parse ';'-separated coordinate ANFs; m, when given, is enforced."""
    tokens = tokenize_anf(text)
    coords = []
    i = 0
    while True:
        poly, i = parse_anf_tokens(tokens, i, n, text)
        coords.append(poly)
        if i >= len(tokens):
            break
        i += 1  # skip ';'
    if m is not None and len(coords) != m:
        raise ValueError(f"expected {m} coordinates separated by ';', got {len(coords)}")
    return VectorialFn(coords)

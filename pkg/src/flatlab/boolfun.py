"""Boolean functions as ANF term sets and as truth tables.

A monomial is a packed variable mask (bit j = variable x_{j+1}); the
constant term is the empty mask. Truth tables index point x by the
packed integer of its coordinates, so table conversions and subspace
code share one convention.

ANF text grammar (also used by the CLI):

    anf  := term ('+' term)*
    term := '1' | var ('*' var)*
    var  := 'x' integer          (1-based, at most n)

Whitespace is ignored and duplicate terms cancel (XOR semantics).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

MAX_VARS = 64
MAX_TABLE_VARS = 24

SINGLE_TERM = "single-term"


def _normalize_terms(terms: Iterable[int]) -> tuple[int, ...]:
    seen: set[int] = set()
    for t in terms:
        seen.symmetric_difference_update((t,))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class AnfPoly:
    """An n-variable Boolean function as a canonical set of monomials.

    Terms are stored sorted by mask value with XOR-duplicates removed,
    so equal functions compare equal.
    """

    n: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"need 1 <= n <= {MAX_VARS}, got {self.n}")
        canon = _normalize_terms(self.terms)
        if canon != self.terms:
            object.__setattr__(self, "terms", canon)
        if self.terms and (self.terms[-1] >> self.n):
            raise ValueError(f"term {self.terms[-1]:#x} uses variables beyond x{self.n}")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, x: int) -> int:
        acc = 0
        for m in self.terms:
            acc ^= (x & m) == m
        return acc & 1

    def __add__(self, other: AnfPoly) -> AnfPoly:
        if self.n != other.n:
            raise ValueError("mixed variable counts")
        return AnfPoly(self.n, self.terms + other.terms)

    @classmethod
    def zero(cls, n: int) -> AnfPoly:
        return cls(n, ())

    @classmethod
    def constant_one(cls, n: int) -> AnfPoly:
        return cls(n, (0,))


@dataclass(frozen=True)
class TruthTable:
    """All 2^n evaluations of a Boolean function, indexed by packed point."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} entries, got {len(self.bits)}")

    def weight(self) -> int:
        return sum(self.bits)


def xor_butterfly(values: np.ndarray) -> np.ndarray:
    """In-place binary Moebius transform over F2 (self-inverse).

    Maps ANF coefficient vectors to truth tables and back: entry x of
    the output is the XOR of all input entries at subsets of x.
    """
    size = values.shape[0]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError("length must be a power of two")
    for i in range(n):
        step = 1 << i
        v = values.reshape(-1, 2 * step)
        v[:, step:] ^= v[:, :step]
    return values


def _check_table_size(n: int) -> None:
    if n > MAX_TABLE_VARS:
        raise CapacityError(f"truth table for n={n} exceeds the n<={MAX_TABLE_VARS} cap")


def truth_table_from_anf(f: AnfPoly) -> TruthTable:
    """Evaluate an ANF on all points via the fast Moebius transform."""
    _check_table_size(f.n)
    arr = np.zeros(1 << f.n, dtype=np.uint8)
    for m in f.terms:
        arr[m] = 1
    xor_butterfly(arr)
    return TruthTable(f.n, tuple(arr.tolist()))


def anf_from_truth_table(t: TruthTable) -> AnfPoly:
    """Inverse of truth_table_from_anf (the transform is an involution)."""
    arr = np.array(t.bits, dtype=np.uint8)
    xor_butterfly(arr)
    return AnfPoly(t.n, tuple(int(m) for m in np.nonzero(arr)[0]))


def algebraic_degree(f: AnfPoly) -> int:
    """Largest term degree; 0 for constants and for the zero function.

    Use ``f.is_zero`` to tell the zero function apart from constant 1.
    """
    return max((m.bit_count() for m in f.terms), default=0)


def is_homogeneous(f: AnfPoly, k: int) -> bool:
    """True when every term has degree exactly k (vacuously for zero)."""
    return all(m.bit_count() == k for m in f.terms)


def homogeneous_part(f: AnfPoly, k: int) -> AnfPoly:
    """The sub-sum of terms of degree exactly k."""
    return AnfPoly(f.n, tuple(m for m in f.terms if m.bit_count() == k))


def complement_function(f: AnfPoly) -> AnfPoly:
    """Replace every term's variable set by its complement in x1..xn.

    An involution that maps k-homogeneous to (n-k)-homogeneous. Rejects
    functions with a constant term: the empty monomial has no
    well-defined complement degree, so we refuse rather than guess.
    """
    if 0 in f.terms:
        raise ValueError("complement is undefined for functions with a constant term")
    full = (1 << f.n) - 1
    return AnfPoly(f.n, tuple(full ^ m for m in f.terms))


def intersect_profile(f: AnfPoly) -> int | str | None:
    """Size d of the common pairwise variable intersection, if one exists.

    Returns d when a single set D with |D| = d satisfies
    Var(m_i) & Var(m_j) = D for all pairs of distinct terms, None when
    the pairwise intersections disagree, and the marker
    ``SINGLE_TERM`` for one-term functions (trivially d-intersecting
    for every valid d).
    """
    t = len(f.terms)
    if t == 0:
        return None
    if t == 1:
        return SINGLE_TERM
    d_mask = f.terms[0] & f.terms[1]
    for i in range(t):
        for j in range(i + 1, t):
            if f.terms[i] & f.terms[j] != d_mask:
                return None
    return d_mask.bit_count()


def permute_variables(f: AnfPoly, perm: Sequence[int]) -> AnfPoly:
    """Move variable position i to perm[i] in every term (0-based)."""
    if sorted(perm) != list(range(f.n)):
        raise ValueError("perm must be a bijection on range(n)")
    new_terms = []
    for m in f.terms:
        out = 0
        while m:
            low = m & -m
            out |= 1 << perm[low.bit_length() - 1]
            m ^= low
        new_terms.append(out)
    return AnfPoly(f.n, tuple(new_terms))


def format_anf(f: AnfPoly) -> str:
    """Canonical text form: terms ascending by mask, '0' for the zero fn."""
    if f.is_zero:
        return "0"
    parts = []
    for m in f.terms:
        if m == 0:
            parts.append("1")
            continue
        names = []
        while m:
            low = m & -m
            names.append(f"x{low.bit_length()}")
            m ^= low
        parts.append("*".join(names))
    return " + ".join(parts)


class AnfSyntaxError(ValueError):
    """ANF text that does not match the grammar, with position info."""

    def __init__(self, message: str, text: str, pos: int):
        self.line = text.count("\n", 0, pos) + 1
        self.col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.col})")


_TOKEN_RE = re.compile(r"x(\d+)|[1+*;]|\S")


def tokenize_anf(text: str) -> list[tuple[str, int, int]]:
    """Lex ANF text into (kind, value, pos) tuples; kinds are
    'var', 'one', '+', '*', ';'. Raises AnfSyntaxError on stray input."""
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        tok = m.group(0)
        if m.group(1) is not None:
            tokens.append(("var", int(m.group(1)), m.start()))
        elif tok == "1":
            tokens.append(("one", 0, m.start()))
        elif tok in "+*;":
            tokens.append((tok, 0, m.start()))
        else:
            raise AnfSyntaxError(f"unexpected character {tok!r}", text, m.start())
    return tokens


def _parse_term(tokens, i, n, text):
    kind, value, pos = tokens[i]
    if kind == "one":
        return 0, i + 1
    if kind != "var":
        raise AnfSyntaxError("expected a term", text, pos)
    mask = 0
    while True:
        kind, value, pos = tokens[i]
        if kind != "var":
            raise AnfSyntaxError("expected a variable after '*'", text, pos)
        if not 1 <= value <= n:
            raise AnfSyntaxError(f"variable x{value} out of range for n={n}", text, pos)
        mask |= 1 << (value - 1)
        i += 1
        if i < len(tokens) and tokens[i][0] == "*":
            i += 1
            if i >= len(tokens):
                raise AnfSyntaxError("dangling '*'", text, len(text))
            continue
        return mask, i


def parse_anf_tokens(tokens, start, n, text) -> tuple[AnfPoly, int]:
    """Parse one coordinate from a token list; stops at ';' or the end."""
    if start >= len(tokens) or tokens[start][0] == ";":
        pos = tokens[start][2] if start < len(tokens) else len(text)
        raise AnfSyntaxError("empty ANF expression", text, pos)
    terms = []
    i = start
    while True:
        mask, i = _parse_term(tokens, i, n, text)
        terms.append(mask)
        if i >= len(tokens) or tokens[i][0] == ";":
            return AnfPoly(n, tuple(terms)), i
        kind, _, pos = tokens[i]
        if kind != "+":
            raise AnfSyntaxError("expected '+' between terms", text, pos)
        i += 1
        if i >= len(tokens):
            raise AnfSyntaxError("dangling '+'", text, len(text))


def parse_anf(text: str, n: int) -> AnfPoly:
    """Parse single-coordinate ANF text; duplicate terms cancel."""
    tokens = tokenize_anf(text)
    poly, i = parse_anf_tokens(tokens, 0, n, text)
    if i < len(tokens):
        raise AnfSyntaxError("unexpected ';' in single-coordinate input", text, tokens[i][2])
    return poly

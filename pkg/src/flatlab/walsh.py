"""Walsh-Hadamard spectra and the spectrum-based 2-flat count.

The transform uses the standard dot product as the scalar product, the
same pairing the subspace module uses for orthogonal complements, so
all spectra are reproducible bit for bit.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .boolfun import TruthTable, _check_table_size
from .subspace import flat_total
from .vecfun import VectorialFn

BENT = "bent"
SEMI_BENT = "semi_bent"
OTHER = "other"


@dataclass(frozen=True)
class WalshSpectrum:
    """Signed transform values indexed by the packed phase vector a."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values")

    def max_abs(self) -> int:
        return max(abs(w) for w in self.values)


def wht_signs(signs: np.ndarray) -> np.ndarray:
    """In-place fast transform of a +-1 vector; O(n 2^n)."""
    size = signs.shape[0]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError("length must be a power of two")
    for i in range(n):
        step = 1 << i
        v = signs.reshape(-1, 2 * step)
        left = v[:, :step].copy()
        v[:, :step] += v[:, step:]
        v[:, step:] = left - v[:, step:]
    return signs


def wht(t: TruthTable) -> WalshSpectrum:
    """Exact spectrum of a Boolean truth table."""
    _check_table_size(t.n)
    signs = 1 - 2 * np.array(t.bits, dtype=np.int64)
    wht_signs(signs)
    return WalshSpectrum(t.n, tuple(signs.tolist()))


def _parity(arr: np.ndarray) -> np.ndarray:
    x = arr.copy()
    for s in (16, 8, 4, 2, 1):
        x ^= x >> s
    return x & 1


def component_spectrum(fn: VectorialFn, b: int) -> WalshSpectrum:
    """Spectrum of the component <b, F>."""
    bits = _parity(fn.numpy_values() & b)
    signs = 1 - 2 * bits
    wht_signs(signs)
    return WalshSpectrum(fn.n, tuple(signs.tolist()))


def vectorial_spectrum(fn: VectorialFn) -> tuple[int, ...]:
    """Multiset of all (2^m - 1) 2^n component coefficients.

    Concatenated with b ascending, then the phase a ascending, so the
    result is deterministic; treat it as a multiset.
    """
    out: list[int] = []
    for b in range(1, 1 << fn.m):
        out.extend(component_spectrum(fn, b).values)
    return tuple(out)


def fourth_power_sum(spectrum: WalshSpectrum | Iterable[int]) -> int:
    """Sum of fourth powers of the coefficients, in exact big integers."""
    values = spectrum.values if isinstance(spectrum, WalshSpectrum) else spectrum
    return sum(int(w) ** 4 for w in values)


def count_nonvanishing_2flats_walsh(fn: VectorialFn) -> int:
    """Number of nonvanishing 2-flats, from the spectrum alone.

    Evaluates (2^{4n} (2^m - 1) - omega) / (3 2^{n+m+3}) with omega the
    fourth-power sum over all nonzero components; the division is exact
    for genuine spectra and is asserted.
    """
    n, m = fn.n, fn.m
    omega = fourth_power_sum(vectorial_spectrum(fn))
    numerator = (1 << (4 * n)) * ((1 << m) - 1) - omega
    denominator = 3 << (n + m + 3)
    count, rem = divmod(numerator, denominator)
    if rem:
        raise ArithmeticError(
            f"spectrum count is not integral ({numerator}/{denominator}); "
            "this indicates a bug, not bad input"
        )
    return count


def count_vanishing_2flats_walsh(fn: VectorialFn) -> int:
    """Complementary count: total 2-flats minus the nonvanishing ones."""
    return flat_total(fn.n, 2) - count_nonvanishing_2flats_walsh(fn)


def nonlinearity(fn: VectorialFn) -> int:
    """2^{n-1} minus half the largest absolute coefficient."""
    max_abs = 0
    for b in range(1, 1 << fn.m):
        max_abs = max(max_abs, component_spectrum(fn, b).max_abs())
    return (1 << (fn.n - 1)) - max_abs // 2


def classify(spectrum: WalshSpectrum) -> str:
    """Spectral shape of a single-output function.

    ``bent``: n even and every coefficient is +-2^{n/2}.
    ``semi_bent``: n odd and coefficients lie in {0, +-2^{(n+1)/2}}.
    Anything else is ``other``.
    """
    n = spectrum.n
    magnitudes = {abs(w) for w in spectrum.values}
    if n % 2 == 0 and magnitudes == {1 << (n // 2)}:
        return BENT
    if n % 2 == 1 and magnitudes <= {0, 1 << ((n + 1) // 2)}:
        return SEMI_BENT
    return OTHER

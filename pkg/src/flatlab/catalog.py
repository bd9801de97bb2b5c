"""Named constructors for the reference functions used in tests and the CLI.

Families:
  monomial_chain(n, j, k)  power map with exponent 1 + 2^j + ... + 2^(j(k-1));
                           kth-order sum-free whenever gcd(j, n) = 1
  gold(n, j)               power map x^(1 + 2^j), the k = 2 chain
  inverse(n)               power map x^(2^n - 2); (n-2)th-order sum-free
                           for odd n
  bent_chain(n)            x1*x2 + ... + x_{n-1}*x_n, n even
  semibent_chain(n)        x1*x2 + ... + x_{n-2}*x_{n-1}, n odd
  monomial(n, I)           the single monomial with variable set I

Power-map families accept an optional ``mod`` parameter to override the
default field modulus; counts of nonvanishing flats do not depend on
that choice (a basis change is a degree-1 equivalence).
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from math import gcd

from .boolfun import AnfPoly
from .gf2n import FieldSpec, power_map
from .vecfun import VectorialFn


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]
    summary: str
    build: Callable[..., VectorialFn | AnfPoly]
    # Known (params, properties) pairs exercised by the acceptance suite.
    known: tuple[tuple[dict, dict], ...] = field(default=())


def _field(n: int, mod: int | None) -> FieldSpec:
    return FieldSpec(n, mod) if mod is not None else FieldSpec.default(n)


def build_monomial_chain(n: int, j: int, k: int, mod: int | None = None) -> VectorialFn:
    if k < 1:
        raise ValueError("need k >= 1")
    if gcd(j, n) != 1:
        warnings.warn(
            f"gcd(j={j}, n={n}) != 1: the kth-order sum-freeness guarantee does not apply",
            stacklevel=2,
        )
    e = sum(1 << (j * i) for i in range(k))
    if e > (1 << n) - 2:
        raise ValueError(f"exponent {e} out of range for n={n}")
    return power_map(_field(n, mod), e)


def build_gold(n: int, j: int, mod: int | None = None) -> VectorialFn:
    return build_monomial_chain(n, j, 2, mod)


def build_inverse(n: int, mod: int | None = None) -> VectorialFn:
    return power_map(_field(n, mod), (1 << n) - 2)


def _chain(n: int, pairs: int) -> AnfPoly:
    return AnfPoly(n, tuple(0b11 << (2 * i) for i in range(pairs)))


def build_bent_chain(n: int) -> AnfPoly:
    if n % 2 or n < 2:
        raise ValueError("bent_chain needs even n >= 2")
    return _chain(n, n // 2)


def build_semibent_chain(n: int) -> AnfPoly:
    if n % 2 == 0 or n < 3:
        raise ValueError("semibent_chain needs odd n >= 3")
    return _chain(n, (n - 1) // 2)


def build_monomial(n: int, I: Iterable[int]) -> AnfPoly:
    """Single monomial from 1-based variable indices."""
    mask = 0
    for i in I:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        mask |= 1 << (i - 1)
    return AnfPoly(n, (mask,))


ENTRIES: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry(
            "monomial_chain",
            ("n", "j", "k"),
            "power map 1 + 2^j + ... + 2^(j(k-1)); kth-order sum-free for gcd(j,n)=1",
            build_monomial_chain,
            (
                ({"n": 5, "j": 1, "k": 3}, {"sum_free_order": 3}),
                ({"n": 7, "j": 1, "k": 3}, {"sum_free_order": 3}),
                ({"n": 7, "j": 2, "k": 3}, {"sum_free_order": 3}),
                ({"n": 7, "j": 1, "k": 4}, {"sum_free_order": 4}),
            ),
        ),
        CatalogEntry(
            "gold",
            ("n", "j"),
            "quadratic power map x^(1+2^j); APN for gcd(j,n)=1",
            build_gold,
            (
                ({"n": 5, "j": 1}, {"sum_free_order": 2}),
                ({"n": 6, "j": 1}, {"sum_free_order": 2}),
                ({"n": 7, "j": 1}, {"sum_free_order": 2}),
            ),
        ),
        CatalogEntry(
            "inverse",
            ("n",),
            "inverse power map x^(2^n - 2); (n-2)th-order sum-free for odd n",
            build_inverse,
            (
                ({"n": 5}, {"sum_free_order": 3}),
                ({"n": 7}, {"sum_free_order": 5}),
            ),
        ),
        CatalogEntry(
            "bent_chain",
            ("n",),
            "x1*x2 + ... + x_{n-1}*x_n for even n; extremal 2-flat count",
            build_bent_chain,
            (
                ({"n": 4}, {"classification": "bent", "nonvanishing_2flats": 80}),
                ({"n": 6}, {"classification": "bent", "nonvanishing_2flats": 5376}),
                ({"n": 8}, {"classification": "bent", "nonvanishing_2flats": 348160}),
            ),
        ),
        CatalogEntry(
            "semibent_chain",
            ("n",),
            "x1*x2 + ... + x_{n-2}*x_{n-1} for odd n",
            build_semibent_chain,
            (
                ({"n": 5}, {"classification": "semi_bent", "nonvanishing_2flats": 640}),
                ({"n": 7}, {"classification": "semi_bent", "nonvanishing_2flats": 43008}),
            ),
        ),
        CatalogEntry(
            "monomial",
            ("n", "I"),
            "the single monomial x_I",
            build_monomial,
            (({"n": 4, "I": (1, 2)}, {"nonvanishing_2flats": 64}),),
        ),
    )
}


def build(name: str, params: dict) -> VectorialFn | AnfPoly:
    """Instantiate a catalog entry by name with keyword parameters."""
    entry = ENTRIES.get(name)
    if entry is None:
        raise ValueError(f"unknown catalog family {name!r}; see catalog.ENTRIES")
    missing = [p for p in entry.params if p not in params]
    if missing:
        raise ValueError(f"{name} needs parameters {missing}")
    return entry.build(**params)

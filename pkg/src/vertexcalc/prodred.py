"""Exponent multisets and the product forms built from them.

A reduced product is stored as a map from integer exponents to (usually
negative) multiplicities.  Feeding such a map and a factor constructor to
product_over yields the corresponding rational function; three factor
families cover everything downstream:

* bracket(m): t^m - t^(-m),
* one_minus_qq(m, shift): 1 - t^(2m) * monomial(shift), the building block
  of box-count expansions,
* sinh_factor(m, shift): (X^(-1) - X)/2 with X = t^m * monomial(shift).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Mapping

from .partitions import conjugate, contents, hook_multiset, normalize
from .series import LaurentFraction, LaurentPoly, kadd, kneg, trim


def bracket(m: int) -> LaurentFraction:
    if m == 0:
        raise ValueError("bracket vanishes at m = 0")
    return LaurentFraction.from_poly(LaurentPoly({(m,): 1, (-m,): -1}))


def one_minus_qq(m: int, shift=(0, 2)) -> LaurentFraction:
    key = kadd((2 * m,), trim(shift))
    if not key:
        raise ValueError("factor 1 - 1 vanishes")
    return LaurentFraction.from_poly(LaurentPoly({(): 1, key: -1}))


def sinh_factor(m: int, shift=(0, 1)) -> LaurentFraction:
    key = kadd((m,), trim(shift))
    if not key:
        raise ValueError("sinh factor vanishes at m = 0")
    return LaurentFraction.from_poly(
        LaurentPoly({kneg(key): Fraction(1, 2), key: Fraction(-1, 2)})
    )


def product_over(ms: Mapping[int, int], factor: Callable[[int], LaurentFraction]) -> LaurentFraction:
    """Product of factor(m)**mult over the exponent multiset."""
    out = LaurentFraction.one()
    for m in sorted(ms):
        e = ms[m]
        if e:
            out = out * factor(m) ** e
    return out


def single_multiset(mu) -> dict[int, int]:
    """Content exponents of mu, each with multiplicity -1."""
    mu = normalize(mu)
    out = Counter()
    for c in contents(mu):
        out[c] -= 1
    return dict(out)


def pair_multiset(mu1, mu2) -> dict[int, int]:
    """Reduced exponent multiset of a partition pair.

    Combines the finite double sum over row pairs with the two boundary
    corrections; the result always has nonpositive multiplicities with
    total count |mu1| + |mu2|, and collapses to single_multiset(mu1) when
    mu2 is empty.
    """
    mu1 = normalize(mu1)
    mu2 = normalize(mu2)
    l1, l2 = len(mu1), len(mu2)
    out: Counter = Counter()
    for i in range(1, l1 + 1):
        for j in range(1, l2 + 1):
            out[mu1[i - 1] - mu2[j - 1] + j - i] += 1
            out[j - i] -= 1
    for i in range(1, l1 + 1):
        for v in range(1, mu1[i - 1] + 1):
            out[v - i + l2] -= 1
    for j in range(1, l2 + 1):
        for v in range(1, mu2[j - 1] + 1):
            out[-(v - j + l1)] -= 1
    return {m: c for m, c in out.items() if c}


def diag_block_ratio(mu, factor: Callable[[int], LaurentFraction]) -> LaurentFraction:
    """Product of factor(h)**(-2) over the hooks of mu.

    Only odd factors make sense here: factor(-m) must equal -factor(m).
    """
    probe = factor(1) + factor(-1)
    if not probe.is_zero():
        raise ValueError("diagonal blocks need an odd factor family")
    mu = normalize(mu)
    ms = {h: -2 * mult for h, mult in hook_multiset(mu).items()}
    return product_over(ms, factor)


def multiset_json(ms: Mapping[int, int]) -> list[list[int]]:
    return [[m, ms[m]] for m in sorted(ms, reverse=True)]

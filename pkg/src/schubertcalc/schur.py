"""Partition combinatorics and the classical Grassmannian rules.

Schur polynomials are generated by enumerating column-strict fillings
(as interlacing partition chains), entirely independent of the divided
difference construction, so agreement of the two on Grassmannian
permutations is a genuine cross-check rather than a tautology.

Littlewood-Richardson coefficients are obtained by brute force: multiply
the two polynomials and peel Schur terms off the lexicographically largest
monomial, which for s_lam in k variables is x1^lam_1 ... xk^lam_k.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterator

from .errors import NotInSpanError, OutOfRangeError, TooManyPartsError
from .partitions import Partition, SkewShape
from .polyring import Polynomial

ROW = "row"
COLUMN = "column"


def is_skew_row(s: SkewShape) -> bool:
    """True iff every column of outer/inner has at most one box, i.e.
    inner_i >= outer_{i+1} for all i.

    >>> is_skew_row(SkewShape(Partition((5, 2, 1)), Partition((3, 1))))
    True
    """
    return all(
        s.inner.part(i) >= s.outer.part(i + 1)
        for i in range(1, s.outer.num_parts + 1)
    )


def is_skew_column(s: SkewShape) -> bool:
    """True iff every row of outer/inner has at most one box."""
    return all(
        s.outer.part(i) - s.inner.part(i) <= 1
        for i in range(1, s.outer.num_parts + 1)
    )


def skew_size(s: SkewShape) -> int:
    return s.size


def transpose(lam: Partition) -> Partition:
    """Reflect the diagram across the main diagonal.

    >>> transpose(Partition((3, 1))).parts
    (2, 1, 1)
    """
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def complement(lam: Partition, k: int, n: int) -> Partition:
    """The reflection of lam inside the k x (n-k) box: part i becomes
    n - k - lam_{k+1-i}.  An involution for fixed (k, n).

    >>> complement(Partition((4, 2, 2)), 3, 7).parts
    (2, 2)
    """
    width = n - k
    parts = lam.padded(k)
    if parts[0] > width:
        raise OutOfRangeError(f"{lam} does not fit in a {k} x {width} box")
    return Partition(tuple(width - parts[k - i] for i in range(1, k + 1)))


def _interlacings(lam: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All mu with lam_j >= mu_j >= lam_{j+1}; such mu are automatically
    partitions."""
    bounds = [range(lam[j + 1] if j + 1 < len(lam) else 0, lam[j] + 1) for j in range(len(lam))]
    for mu in itertools.product(*bounds):
        yield mu


@lru_cache(maxsize=None)
def _ssyt_weight_terms(lam: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if not lam:
        return (((), 1),)
    if k == 0:
        return ()
    total = sum(lam)
    out: dict[tuple[int, ...], int] = {}
    for mu in _interlacings(lam):
        top = total - sum(mu)
        mu_trim = mu
        while mu_trim and mu_trim[-1] == 0:
            mu_trim = mu_trim[:-1]
        for expt, c in _ssyt_weight_terms(mu_trim, k - 1):
            if top:
                key = expt + (0,) * (k - 1 - len(expt)) + (top,)
            else:
                key = expt
            out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def schur_poly(lam: Partition, k: int) -> Polynomial:
    """The Schur polynomial of lam in x_1..x_k, as the generating function
    of column-strict fillings with entries at most k.

    >>> str(schur_poly(Partition((2, 1)), 2))
    'x1^2*x2 + x1*x2^2'
    """
    if k < 1:
        raise OutOfRangeError(f"need k >= 1, got {k}")
    if lam.num_parts > k:
        raise TooManyPartsError(f"{lam} has more than {k} parts")
    return Polynomial(dict(_ssyt_weight_terms(lam.parts, k)))


def schur_expand(f: Polynomial, k: int) -> dict[Partition, int]:
    """Expand a symmetric polynomial in x_1..x_k into Schur terms by
    repeatedly cancelling the lex-greatest monomial, whose exponent vector
    must be a partition."""
    if f.num_vars > k:
        raise NotInSpanError(f"polynomial uses more than {k} variables")
    coeffs: dict[Partition, int] = {}
    residual = f.terms()
    heap = [tuple(-e for e in expt) + (0,) * (k - len(expt)) for expt in residual]
    heapq.heapify(heap)
    while heap:
        neg = heapq.heappop(heap)
        expt = tuple(-e for e in neg)
        while expt and expt[-1] == 0:
            expt = expt[:-1]
        c = residual.get(expt, 0)
        if c == 0:
            continue
        if any(expt[j] < expt[j + 1] for j in range(len(expt) - 1)):
            raise NotInSpanError(f"leading monomial {expt} is not a partition; input not symmetric")
        lam = Partition(expt)
        for key, sc in schur_poly(lam, k)._terms.items():
            val = residual.get(key, 0) - c * sc
            if val:
                residual[key] = val
                if key != expt:
                    heapq.heappush(heap, tuple(-e for e in key) + (0,) * (k - len(key)))
            elif key in residual:
                del residual[key]
        coeffs[lam] = coeffs.get(lam, 0) + c
    return coeffs


@lru_cache(maxsize=None)
def _schur_product_expansion(mu: tuple[int, ...], nu: tuple[int, ...], k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    product = schur_poly(Partition(mu), k) * schur_poly(Partition(nu), k)
    expansion = schur_expand(product, k)
    return tuple(sorted((lam.parts, c) for lam, c in expansion.items()))


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition, k: int) -> int:
    """The coefficient of s_lam in s_mu s_nu over x_1..x_k, computed by
    actual polynomial multiplication and Schur expansion.

    >>> lr_coefficient(Partition((1,)), Partition((1,)), Partition((2,)), 2)
    1
    """
    for p in (mu, nu, lam):
        if p.num_parts > k:
            raise TooManyPartsError(f"{p} has more than {k} parts")
    a, b = mu.parts, nu.parts
    if a > b:
        a, b = b, a
    return dict(_schur_product_expansion(a, b, k)).get(lam.parts, 0)


def classical_pieri(mu: Partition, m: int, k: int, n: int, kind: str = ROW) -> set[Partition]:
    """All lam in the k x (n-k) box with lam/mu a skew row (resp. skew
    column) of size m.

    >>> sorted(p.parts for p in classical_pieri(Partition(()), 2, 2, 4))
    [(2,)]
    """
    if kind not in (ROW, COLUMN):
        raise OutOfRangeError(f"kind must be {ROW!r} or {COLUMN!r}, got {kind!r}")
    if m < 0:
        raise OutOfRangeError(f"need m >= 0, got {m}")
    width = n - k
    inner = mu.padded(k)
    if inner[0] > width:
        raise OutOfRangeError(f"{mu} does not fit in a {k} x {width} box")
    results: set[Partition] = set()

    def build(j: int, prefix: tuple[int, ...], remaining: int) -> None:
        if j == k:
            if remaining == 0:
                results.add(Partition(prefix))
            return
        low = inner[j]
        if kind == ROW:
            high = width if j == 0 else inner[j - 1]
        else:
            high = inner[j] + 1
            if j > 0:
                high = min(high, prefix[-1])
            high = min(high, width)
        for part in range(low, high + 1):
            add = part - low
            if add > remaining:
                break
            build(j + 1, prefix + (part,), remaining - add)

    build(0, (), m)
    return results


def box_partitions(k: int, width: int) -> Iterator[Partition]:
    """All partitions with at most k parts, each at most width, in
    lexicographic order."""
    def rec(j: int, cap: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == k:
            yield prefix
            return
        for part in range(cap + 1):
            yield from rec(j + 1, part, prefix + (part,))

    seen = set()
    for padded in rec(0, width, ()):
        p = Partition(padded)
        if p.parts not in seen:
            seen.add(p.parts)
            yield p


def partitions_of(m: int, max_parts: int) -> Iterator[Partition]:
    """All partitions of m with at most max_parts parts."""
    def rec(remaining: int, cap: int, slots: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, slots - 1, prefix + (part,))

    for parts in rec(m, m, max_parts, ()):
        yield Partition(parts)

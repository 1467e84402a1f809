"""Schubert polynomials and the Schubert-basis product oracle.

The polynomial of w in S_n is built by applying the divided difference
operator of w^{-1} w0 to the staircase monomial x1^(n-1) x2^(n-2) ... and
is stable under embedding w into a larger symmetric group.

Expansion of an integer polynomial into this basis exploits that the
lexicographically smallest monomial of the polynomial of w (with x1
heaviest) is x^code(w) with coefficient 1, where code is the Lehmer code.
Peeling that minimal monomial is therefore an exact, unitriangular
elimination; any leftover that cannot be matched signals that the input
lies outside the span and raises NotInSpanError.  The classical extraction
of a single coefficient as the constant term of a divided difference is
kept alongside as an independent cross-check.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Mapping

from .errors import NotInSpanError, OutOfRangeError
from .perm import (
    Permutation,
    Transposition,
    apply_transposition,
    compose,
    embed,
    format_permutation,
    inverse,
    is_cover,
    length,
    longest,
    permutation_from_lehmer,
    trim,
)
from .polyring import Polynomial, divided_difference_w


class SchubertExpansion:
    """Finitely supported integer combination of Schubert classes.

    Keys are stored embedded in one common ambient degree; equality and
    coefficient lookup ignore the ambient, matching the stability of the
    underlying polynomials.
    """

    __slots__ = ("_by_trim", "ambient")

    def __init__(self, coeffs: Mapping[Permutation, int], ambient: int | None = None):
        by_trim: dict[tuple[int, ...], int] = {}
        needed = 1
        for w, c in coeffs.items():
            if c == 0:
                continue
            t = trim(w)
            needed = max(needed, t.n)
            val = by_trim.get(t.images, 0) + c
            if val:
                by_trim[t.images] = val
            else:
                del by_trim[t.images]
        if ambient is None:
            ambient = max((w.n for w in coeffs), default=1)
        if ambient < needed:
            raise OutOfRangeError(f"ambient {ambient} too small for a key in S_{needed}")
        self._by_trim = by_trim
        self.ambient = ambient

    def coefficient(self, w: Permutation) -> int:
        return self._by_trim.get(trim(w).images, 0)

    def items(self) -> list[tuple[Permutation, int]]:
        """(permutation, coefficient) pairs, embedded in the ambient degree
        and sorted by one-line notation."""
        out = [(embed(Permutation(imgs), self.ambient), c) for imgs, c in self._by_trim.items()]
        out.sort(key=lambda pair: pair[0].images)
        return out

    def support(self) -> list[Permutation]:
        return [w for w, _ in self.items()]

    def to_records(self) -> list[dict]:
        return [{"perm": format_permutation(w), "coeff": c} for w, c in self.items()]

    def __len__(self) -> int:
        return len(self._by_trim)

    def __bool__(self) -> bool:
        return bool(self._by_trim)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchubertExpansion):
            return self._by_trim == other._by_trim
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._by_trim.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_permutation(w)}: {c}" for w, c in self.items())
        return "{" + inner + "}"


@lru_cache(maxsize=None)
def _schubert_poly_cached(images: tuple[int, ...]) -> Polynomial:
    w = Permutation(images)
    n = w.n
    staircase = Polynomial.monomial(tuple(range(n - 1, 0, -1)))
    return divided_difference_w(compose(inverse(w), longest(n)), staircase)


def schubert_poly(w: Permutation) -> Polynomial:
    """The Schubert polynomial of w: homogeneous of degree length(w), with
    nonnegative coefficients, independent of the ambient degree.

    >>> str(schubert_poly(Permutation((3, 2, 1))))
    'x1^2*x2'
    """
    return _schubert_poly_cached(trim(w).images)


def expand_in_schubert_basis(f: Polynomial, N: int) -> SchubertExpansion:
    """Write f as an integer combination of Schubert polynomials of S_N.

    Works degree by degree; raises NotInSpanError when a monomial calls for
    a permutation outside S_N, which is the guard that the ambient bound of
    the caller was large enough.
    """
    if N < 1:
        raise OutOfRangeError(f"ambient degree must be positive, got {N}")
    coeffs: dict[Permutation, int] = {}
    for _, piece in f.homogeneous_components():
        residual = piece.terms()
        heap = list(residual)
        heapq.heapify(heap)
        while heap:
            expt = heapq.heappop(heap)
            c = residual.get(expt, 0)
            if c == 0:
                continue
            u = permutation_from_lehmer(expt)
            if u.n > N:
                raise NotInSpanError(
                    f"monomial with exponents {expt} needs S_{u.n}, ambient is S_{N}"
                )
            for key, sc in _schubert_poly_cached(u.images)._terms.items():
                val = residual.get(key, 0) - c * sc
                if val:
                    residual[key] = val
                    if key != expt:
                        heapq.heappush(heap, key)
                elif key in residual:
                    del residual[key]
            coeffs[u] = c
    return SchubertExpansion(coeffs, ambient=N)


def coefficient_via_descents(f: Polynomial, u: Permutation) -> int:
    """The coefficient of u in the Schubert expansion of f, extracted as the
    constant term of the divided difference of u applied to f.  Slower than
    expand_in_schubert_basis but entirely independent of it."""
    return divided_difference_w(u, f).constant_term


@lru_cache(maxsize=None)
def _oracle_cached(wi: tuple[int, ...], vi: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    w, v = Permutation(wi), Permutation(vi)
    n = max(w.n, v.n)
    N = n + min(length(w), length(v))
    product = _schubert_poly_cached(wi) * _schubert_poly_cached(vi)
    expansion = expand_in_schubert_basis(product, N)
    return tuple(sorted((trim(u).images, c) for u, c in expansion.items()))


def product_oracle(w: Permutation, v: Permutation) -> SchubertExpansion:
    """Ground truth for every multiplication rule: multiply the two
    polynomials and expand back into the basis.

    The expansion lives in ambient degree N = n + min(length(w), length(v)),
    n the common degree of the inputs, which is always enough because each
    Monk step moves at most one new position.

    >>> product_oracle(Permutation((1, 3, 2)), Permutation((2, 1, 3)))
    {2314: 1, 3124: 1}
    """
    n = max(w.n, v.n)
    N = n + min(length(w), length(v))
    wi, vi = trim(w).images, trim(v).images
    if wi > vi:
        wi, vi = vi, wi
    terms = _oracle_cached(wi, vi)
    return SchubertExpansion({Permutation(imgs): c for imgs, c in terms}, ambient=N)


def monk_expand(w: Permutation, k: int, N: int) -> SchubertExpansion:
    """Monk's rule: the product of w with the degree-one class of column k
    is the coefficient-1 sum over cover transpositions t_{a b}, a <= k < b.

    >>> monk_expand(Permutation((1, 3, 2)), 1, 3)
    {231: 1, 312: 1}
    """
    if not 1 <= k < N:
        raise OutOfRangeError(f"need 1 <= k < N, got k={k}, N={N}")
    we = embed(w, N)
    targets: dict[Permutation, int] = {}
    for a in range(1, k + 1):
        for b in range(k + 1, N + 1):
            t = Transposition(a, b)
            if is_cover(we, t):
                targets[apply_transposition(we, t)] = 1
    return SchubertExpansion(targets, ambient=N)

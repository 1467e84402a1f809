"""Permutations of {1..n} in one-line notation.

Positions and values are 1-based throughout.  A permutation carries an
explicit ambient degree n; stability under adding fixed points is always
exercised through explicit embed() calls, never implicitly.

The module also builds the three families of Grassmannian cycles used as
multipliers by the product rules: r_perm (single row shape), c_perm
(single column shape), and h_perm (hook shape).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, NotGrassmannianError, OutOfRangeError, ParseError
from .partitions import Partition


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] holds the value at position i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise DomainError(f"not a bijection of 1..{len(imgs)}: {imgs!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition t_{a b} interchanging a < b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a < self.b:
            raise DomainError(f"need 1 <= a < b, got ({self.a}, {self.b})")


def identity(n: int) -> Permutation:
    if n < 1:
        raise OutOfRangeError(f"degree must be positive, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The order-reversing permutation, the maximum in Bruhat order.

    >>> longest(4).images
    (4, 3, 2, 1)
    """
    if n < 1:
        raise OutOfRangeError(f"degree must be positive, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for imgs in itertools.permutations(range(1, n + 1)):
        yield Permutation(imgs)


def compose(w: Permutation, v: Permutation) -> Permutation:
    """The product w v, i.e. the map i -> w(v(i)).  Degrees are unified."""
    n = max(w.n, v.n)
    w, v = embed(w, n), embed(v, n)
    return Permutation(tuple(w.images[v.images[i] - 1] for i in range(n)))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, x in enumerate(w.images, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions, which is also the reduced word length.

    >>> length(longest(4))
    6
    """
    imgs = w.images
    n = len(imgs)
    return sum(1 for i in range(n) for j in range(i + 1, n) if imgs[i] > imgs[j])


def descents(w: Permutation) -> tuple[int, ...]:
    """Positions i with w(i) > w(i+1)."""
    imgs = w.images
    return tuple(i for i in range(1, w.n) if imgs[i - 1] > imgs[i])


def apply_transposition(w: Permutation, t: Transposition) -> Permutation:
    """Right multiplication w t_{a b}: swap the values at positions a, b."""
    if t.b > w.n:
        raise OutOfRangeError(f"{t} outside ambient degree {w.n}")
    imgs = list(w.images)
    imgs[t.a - 1], imgs[t.b - 1] = imgs[t.b - 1], imgs[t.a - 1]
    return Permutation(tuple(imgs))


def is_cover(w: Permutation, t: Transposition) -> bool:
    """True iff w t_{a b} covers w in Bruhat order, i.e. the length goes up
    by exactly one: w(a) < w(b) and no value strictly between them sits at
    a position strictly between a and b."""
    if t.b > w.n:
        raise OutOfRangeError(f"{t} outside ambient degree {w.n}")
    imgs = w.images
    wa, wb = imgs[t.a - 1], imgs[t.b - 1]
    if wa > wb:
        return False
    return not any(wa < imgs[c] < wb for c in range(t.a, t.b - 1))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A deterministic reduced word (a_1, ..., a_m): s_{a_1} ... s_{a_m} = w
    with m = length(w).  Clearing the leftmost descent repeatedly yields the
    word in reverse, so the output is canonical for a given input.

    >>> reduced_word(Permutation((3, 2, 1)))
    (1, 2, 1)
    """
    imgs = list(w.images)
    rev: list[int] = []
    while True:
        i = next((i for i in range(len(imgs) - 1) if imgs[i] > imgs[i + 1]), None)
        if i is None:
            break
        imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
        rev.append(i + 1)
    return tuple(reversed(rev))


def permutation_from_word(n: int, word: tuple[int, ...]) -> Permutation:
    """Evaluate a word in adjacent transpositions: s_{a_1} ... s_{a_m}."""
    imgs = list(range(1, n + 1))
    for a in word:
        if not 1 <= a < n:
            raise OutOfRangeError(f"letter {a} outside 1..{n - 1}")
        imgs[a - 1], imgs[a] = imgs[a], imgs[a - 1]
    return Permutation(tuple(imgs))


def embed(w: Permutation, N: int) -> Permutation:
    """The same permutation inside S_N, fixing all points above w.n."""
    if N < w.n:
        raise OutOfRangeError(f"cannot embed S_{w.n} into S_{N}")
    if N == w.n:
        return w
    return Permutation(w.images + tuple(range(w.n + 1, N + 1)))


def trim(w: Permutation) -> Permutation:
    """Smallest-degree representative: drop trailing fixed points."""
    imgs = w.images
    n = len(imgs)
    while n > 1 and imgs[n - 1] == n:
        n -= 1
    return w if n == len(imgs) else Permutation(imgs[:n])


def conjugate_by_w0(w: Permutation) -> Permutation:
    """w0 w w0 inside S_n, a length-preserving involution.

    >>> conjugate_by_w0(Permutation((2, 1, 3))).images
    (1, 3, 2)
    """
    n = w.n
    return Permutation(tuple(n + 1 - v for v in reversed(w.images)))


def restrict(w: Permutation, p: int) -> Permutation:
    """Delete position p and value w(p), then relabel: crossing out the
    p-th row and w(p)-th column of the permutation matrix."""
    if not 1 <= p <= w.n:
        raise OutOfRangeError(f"position {p} outside 1..{w.n}")
    if w.n == 1:
        raise OutOfRangeError("cannot restrict a degree-1 permutation")
    vp = w.images[p - 1]
    imgs = tuple(v - 1 if v > vp else v for i, v in enumerate(w.images, 1) if i != p)
    return Permutation(imgs)


def is_grassmannian(w: Permutation, k: int) -> bool:
    """True iff every descent of w is at k (the identity qualifies)."""
    return all(d == k for d in descents(w))


def shape(w: Permutation, k: int) -> Partition:
    """The partition of a Grassmannian permutation of descent k, reading
    w(j) - j at positions j = k, k-1, ..., 1.

    >>> shape(Permutation((2, 4, 1, 3)), 2).parts
    (2, 1)
    """
    if not 1 <= k <= w.n:
        raise OutOfRangeError(f"descent position {k} outside 1..{w.n}")
    bad = [d for d in descents(w) if d != k]
    if bad:
        raise NotGrassmannianError(f"{w} has a descent at {bad[0]}, not only at {k}")
    return Partition(tuple(w.images[j - 1] - j for j in range(k, 0, -1)))


def grassmannian_from_shape(lam: Partition, k: int, n: int) -> Permutation:
    """The Grassmannian permutation of descent k and shape lam inside S_n."""
    parts = lam.padded(k)
    if parts[0] + k > n:
        raise OutOfRangeError(f"shape {lam} with descent {k} needs degree {parts[0] + k} > {n}")
    head = [parts[k - j] + j for j in range(1, k + 1)]
    rest = sorted(set(range(1, n + 1)) - set(head))
    return Permutation(tuple(head + rest))


def r_perm(k: int, m: int, n: int) -> Permutation:
    """Grassmannian permutation of descent k and single-row shape (m); as a
    cycle this is (k+m, k+m-1, ..., k+1, k).

    >>> r_perm(2, 2, 4).images
    (1, 4, 2, 3)
    """
    if k < 1 or m < 0 or k + m > n:
        raise OutOfRangeError(f"need 1 <= k and k + m <= n, got k={k}, m={m}, n={n}")
    return grassmannian_from_shape(Partition((m,) if m else ()), k, n)


def c_perm(k: int, m: int, n: int) -> Permutation:
    """Grassmannian permutation of descent k and single-column shape (1^m);
    as a cycle this is (k-m+1, k-m+2, ..., k, k+1).

    >>> c_perm(4, 4, 7).images
    (2, 3, 4, 5, 1, 6, 7)
    """
    if k < 1 or not 0 <= m <= k or k > n:
        raise OutOfRangeError(f"need 1 <= m <= k <= n, got k={k}, m={m}, n={n}")
    if m > 0 and k + 1 > n:
        raise OutOfRangeError(f"descent {k} needs degree {k + 1} > {n}")
    return grassmannian_from_shape(Partition((1,) * m), k, n)


def h_perm(k: int, p: int, q: int, n: int) -> Permutation:
    """Grassmannian permutation of descent k and hook shape (p, 1^(q-1));
    as a cycle this is (k-q+1, ..., k, k+p, k+p-1, ..., k+1).

    >>> h_perm(2, 2, 2, 4).images
    (2, 4, 1, 3)
    """
    if p < 1 or not 1 <= q <= k or k + p > n:
        raise OutOfRangeError(f"need p >= 1, q <= k, k + p <= n, got k={k}, p={p}, q={q}, n={n}")
    return grassmannian_from_shape(Partition((p,) + (1,) * (q - 1)), k, n)


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """Trailing-zero-trimmed inversion table: entry i counts later positions
    holding smaller values."""
    imgs = w.images
    n = len(imgs)
    code = [sum(1 for j in range(i + 1, n) if imgs[j] < imgs[i]) for i in range(n)]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def permutation_from_lehmer(code: tuple[int, ...]) -> Permutation:
    """Inverse of lehmer_code, returned at its minimal ambient degree."""
    cs = list(code)
    while cs and cs[-1] == 0:
        cs.pop()
    if any(c < 0 for c in cs):
        raise DomainError(f"code entries must be nonnegative: {code}")
    if not cs:
        return identity(1)
    n = max(i + c for i, c in enumerate(cs, start=1))
    pool = list(range(1, n + 1))
    imgs = []
    for i in range(n):
        c = cs[i] if i < len(cs) else 0
        imgs.append(pool.pop(c))
    return trim(Permutation(tuple(imgs)))


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation, or the compact digit form
    (only possible when n <= 9).

    >>> parse_permutation("5412763").images == parse_permutation("5,4,1,2,7,6,3").images
    True
    """
    s = text.strip()
    if not s:
        raise ParseError("empty permutation")
    try:
        if "," in s:
            imgs = tuple(int(x) for x in s.split(","))
        elif s.isdigit():
            imgs = tuple(int(ch) for ch in s)
        else:
            raise ValueError
    except ValueError:
        raise ParseError(f"not a permutation: {text!r}") from None
    try:
        return Permutation(imgs)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_permutation(w: Permutation) -> str:
    """Compact digits for n <= 9, comma-separated beyond."""
    if w.n <= 9:
        return "".join(str(v) for v in w.images)
    return ",".join(str(v) for v in w.images)

"""The k-Bruhat order and the path-counting multiplication rules.

A cover in the k-Bruhat order swaps positions a <= k < b and raises the
length by one.  Multiplying by the single-row class r_perm(k, m) picks out
saturated chains whose b's are pairwise distinct; the single-column class
c_perm(k, m) picks out chains with distinct a's.  Equivalently, each is a
chain whose sequence of arriving values w_i(a_i) is strictly monotone, and
such a monotone chain between two fixed endpoints is unique when it exists.

Hook-shaped multipliers count unimodal chains: values strictly rising for
p steps, then strictly falling.  Finally, for any Grassmannian multiplier
the structure constant reduces to a Littlewood-Richardson coefficient on a
skew row read off the unique monotone chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, OutOfRangeError, TooManyPartsError, UnsupportedChainError
from .partitions import Partition
from .perm import (
    Permutation,
    Transposition,
    apply_transposition,
    embed,
    format_permutation,
    is_cover,
    length,
)
from .schubert import SchubertExpansion
from .schur import lr_coefficient, transpose

ROW = "row"
COLUMN = "column"
INCREASING = "increasing"
DECREASING = "decreasing"


@dataclass(frozen=True)
class BruhatPath:
    """A saturated chain in the k-Bruhat order: start, then one cover
    transposition per step."""

    start: Permutation
    k: int
    steps: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not 1 <= self.k <= self.start.n:
            raise DomainError(f"column bound {self.k} outside 1..{self.start.n}")
        u = self.start
        for t in self.steps:
            if not (t.a <= self.k < t.b <= u.n):
                raise DomainError(f"step {t} does not straddle column {self.k}")
            if not is_cover(u, t):
                raise DomainError(f"step {t} from {u} is not a cover; chain not saturated")
            u = apply_transposition(u, t)

    @property
    def end(self) -> Permutation:
        u = self.start
        for t in self.steps:
            u = apply_transposition(u, t)
        return u

    def __len__(self) -> int:
        return len(self.steps)

    def intermediates(self) -> tuple[Permutation, ...]:
        """The chain after each step (ends with the endpoint)."""
        out = []
        u = self.start
        for t in self.steps:
            u = apply_transposition(u, t)
            out.append(u)
        return tuple(out)

    def step_values(self) -> tuple[int, ...]:
        """Value arriving at position a_i on step i."""
        out = []
        u = self.start
        for t in self.steps:
            out.append(u.images[t.b - 1])
            u = apply_transposition(u, t)
        return tuple(out)

    def to_record(self) -> dict:
        return {
            "start": format_permutation(self.start),
            "k": self.k,
            "steps": [[t.a, t.b] for t in self.steps],
            "intermediates": [format_permutation(u) for u in self.intermediates()],
        }


def k_bruhat_covers(w: Permutation, k: int, N: int | None = None) -> tuple[Transposition, ...]:
    """All t_{a b} with a <= k < b <= N covering w, sorted by (a, b)."""
    N = w.n if N is None else N
    if not 1 <= k < N:
        raise OutOfRangeError(f"need 1 <= k < N, got k={k}, N={N}")
    imgs = embed(w, N).images
    out = []
    for a in range(1, k + 1):
        va = imgs[a - 1]
        for b in range(k + 1, N + 1):
            vb = imgs[b - 1]
            if va < vb and not any(va < imgs[c] < vb for c in range(a, b - 1)):
                out.append(Transposition(a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def _k_bruhat_layer(images: tuple[int, ...], k: int, m: int, N: int) -> frozenset[tuple[int, ...]]:
    frontier = {embed(Permutation(images), N).images}
    for _ in range(m):
        nxt = set()
        for imgs in frontier:
            u = Permutation(imgs)
            for t in k_bruhat_covers(u, k, N):
                nxt.add(apply_transposition(u, t).images)
        frontier = nxt
    return frozenset(frontier)


def k_bruhat_layer(w: Permutation, k: int, m: int, N: int | None = None) -> set[Permutation]:
    """Everything reachable from w by exactly m k-Bruhat covers."""
    N = w.n if N is None else N
    if m < 0:
        raise OutOfRangeError(f"need m >= 0, got {m}")
    return {Permutation(imgs) for imgs in _k_bruhat_layer(embed(w, N).images, k, m, N)}


def is_k_bruhat_leq(w: Permutation, wp: Permutation, k: int) -> bool:
    """True iff wp is reachable from w by a saturated chain of k-Bruhat
    covers (always within the common ambient degree)."""
    n = max(w.n, wp.n)
    m = length(wp) - length(w)
    if m < 0:
        return False
    if m == 0:
        return embed(w, n) == embed(wp, n)
    if k >= n:
        return False
    return embed(wp, n).images in _k_bruhat_layer(embed(w, n).images, k, m, n)


def pieri_targets(w: Permutation, k: int, m: int, kind: str, N: int) -> set[Permutation]:
    """Endpoints of length-m saturated k-Bruhat chains from w whose b's
    (kind "row") or a's (kind "column") are pairwise distinct.  Each target
    carries coefficient one in the corresponding product.

    >>> sorted(format_permutation(u) for u in pieri_targets(Permutation((1, 2, 3)), 1, 2, "row", 3))
    ['312']
    """
    if kind not in (ROW, COLUMN):
        raise OutOfRangeError(f"kind must be {ROW!r} or {COLUMN!r}, got {kind!r}")
    if m < 0:
        raise OutOfRangeError(f"need m >= 0, got {m}")
    if kind == ROW and k + m > N:
        raise OutOfRangeError(f"row kind needs k + m <= N, got k={k}, m={m}, N={N}")
    if kind == COLUMN and not m <= k <= N:
        raise OutOfRangeError(f"column kind needs m <= k <= N, got k={k}, m={m}, N={N}")
    we = embed(w, N)
    if m == 0:
        return {we}
    if k >= N:
        return set()
    # States collapse chains that differ only by step order.
    frontier: set[tuple[tuple[int, ...], frozenset[int]]] = {(we.images, frozenset())}
    for _ in range(m):
        nxt = set()
        for imgs, used in frontier:
            u = Permutation(imgs)
            for t in k_bruhat_covers(u, k, N):
                tag = t.b if kind == ROW else t.a
                if tag in used:
                    continue
                nxt.add((apply_transposition(u, t).images, used | {tag}))
        frontier = nxt
    return {Permutation(imgs) for imgs, _ in frontier}


def _pattern_chains(
    w: Permutation, k: int, m: int, N: int, rise_len: int, rise_first: bool
) -> Iterator[tuple[Transposition, ...]]:
    """Length-m cover chains whose arriving values are strictly monotone in
    one direction for the first block and strictly monotone the other way
    after it.  rise_len is the length of the first block when rise_first,
    of the falling block otherwise."""
    we = embed(w, N)

    def ok(idx: int, last: int | None, v: int) -> bool:
        if last is None:
            return True
        rising = idx <= rise_len if rise_first else idx > rise_len
        return v > last if rising else v < last

    def walk(u: Permutation, depth: int, last: int | None) -> Iterator[tuple[Transposition, ...]]:
        if depth == m:
            yield ()
            return
        for t in k_bruhat_covers(u, k, N):
            v = u.images[t.b - 1]
            if not ok(depth + 1, last, v):
                continue
            for rest in walk(apply_transposition(u, t), depth + 1, v):
                yield (t,) + rest

    if m == 0:
        yield ()
        return
    if k >= N:
        return
    yield from walk(we, 0, None)


def enumerate_monotone_paths(
    w: Permutation, wp: Permutation, k: int, direction: str = INCREASING
) -> list[BruhatPath]:
    """All saturated k-Bruhat chains from w to wp whose arriving values are
    strictly increasing (resp. decreasing).  There is at most one.

    >>> w = Permutation((5, 4, 1, 2, 7, 6, 3)); wpp = Permutation((7, 4, 3, 1, 6, 5, 2))
    >>> [p.steps for p in enumerate_monotone_paths(w, wpp, 3)][0][0]
    Transposition(a=3, b=4)
    """
    if direction not in (INCREASING, DECREASING):
        raise OutOfRangeError(f"direction must be {INCREASING!r} or {DECREASING!r}")
    n = max(w.n, wp.n)
    m = length(wp) - length(w)
    if m < 0:
        return []
    we, wpe = embed(w, n), embed(wp, n)
    if m == 0:
        return [BruhatPath(we, k, ())] if we == wpe else []
    rise_first = direction == INCREASING
    out = []
    for steps in _pattern_chains(we, k, m, n, m, rise_first):
        path = BruhatPath(we, k, steps)
        if path.end == wpe:
            out.append(path)
    return out


def hook_expand(
    w: Permutation, k: int, p: int, q: int, N: int, *, descend_first: bool = False
) -> SchubertExpansion:
    """Multiply w by the hook-shape class h_perm(k, p, q): the coefficient
    of each endpoint counts length p+q-1 chains whose arriving values rise
    strictly for p steps then fall strictly.  With descend_first=True the
    equivalent fall-for-q-steps-then-rise characterization is used instead;
    both produce the same expansion.
    """
    if p < 1 or not 1 <= q <= k or k + p > N:
        raise OutOfRangeError(f"need p >= 1, q <= k, k + p <= N, got k={k}, p={p}, q={q}, N={N}")
    m = p + q - 1
    we = embed(w, N)
    counts: dict[Permutation, int] = {}
    rise_len = q if descend_first else p
    for steps in _pattern_chains(we, k, m, N, rise_len, rise_first=not descend_first):
        end = BruhatPath(we, k, steps).end
        counts[end] = counts.get(end, 0) + 1
    return SchubertExpansion(counts, ambient=N)


def _skew_row_from_chain(steps: tuple[Transposition, ...], k: int) -> tuple[Partition, Partition]:
    """Nested partitions mu inside lam whose skew diagram is a skew row with
    row j of length #{i : a_i = j}, rows packed tightly end to end."""
    row_len = [0] * k
    for t in steps:
        row_len[t.a - 1] += 1
    mu = [0] * k
    for j in range(k - 2, -1, -1):
        mu[j] = mu[j + 1] + row_len[j + 1]
    lam = [row_len[j] + mu[j] for j in range(k)]
    return Partition(tuple(mu)), Partition(tuple(lam))


def grassmannian_structure_constant(w: Permutation, wp: Permutation, k: int, nu: Partition) -> int:
    """Coefficient of wp in the product of w with the Grassmannian class of
    descent k and shape nu.

    Vanishes unless wp lies above w in the k-Bruhat order with length gap
    equal to the size of nu.  When the interval carries a monotone chain,
    the value is the Littlewood-Richardson coefficient of nu on the skew
    row (or, via conjugation, skew column) read off that chain.  Ordered
    intervals with neither kind of monotone chain are outside the scope of
    the implemented rules and raise UnsupportedChainError.
    """
    n = max(w.n, wp.n)
    if nu.num_parts > k:
        raise TooManyPartsError(f"{nu} has more than {k} parts")
    m = length(wp) - length(w)
    if m != nu.size:
        return 0
    if m == 0:
        return 1 if embed(w, n) == embed(wp, n) else 0
    if not is_k_bruhat_leq(w, wp, k):
        return 0
    increasing = enumerate_monotone_paths(w, wp, k, INCREASING)
    if increasing:
        mu, lam = _skew_row_from_chain(increasing[0].steps, k)
        return lr_coefficient(mu, nu, lam, k)
    decreasing = enumerate_monotone_paths(w, wp, k, DECREASING)
    if decreasing:
        if nu.part(1) > n - k:
            return 0
        path = decreasing[0]
        conj_steps = tuple(Transposition(n + 1 - t.b, n + 1 - t.a) for t in path.steps)
        mu, lam = _skew_row_from_chain(conj_steps, n - k)
        return lr_coefficient(mu, transpose(nu), lam, n - k)
    raise UnsupportedChainError(
        f"{format_permutation(w)} precedes {format_permutation(wp)} in the {k}-Bruhat order "
        "but no monotone chain joins them; no rule applies"
    )

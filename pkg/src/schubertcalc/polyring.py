"""Sparse multivariate polynomials over the integers.

Terms map exponent tuples (for x1, x2, ...) to nonzero Python ints, so
arithmetic is exact at any size.  Exponent tuples are stored with trailing
zeros trimmed, which makes the representation canonical and identifies a
polynomial with its image under adding unused trailing variables.

On top of the ring structure the module provides the symmetric-group
action permuting variables and the divided difference operators that
generate Schubert polynomials.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Mapping

from .errors import DomainError, OutOfRangeError, ParseError
from .perm import Permutation, reduced_word


def _trim(expt: Iterable[int]) -> tuple[int, ...]:
    e = tuple(expt)
    while e and e[-1] == 0:
        e = e[:-1]
    return e


class Polynomial:
    """Immutable by convention: no method mutates self after construction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for expt, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            if any(e < 0 for e in expt):
                raise DomainError(f"negative exponent in {expt}")
            key = _trim(expt)
            val = clean.get(key, 0) + coeff
            if val:
                clean[key] = val
            else:
                del clean[key]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], int]) -> "Polynomial":
        """Internal: terms already trimmed and zero free."""
        p = object.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): 1})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        """x_i, 1-based."""
        if i < 1:
            raise OutOfRangeError(f"variable index must be >= 1, got {i}")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, expt: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls({tuple(expt): coeff})

    def terms(self) -> dict[tuple[int, ...], int]:
        """Copy of the term map."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def num_vars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    def coefficient(self, expt: Iterable[int]) -> int:
        return self._terms.get(_trim(expt), 0)

    def homogeneous_components(self) -> list[tuple[int, "Polynomial"]]:
        by_degree: dict[int, dict[tuple[int, ...], int]] = {}
        for expt, c in self._terms.items():
            by_degree.setdefault(sum(expt), {})[expt] = c
        return [(d, Polynomial._raw(by_degree[d])) for d in sorted(by_degree)]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self._terms)
        for expt, c in other._terms.items():
            val = out.get(expt, 0) + c
            if val:
                out[expt] = val
            else:
                del out[expt]
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero()
            return Polynomial._raw({e: c * other for e, c in self._terms.items()})
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            l1 = len(e1)
            for e2, c2 in other._terms.items():
                if len(e2) >= l1:
                    key = tuple(a + b for a, b in zip(e1, e2)) + e2[l1:]
                else:
                    key = tuple(a + b for a, b in zip(e1, e2)) + e1[len(e2):]
                val = get(key, 0) + c1 * c2
                if val:
                    out[key] = val
                else:
                    del out[key]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Polynomial":
        if exp < 0:
            raise OutOfRangeError("negative powers are not defined")
        result = Polynomial.one()
        for _ in range(exp):
            result = result * self
        return result

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def act(w: Permutation, f: Polynomial) -> Polynomial:
    """Permute variables: x_i maps to x_{w(i)}."""
    imgs = w.images
    n = len(imgs)
    out: dict[tuple[int, ...], int] = {}
    for expt, c in f._terms.items():
        new = [0] * max(len(expt), n)
        for pos, e in enumerate(expt):
            if e:
                new[imgs[pos] - 1 if pos < n else pos] = e
        out[_trim(new)] = c
    return Polynomial._raw(out)


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """Apply (1 - s_i) / (x_i - x_{i+1}).

    Monomial by monomial the quotient is a two-variable geometric sum: with
    a, b the exponents of x_i, x_{i+1} and a > b,

        (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
            = sum over s+t = a-b-1 of x_i^(b+s) x_{i+1}^(b+t),

    so division is exact by construction and the output is symmetric in
    x_i, x_{i+1}.
    """
    if i < 1:
        raise OutOfRangeError(f"divided difference index must be >= 1, got {i}")
    out: dict[tuple[int, ...], int] = {}
    get = out.get
    for expt, c in f._terms.items():
        a = expt[i - 1] if i - 1 < len(expt) else 0
        b = expt[i] if i < len(expt) else 0
        if a == b:
            continue
        lo, d = min(a, b), abs(a - b)
        if a < b:
            c = -c
        base = list(expt) + [0] * max(0, i + 1 - len(expt))
        for t in range(d):
            e = base.copy()
            e[i - 1] = lo + d - 1 - t
            e[i] = lo + t
            key = _trim(e)
            val = get(key, 0) + c
            if val:
                out[key] = val
            else:
                del out[key]
    return Polynomial._raw(out)


def divided_difference_w(w: Permutation, f: Polynomial) -> Polynomial:
    """Compose divided differences along a reduced word of w.  The result
    only depends on w, since the operators satisfy the braid relations."""
    for a in reversed(reduced_word(w)):
        if f.is_zero:
            break
        f = divided_difference(a, f)
    return f


def complete_sym(m: int, k: int) -> Polynomial:
    """All monomials of degree m in x_1..x_k.

    >>> format_polynomial(complete_sym(2, 2))
    'x1^2 + x1*x2 + x2^2'
    """
    if m < 0 or k < 1:
        raise OutOfRangeError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    out: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations_with_replacement(range(k), m):
        e = [0] * k
        for j in combo:
            e[j] += 1
        out[_trim(e)] = 1
    return Polynomial._raw(out)


def elementary_sym(m: int, k: int) -> Polynomial:
    """All squarefree monomials of degree m in x_1..x_k; zero when m > k."""
    if m < 0 or k < 1:
        raise OutOfRangeError(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    if m > k:
        return Polynomial.zero()
    out: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations(range(k), m):
        e = [0] * k
        for j in combo:
            e[j] = 1
        out[_trim(e)] = 1
    return Polynomial._raw(out)


_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?\Z")


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form: terms in decreasing lexicographic order with
    x1 heaviest, e.g. "x1^2*x2 - 3*x2^4 + 7"."""
    if f.is_zero:
        return "0"
    pieces: list[str] = []
    for expt in sorted(f._terms, reverse=True):
        coeff = f._terms[expt]
        mono = "*".join(
            f"x{j}^{e}" if e > 1 else f"x{j}"
            for j, e in enumerate(expt, start=1)
            if e
        )
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of format_polynomial; whitespace-tolerant."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return Polynomial.zero()
    s = s.replace("-", "+-")
    terms: dict[tuple[int, ...], int] = {}
    for idx, chunk in enumerate(s.split("+")):
        chunk = chunk.strip()
        if not chunk:
            if idx == 0:
                continue
            raise ParseError(f"empty term in {text!r}")
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = sign
        expts: dict[int, int] = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            m = _VAR_RE.match(factor)
            if m:
                idx = int(m.group(1))
                if idx < 1:
                    raise ParseError(f"variable index must be >= 1 in {factor!r}")
                expts[idx - 1] = expts.get(idx - 1, 0) + int(m.group(2) or 1)
            else:
                try:
                    coeff *= int(factor)
                except ValueError:
                    raise ParseError(f"bad factor {factor!r} in {text!r}") from None
        e = [0] * (max(expts) + 1 if expts else 0)
        for j, v in expts.items():
            e[j] = v
        key = _trim(e)
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial(terms)

"""Integer partitions and skew shapes.

Partitions compare equal modulo trailing zeros: (2, 2, 0) and (2, 2) are
the same value.  Use padded() or format_partition(..., parts=k) when a
fixed number of parts is wanted for display.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError, TooManyPartsError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of nonnegative integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        for p, q in zip(parts, parts[1:]):
            if p < q:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part, zero beyond the last stored part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        """Exactly k parts, zero filled.

        >>> Partition((2, 1)).padded(3)
        (2, 1, 0)
        """
        if len(self.parts) > k:
            raise TooManyPartsError(f"{self} has more than {k} parts")
        return self.parts + (0,) * (k - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, other.num_parts + 1))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class SkewShape:
    """Pair of nested partitions outer/inner."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise DomainError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def parse_partition(text: str) -> Partition:
    """Parse "4,2,2"; "0" and the empty string denote the empty partition."""
    s = text.strip()
    if s in ("", "0"):
        return Partition(())
    try:
        parts = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ParseError(f"not a partition: {text!r}") from None
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_partition(p: Partition, parts: int | None = None) -> str:
    """Comma-separated parts; empty partition prints as "0"."""
    shown = p.padded(parts) if parts is not None else p.parts
    if not shown:
        return "0"
    return ",".join(str(x) for x in shown)

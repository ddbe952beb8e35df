"""Partitions: weakly decreasing integer sequences indexing Schur classes."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ValidationError


class Partition:
    """A weakly decreasing sequence of nonnegative integers.

    Trailing zeros are stripped on construction, so two partitions compare
    equal exactly when their nonzero parts agree.  Instances are immutable
    and hashable.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        ps = tuple(int(p) for p in parts)
        if any(p < 0 for p in ps):
            raise ValidationError(f"partition parts must be nonnegative: {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValidationError(f"partition parts must be weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the serialized form ``"2,1,0"`` (spaces allowed)."""
        text = text.strip()
        if not text:
            raise ValidationError("empty partition literal")
        try:
            parts = [int(tok.strip()) for tok in text.split(",")]
        except ValueError as exc:
            raise ValidationError(f"bad partition literal {text!r}") from exc
        return cls(parts)

    def format(self) -> str:
        """Serialize as comma-separated parts; the empty partition is ``"0"``."""
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def max_part(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts extended by zeros to length ``n`` (n >= length required)."""
        if n < len(self.parts):
            raise ValidationError(f"cannot pad length-{len(self.parts)} partition to {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def require_rank(self, rank: int) -> None:
        """Check the validity condition ``max part <= rank``."""
        if self.max_part > rank:
            raise ValidationError(
                f"partition {self.format()} invalid for rank {rank}: "
                f"largest part {self.max_part} exceeds the rank"
            )

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)!r})"


def partitions_of(weight: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``weight`` with parts bounded by ``max_part``."""
    if weight < 0:
        return
    bound = weight if max_part is None else min(max_part, weight)

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    if weight == 0:
        yield Partition(())
        return
    yield from rec(weight, bound, [])

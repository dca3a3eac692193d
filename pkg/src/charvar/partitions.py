"""Integer partitions and the box statistics used by hook formulas."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple, Sequence

from .exact import LaurentPoly, UsageError


class Box(NamedTuple):
    row: int  # 1-based, top-down
    col: int  # 1-based, left-right
    arm: int
    leg: int

    @property
    def hook(self) -> int:
        return self.arm + self.leg + 1


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts; ``()`` is the partition of 0."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise UsageError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @cached_property
    def boxes(self) -> tuple:
        conj = self.conjugate.parts
        return tuple(
            Box(i + 1, j + 1, lam - j - 1, conj[j] - i - 1)
            for i, lam in enumerate(self.parts)
            for j in range(lam)
        )

    def box(self, row: int, col: int) -> Box:
        if not (1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]):
            raise UsageError(f"no box at ({row},{col}) in {self}")
        conj = self.conjugate.parts
        return Box(row, col, self.parts[row - 1] - col, conj[col - 1] - row)

    def hooks(self) -> list:
        return [b.hook for b in self.boxes]

    @property
    def n(self) -> int:
        """n(lambda) = sum (i-1) lambda_i."""
        return sum(i * p for i, p in enumerate(self.parts))

    def pairing(self, other: "Partition") -> int:
        """<lambda, mu> = sum_j lambda'_j mu'_j."""
        return sum(a * b for a, b in zip(self.conjugate.parts, other.conjugate.parts))

    @cached_property
    def multiplicities(self) -> dict:
        return dict(Counter(self.parts))

    def b_poly(self, var: str = "q") -> LaurentPoly:
        """b_lambda(q) = prod_i (1-q)...(1-q^{m_i}) over part multiplicities."""
        one = LaurentPoly.one((var,))
        q = LaurentPoly.gen((var,), var)
        out = one
        for m in self.multiplicities.values():
            for k in range(1, m + 1):
                out = out * (one - q ** k)
        return out

    def to_json_obj(self) -> list:
        return list(self.parts)


def stats(lam: Partition) -> dict:
    """All box statistics of ``lam`` in one mapping."""
    return {
        "conjugate": lam.conjugate,
        "boxes": lam.boxes,
        "n_lambda": lam.n,
        "pairing": lam.pairing,
        "b_lambda": lam.b_poly(),
    }


def _gen(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise UsageError("cannot partition a negative integer")
    return tuple(Partition(p) for p in _gen(n, n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from enumerate_partitions(m)


def partition_count(n: int) -> int:
    return len(enumerate_partitions(n))


def parse_partition(parts: Sequence[int]) -> Partition:
    return Partition(tuple(parts))

"""Counting solutions of [x1,y1]...[xg,yg] = z by class-function convolution."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..exact import UsageError
from .groups import GroupTable
from .kernels import class_structure, commutator_counts


@dataclass(frozen=True)
class ClassFunction:
    """Values per conjugacy class id, as Python ints."""

    values: tuple

    def __call__(self, G: GroupTable, element: int) -> int:
        return self.values[int(G.cls[element])]

    def total(self, G: GroupTable) -> int:
        return sum(v * s for v, s in zip(self.values, G.class_sizes))


def commutator_distribution(G: GroupTable, backend: str | None = None) -> ClassFunction:
    counts = commutator_counts(G.mul, G.inv, backend)
    vals = []
    for c, rep in enumerate(G.class_reps):
        members = counts[G.cls == c]
        if np.any(members != members[0]):
            raise ArithmeticError("commutator counts are not a class function")
        vals.append(int(counts[rep]))
    return ClassFunction(tuple(vals))


_STRUCT: dict = {}


def _structure(G: GroupTable, backend: str | None) -> np.ndarray:
    key = (G.n, G.q)
    if key not in _STRUCT:
        _STRUCT[key] = class_structure(G.mul, G.inv, G.cls, G.class_reps, G.num_classes, backend)
    return _STRUCT[key]


def convolve(G: GroupTable, f: ClassFunction, h: ClassFunction, backend: str | None = None) -> ClassFunction:
    """(f*h)(z) = sum_u f(u) h(u^-1 z), evaluated on class representatives."""
    M = _structure(G, backend)
    vals = []
    for j in range(G.num_classes):
        rows = M[j]
        acc = 0
        for a, b in zip(*np.nonzero(rows)):
            acc += int(rows[a, b]) * f.values[a] * h.values[b]
        vals.append(acc)
    return ClassFunction(tuple(vals))


def genus_count(G: GroupTable, g: int, target: int, backend: str | None = None) -> int:
    """#{(x1,y1,...,xg,yg): prod [xi,yi] = target} for a central target."""
    if g < 1:
        raise UsageError("g must be >= 1")
    if not G.is_central(target):
        raise UsageError("target must be central")
    f = commutator_distribution(G, backend)
    F = f
    for _ in range(g - 1):
        F = convolve(G, F, f, backend)
    return F(G, target)


def genus_count_direct(G: GroupTable, g: int, target: int, limit: int = 2_000_000) -> int:
    """Literal enumeration of all 2g-tuples; only for tiny groups."""
    N = G.order
    if N ** (2 * g) > limit:
        raise UsageError(f"{N}^{2 * g} tuples exceed the enumeration limit {limit}")
    mul, inv = G.mul, G.inv
    comm = [[int(mul[mul[mul[x, y], inv[x]], inv[y]]) for y in range(N)] for x in range(N)]
    hits = 0
    for tup in product(range(N), repeat=2 * g):
        z = G.identity
        for i in range(g):
            z = int(mul[z, comm[tup[2 * i]][tup[2 * i + 1]]])
        hits += z == target
    return hits


def hom_count(G: GroupTable, g: int, backend: str | None = None) -> int:
    return genus_count(G, g, G.identity, backend)

"""Enumerated general linear groups over prime fields."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..exact import UsageError

MAX_ORDER = 5000  # keeps the multiplication table near 100 MB at worst


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def _det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    n = mats.shape[1]
    if n == 1:
        return mats[:, 0, 0] % p
    if n == 2:
        return (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % p
    if n == 3:
        a = mats
        d = (
            a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
            - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
            + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
        )
        return d % p
    raise UsageError("only n <= 3 is supported")


@dataclass
class GroupTable:
    n: int
    q: int
    codes: np.ndarray  # int64, sorted matrix codes
    mats: np.ndarray  # (N, n, n)
    lookup: np.ndarray  # code -> index, -1 when singular
    mul: np.ndarray  # (N, N) int64
    inv: np.ndarray
    identity: int
    cls: np.ndarray = field(default=None)
    class_reps: list = field(default_factory=list)
    class_sizes: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.codes)

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def encode(self, m) -> int:
        m = np.asarray(m, dtype=np.int64) % self.q
        return int((m.reshape(-1) * self.q ** np.arange(self.n * self.n)).sum())

    def index(self, m) -> int:
        i = int(self.lookup[self.encode(m)])
        if i < 0:
            raise UsageError(f"matrix is singular mod {self.q}")
        return i

    def scalar(self, c: int) -> int:
        return self.index(np.eye(self.n, dtype=np.int64) * c)

    def center(self) -> list:
        return [self.scalar(c) for c in range(1, self.q)]

    def is_central(self, z: int) -> bool:
        return bool(np.all(self.mul[z] == self.mul[:, z]))


def _codes_to_mats(codes: np.ndarray, n: int, p: int) -> np.ndarray:
    digits = (codes[:, None] // p ** np.arange(n * n)[None, :]) % p
    return digits.reshape(-1, n, n)


def _classes(G: GroupTable) -> None:
    N = G.order
    cls = np.full(N, -1, dtype=np.int64)
    reps, sizes = [], []
    for x in range(N):
        if cls[x] >= 0:
            continue
        orbit = np.unique(G.mul[G.mul[:, x], G.inv])
        cls[orbit] = len(reps)
        reps.append(x)
        sizes.append(len(orbit))
    G.cls, G.class_reps, G.class_sizes = cls, reps, sizes


def estimate_cost(n: int, q: int) -> int:
    """Entries of the multiplication table."""
    return gl_order(n, q) ** 2


@lru_cache(maxsize=None)
def build_gl(n: int, q: int) -> GroupTable:
    if n < 1:
        raise UsageError("n must be >= 1")
    if not is_prime(q):
        raise UsageError(f"q must be prime, got {q}")
    order = gl_order(n, q)
    if order > MAX_ORDER or n > 3:
        raise UsageError(
            f"GL_{n}(F_{q}) has order {order}; a full table needs ~{estimate_cost(n, q):.3g} "
            f"entries (limit {MAX_ORDER ** 2:.3g})"
        )
    p = q
    allc = np.arange(p ** (n * n), dtype=np.int64)
    mats = _codes_to_mats(allc, n, p)
    keep = _det_mod(mats, p) != 0
    codes, mats = allc[keep], mats[keep]
    lookup = np.full(p ** (n * n), -1, dtype=np.int64)
    lookup[codes] = np.arange(len(codes))
    weights = p ** np.arange(n * n, dtype=np.int64)
    N = len(codes)
    mul = np.empty((N, N), dtype=np.int64)
    chunk = max(1, 2_000_000 // (N * n * n))
    for start in range(0, N, chunk):
        prod = np.einsum("aij,bjk->abik", mats[start:start + chunk], mats) % p
        mul[start:start + chunk] = lookup[prod.reshape(prod.shape[0], N, -1) @ weights]
    identity = int(lookup[int((np.eye(n, dtype=np.int64).reshape(-1) * weights).sum())])
    inv = np.argmax(mul == identity, axis=1).astype(np.int64)
    G = GroupTable(n, q, codes, mats, lookup, mul, inv, identity)
    _classes(G)
    return G


def primitive_root_of_unity(n: int, q: int) -> int:
    """An element of exact order n in F_q^*, for n | q - 1."""
    if (q - 1) % n:
        raise UsageError(f"{n} does not divide {q}-1")
    for h in range(1, q):
        if all(pow(h, (q - 1) // r, q) != 1 for r in _prime_factors(q - 1)):
            return pow(h, (q - 1) // n, q)
    raise UsageError(f"no generator mod {q}")


def _prime_factors(m: int) -> list:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out

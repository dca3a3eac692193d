"""Truncated power series in T and the plethystic Exp/Log maps.

Coefficients may be :class:`LaurentPoly` or :class:`RationalFn`; all that is
needed from them is ring arithmetic, scalar multiplication and ``adams``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Sequence

from .exact import LaurentPoly, RationalFn, UsageError, divisors


def mobius(n: int) -> int:
    if n < 1:
        raise UsageError("mobius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


class TruncSeries:
    """c_0 + c_1 T + ... + c_N T^N, exact up to (and including) T^N."""

    __slots__ = ("coeffs", "meta")

    def __init__(self, coeffs: Sequence, meta: dict | None = None):
        if not coeffs:
            raise UsageError("a series needs at least a constant term")
        self.coeffs = tuple(coeffs)
        self.meta = dict(meta or {})
        vs = self.coeffs[0].vars
        if any(c.vars != vs for c in self.coeffs):
            raise UsageError("series coefficients must share one variable list")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def vars(self) -> tuple:
        return self.coeffs[0].vars

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_function(cls, order: int, f: Callable[[int], object]) -> "TruncSeries":
        return cls([f(n) for n in range(order + 1)])

    def map(self, f: Callable) -> "TruncSeries":
        return TruncSeries([f(c) for c in self.coeffs])

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise UsageError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def _check(self, other: "TruncSeries") -> int:
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.vars != self.vars:
            raise UsageError("series over different variables")
        return min(self.order, other.order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._check(other)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._check(other)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs])
        n = self._check(other)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = self._check(other)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    __hash__ = None

    def first_difference(self, other: "TruncSeries") -> int | None:
        n = self._check(other)
        for i in range(n + 1):
            if not self.coeffs[i] == other.coeffs[i]:
                return i
        return None

    def to_json_obj(self) -> list:
        return [c.to_json_obj() for c in self.coeffs]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "TruncSeries":
        return cls([LaurentPoly.from_json_obj(o) for o in obj])

    def __repr__(self) -> str:
        return "TruncSeries[" + ", ".join(str(c) for c in self.coeffs) + "]"


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c * 0 + 1


def _assert_const(F: TruncSeries, value: int, what: str) -> None:
    c0 = F.coeffs[0]
    if not (c0 - value).is_zero():
        raise UsageError(f"{what} needs constant term {value}, got {c0}")


def series_from_power_sums(U: Sequence, order: int, one) -> TruncSeries:
    """F with log F = sum_{n>=1} U_n T^n / n (``U[0]`` is ignored)."""
    a = [one]
    for n in range(1, order + 1):
        acc = U[1] * a[n - 1]
        for k in range(2, n + 1):
            acc = acc + U[k] * a[n - k]
        a.append(acc * Fraction(1, n))
    return TruncSeries(a)


def log_raw(F: TruncSeries) -> list:
    """[0, U_1, ..., U_N] with log F = sum U_n T^n / n."""
    _assert_const(F, 1, "log_raw")
    a = F.coeffs
    U = [_zero_like(a[0])]
    for n in range(1, F.order + 1):
        acc = a[n] * n
        for k in range(1, n):
            acc = acc - U[k] * a[n - k]
        U.append(_reduce(acc))
    return U


def _reduce(c):
    return c.cancel() if isinstance(c, RationalFn) else c


def power_sums_to_log(U: Sequence) -> list:
    """[0, V_1, ..., V_N] with V_n = (1/n) sum_{d|n} mu(d) adams_d(U_{n/d})."""
    V = [_zero_like(U[1]) if len(U) > 1 else None]
    for n in range(1, len(U)):
        acc = None
        for d in divisors(n):
            mu = mobius(d)
            if mu:
                t = U[n // d].adams(d) * mu
                acc = t if acc is None else acc + t
        V.append(_reduce(acc * Fraction(1, n)))
    return V


def log_to_power_sums(V: Sequence) -> list:
    """U_n = sum_{d|n} d * adams_{n/d}(V_d)."""
    U = [V[0]]
    for n in range(1, len(V)):
        acc = None
        for d in divisors(n):
            t = V[d].adams(n // d) * d
            acc = t if acc is None else acc + t
        U.append(acc)
    return U


def log_pleth(F: TruncSeries) -> TruncSeries:
    """Plethystic logarithm; the result has constant term 0."""
    V = power_sums_to_log(log_raw(F))
    V[0] = _zero_like(F.coeffs[0])
    return TruncSeries(V)


def exp_pleth(V: TruncSeries) -> TruncSeries:
    """Plethystic exponential exp(sum_r adams_r(V)(T^r) / r), constant term 1."""
    _assert_const(V, 0, "exp_pleth")
    U = log_to_power_sums(list(V.coeffs))
    return series_from_power_sums(U, V.order, _one_like(V.coeffs[0]))

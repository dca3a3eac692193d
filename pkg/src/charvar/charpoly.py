"""Partition zeta series and everything read off their plethystic logarithm.

Three flavours of zeta function are supported:

``univariate``
    sum of hook_power(lam, g) T^|lam|, coefficients in ``q``
``bivariate``
    sum of hook_two(lam, g) T^|lam|, coefficients RationalFn in ``(z, w)``
``pure``
    sum of hook_pure(lam, g) T^|lam|, the ``z = 0, w = sqrt(q)`` slice

For each, U_n and V_n are the power-sum and plethystic-log coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .exact import (
    HalfIntegerResidue,
    LaurentPoly,
    RationalFn,
    UsageError,
    coerce_rational,
    exact_divide,
)
from .hooks import Q, S, ZW, hook_power, hook_pure, hook_two
from .partitions import Partition, enumerate_partitions
from .plethys import TruncSeries, exp_pleth, log_pleth, log_raw, mobius, power_sums_to_log

MODES = ("univariate", "bivariate", "pure")
QT = ("q", "t")
T_ONLY = ("t",)


class ConsistencyError(ArithmeticError):
    """A value that must be a polynomial (or must agree with another route) is not."""


class ConjectureCounterexample(Exception):
    """A conjectured polynomiality or symmetry failed; ``artifact`` holds the evidence."""

    def __init__(self, message: str, artifact=None):
        super().__init__(message)
        self.artifact = artifact


def dims(n: int, g: int) -> tuple:
    """(d_n, d~_n): dimensions of the twisted variety and of its PGL quotient."""
    return n * n * (2 * g - 2) + 2, (n * n - 1) * (2 * g - 2)


@dataclass(frozen=True)
class CharVarResult:
    n: int
    g: int
    payload: object
    label: str = ""
    d: int = field(init=False)
    d_tilde: int = field(init=False)

    def __post_init__(self):
        d, dt = dims(self.n, self.g)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "d_tilde", dt)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "d_n": self.d,
            "d_tilde_n": self.d_tilde,
            "label": self.label,
            "value": self.payload.to_json_obj(),
        }


def _check_ng(n: int, g: int, min_g: int = 0) -> None:
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if g < min_g:
        raise UsageError(f"g must be >= {min_g}, got {g}")


def _coefficient(lam: Partition, g: int, mode: str):
    if mode == "univariate":
        return hook_power(lam, g)
    if mode == "bivariate":
        return hook_two(lam, g)
    if mode == "pure":
        return hook_pure(lam, g)
    raise UsageError(f"unknown mode {mode!r}; expected one of {MODES}")


def _vars_for(mode: str) -> tuple:
    return ZW if mode == "bivariate" else Q


def partition_zeta(g: int, N: int, mode: str = "univariate") -> TruncSeries:
    if N < 1:
        raise UsageError("order N must be >= 1")
    if g < 0:
        raise UsageError("genus must be nonnegative")
    if mode not in MODES:
        raise UsageError(f"unknown mode {mode!r}; expected one of {MODES}")
    rational = mode != "univariate" or g == 0
    vs = _vars_for(mode)
    coeffs = []
    for m in range(N + 1):
        acc = LaurentPoly.zero(vs)
        if rational:
            acc = RationalFn(acc)
        for lam in enumerate_partitions(m):
            acc = acc + _coefficient(lam, g, mode)
        coeffs.append(acc.cancel() if rational else acc)
    meta = {"g": g, "mode": mode, "rational_coefficients": rational}
    if mode == "univariate" and g == 0:
        meta["negative_hook_powers"] = True
    return TruncSeries(coeffs, meta)


class UV(NamedTuple):
    U: list  # U[0] is a placeholder zero
    V: list


_UV_CACHE: dict = {}


def uv_coeffs(g: int, n: int, mode: str = "univariate") -> UV:
    """U_1..U_n and V_1..V_n, memoised per (g, mode) and extended on demand."""
    _check_ng(n, g)
    key = (g, mode)
    hit = _UV_CACHE.get(key)
    if hit is None or len(hit.U) <= n:
        Z = partition_zeta(g, n, mode)
        U = log_raw(Z)
        hit = UV(U, power_sums_to_log(U))
        _UV_CACHE[key] = hit
    return UV(hit.U[: n + 1], hit.V[: n + 1])


def clear_cache() -> None:
    _UV_CACHE.clear()


def _multisets(items: list, total: int, start: int = 0):
    """Multiplicity vectors (as dicts) over ``items`` whose weighted size is ``total``."""
    if total == 0:
        yield {}
        return
    for i in range(start, len(items)):
        size = items[i].size
        for m in range(1, total // size + 1):
            for rest in _multisets(items, total - m * size, i + 1):
                out = dict(rest)
                out[items[i]] = m
                yield out


def u_multinomial(g: int, k: int, mode: str = "univariate"):
    """U_k from the direct expansion of log(1 + sum_{lam != 0} H_lam T^|lam|).

    Independent of the recursive series logarithm; practical for small k.
    """
    _check_ng(k, g)
    items = [lam for m in range(1, k + 1) for lam in enumerate_partitions(m)]
    vs = _vars_for(mode)
    acc = RationalFn(LaurentPoly.zero(vs))
    for mult in _multisets(items, k):
        m = sum(mult.values())
        c = Fraction((-1) ** (m - 1) * factorial(m - 1))
        term = coerce_rational(LaurentPoly.one(vs), vs)
        for lam, e in mult.items():
            c /= factorial(e)
            term = term * coerce_rational(_coefficient(lam, g, mode), vs) ** e
        acc = acc + term * c
    return (acc * k).cancel()


def _as_poly(x, what: str) -> LaurentPoly:
    if isinstance(x, RationalFn):
        p = x.to_poly()
        if p is None:
            raise ConsistencyError(f"{what} is not a Laurent polynomial: {x}")
        return p
    return x


def e_poly(n: int, g: int) -> LaurentPoly:
    """E_n(q) = q^{(g-1)n^2} (q-1)^2 V_n(q), the E-polynomial of the twisted variety."""
    _check_ng(n, g)
    q = LaurentPoly.gen(Q, "q")
    if g == 0:
        return LaurentPoly.const(Q, 1 if n == 1 else 0)
    V = uv_coeffs(g, n).V[n]
    E = q ** ((g - 1) * n * n) * (q - 1) ** 2 * V
    E = _as_poly(E, f"E_{n} at g={g}")
    if not E.is_integral() or (E and E.trail()[0][0] < 0):
        raise ConsistencyError(f"E_{n} at g={g} is not an integer polynomial: {E}")
    return E


def e_bar(n: int, g: int) -> LaurentPoly:
    """q^{-d_n/2} E_n(q)."""
    d, _ = dims(n, g)
    return LaurentPoly.gen(Q, "q") ** (-(d // 2)) * e_poly(n, g)


def h_bar(n: int, g: int) -> LaurentPoly:
    """(z^2-1)(1-w^2) V_n(z,w), certified to be a polynomial."""
    _check_ng(n, g, 1)
    z, w = LaurentPoly.gens(ZW)
    one = LaurentPoly.one(ZW)
    V = uv_coeffs(g, n, "bivariate").V[n]
    H = (V * ((z * z - one) * (one - w * w))).cancel()
    if H.den:
        raise ConjectureCounterexample(
            f"H-bar_{n} at g={g} has a nontrivial denominator", artifact=H
        )
    return H.num


def _mhp_from_hbar(H: LaurentPoly, n: int, g: int, variant: str) -> LaurentPoly:
    d, _ = dims(n, g)
    st = ("s", "t")
    s, t = LaurentPoly.gens(st)
    X = H.substitute({"z": s, "w": -(s ** -1) * t ** -1}, st) * (s * t) ** d
    try:
        X = X.halve("s", "q")
    except HalfIntegerResidue as exc:
        raise ConjectureCounterexample(
            f"half-integer power of q in the mixed Hodge polynomial (n={n}, g={g})", artifact=X
        ) from exc
    if X:
        qlo, _ = X.degree_bounds("q")
        tlo, thi = X.degree_bounds("t")
        if qlo < 0 or tlo < 0 or thi > 2 * d:
            raise ConjectureCounterexample(
                f"exponents out of range in the mixed Hodge polynomial (n={n}, g={g})", artifact=X
            )
    if variant == "gl":
        return X
    if variant != "pgl":
        raise UsageError(f"unknown variant {variant!r}; expected 'gl' or 'pgl'")
    q, t = LaurentPoly.gens(QT)
    Y = exact_divide(X, (LaurentPoly.one(QT) + q * t) ** (2 * g))
    if Y is None:
        raise ConjectureCounterexample(
            f"(1+qt)^{2 * g} does not divide the mixed Hodge polynomial (n={n}, g={g})",
            artifact=X,
        )
    return Y


def mhp_conj(n: int, g: int, variant: str = "gl") -> LaurentPoly:
    """Conjectural mixed Hodge polynomial (t sqrt q)^{d_n} H-bar_n(sqrt q, -1/(t sqrt q))."""
    return _mhp_from_hbar(h_bar(n, g), n, g, variant)


def pure_part(H: LaurentPoly) -> LaurentPoly:
    """Keep the terms c q^a t^{2a}, as c t^{2a}."""
    if H.vars != QT:
        raise UsageError(f"expected a polynomial in {QT}, got {H.vars}")
    return LaurentPoly(T_ONLY, {(t,): c for (a, t), c in H.items() if t == 2 * a})


ROUTES = ("specialize", "hua")


def a_poly(n: int, g: int, route: str = "specialize") -> LaurentPoly:
    """Kac polynomial A_n(q) of the g-loop quiver."""
    _check_ng(n, g, 1)
    if route == "specialize":
        s = LaurentPoly.gen(S, "s")
        return h_bar(n, g).substitute({"z": 0, "w": s}, S).halve("s", "q")
    if route == "hua":
        q = LaurentPoly.gen(Q, "q")
        V = uv_coeffs(g, n, "pure").V[n]
        return _as_poly(V * (q - 1), f"A_{n} at g={g} (hua)")
    raise UsageError(f"unknown route {route!r}; expected one of {ROUTES}")


def a_poly_checked(n: int, g: int) -> LaurentPoly:
    a = a_poly(n, g, "specialize")
    b = a_poly(n, g, "hua")
    if a != b:
        raise ConsistencyError(f"A_{n} routes disagree at g={g}: {a} vs {b}")
    return a


def euler_char_pgl(n: int, g: int) -> int:
    """E_n(q)/(q-1)^{2g} evaluated at q = 1."""
    _check_ng(n, g, 2)
    q = LaurentPoly.gen(Q, "q")
    quo = exact_divide(e_poly(n, g), (q - 1) ** (2 * g))
    if quo is None:
        raise ConsistencyError(f"(q-1)^{2 * g} does not divide E_{n}")
    return quo.evaluate({"q": 1})


def euler_char_expected(n: int, g: int) -> int:
    return mobius(n) * n ** (2 * g - 3)


def untwisted_series(g: int, N: int) -> TruncSeries:
    """Exp((q-1) Log Z): the T^n coefficient is #Hom(Gamma_g, GL_n) / (q^{(g-1)n^2} |GL_n|)."""
    if g < 1:
        raise UsageError("untwisted counts need g >= 1")
    if N < 1:
        raise UsageError("order N must be >= 1")
    q = LaurentPoly.gen(Q, "q")
    V = log_pleth(partition_zeta(g, N))
    out = exp_pleth(V * (q - 1))
    for i, c in enumerate(out.coeffs):
        if not c.is_integral():
            raise ConsistencyError(f"untwisted coefficient {i} is not integral: {c}")
    return out


# -- identity checks ---------------------------------------------------------------

CHECKS = ("g0", "g0-univariate", "g1", "gh", "duality", "t-minus-one")


@dataclass
class IdentityReport:
    check: str
    params: dict
    passed: bool
    first_diff: int | None = None
    lhs: str | None = None
    rhs: str | None = None

    def line(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{'PASS' if self.passed else 'FAIL'} {self.check} {args}".rstrip()
        if self.passed:
            return head
        return f"{head} first difference at {self.first_diff}: lhs={self.lhs} rhs={self.rhs}"

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "passed": self.passed,
            "first_diff": self.first_diff,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


def _series_report(check: str, params: dict, lhs: TruncSeries, rhs: TruncSeries) -> IdentityReport:
    i = lhs.first_difference(rhs)
    if i is None:
        return IdentityReport(check, params, True)
    return IdentityReport(check, params, False, i, str(lhs[i]), str(rhs[i]))


def _constant_series(value, order: int) -> TruncSeries:
    zero = value * 0
    return TruncSeries([zero] + [value] * order)


def _single_term_series(value, order: int) -> TruncSeries:
    zero = value * 0
    return TruncSeries([zero, value] + [zero] * (order - 1))


def _g0_lhs(N: int) -> TruncSeries:
    z, w = LaurentPoly.gens(ZW)
    coeffs = []
    for m in range(N + 1):
        acc = RationalFn(LaurentPoly.zero(ZW))
        for lam in enumerate_partitions(m):
            dens = []
            for b in lam.boxes:
                dens.append(z ** (b.arm + 1) - w ** b.leg)
                dens.append(z ** b.arm - w ** (b.leg + 1))
            acc = acc + RationalFn.from_factors(LaurentPoly.one(ZW), dens)
        coeffs.append(acc.cancel())
    return TruncSeries(coeffs)


def check_g0(order: int = 5) -> IdentityReport:
    z, w = LaurentPoly.gens(ZW)
    one = LaurentPoly.one(ZW)
    x = RationalFn.from_factors(one, [one - z, w - one])
    rhs = exp_pleth(_single_term_series(x, order))
    return _series_report("g0", {"order": order}, _g0_lhs(order), rhs)


def check_g0_univariate(order: int = 8) -> IdentityReport:
    q = LaurentPoly.gen(Q, "q")
    one = LaurentPoly.one(Q)
    x = RationalFn.from_factors(q, [one - q, one - q])
    rhs = exp_pleth(_single_term_series(x, order))
    lhs = partition_zeta(0, order, "univariate")
    return _series_report("g0-univariate", {"order": order}, lhs, rhs)


def check_g1(order: int = 6) -> IdentityReport:
    z, w = LaurentPoly.gens(ZW)
    one = LaurentPoly.one(ZW)
    x = RationalFn.from_factors((z - w) ** 2, [z * z - one, one - w * w])
    rhs = exp_pleth(_constant_series(x, order))
    lhs = partition_zeta(1, order, "bivariate")
    return _series_report("g1", {"order": order}, lhs, rhs)


def check_gh(n: int) -> IdentityReport:
    z, w = LaurentPoly.gens(ZW)
    one = LaurentPoly.one(ZW)
    lhs = RationalFn(LaurentPoly.zero(ZW))
    rhs = RationalFn(LaurentPoly.zero(ZW))
    for lam in enumerate_partitions(n):
        dens = []
        for b in lam.boxes:
            dens.append(w ** b.leg - z ** (b.arm + 1))
            dens.append(z ** b.arm - w ** (b.leg + 1))
        lhs = lhs + RationalFn.from_factors(one, dens)
        num = z ** lam.conjugate.n * w ** lam.n
        dens = [one - z ** h for h in lam.hooks()] + [one - w ** h for h in lam.hooks()]
        rhs = rhs + RationalFn.from_factors(num, dens)
    if lhs == rhs:
        return IdentityReport("gh", {"n": n}, True)
    return IdentityReport("gh", {"n": n}, False, n, str(lhs.cancel()), str(rhs.cancel()))


def check_duality(n: int, g: int) -> IdentityReport:
    E = e_bar(n, g)
    flipped = E.substitute({"q": LaurentPoly.gen(Q, "q") ** -1})
    if flipped == E:
        return IdentityReport("duality", {"n": n, "g": g}, True)
    diff = flipped - E
    return IdentityReport("duality", {"n": n, "g": g}, False, diff.lead()[0][0], str(flipped), str(E))


def check_t_minus_one(n: int, g: int) -> IdentityReport:
    d, _ = dims(n, g)
    q = LaurentPoly.gen(Q, "q")
    H = mhp_conj(n, g)
    specialised = H.substitute({"q": q ** -1, "t": LaurentPoly.const(Q, -1)}, Q) * q ** d
    E = e_poly(n, g)
    if specialised == E:
        return IdentityReport("t-minus-one", {"n": n, "g": g}, True)
    diff = specialised - E
    return IdentityReport("t-minus-one", {"n": n, "g": g}, False, diff.lead()[0][0], str(specialised), str(E))


def verify_identity(mode: str, **params) -> IdentityReport:
    if mode == "g0":
        return check_g0(params.get("order", 5))
    if mode == "g0-univariate":
        return check_g0_univariate(params.get("order", 8))
    if mode == "g1":
        return check_g1(params.get("order", 6))
    if mode == "gh":
        return check_gh(params.get("n", 3))
    if mode == "duality":
        return check_duality(params.get("n", 2), params.get("g", 2))
    if mode == "t-minus-one":
        return check_t_minus_one(params.get("n", 2), params.get("g", 2))
    raise UsageError(f"unknown check {mode!r}; expected one of {CHECKS}")

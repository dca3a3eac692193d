"""Hook polynomials in one and two variables.

One-variable values are Laurent polynomials in ``s`` with ``s^2 = q`` so the
half-integer normalising power stays integral.
"""

from __future__ import annotations

from functools import lru_cache

from .exact import LaurentPoly, RationalFn, UsageError
from .partitions import Partition

S = ("s",)
Q = ("q",)
ZW = ("z", "w")


@lru_cache(maxsize=None)
def hook_norm(lam: Partition) -> LaurentPoly:
    """s^{-<lam,lam>} * prod over boxes of (1 - s^{2h})."""
    one = LaurentPoly.one(S)
    s = LaurentPoly.gen(S, "s")
    out = s ** (-lam.pairing(lam))
    for h in lam.hooks():
        out = out * (one - s ** (2 * h))
    return out


@lru_cache(maxsize=None)
def hook_tilde(lam: Partition) -> LaurentPoly:
    """prod over boxes of (q^h - 1)."""
    one = LaurentPoly.one(Q)
    q = LaurentPoly.gen(Q, "q")
    out = one
    for h in lam.hooks():
        out = out * (q ** h - one)
    return out


def hook_power(lam: Partition, g: int) -> LaurentPoly | RationalFn:
    """hook_norm(lam)^(2g-2) re-expressed in q.

    For g = 0 the power is negative and the value is a RationalFn.
    """
    e = 2 * g - 2
    if e >= 0:
        return (hook_norm(lam) ** e).halve("s", "q")
    q = LaurentPoly.gen(Q, "q")
    one = LaurentPoly.one(Q)
    # (q^{-<l,l>/2} prod(1-q^h))^e with e < 0 and e even
    num = q ** (-(e // 2) * lam.pairing(lam))
    dens = [one - q ** h for h in lam.hooks() for _ in range(-e)]
    return RationalFn.from_factors(num, dens)


@lru_cache(maxsize=None)
def hook_two(lam: Partition, g: int) -> RationalFn:
    """prod over boxes of (z^{2a+1}-w^{2l+1})^{2g} / ((z^{2a+2}-w^{2l})(z^{2a}-w^{2l+2}))."""
    if g < 0:
        raise UsageError("genus must be nonnegative")
    z, w = LaurentPoly.gens(ZW)
    num = LaurentPoly.one(ZW)
    dens = []
    for b in lam.boxes:
        a, l = b.arm, b.leg
        num = num * (z ** (2 * a + 1) - w ** (2 * l + 1)) ** (2 * g)
        dens.append(z ** (2 * a + 2) - w ** (2 * l))
        dens.append(z ** (2 * a) - w ** (2 * l + 2))
    return RationalFn.from_factors(num, dens)


@lru_cache(maxsize=None)
def hook_pure(lam: Partition, g: int) -> RationalFn:
    """q^{(g-1)<lam,lam>} / b_lam(1/q), the value of hook_two at z=0, w=sqrt(q)."""
    q = LaurentPoly.gen(Q, "q")
    one = LaurentPoly.one(Q)
    num = q ** ((g - 1) * lam.pairing(lam))
    dens = [
        one - q ** (-k) for m in lam.multiplicities.values() for k in range(1, m + 1)
    ]
    return RationalFn.from_factors(num, dens)


def at_sqrt_q(f: RationalFn) -> RationalFn:
    """Specialise a (z, w) function at z = s, w = 1/s."""
    s = LaurentPoly.gen(S, "s")
    return f.substitute({"z": s, "w": s ** -1}, S)


def at_zero_sqrt_q(f: RationalFn) -> RationalFn:
    """Specialise a (z, w) function at z = 0, w = s."""
    s = LaurentPoly.gen(S, "s")
    return f.substitute({"z": 0, "w": s}, S)


def swap_zw(f: RationalFn) -> RationalFn:
    z, w = LaurentPoly.gens(ZW)
    return f.substitute({"z": w, "w": z}, ZW)


def negate_zw(f: RationalFn) -> RationalFn:
    z, w = LaurentPoly.gens(ZW)
    return f.substitute({"z": -z, "w": -w}, ZW)

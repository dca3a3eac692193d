"""Rank 2: the mixed Hodge polynomial from the cohomology ring presentation.

The PGL-quotient cohomology splits as a sum over k of Lambda^k_0 tensored with
Q[alpha, beta, gamma] / I^{g-k}_k.  Ring elements are LaurentPoly objects in
the variables ``("alpha", "beta", "gamma")`` with nonnegative exponents.

Gradings of a monomial alpha^r beta^s gamma^t:

* weight units (alpha, beta: 2, gamma: 4), i.e. the q-exponent
* cohomological degree (2, 4, 6), i.e. the t-exponent

The psi-part of sector k contributes q^{2k} t^{3k} and the epsilon classes the
overall factor (1+qt)^{2g}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from .exact import LaurentPoly, RationalFn, UsageError

ABC = ("alpha", "beta", "gamma")
ABC_SERIES_VARS = ("a", "b", "c")
QT = ("q", "t")


class SgkTriple(NamedTuple):
    r: int
    s: int
    t: int


def in_basis(r: int, s: int, t: int, gp: int, k: int) -> bool:
    """Whether alpha^r beta^s gamma^t is a basis monomial of Q[a,b,c]/I^{gp}_k."""
    return t <= gp and (r + 3 * s + 3 * t <= 3 * gp - 3 + k or r + 2 * s + 2 * t < 2 * gp - 2 + k)


def admissible(r: int, s: int, t: int, g: int, n: int) -> bool:
    """Index set of the relations rho^{n,g}_{r,s,t}."""
    return t <= g and r + 3 * s + 3 * t > 3 * g - 3 + n and r + 2 * s + 2 * t >= 2 * g - 2 + n


def skg_enumerate(gp: int, k: int) -> list:
    if gp < 0 or k < 0:
        raise UsageError("need g' >= 0 and k >= 0")
    bound = max(3 * gp - 3 + k, 2 * gp - 3 + k, 0)
    out = []
    for t in range(gp + 1):
        for s in range(bound + 1):
            for r in range(bound + 1):
                if in_basis(r, s, t, gp, k):
                    out.append(SgkTriple(r, s, t))
    return sorted(out)


def lambda0_dim(g: int, k: int) -> int:
    """Dimension of the primitive part of the k-th exterior power of a 2g-dim space."""
    return comb(2 * g, k) - (comb(2 * g, k - 2) if k >= 2 else 0)


# -- closed forms --------------------------------------------------------------------


def basis_series_closed(gp: int, k: int) -> RationalFn:
    """Generating function of the basis set as a rational function of (a, b, c)."""
    a, b, c = LaurentPoly.gens(ABC_SERIES_VARS)
    one = LaurentPoly.one(ABC_SERIES_VARS)
    g = gp

    def R(num, *dens):
        return RationalFn.from_factors(num, dens)

    return (
        R(one - c ** (g + 1), one - a, one - b, one - c)
        - R(a ** (k - 2) * b ** g * (one - c ** (g + 1) * b ** (-(g + 1))),
            one - a, one - c / b, one - b / a ** 2)
        - R((b ** (g + (k + 1) // 2 - 1) + a * b ** (g + k // 2 - 1))
            * (one - c ** (g + 1) * b ** (-(g + 1))),
            one - b, one - c / b, one - a ** 2 / b)
        - R(a ** (3 * g + k - 2) * (one - c ** g * a ** (-3 * g)),
            one - a, one - c / a ** 3, one - b / a ** 3)
        + R(a ** (k - 2) * b ** g * (one - c ** g * b ** (-g)),
            one - a, one - c / b, one - b / a ** 3)
    )


def sector_series_closed(g: int, k: int) -> RationalFn:
    """Generating function of the basis set for sector k of genus g (effective genus
    g - k) at a = q^2t^2, b = q^2t^4, c = q^4t^6."""
    if not 0 <= k <= g:
        raise UsageError("need 0 <= k <= g")
    q, t = LaurentPoly.gens(QT)
    one = LaurentPoly.one(QT)
    half = Fraction(1, 2)

    def R(num, *dens):
        return RationalFn.from_factors(num, dens)

    return (
        R(q ** (2 * g - 2) * t ** (4 * g - 4 - 2 * k)
          * (one - q ** (4 * g - 4 * k + 4) * t ** (2 * g - 2 * k + 2)),
          one - q ** 4 * t ** 2, q ** 2 - one, q ** 2 * t ** 2 - one)
        + R(one - q ** (4 * g - 4 * k + 4) * t ** (6 * g - 6 * k + 6),
            one - q ** 4 * t ** 6, q ** 2 * t ** 2 - one, q ** 2 * t ** 4 - one)
        - R(q ** (2 * g - 2 - k) * t ** (4 * g - 4 - 2 * k)
            * (one - q ** (2 * g - 2 * k + 2) * t ** (2 * g - 2 * k + 2)),
            one - q ** 2 * t ** 2, q - one, q * t ** 2 - one) * half
        - R((-q) ** (2 * g - 2 - k) * t ** (4 * g - 4 - 2 * k)
            * (one - q ** (2 * g - 2 * k + 2) * t ** (2 * g - 2 * k + 2)),
            one - q ** 2 * t ** 2, q + one, q * t ** 2 + one) * half
    )


def skg_sum(gp: int, k: int, variables=ABC_SERIES_VARS) -> LaurentPoly:
    out = {}
    for r, s, t in skg_enumerate(gp, k):
        out[(r, s, t)] = 1
    return LaurentPoly(variables, out)


def _abc_to_qt(p: LaurentPoly) -> LaurentPoly:
    q, t = LaurentPoly.gens(QT)
    return p.substitute(
        {p.vars[0]: q ** 2 * t ** 2, p.vars[1]: q ** 2 * t ** 4, p.vars[2]: q ** 4 * t ** 6}, QT
    )


def mhp_m2_ring(g: int, pgl: bool = False) -> LaurentPoly:
    """H(M_2; q, t) assembled from the monomial bases of the sector rings."""
    if g < 1:
        raise UsageError("need g >= 1")
    q, t = LaurentPoly.gens(QT)
    one = LaurentPoly.one(QT)
    total = LaurentPoly.zero(QT)
    for k in range(g + 1):
        total = total + _abc_to_qt(skg_sum(g - k, k)) * (q ** 2 * t ** 3) ** k * lambda0_dim(g, k)
    return total if pgl else total * (one + q * t) ** (2 * g)


def mhp2_closed(g: int, pgl: bool = False) -> LaurentPoly:
    """Closed four-term formula for H(M_2; q, t)."""
    if g < 1:
        raise UsageError("need g >= 1")
    q, t = LaurentPoly.gens(QT)
    one = LaurentPoly.one(QT)
    half = Fraction(1, 2)
    m = q ** (2 * g - 2) * t ** (4 * g - 4)

    def R(num, *dens):
        return RationalFn.from_factors(num, dens)

    x = (
        R((q ** 2 * t ** 3 + one) ** (2 * g), q ** 2 * t ** 2 - one, q ** 2 * t ** 4 - one)
        + R(m * (q ** 2 * t + one) ** (2 * g), q ** 2 - one, q ** 2 * t ** 2 - one)
        - R(m * (q * t + one) ** (2 * g), q * t ** 2 - one, q - one) * half
        - R(m * (q * t - one) ** (2 * g), q + one, q * t ** 2 + one) * half
    )
    p = x.to_poly()
    if p is None:
        raise ArithmeticError(f"closed form is not a polynomial at g={g}")
    return p if pgl else p * (one + q * t) ** (2 * g)


def mhp_m2_sectors(g: int, pgl: bool = False) -> LaurentPoly:
    """H(M_2; q, t) summed from the substituted closed form sector by sector."""
    q, t = LaurentPoly.gens(QT)
    one = LaurentPoly.one(QT)
    acc = RationalFn(LaurentPoly.zero(QT))
    for k in range(g + 1):
        acc = acc + sector_series_closed(g, k) * ((q ** 2 * t ** 3) ** k * lambda0_dim(g, k))
    p = acc.to_poly()
    if p is None:
        raise ArithmeticError(f"sector sum is not a polynomial at g={g}")
    return p if pgl else p * (one + q * t) ** (2 * g)


def curious_pd_violation(H: LaurentPoly, d: int):
    """First term breaking h^{p,p;k} = h^{d-p,d-p;d+k-2p}, or ``None``."""
    for (p, k), c in H.items():
        if H.coefficient((d - p, d + k - 2 * p)) != c:
            return (p, k)
    return None


# -- ring relations and normal forms ---------------------------------------------------


def rho_relation(n: int, g: int, r: int, s: int, t: int) -> LaurentPoly:
    if min(r, s, t) < 0 or not admissible(r, s, t, g, n):
        raise UsageError(f"({r},{s},{t}) does not index a relation for g={g}, n={n}")
    c = r + 3 * s + 2 * t - 2 * g + 2 - n
    terms = {}
    for i in range(min(r, s, g - t) + 1):
        coeff = Fraction(factorial(c - i) * 2 ** (t + i),
                         factorial(r - i) * factorial(s - i) * factorial(i))
        terms[(r - i, s - i, t + i)] = coeff
    return LaurentPoly(ABC, terms)


def _lead_coeff(r: int, s: int, t: int, g: int, n: int) -> Fraction:
    c = r + 3 * s + 2 * t - 2 * g + 2 - n
    return Fraction(factorial(c) * 2 ** t, factorial(r) * factorial(s))


def normal_form(x: LaurentPoly, g: int, n: int) -> LaurentPoly:
    """Reduce modulo I^g_n onto the monomial basis, lex order alpha > beta > gamma."""
    if x.vars != ABC:
        raise UsageError(f"ring elements live in {ABC}")
    work = {e: c for e, c in x.items()}
    out = {}
    guard = sum(sum(e) for e in work) + len(work) + 1
    steps = 0
    while work:
        e = max(work)
        c = work.pop(e)
        r, s, t = e
        if min(e) < 0:
            raise UsageError("ring elements must be polynomials")
        if t > g:
            continue
        if in_basis(r, s, t, g, n):
            out[e] = c
            continue
        steps += 1
        if steps > guard * 10_000:
            raise RuntimeError("normal form reduction did not terminate")
        factor = c / _lead_coeff(r, s, t, g, n)
        for f, d in rho_relation(n, g, r, s, t).items():
            if f == e:
                continue
            v = work.get(f, 0) - factor * d
            if v:
                work[f] = v
            else:
                work.pop(f, None)
    return LaurentPoly(ABC, out)


def weight_units(r: int, s: int, t: int) -> int:
    return 2 * r + 2 * s + 4 * t


def degree(r: int, s: int, t: int) -> int:
    return 2 * r + 4 * s + 6 * t


def monomials_of(wt: int, deg: int) -> list:
    """All (r, s, t) with the given weight units and cohomological degree."""
    out = []
    if wt < 0 or deg < 0:
        return out
    for t in range(wt // 4 + 1):
        for s in range((wt - 4 * t) // 2 + 1):
            rem = wt - 4 * t - 2 * s
            if rem % 2:
                continue
            r = rem // 2
            if degree(r, s, t) == deg:
                out.append((r, s, t))
    return out


def rank(rows: list) -> int:
    """Rank over Q of a list of equal-length rows of Fractions."""
    m = [list(map(Fraction, row)) for row in rows if any(row)]
    rk = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] / p[col]
                m[i] = [a - f * b for a, b in zip(m[i], p)]
        rk += 1
    return rk


def quotient_dim(g: int, n: int, wt: int, deg: int) -> int:
    """dim of (Q[a,b,c]/I^g_n) in one bidegree, by linear algebra on the ideal.

    Independent of the leading-term choice used by :func:`normal_form`.
    """
    monos = monomials_of(wt, deg)
    if not monos:
        return 0
    idx = {m: i for i, m in enumerate(monos)}
    rows = []
    for m in monos:
        if m[2] > g:
            row = [0] * len(monos)
            row[idx[m]] = 1
            rows.append(row)
    for r in range(wt // 2 + 1):
        for s in range(wt // 2 + 1):
            for t in range(g + 1):
                if not admissible(r, s, t, g, n):
                    continue
                dw = wt - weight_units(r, s, t)
                dd = deg - degree(r, s, t)
                if dw < 0 or dd < 0:
                    continue
                rho = rho_relation(n, g, r, s, t)
                for cof in monomials_of(dw, dd):
                    row = [0] * len(monos)
                    for e, c in rho.items():
                        row[idx[tuple(a + b for a, b in zip(e, cof))]] += c
                    rows.append(row)
    return len(monos) - rank(rows)


@dataclass
class LefschetzResult:
    g: int
    l: int
    i: int
    domain_dim: int
    codomain_dim: int
    rank: int

    @property
    def isomorphism(self) -> bool:
        return self.rank == self.domain_dim == self.codomain_dim

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "l": self.l,
            "i": self.i,
            "domain_dim": self.domain_dim,
            "codomain_dim": self.codomain_dim,
            "rank": self.rank,
            "isomorphism": self.isomorphism,
        }


def _sector_piece(gp: int, k: int, wt: int, deg: int) -> list:
    return [m for m in monomials_of(wt, deg) if in_basis(*m, gp, k)]


def lefschetz_check(g: int, l: int, i: int) -> LefschetzResult:
    """Rank of multiplication by alpha^l from weight 6g-6-2l, degree i-l to weight 6g-6+2l, degree i+l."""
    if g < 2 or l < 0:
        raise UsageError("need g >= 2 and l >= 0")
    dom = cod = rk = 0
    for k in range(g + 1):
        mult = lambda0_dim(g, k)
        if not mult:
            continue
        gp = g - k
        # weight units here are q-exponents: the psi-part takes 2k of them and 3k degrees
        src = _sector_piece(gp, k, 3 * g - 3 - l - 2 * k, i - l - 3 * k)
        dst = _sector_piece(gp, k, 3 * g - 3 + l - 2 * k, i + l - 3 * k)
        dom += mult * len(src)
        cod += mult * len(dst)
        if not src or not dst:
            continue
        col = {m: j for j, m in enumerate(dst)}
        rows = []
        for m in src:
            image = normal_form(LaurentPoly.monomial(ABC, (m[0] + l, m[1], m[2])), gp, k)
            row = [0] * len(dst)
            for e, c in image.items():
                row[col[e]] = c
            rows.append(row)
        rk += mult * rank(rows)
    return LefschetzResult(g, l, i, dom, cod, rk)


def lefschetz_all(g: int) -> list:
    """Every (l, i) whose domain or codomain is nonzero."""
    top = 2 * (6 * g - 6)
    out = []
    for l in range(3 * g - 2):
        for i in range(l, top + 1):
            res = lefschetz_check(g, l, i)
            if res.domain_dim or res.codomain_dim:
                out.append(res)
    return out

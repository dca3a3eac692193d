"""Exact Laurent polynomials and rational functions with factored denominators.

Coefficients are Python ``int`` when integral and ``fractions.Fraction``
otherwise; every stored value is reduced and every zero coefficient is
dropped, so structural equality is mathematical equality.

Denominators of :class:`RationalFn` are kept as multisets of *atoms*.  An
atom is a cyclotomic polynomial evaluated at a primitive monomial,
``Phi_d(x^e)``, keyed by ``(d, e)``.  Every binomial ``c1*m1 + c2*m2`` with
``c1 = +-c2`` splits into atoms times a unit, and distinct atoms are pairwise
coprime, so taking the maximum multiplicity of each atom gives a true least
common denominator without any polynomial gcd.
"""

from __future__ import annotations

import heapq
import json
import operator
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Exps = tuple


class UsageError(ValueError):
    """Arguments violate the preconditions of an operation."""


class HalfIntegerResidue(ValueError):
    """A substitution left an odd exponent where an even one was required."""


def as_coeff(c) -> Coeff:
    """Normalise a scalar to ``int`` (when integral) or ``Fraction``."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        c = Fraction(c.strip())
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise UsageError("floating point coefficients are not exact")
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return as_coeff(Fraction(a) / b)


def format_coeff(c: Coeff) -> str:
    """``"num/den"`` with the denominator omitted when it is one."""
    c = as_coeff(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _padd(a: Exps, b: Exps) -> Exps:
    if len(a) == 1:
        return (a[0] + b[0],)
    if len(a) == 2:
        return (a[0] + b[0], a[1] + b[1])
    return tuple(map(operator.add, a, b))


def _psub(a: Exps, b: Exps) -> Exps:
    if len(a) == 1:
        return (a[0] - b[0],)
    if len(a) == 2:
        return (a[0] - b[0], a[1] - b[1])
    return tuple(map(operator.sub, a, b))


class LaurentPoly:
    """Sparse Laurent polynomial over Q in a fixed, ordered list of variables.

    Instances are immutable.  ``terms`` maps exponent tuples (entries may be
    negative) to nonzero coefficients.
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        variables = tuple(variables)
        if not variables:
            raise UsageError("a LaurentPoly needs at least one variable")
        if len(set(variables)) != len(variables):
            raise UsageError(f"repeated variable names {variables}")
        clean: dict = {}
        if terms:
            n = len(variables)
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != n:
                    raise UsageError(f"exponent {e} does not match variables {variables}")
                c = as_coeff(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: as_coeff(c) for e, c in clean.items() if c}
        self._vars = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls._raw(tuple(variables), {})

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "LaurentPoly":
        variables = tuple(variables)
        c = as_coeff(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.const(variables, 1)

    @classmethod
    def monomial(cls, variables: Sequence[str], exps, c=1) -> "LaurentPoly":
        variables = tuple(variables)
        if isinstance(exps, Mapping):
            unknown = set(exps) - set(variables)
            if unknown:
                raise UsageError(f"unknown variables {sorted(unknown)}")
            exps = tuple(exps.get(v, 0) for v in variables)
        return cls(variables, {tuple(exps): c})

    @classmethod
    def gen(cls, variables: Sequence[str], name: str) -> "LaurentPoly":
        return cls.monomial(variables, {name: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple:
        return tuple(cls.gen(variables, v) for v in variables)

    # -- basic protocol ------------------------------------------------------

    @property
    def vars(self) -> tuple:
        return self._vars

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> list:
        """Terms in canonical order (lexicographically ascending exponents)."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> Coeff:
        return self._terms.get((0,) * len(self._vars), 0)

    def coefficient(self, exps) -> Coeff:
        if isinstance(exps, Mapping):
            exps = tuple(exps.get(v, 0) for v in self._vars)
        return self._terms.get(tuple(exps), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._vars == other._vars and self._terms == other._terms
        if _is_scalar(other):
            return self._terms == LaurentPoly.const(self._vars, other)._terms
        if isinstance(other, RationalFn):
            return other == self
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._vars != self._vars:
                raise UsageError(f"variable mismatch: {self._vars} vs {other._vars}")
            return other
        if _is_scalar(other):
            return LaurentPoly.const(self._vars, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        other = self._coerce(other)
        res = dict(self._terms)
        for e, c in other._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = as_coeff(v)
            else:
                res.pop(e, None)
        return LaurentPoly._raw(self._vars, res)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        if _is_scalar(other):
            other = as_coeff(other)
            if not other:
                return LaurentPoly.zero(self._vars)
            return LaurentPoly._raw(
                self._vars, {e: as_coeff(c * other) for e, c in self._terms.items()}
            )
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw(
                self._vars, {_padd(e, eb): as_coeff(c * cb) for e, c in a.items()}
            )
        res: dict = {}
        get = res.get
        if len(self._vars) == 2:
            for (x0, x1), c in b.items():
                for (y0, y1), d in a.items():
                    k = (x0 + y0, x1 + y1)
                    res[k] = get(k, 0) + c * d
        else:
            for eb, c in b.items():
                for ea, d in a.items():
                    k = _padd(ea, eb)
                    res[k] = get(k, 0) + c * d
        return LaurentPoly._raw(self._vars, {e: as_coeff(c) for e, c in res.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of a LaurentPoly by zero")
            return LaurentPoly._raw(
                self._vars, {e: _div(c, other) for e, c in self._terms.items()}
            )
        if isinstance(other, LaurentPoly) and other.is_monomial():
            (e, c), = other._terms.items()
            return self * LaurentPoly._raw(self._vars, {tuple(-x for x in e): _div(1, c)})
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            raise UsageError("only integer powers are supported")
        if k < 0:
            if not self.is_monomial():
                raise UsageError("negative powers need a monomial; use RationalFn")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(
                self._vars, {tuple(k * x for x in e): as_coeff(Fraction(1, 1) / c ** (-k))}
            )
        if k == 0:
            if self.is_zero():
                raise UsageError("0**0 is undefined")
            return LaurentPoly.one(self._vars)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure -------------------------------------------------------------

    def degree_bounds(self, var: str | int) -> tuple:
        """(min, max) exponent of ``var`` over the support."""
        i = var if isinstance(var, int) else self._vars.index(var)
        if not self._terms:
            raise UsageError("degree of the zero polynomial")
        vals = [e[i] for e in self._terms]
        return min(vals), max(vals)

    def adams(self, k: int) -> "LaurentPoly":
        """Substitute ``x -> x^k`` in every variable."""
        if k < 1:
            raise UsageError("adams operation needs k >= 1")
        if k == 1:
            return self
        return LaurentPoly._raw(
            self._vars, {tuple(k * x for x in e): c for e, c in self._terms.items()}
        )

    def with_vars(self, variables: Sequence[str]) -> "LaurentPoly":
        """Rename variables positionally."""
        variables = tuple(variables)
        if len(variables) != len(self._vars):
            raise UsageError("renaming must keep the number of variables")
        return LaurentPoly._raw(variables, dict(self._terms))

    def embed(self, variables: Sequence[str]) -> "LaurentPoly":
        """View this polynomial inside a larger variable list."""
        variables = tuple(variables)
        idx = []
        for v in self._vars:
            if v not in variables:
                raise UsageError(f"{v} missing from {variables}")
            idx.append(variables.index(v))
        res = {}
        for e, c in self._terms.items():
            new = [0] * len(variables)
            for i, x in zip(idx, e):
                new[i] = x
            res[tuple(new)] = c
        return LaurentPoly._raw(variables, res)

    def substitute(self, images: Mapping, out_vars: Sequence[str] | None = None) -> "LaurentPoly":
        """Replace variables by monomials (or 0) over ``out_vars``.

        ``images`` maps a variable name to ``0`` or a single-term LaurentPoly in
        ``out_vars``.  Variables absent from ``images`` keep their name and must
        occur in ``out_vars``.
        """
        out_vars = tuple(out_vars) if out_vars is not None else self._vars
        maps = []
        for v in self._vars:
            img = images.get(v, None)
            if img is None:
                if v not in out_vars:
                    raise UsageError(f"no image for {v} and it is not an output variable")
                maps.append(("m", LaurentPoly.gen(out_vars, v)))
            elif _is_scalar(img) and img == 0:
                maps.append(("0", None))
            else:
                if not isinstance(img, LaurentPoly) or not img.is_monomial():
                    raise UsageError(f"image of {v} must be a monomial or 0")
                if img._vars != out_vars:
                    raise UsageError(f"image of {v} must live in {out_vars}")
                maps.append(("m", img))
        mono = [None if kind == "0" else next(iter(m._terms.items())) for kind, m in maps]
        n_out = len(out_vars)
        res: dict = {}
        for e, c in self._terms.items():
            new = [0] * n_out
            coeff = c
            dead = False
            for x, m in zip(e, mono):
                if m is None:
                    if x > 0:
                        dead = True
                        break
                    if x < 0:
                        raise ZeroDivisionError("substituting 0 into a negative power")
                    continue
                me, mc = m
                if x:
                    coeff = coeff * (mc ** x if x > 0 else Fraction(1) / mc ** (-x))
                    for j in range(n_out):
                        new[j] += x * me[j]
            if dead:
                continue
            key = tuple(new)
            res[key] = res.get(key, 0) + coeff
        return LaurentPoly(out_vars, res)

    def evaluate(self, point: Mapping):
        """Evaluate at exact numbers; ``point`` maps each variable to a value."""
        total = 0
        vals = [point[v] for v in self._vars]
        for e, c in self._terms.items():
            t = c
            for x, v in zip(e, vals):
                if x > 0:
                    t = t * v ** x
                elif x < 0:
                    t = t * Fraction(1) / v ** (-x)
            total = total + t
        return as_coeff(total) if _is_scalar(total) else total

    def halve(self, var: str, new_name: str | None = None) -> "LaurentPoly":
        """Map ``var^(2k) -> new^k``; odd exponents raise HalfIntegerResidue."""
        i = self._vars.index(var)
        res = {}
        for e, c in self._terms.items():
            if e[i] % 2:
                raise HalfIntegerResidue(f"odd power {e[i]} of {var} in {self}")
            ne = list(e)
            ne[i] //= 2
            res[tuple(ne)] = c
        names = list(self._vars)
        names[i] = new_name or var
        return LaurentPoly._raw(tuple(names), res)

    def double(self, var: str, new_name: str | None = None) -> "LaurentPoly":
        """Map ``var^k -> new^(2k)`` (e.g. q -> s^2)."""
        i = self._vars.index(var)
        res = {}
        for e, c in self._terms.items():
            ne = list(e)
            ne[i] *= 2
            res[tuple(ne)] = c
        names = list(self._vars)
        names[i] = new_name or var
        return LaurentPoly._raw(tuple(names), res)

    def lead(self) -> tuple:
        """Lexicographically largest (exponents, coefficient)."""
        e = max(self._terms)
        return e, self._terms[e]

    def trail(self) -> tuple:
        e = min(self._terms)
        return e, self._terms[e]

    # -- serialisation -------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [{"e": list(e), "c": format_coeff(c)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LaurentPoly":
        variables = obj["vars"]
        terms = {}
        for t in obj["terms"]:
            e = tuple(t["e"])
            if e in terms:
                raise UsageError(f"duplicate exponent {e}")
            terms[e] = as_coeff(str(t["c"]))
        return cls(variables, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self._vars, e) if x
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = format_coeff(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_coeff(a)}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self._vars)}, {self})"


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Return ``q`` with ``num == q * den`` exactly, or ``None`` if there is none."""
    if den.vars != num.vars:
        raise UsageError(f"variable mismatch: {num.vars} vs {den.vars}")
    if den.is_zero():
        raise UsageError("division by the zero polynomial")
    vs = num.vars
    if num.is_zero():
        return LaurentPoly.zero(vs)
    dterms = den._terms
    if len(dterms) == 1:
        (e, c), = dterms.items()
        inv = tuple(-x for x in e)
        return LaurentPoly._raw(vs, {_padd(k, inv): _div(v, c) for k, v in num._terms.items()})
    n = len(vs)
    # per-variable degree window that any exact quotient must live in
    lo = []
    hi = []
    for i in range(n):
        nl, nh = num.degree_bounds(i)
        dl, dh = den.degree_bounds(i)
        lo.append(nl - dl)
        hi.append(nh - dh)
        if lo[-1] > hi[-1]:
            return None
    dlead = max(dterms)
    dlc = dterms[dlead]
    rest = [(e, c) for e, c in dterms.items() if e != dlead]
    rem = dict(num._terms)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        key = tuple(-x for x in heapq.heappop(heap))
        c = rem.pop(key, 0)
        if not c:
            continue
        qe = _psub(key, dlead)
        for i in range(n):
            if not lo[i] <= qe[i] <= hi[i]:
                return None
        qc = _div(c, dlc)
        quot[qe] = qc
        for e, dc in rest:
            k = _padd(qe, e)
            if k in rem:
                v = rem[k] - qc * dc
                if v:
                    rem[k] = v
                else:
                    del rem[k]
            else:
                rem[k] = -qc * dc
                heapq.heappush(heap, tuple(-x for x in k))
    return LaurentPoly._raw(vs, {e: as_coeff(c) for e, c in quot.items()})


# ---------------------------------------------------------------------------
# cyclotomic atoms


@lru_cache(maxsize=None)
def cyclotomic_coeffs(d: int) -> tuple:
    """Integer coefficients of Phi_d(x), constant term first."""
    if d < 1:
        raise UsageError("cyclotomic index must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _udiv(poly, list(cyclotomic_coeffs(e)))
    return tuple(poly)


def _udiv(a: list, b: list) -> list:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = a[i + len(b) - 1] // b[-1]
        out[i] = q
        for j, bc in enumerate(b):
            a[i + j] -= q * bc
    assert not any(a), "cyclotomic division left a remainder"
    return out


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def _primes_of(k: int) -> list:
    out = []
    p = 2
    while p * p <= k:
        while k % p == 0:
            out.append(p)
            k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


@lru_cache(maxsize=None)
def cyclotomic_adams(d: int, k: int) -> tuple:
    """Indices ``d'`` (with repetition) such that Phi_d(x^k) = prod Phi_d'(x)."""
    idx = [d]
    for p in _primes_of(k):
        nxt = []
        for e in idx:
            nxt.append(e * p)
            if e % p:
                nxt.append(e)
        idx = nxt
    return tuple(sorted(idx))


def _primitive_direction(e: Exps) -> tuple:
    """Split ``e`` as ``G * e0`` with gcd(e0) = 1 and first nonzero entry of e0 > 0."""
    G = 0
    for x in e:
        G = gcd(G, x)
    e0 = tuple(x // G for x in e)
    first = next(x for x in e0 if x)
    if first < 0:
        return -G, tuple(-x for x in e0)
    return G, e0


@lru_cache(maxsize=None)
def atom_poly(variables: tuple, d: int, e0: tuple) -> LaurentPoly:
    """Phi_d(x^e0) as a LaurentPoly."""
    return LaurentPoly._raw(
        variables,
        {tuple(k * x for x in e0): c for k, c in enumerate(cyclotomic_coeffs(d)) if c},
    )


def split_binomial(p: LaurentPoly) -> tuple:
    """Factor ``p = unit * prod(atoms)``.

    ``p`` must be a monomial or a binomial ``c1*m1 + c2*m2`` with ``c1 = +-c2``.
    Returns ``(unit, Counter)`` where ``unit`` is a single-term LaurentPoly.
    """
    items = list(p._terms.items())
    if len(items) == 1:
        return p, Counter()
    if len(items) != 2:
        raise UsageError(f"not a binomial: {p}")
    (e1, c1), (e2, c2) = items
    r = Fraction(c1) / c2
    if r not in (1, -1):
        raise UsageError(f"binomial coefficients must agree up to sign: {p}")
    diff = _psub(e1, e2)
    G, e0 = _primitive_direction(diff)
    if G < 0:
        e1, c1, e2, c2 = e2, c2, e1, c1
        G = -G
    # p = c2 * x^e2 * (1 + r * X^G), X = x^e0
    unit_exps = e2
    atoms: Counter = Counter()
    if r == -1:
        unit_c = -c2
        for dd in divisors(G):
            atoms[(dd, e0)] += 1
    else:
        unit_c = c2
        for dd in divisors(2 * G):
            if G % dd:
                atoms[(dd, e0)] += 1
    unit = LaurentPoly._raw(p.vars, {unit_exps: as_coeff(unit_c)})
    return unit, atoms


def _atoms_product(variables: tuple, atoms: Mapping) -> LaurentPoly:
    result = LaurentPoly.one(variables)
    for (d, e0), m in sorted(atoms.items()):
        if m:
            result = result * atom_poly(variables, d, e0) ** m
    return result


def _atom_image(variables: tuple, d: int, e0: tuple, images: Mapping, out_vars: tuple):
    """Substitute into Phi_d(x^e0); return (unit scalar or LaurentPoly, Counter)."""
    X = LaurentPoly._raw(variables, {e0: 1}).substitute(images, out_vars)
    if X.is_zero():
        return LaurentPoly.const(out_vars, -1 if d == 1 else 1), Counter()
    if not X.is_monomial():
        raise UsageError("substitution image is not a monomial")
    (fe, fc), = X._terms.items()
    if not any(fe):
        val = sum(c * fc ** k for k, c in enumerate(cyclotomic_coeffs(d)))
        if not val:
            raise ZeroDivisionError("denominator vanishes under substitution")
        return LaurentPoly.const(out_vars, val), Counter()
    # Phi_d(u) = (u^d - 1) / prod_{e | d, e < d} Phi_e(u); track atoms only
    atoms = _cyclotomic_image_atoms(d, X)
    full = atom_poly(variables, d, e0).substitute(images, out_vars)
    unit = exact_divide(full, _atoms_product(out_vars, atoms))
    if unit is None or not unit.is_monomial():
        raise AssertionError("atom substitution did not factor into atoms")
    return unit, atoms


def _cyclotomic_image_atoms(d: int, X: LaurentPoly) -> Counter:
    total = split_binomial(X ** d - 1)[1]
    for e in divisors(d)[:-1]:
        total.subtract(_cyclotomic_image_atoms(e, X))
    return Counter({k: v for k, v in total.items() if v})


class RationalFn:
    """Quotient ``num / prod(atom^mult)`` with a factored denominator.

    Equality is decided by cross-multiplication, so the representation need
    not be in lowest terms; :meth:`cancel` removes atoms that divide the
    numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Mapping | None = None):
        self.num = num
        self.den = {k: m for k, m in (den or {}).items() if m}
        if any(m < 0 for m in self.den.values()):
            raise UsageError("negative multiplicity in a denominator")

    @property
    def vars(self) -> tuple:
        return self.num.vars

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p, {})

    @classmethod
    def from_factors(cls, num: LaurentPoly, dens: Iterable[LaurentPoly]) -> "RationalFn":
        """``num / prod(dens)`` where each element of ``dens`` is a binomial."""
        atoms: Counter = Counter()
        unit = LaurentPoly.one(num.vars)
        for f in dens:
            if f.vars != num.vars:
                raise UsageError(f"variable mismatch: {num.vars} vs {f.vars}")
            u, a = split_binomial(f)
            unit = unit * u
            atoms.update(a)
        return cls(num / unit, atoms)

    def denominator_poly(self) -> LaurentPoly:
        return _atoms_product(self.vars, self.den)

    def denominator_factors(self) -> list:
        """Expanded atoms with multiplicity, in canonical order."""
        return [(atom_poly(self.vars, d, e0), m) for (d, e0), m in sorted(self.den.items())]

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            if other.vars != self.vars:
                raise UsageError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise UsageError(f"variable mismatch: {self.vars} vs {other.vars}")
            return RationalFn(other)
        if _is_scalar(other):
            return RationalFn(LaurentPoly.const(self.vars, other))
        raise TypeError(f"cannot combine RationalFn with {type(other).__name__}")

    def __add__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        lcm = dict(self.den)
        for k, m in other.den.items():
            if m > lcm.get(k, 0):
                lcm[k] = m
        vs = self.vars
        a = self.num * _atoms_product(vs, {k: m - self.den.get(k, 0) for k, m in lcm.items()})
        b = other.num * _atoms_product(vs, {k: m - other.den.get(k, 0) for k, m in lcm.items()})
        return RationalFn(a + b, lcm)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        if _is_scalar(other):
            return RationalFn(self.num * other, self.den)
        other = self._coerce(other)
        den = Counter(self.den)
        den.update(other.den)
        return RationalFn(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        if _is_scalar(other):
            return RationalFn(self.num / other, self.den)
        other = self._coerce(other)
        return self * other.inverse()

    def inverse(self) -> "RationalFn":
        """Reciprocal; the numerator must be a product of binomials."""
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        unit, atoms = _factor_over_atoms(self.num)
        return RationalFn(_atoms_product(self.vars, self.den) / unit, atoms)

    def __pow__(self, k: int) -> "RationalFn":
        if not isinstance(k, int):
            raise UsageError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFn(LaurentPoly.one(self.vars))
        return RationalFn(self.num ** k, {a: m * k for a, m in self.den.items()})

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).num.is_zero()

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    # -- transformations ---------------------------------------------------------

    def adams(self, k: int) -> "RationalFn":
        if k < 1:
            raise UsageError("adams operation needs k >= 1")
        if k == 1:
            return self
        den: Counter = Counter()
        for (d, e0), m in self.den.items():
            for dd in cyclotomic_adams(d, k):
                den[(dd, e0)] += m
        return RationalFn(self.num.adams(k), den)

    def cancel(self) -> "RationalFn":
        """Divide out every atom that divides the numerator."""
        num = self.num
        den = dict(self.den)
        if num.is_zero():
            return RationalFn(num)
        for (d, e0), m in sorted(den.items()):
            a = atom_poly(self.vars, d, e0)
            while m:
                q = exact_divide(num, a)
                if q is None:
                    break
                num = q
                m -= 1
            den[(d, e0)] = m
        return RationalFn(num, den)

    def to_poly(self) -> LaurentPoly | None:
        """The Laurent polynomial this equals, or ``None`` if it is not one."""
        r = self.cancel()
        if r.den:
            return None
        return r.num

    def substitute(self, images: Mapping, out_vars: Sequence[str] | None = None) -> "RationalFn":
        out_vars = tuple(out_vars) if out_vars is not None else self.vars
        num = self.num.substitute(images, out_vars)
        den: Counter = Counter()
        unit = LaurentPoly.one(out_vars)
        for (d, e0), m in self.den.items():
            u, atoms = _atom_image(self.vars, d, e0, images, out_vars)
            unit = unit * u ** m
            for k, v in atoms.items():
                den[k] += v * m
        return RationalFn(num / unit, den)

    def evaluate(self, point: Mapping):
        d = self.denominator_poly().evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return as_coeff(Fraction(self.num.evaluate(point)) / d)

    def to_json_obj(self) -> dict:
        return {
            "num": self.num.to_json_obj(),
            "den": [{"factor": p.to_json_obj(), "mult": m} for p, m in self.denominator_factors()],
        }

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        facs = []
        for p, m in self.denominator_factors():
            facs.append(f"({p})" + (f"^{m}" if m > 1 else ""))
        return f"({self.num}) / ({'*'.join(facs)})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"


def _factor_over_atoms(p: LaurentPoly) -> tuple:
    """Write ``p`` as unit * atoms by trial division; used for inverses."""
    if p.is_monomial():
        return p, Counter()
    if len(p) == 2:
        try:
            return split_binomial(p)
        except UsageError:
            pass
    raise UsageError(f"cannot invert non-binomial product {p}")


def coerce_rational(x, variables: Sequence[str]) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFn(x)
    return RationalFn(LaurentPoly.const(variables, x))

import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from charvar.exact import LaurentPoly, RationalFn

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

Q = ("q",)
ZW = ("z", "w")

coeffs = st.one_of(
    st.integers(-6, 6),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
)


def polys(variables=Q, max_terms=4, lo=-3, hi=3, nonzero=False):
    exps = st.tuples(*[st.integers(lo, hi) for _ in variables])
    p = st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: LaurentPoly(variables, d))
    if nonzero:
        p = p.filter(lambda x: not x.is_zero())
    return p


def q_series(f, order):
    """Power series coefficients [c_0..c_order] in q of a RationalFn or LaurentPoly in q.

    Plain integer/fraction lists: an oracle independent of RationalFn arithmetic.
    """
    if isinstance(f, LaurentPoly):
        f = RationalFn(f)
    num = [Fraction(0)] * (order + 1)
    for (e,), c in f.num.items():
        if e < 0:
            raise ValueError("negative power in numerator")
        if e <= order:
            num[e] += c
    den = [Fraction(0)] * (order + 1)
    dpoly = f.denominator_poly()
    for (e,), c in dpoly.items():
        if e < 0:
            raise ValueError("negative power in denominator")
        if e <= order:
            den[e] += c
    if den[0] == 0:
        raise ValueError("denominator vanishes at q=0")
    out = []
    for k in range(order + 1):
        acc = num[k] - sum(den[i] * out[k - i] for i in range(1, k + 1))
        out.append(acc / den[0])
    return out


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out

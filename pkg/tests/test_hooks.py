import pytest

from charvar.exact import HalfIntegerResidue, LaurentPoly, RationalFn
from charvar.hooks import (
    Q,
    S,
    ZW,
    at_sqrt_q,
    at_zero_sqrt_q,
    hook_norm,
    hook_power,
    hook_pure,
    hook_tilde,
    hook_two,
    negate_zw,
    swap_zw,
)
from charvar.partitions import Partition, partitions_up_to

s = LaurentPoly.gen(S, "s")
q = LaurentPoly.gen(Q, "q")
oneS, oneQ = LaurentPoly.one(S), LaurentPoly.one(Q)
z, w = LaurentPoly.gens(ZW)
oneZW = LaurentPoly.one(ZW)

UP6 = [lam for lam in partitions_up_to(6) if lam.size]
UP8 = [lam for lam in partitions_up_to(8) if lam.size]


def test_single_box():
    assert hook_norm(Partition.of(1)) == s ** -1 * (oneS - s ** 2)
    assert hook_tilde(Partition.of(1)) == q - 1


def test_two_boxes():
    assert hook_norm(Partition.of(2)).halve("s", "q") == q ** -1 * (oneQ - q) * (oneQ - q ** 2)
    assert hook_norm(Partition.of(1, 1)).halve("s", "q") == q ** -2 * (oneQ - q) * (oneQ - q ** 2)


@pytest.mark.parametrize("lam", UP8, ids=str)
def test_hook_duality(lam):
    left = hook_norm(lam).substitute({"s": s ** -1})
    assert left == hook_norm(lam.conjugate) * (-1) ** lam.size


@pytest.mark.parametrize("lam", UP8, ids=str)
def test_parity_of_half_integer_powers(lam):
    if lam.size % 2 == 0:
        hook_norm(lam).halve("s", "q")
    else:
        with pytest.raises(HalfIntegerResidue):
            hook_norm(lam).halve("s", "q")
    (hook_norm(lam) ** 2).halve("s", "q")


def test_hook_two_single_box():
    for g in range(4):
        expect = RationalFn.from_factors((z - w) ** (2 * g), [z * z - oneZW, oneZW - w * w])
        assert hook_two(Partition.of(1), g) == expect


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("lam", UP6, ids=str)
def test_specialisation_to_hook_power(lam, g):
    got = at_sqrt_q(hook_two(lam, g))
    expect = hook_norm(lam) ** (2 * g - 2) if g >= 1 else None
    if expect is None:
        lhs = got * RationalFn(hook_norm(lam) ** 2)
        assert lhs == RationalFn(oneS)
    else:
        assert got == RationalFn(expect)


@pytest.mark.parametrize("lam", UP6, ids=str)
def test_zw_symmetries(lam):
    for g in (0, 1, 2):
        f = hook_two(lam, g)
        assert swap_zw(f) == hook_two(lam.conjugate, g)
        assert negate_zw(f) == f


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("lam", UP6, ids=str)
def test_pure_slice(lam, g):
    got = at_zero_sqrt_q(hook_two(lam, g))
    expect = hook_pure(lam, g)
    assert got == expect.substitute({"q": s ** 2}, S)


def test_pure_examples():
    lam = Partition.of(1, 1)
    assert hook_pure(lam, 1) == RationalFn.from_factors(oneQ, [oneQ - q ** -1, oneQ - q ** -2])
    assert hook_pure(Partition.of(1), 2) == RationalFn.from_factors(q, [oneQ - q ** -1])


@pytest.mark.parametrize("g", (0, 1, 2))
@pytest.mark.parametrize("lam", [lam for lam in partitions_up_to(4) if lam.size], ids=str)
def test_laurent_expansion_in_inverse_w(lam, g):
    # factor out w^{(2g-2)<lam,lam>}; what is left is a product of (1 - monomial)
    # factors whose monomials have positive z-degree or negative w-degree
    top = (2 * g - 2) * lam.pairing(lam)
    f = hook_two(lam, g) * RationalFn(w ** -top)
    num = oneZW
    dens = []
    for b in lam.boxes:
        a, l = b.arm, b.leg
        num = num * (oneZW - z ** (2 * a + 1) * w ** -(2 * l + 1)) ** (2 * g)
        dens += [oneZW - z ** (2 * a + 2) * w ** (-2 * l), oneZW - z ** (2 * a) * w ** (-2 * l - 2)]
    assert f == RationalFn.from_factors(num, dens)
    for b in lam.boxes:
        assert 2 * b.arm + 2 > 0 or 2 * b.leg > 0
    # leading coefficient: every factor is 1 at z = 0, w = infinity
    assert num.constant_term() == 1


def test_hook_power_g0_is_rational():
    f = hook_power(Partition.of(2), 0)
    assert isinstance(f, RationalFn)
    assert f * RationalFn((hook_norm(Partition.of(2)) ** 2).halve("s", "q")) == RationalFn(oneQ)

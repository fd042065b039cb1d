"""Coproduct, counit, antipode."""

import pytest

from mpqg.hopf import (
    antipode,
    antipode_inv,
    coproduct,
    coproduct_serre_check,
    counit,
    hopf_axioms_check,
    serre_coproduct_expected,
    tensor,
)


def test_coproduct_generators(a2):
    # Delta(E_i) = E_i (x) 1 + K_i (x) E_i
    for i in range(2):
        want = tensor(a2.e(i), a2.one()) + tensor(a2.k_pi(i), a2.e(i))
        assert coproduct(a2.e(i)) == want
    # Delta(F_i) = F_i (x) L_i + 1 (x) F_i
    for i in range(2):
        want = tensor(a2.f(i), a2.l_pi(i)) + tensor(a2.one(), a2.f(i))
        assert coproduct(a2.f(i)) == want
    kk = a2.k((1, 1))
    assert coproduct(kk) == tensor(kk, kk)


def test_coproduct_is_algebra_map(b2):
    x = b2.e(0) * b2.f(1) + b2.k((1, 0))
    y = b2.e(1) ** 2 - b2.l((0, 1))
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


def test_counit_is_algebra_map(b2):
    x = b2.e(0) * b2.f(0)
    y = b2.k((1, 1)) + b2.e(1)
    assert counit(x * y) == counit(x) * counit(y)
    assert counit(b2.one()) == b2.ring.one()
    assert counit(b2.e(0)).is_zero()


def test_antipode_antihomomorphism(a2):
    x = a2.e(0) + a2.k((1, 0))
    y = a2.f(1) * a2.e(1)
    assert antipode(x * y) == antipode(y) * antipode(x)
    assert antipode_inv(antipode(x * y)) == x * y
    assert antipode(antipode_inv(y)) == y


def test_antipode_on_generators(g2):
    for i in range(2):
        ki_inv = g2.k(tuple(-t for t in g2.frame[i]))
        assert antipode(g2.e(i)) == ki_inv * g2.e(i) * (-g2.ring.one())
        li_inv = g2.l(tuple(-t for t in g2.frame[i]))
        assert antipode(g2.f(i)) == g2.f(i) * li_inv * (-g2.ring.one())


def test_hopf_axioms_on_mixed_elements(a2):
    elems = [
        a2.one(),
        a2.e(0),
        a2.f(1),
        a2.k((1, -1)),
        a2.e(0) * a2.e(1),
        a2.f(0) * a2.e(1) + a2.l((1, 0)),
    ]
    for x in elems:
        assert hopf_axioms_check(x)


@pytest.mark.parametrize("r", [1, 2])
def test_serre_coproduct_closed_form(b2, r):
    assert coproduct_serre_check(b2, r, 0, 1)
    assert coproduct(b2.serre_e(r, 0, 1)) == serre_coproduct_expected(b2, r, 0, 1)


def test_serre_coproduct_g2_level_three(g2):
    assert coproduct_serre_check(g2, 3, 0, 1)

"""Both kernel backends must agree bit-for-bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpqg import _kernels_py as py

try:
    from mpqg import _kernels_cy as cy
except ImportError:
    cy = None

BITS = py.BITS

keys = st.builds(
    lambda a, b, c: a | (b << BITS) | (c << (2 * BITS)),
    st.integers(0, 30),
    st.integers(0, 30),
    st.integers(0, 5),
)
coefs = st.integers(-99, 99).filter(bool)
polys = st.dictionaries(keys, coefs, max_size=12)

needs_cy = pytest.mark.skipif(cy is None, reason="extension not built")


def test_zero_sums_drop():
    a = {0: 3, 1: 2}
    b = {0: -3, 2: 5}
    assert py.p_add(a, b) == {1: 2, 2: 5}
    assert py.p_sub(a, a) == {}


@given(polys, polys)
def test_py_add_commutes(a, b):
    assert py.p_add(a, b) == py.p_add(b, a)


@given(polys, polys, polys)
@settings(max_examples=50)
def test_py_mul_distributes(a, b, c):
    lhs = py.p_mul(a, py.p_add(b, c))
    rhs = py.p_add(py.p_mul(a, b), py.p_mul(a, c))
    assert lhs == rhs


@needs_cy
@given(polys, polys)
def test_backends_agree_add_sub_mul(a, b):
    assert py.p_add(a, b) == cy.p_add(a, b)
    assert py.p_sub(a, b) == cy.p_sub(a, b)
    assert py.p_mul(a, b) == cy.p_mul(a, b)
    assert py.p_neg(a) == cy.p_neg(a)
    assert py.p_scale(a, 7) == cy.p_scale(a, 7)


@needs_cy
@given(polys)
def test_backends_agree_sym_reduce(f):
    param_mask = (1 << (2 * BITS)) - 1
    shifts = (2 * BITS,)
    bases = ({0: -1, 1 << BITS: 1},)
    got_py = py.sym_reduce(f, param_mask, shifts, bases, {})
    got_cy = cy.sym_reduce(f, param_mask, shifts, bases, {})
    assert got_py == got_cy


@needs_cy
@given(polys, keys, coefs)
def test_backends_agree_mono_den(num, dk, dc):
    if not num:
        num = {0: 1}
    param_mask = (1 << (2 * BITS)) - 1
    got_py = py.mono_den_reduce(dict(num), {dk: dc}, 2, param_mask)
    got_cy = cy.mono_den_reduce(dict(num), {dk: dc}, 2, param_mask)
    assert got_py == got_cy


def test_sym_reduce_squares_fold():
    # one symbol above two params; its square is x - 1
    param_mask = (1 << (2 * BITS)) - 1
    shifts = (2 * BITS,)
    bases = ({0: -1, 1 << BITS: 1},)
    f = {2 << (2 * BITS): 1}  # theta^2
    assert py.sym_reduce(f, param_mask, shifts, bases, {}) == {0: -1, 1 << BITS: 1}
    f = {3 << (2 * BITS): 1}  # theta^3 -> theta * (x - 1)
    want = {1 << (2 * BITS): -1, (1 << (2 * BITS)) | (1 << BITS): 1}
    assert py.sym_reduce(f, param_mask, shifts, bases, {}) == want


def test_mono_den_sign_and_content():
    param_mask = (1 << (2 * BITS)) - 1
    num, den = py.mono_den_reduce({1: 4, 0: 2}, {0: -2}, 2, param_mask)
    # denominator forced positive, integer content cancelled
    (dk, dc), = den.items()
    assert dc > 0
    assert num == {1: -2, 0: -1}

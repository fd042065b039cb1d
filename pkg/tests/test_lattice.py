"""Cartan data, bicharacters, and the unit lattice."""

import pytest

from mpqg.lattice import (
    IntLattice,
    build_bicharacter,
    parse_cartan_type,
    reflect_frame,
    standard_frame,
)


def test_parse_types():
    g2 = parse_cartan_type("G2")
    assert g2.A == ((2, -3), (-1, 2))
    assert g2.d == (1, 3)
    b2 = parse_cartan_type("B2")
    assert b2.A == ((2, -2), (-1, 2))
    assert b2.d == (1, 2)
    a3 = parse_cartan_type("A3")
    assert a3.rank == 3
    assert a3.A[0][2] == 0


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_cartan_type("G3")
    with pytest.raises(ValueError):
        parse_cartan_type("Z2")
    with pytest.raises(ValueError):
        parse_cartan_type("A0")


def test_symmetrizer_property():
    for label in ("A2", "B2", "G2", "C3", "B3"):
        datum = parse_cartan_type(label)
        for i in range(datum.rank):
            for j in range(datum.rank):
                assert datum.d[i] * datum.A[i][j] == datum.d[j] * datum.A[j][i]


def test_bicharacter_squares():
    datum = parse_cartan_type("G2")
    ring, chi = build_bicharacter(datum)
    for i in range(2):
        for j in range(2):
            assert chi.qdot(i, j) ** 2 == chi.q(i, j)
    # defining constraints: qdot_ii = qd^(2 d_i), qdot_ij qdot_ji = qdot_ii^{a_ij}
    qd = ring.gen("qd")
    assert chi.qdot(0, 0) == qd ** 2
    assert chi.qdot(1, 1) == qd ** 6
    for i in range(2):
        for j in range(2):
            if i != j:
                assert chi.qdot(i, j) * chi.qdot(j, i) == chi.qdot(i, i) ** datum.A[i][j]


def test_chi_biadditive():
    datum = parse_cartan_type("B2")
    ring, chi = build_bicharacter(datum)
    a, b, c = (1, 0), (0, 1), (1, 1)
    assert chi.chi(a, c) == chi.chi(a, b) * chi.chi(a, (1, 0))
    assert chi.chi(c, a) == chi.chi(b, a) * chi.chi((1, 0), a)
    assert chi.chi((0, 0), c) == ring.one()


def test_theta_squares():
    datum = parse_cartan_type("G2")
    ring, chi = build_bicharacter(datum)
    for i in range(2):
        assert chi.theta(i) ** 2 == chi.q(i, i) - ring.one()


def test_opposite_involution():
    datum = parse_cartan_type("A2")
    ring, chi = build_bicharacter(datum)
    op = chi.op()
    assert op.op() is chi
    assert op.chi((1, 0), (0, 1)) == chi.chi((0, 1), (1, 0))


def test_frames():
    datum = parse_cartan_type("A2")
    f = standard_frame(2)
    assert f == ((1, 0), (0, 1))
    g = reflect_frame(datum, f, 0)
    # s_0: pi(0) -> -pi(0), pi(1) -> pi(1) + pi(0)
    assert g[0] == (-1, 0)
    assert g[1] == (1, 1)


def test_int_lattice_membership():
    lat = IntLattice([[2, 0], [0, 3]])
    assert lat.contains([4, -3])
    assert not lat.contains([1, 0])
    assert lat.contains([0, 0])
    lat2 = IntLattice([[1, 1], [1, -1]])
    assert lat2.contains([2, 0])
    assert not lat2.contains([1, 0])


def test_unit_exponents_span_qdot():
    datum = parse_cartan_type("A2")
    ring, chi = build_bicharacter(datum)
    lat = IntLattice(chi.unit_exponents())
    for i in range(2):
        for j in range(2):
            c = chi.qdot(i, j)
            (k,) = c.num
            assert lat.contains(list(ring.unpack(k)[: ring.nparams]))

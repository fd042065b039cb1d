"""Root systems, reduced words, partition counts — against brute force."""

from itertools import product

import pytest

from mpqg.lattice import parse_cartan_type
from mpqg.weyl import RootSystem, beta_sequence, kostant_dim

EXPECTED_POS = {
    "A2": {(1, 0), (0, 1), (1, 1)},
    "B2": {(1, 0), (0, 1), (1, 1), (2, 1)},
    "G2": {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)},
}


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_positive_roots(label):
    rs = RootSystem(parse_cartan_type(label))
    assert set(rs.positive_roots) == EXPECTED_POS[label]


def _bfs_longest_length(rs):
    # breadth-first over the whole group
    frontier = [rs.identity]
    seen = {rs.identity: 0}
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(rs.datum.rank):
                m2 = tuple(
                    tuple(
                        sum(rs.refl[i][r][k] * m[k][c] for k in range(rs.datum.rank))
                        for c in range(rs.datum.rank)
                    )
                    for r in range(rs.datum.rank)
                )
                if m2 not in seen:
                    seen[m2] = seen[m] + 1
                    nxt.append(m2)
        frontier = nxt
    return max(seen.values()), len(seen)


@pytest.mark.parametrize(
    "label,order", [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)]
)
def test_longest_element_against_bfs(label, order):
    rs = RootSystem(parse_cartan_type(label))
    maxlen, size = _bfs_longest_length(rs)
    assert size == order
    assert maxlen == rs.n_pos
    w = rs.lex_min_reduced_word()
    assert len(w) == maxlen
    assert rs.is_reduced(w)
    assert rs.from_word(w) == rs.longest_element()


def test_two_reduced_words_agree():
    for label in ("A2", "B2", "G2"):
        rs = RootSystem(parse_cartan_type(label))
        w1, w2 = rs.longest_words_pair()
        assert w1 != w2
        assert rs.from_word(w1) == rs.from_word(w2)
        assert rs.is_reduced(w2)


def test_beta_sequence_g2():
    datum = parse_cartan_type("G2")
    word = (0, 1, 0, 1, 0, 1)
    assert RootSystem(datum).is_reduced(word)
    betas = beta_sequence(datum, word)
    # each positive root appears exactly once
    assert sorted(betas) == sorted(EXPECTED_POS["G2"])
    assert betas[0] == (1, 0)
    assert betas[-1] == (0, 1)


def test_beta_sequence_is_permutation_of_positives():
    for label in ("A2", "B2", "A3"):
        datum = parse_cartan_type(label)
        rs = RootSystem(datum)
        betas = beta_sequence(datum, rs.lex_min_reduced_word())
        assert sorted(betas) == sorted(rs.positive_roots)


def _brute_partitions(roots, mu):
    # nested loops over root multiplicities, no recursion shared with the library
    bounds = []
    for r in roots:
        b = min(mu[k] // r[k] for k in range(len(mu)) if r[k])
        bounds.append(b)
    count = 0
    for combo in product(*(range(b + 1) for b in bounds)):
        vec = [0] * len(mu)
        for mult, r in zip(combo, roots):
            for k in range(len(mu)):
                vec[k] += mult * r[k]
        if tuple(vec) == tuple(mu):
            count += 1
    return count


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_kostant_dim_against_brute_force(label):
    datum = parse_cartan_type(label)
    roots = sorted(EXPECTED_POS[label])
    for a in range(5):
        for b in range(5):
            if a + b == 0:
                continue
            assert kostant_dim(datum, (a, b)) == _brute_partitions(roots, (a, b))


def test_kostant_known_values():
    g2 = parse_cartan_type("G2")
    assert kostant_dim(g2, (2, 1)) == 3
    assert kostant_dim(g2, (3, 2)) == 7
    assert kostant_dim(g2, (1, 0)) == 1
    a2 = parse_cartan_type("A2")
    assert kostant_dim(a2, (1, 1)) == 2

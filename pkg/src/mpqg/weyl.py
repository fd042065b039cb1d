"""Weyl groups of finite type: roots, lengths, reduced words, Kostant counts.

Elements are integer matrices acting on root coordinates (columns indexed by
simple roots).  Everything is brute-force exact; the groups in scope are
small enough that clarity wins.
"""

from functools import lru_cache

__all__ = [
    "RootSystem",
    "beta_sequence",
    "kostant_dim",
]


def _simple_reflection_matrix(datum, i):
    #  s_i(alpha_j) = alpha_j - a_ij alpha_i: identity except row i
    n = datum.rank
    return tuple(
        tuple((1 if r == c else 0) - (datum.A[i][c] if r == i else 0) for c in range(n))
        for r in range(n)
    )


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _mat_vec(m, v):
    n = len(m)
    return tuple(sum(m[r][k] * v[k] for k in range(n)) for r in range(n))


class RootSystem:
    """Positive roots, reflections, reduced words for one Cartan datum."""

    def __init__(self, datum):
        self.datum = datum
        n = datum.rank
        self.refl = tuple(_simple_reflection_matrix(datum, i) for i in range(n))
        self.identity = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            v = queue.pop()
            for i in range(n):
                w = _mat_vec(self.refl[i], v)
                if all(x >= 0 for x in w) and w not in seen:
                    seen.add(w)
                    queue.append(w)
        self.positive_roots = sorted(seen, key=lambda v: (sum(v), v))
        self.n_pos = len(self.positive_roots)

    def s(self, i):
        return self.refl[i]

    def act(self, mat, v):
        return _mat_vec(mat, v)

    def from_word(self, word):
        m = self.identity
        for i in word:
            m = _mat_mul(m, self.refl[i])
        return m

    def length(self, mat):
        return sum(1 for v in self.positive_roots if min(_mat_vec(mat, v)) < 0)

    def is_reduced(self, word):
        return self.length(self.from_word(word)) == len(word)

    def longest_element(self):
        m = self.identity
        n = self.datum.rank
        cur = 0
        while True:
            for i in range(n):
                m2 = _mat_mul(m, self.refl[i])
                l2 = self.length(m2)
                if l2 > cur:
                    m, cur = m2, l2
                    break
            else:
                return m

    def lex_min_reduced_word(self, mat=None):
        """Lexicographically smallest reduced word (left-descent greedy)."""
        if mat is None:
            mat = self.longest_element()
        word = []
        rest = mat
        n = self.datum.rank
        while rest != self.identity:
            for i in range(n):
                cand = _mat_mul(self.refl[i], rest)
                if self.length(cand) < self.length(rest):
                    word.append(i)
                    rest = cand
                    break
            else:
                raise RuntimeError("no descent found; element not in group?")
        return tuple(word)

    def longest_words_pair(self):
        """Two distinct reduced words for the longest element."""
        w = self.lex_min_reduced_word()
        rev = tuple(reversed(w))
        if rev != w and self.is_reduced(rev) and self.from_word(rev) == self.from_word(w):
            return w, rev
        # fall back: greedy with largest index first
        word = []
        rest = self.from_word(w)
        n = self.datum.rank
        while rest != self.identity:
            for i in reversed(range(n)):
                cand = _mat_mul(self.refl[i], rest)
                if self.length(cand) < self.length(rest):
                    word.append(i)
                    rest = cand
                    break
        alt = tuple(word)
        if alt == w:
            raise RuntimeError("could not find a second reduced word")
        return w, alt


def beta_sequence(datum, word):
    """beta_t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t}) for a reduced word."""
    rs = RootSystem(datum)
    n = datum.rank
    out = []
    m = rs.identity
    for i in word:
        alpha = tuple(1 if j == i else 0 for j in range(n))
        out.append(_mat_vec(m, alpha))
        m = _mat_mul(m, rs.refl[i])
    return tuple(out)


def kostant_dim(datum, mu):
    """Number of ways to write mu as an N-combination of positive roots."""
    roots = RootSystem(datum).positive_roots
    mu = tuple(mu)

    @lru_cache(maxsize=None)
    def count(vec, idx):
        if not any(vec):
            return 1
        if idx == len(roots):
            return 0
        r = roots[idx]
        total = 0
        cur = vec
        while True:
            total += count(cur, idx + 1)
            nxt = tuple(a - b for a, b in zip(cur, r))
            if min(nxt) < 0:
                break
            cur = nxt
        return total

    return count(mu, 0)

"""Cartan data, weight lattices, and the generic admissible bicharacter.

A ``CartanDatum`` is a finite-type Cartan matrix with its minimal
symmetrizer.  ``build_bicharacter`` constructs the universal coefficient
ring for it — one parameter ``qd`` (the square root of the main deformation
parameter), one free off-diagonal parameter per unordered pair of indices,
and one square-root symbol per distinct symmetrizer entry — together with a
``Bicharacter`` that evaluates chi and its square root on ambient weight
vectors as Laurent monomials.

Frames (tuples of ambient weight vectors attached to the generator indices)
live here too, as does integer-lattice membership used by the integrality
checker.
"""

import re

from .coeff import ParamRing

__all__ = [
    "CartanDatum",
    "parse_cartan_type",
    "build_bicharacter",
    "Bicharacter",
    "standard_frame",
    "reflect_frame",
    "IntLattice",
]

_TYPE_RE = re.compile(r"([A-G])\s*(\d+)\Z")


def _det_int(rows):
    """Bareiss fraction-free determinant of a small integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


class CartanDatum:
    """Finite-type Cartan matrix A with minimal symmetrizer d."""

    def __init__(self, A, d, label=None):
        A = tuple(tuple(int(x) for x in row) for row in A)
        d = tuple(int(x) for x in d)
        n = len(A)
        if any(len(row) != n for row in A) or len(d) != n:
            raise ValueError("shape mismatch between Cartan matrix and symmetrizer")
        for i in range(n):
            if A[i][i] != 2:
                raise ValueError(f"diagonal entry A[{i}][{i}] must be 2")
            if d[i] < 1:
                raise ValueError("symmetrizer entries must be positive")
            for j in range(n):
                if i != j:
                    if A[i][j] > 0:
                        raise ValueError("off-diagonal Cartan entries must be <= 0")
                    if (A[i][j] == 0) != (A[j][i] == 0):
                        raise ValueError("Cartan matrix zero pattern must be symmetric")
                    if d[i] * A[i][j] != d[j] * A[j][i]:
                        raise ValueError("d does not symmetrize A")
        B = [[d[i] * A[i][j] for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _det_int([row[:k] for row in B[:k]]) <= 0:
                raise ValueError("Cartan matrix is not of finite type")
        self.A = A
        self.d = d
        self.rank = n
        self.label = label

    def m(self, i, j):
        """Order of s_i s_j in the Weyl group."""
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.A[i][j] * self.A[j][i]]

    def N(self, i, j):
        """Height cap for the Serre elements between i and j."""
        if i == j:
            raise ValueError("N(i, j) needs i != j")
        return -self.A[i][j]

    def __eq__(self, other):
        return isinstance(other, CartanDatum) and self.A == other.A and self.d == other.d

    def __hash__(self):
        return hash((self.A, self.d))

    def __repr__(self):
        return f"CartanDatum({self.label or self.A})"


def parse_cartan_type(text):
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse Cartan type {text!r}")
    fam, n = m.group(1), int(m.group(2))
    lo = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}[fam]
    hi = {"A": 24, "B": 24, "C": 24, "D": 24, "E": 8, "F": 4, "G": 2}[fam]
    if not lo <= n <= hi:
        raise ValueError(f"no finite type {fam}{n}")
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    d = [1] * n

    def link(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B" and n >= 2:
            # short root first: a_12 = -2
            link(0, 1, -2, -1)
            d = [1] + [2] * (n - 1)
        if fam == "C" and n >= 2:
            # long root last: a_{n-1,n} = -2
            link(n - 2, n - 1, -2, -1)
            d = [1] * (n - 1) + [2]
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        #   1 - 3 - 4 - 5 - 6 (- 7 - 8) with 2 attached to 4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
        d = [1, 1, 2, 2]
    elif fam == "G":
        link(0, 1, -3, -1)
        d = [1, 3]
    return CartanDatum(A, d, label=f"{fam}{n}")


# ---------------------------------------------------------------------------
# frames


def standard_frame(n):
    return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))


def reflect_frame(datum, pi, i):
    """tau_i: pi(j) -> pi(j) - a_ij pi(i).  Involutive."""
    n = datum.rank
    base = pi[i]
    return tuple(
        tuple(pi[j][t] - datum.A[i][j] * base[t] for t in range(len(base))) for j in range(n)
    )


# ---------------------------------------------------------------------------
# bicharacter


class Bicharacter:
    """chi on the ambient weight lattice, with a coherent square root."""

    def __init__(self, ring, datum, sqrt_exps, opposite=False, _partner=None):
        self.ring = ring
        self.datum = datum
        self.sqrt_exps = sqrt_exps
        self.opposite = opposite
        self.tag = ("op" if opposite else "std", id(ring), datum.A, datum.d)
        self._op = _partner

    def op(self):
        if self._op is None:
            n = self.datum.rank
            t = tuple(tuple(self.sqrt_exps[j][i] for j in range(n)) for i in range(n))
            self._op = Bicharacter(self.ring, self.datum, t, not self.opposite, self)
        return self._op

    def _accum(self, lam, mu, scale):
        npar = self.ring.nparams
        acc = [0] * npar
        se = self.sqrt_exps
        for i, li in enumerate(lam):
            if not li:
                continue
            for j, mj in enumerate(mu):
                c = li * mj
                if not c:
                    continue
                v = se[i][j]
                c *= scale
                for t in range(npar):
                    if v[t]:
                        acc[t] += c * v[t]
        return acc

    def chi(self, lam, mu):
        return self.ring.laurent(1, self._accum(lam, mu, 2))

    def sqrt_chi(self, lam, mu):
        return self.ring.laurent(1, self._accum(lam, mu, 1))

    def q(self, i, j):
        n = self.datum.rank
        return self.ring.laurent(1, [2 * e for e in self.sqrt_exps[i][j]])

    def qdot(self, i, j):
        return self.ring.laurent(1, list(self.sqrt_exps[i][j]))

    def theta(self, i):
        """Square root of q_ii - 1."""
        return self.ring.gen(f"th{self.datum.d[i]}")

    def unit_exponents(self):
        """Exponent vectors (over params) of all qdot_ij: generators of the
        group of coefficient units the integral form is taken over."""
        n = self.datum.rank
        out = []
        for i in range(n):
            for j in range(n):
                out.append(list(self.sqrt_exps[i][j]))
        return out


def build_bicharacter(datum):
    """The generic admissible bicharacter for a Cartan datum.

    Returns (ring, chi).  Parameters: qd, then p{i}{j} for each pair i < j
    (1-based names).  Symbols: th{d} with th{d}^2 = qd^(4d) - 1 for each
    distinct symmetrizer entry d.
    """
    n = datum.rank
    params = ["qd"]
    pair_index = {}
    for i in range(n):
        for j in range(i + 1, n):
            pair_index[(i, j)] = len(params)
            params.append(f"p{i + 1}{j + 1}")
    npar = len(params)
    sym_defs = {}
    for dv in sorted(set(datum.d)):
        sym_defs[f"th{dv}"] = {(4 * dv): 1, 0: -1}
    ring = ParamRing(tuple(params), sym_defs)
    sqrt_exps = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = [0] * npar
            if i == j:
                v[0] = 2 * datum.d[i]
            elif i < j:
                v[pair_index[(i, j)]] = 1
            else:
                v[0] = 2 * datum.d[i] * datum.A[i][j]
                v[pair_index[(j, i)]] = -1
            sqrt_exps[i][j] = tuple(v)
    sqrt_exps = tuple(tuple(row) for row in sqrt_exps)
    return ring, Bicharacter(ring, datum, sqrt_exps)


# ---------------------------------------------------------------------------
# integer lattices


class IntLattice:
    """Membership in the subgroup of Z^m spanned by the given rows."""

    def __init__(self, rows):
        rows = [list(r) for r in rows if any(r)]
        self.m = len(rows[0]) if rows else 0
        pivots = []
        active = rows
        for c in range(self.m):
            live = [r for r in active if r[c]]
            rest = [r for r in active if not r[c]]
            while len(live) > 1:
                live.sort(key=lambda r: abs(r[c]))
                base, others = live[0], live[1:]
                live = [base]
                for r in others:
                    t = r[c] // base[c]
                    if t:
                        for s in range(c, self.m):
                            r[s] -= t * base[s]
                    if r[c]:
                        live.append(r)
                    elif any(r):
                        rest.append(r)
            if live:
                pivots.append((c, live[0]))
            active = rest
        self.pivots = pivots

    def contains(self, v):
        v = list(v)
        if len(v) != self.m:
            if not any(v):
                return True
            raise ValueError("dimension mismatch")
        for c, row in self.pivots:
            if v[c]:
                if v[c] % row[c]:
                    return False
                t = v[c] // row[c]
                for s in range(c, self.m):
                    v[s] -= t * row[s]
        return not any(v)

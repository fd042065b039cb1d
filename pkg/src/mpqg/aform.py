"""The integral form over A = Z[qdot_ij^{+-1}]: divided powers and bases.

Central object: a per-(algebra, longest word, side) PBW context that knows
the root vectors, derives the pairwise straightening rules

    E_s E_t  =  c * E_t E_s  +  (monomials in the letters strictly between)

empirically at low height (each rule is solved for once, with an exact
residual check), and then multiplies arbitrary PBW monomials in exponent
coordinates without ever straightening long words.  Divided powers put
bar vectors over q-factorials; A-integrality of a coefficient means: no
root symbols, monomial denominator, and every numerator exponent vector
in the unit lattice spanned by the qdot_ij.
"""

from .coeff import q_binomial, q_factorial
from .lattice import IntLattice
from .lusztig import root_vectors
from .pairing import _frame_vec
from .weyl import beta_sequence

__all__ = [
    "DividedMonomial",
    "U0Bracket",
    "a_unit_lattice",
    "is_a_integral",
    "pbw_context",
    "divided_element",
    "expand_divided_product",
    "a_integral_straightening_check",
    "simple_divided_product_check",
    "upsilon_mirror_check",
    "permuted_basis_check",
    "u0_bracket_eval",
    "bracket_difference_check",
    "bracket_product_check",
    "u0a_basis_check",
    "triangular_a_check",
    "g2_q_bases",
]


class DividedMonomial:
    """Ordered product of divided bar PBW vectors along a longest word.

    exps = (x_1, ..., x_l) stands for Ebar_{n;1}^{(x_1)} ... Ebar_{n;l}^{(x_l)}
    (side "plus") or the Fbar mirror (side "minus"), with
    Ebar^{(x)} := Ebar^x / (x)_{chi(beta, beta)}!.
    """

    __slots__ = ("word", "exps", "side")

    def __init__(self, word, exps, side="plus"):
        self.word = tuple(word)
        self.exps = tuple(exps)
        if len(self.exps) != len(self.word):
            raise ValueError("one exponent per word letter")
        if any(x < 0 for x in self.exps):
            raise ValueError("exponents must be nonnegative")
        if side not in ("plus", "minus"):
            raise ValueError(f"unknown side {side!r}")
        self.side = side

    def __eq__(self, other):
        return (
            isinstance(other, DividedMonomial)
            and self.word == other.word
            and self.exps == other.exps
            and self.side == other.side
        )

    def __hash__(self):
        return hash((self.word, self.exps, self.side))

    def __repr__(self):
        return f"DividedMonomial({self.word}, {self.exps}, {self.side!r})"


# ---------------------------------------------------------------------------
# membership in A

def a_unit_lattice(chi):
    lat = getattr(chi, "_a_unit_lattice", None)
    if lat is None:
        lat = IntLattice(chi.unit_exponents())
        chi._a_unit_lattice = lat
    return lat


def _key_exps(ring, key):
    return ring.unpack(key)[: ring.nparams]


def is_a_integral(c, chi):
    """c lies in the span of qdot_ij^{+-1} monomials with integer weights.

    Raises ValueError if a root symbol survives in the canonical fraction;
    the quantities certified here are arranged to be symbol-free.
    """
    ring = c.ring
    pm = ring.param_mask
    for part in (c.num, c.den):
        for k in part:
            if k & ~pm:
                raise ValueError("residual root symbol in coefficient")
    if not c.num:
        return True
    if len(c.den) != 1:
        return False
    (dk, dc), = c.den.items()
    if dc != 1:
        return False
    lat = a_unit_lattice(chi)
    dv = _key_exps(ring, dk)
    for k in c.num:
        kv = _key_exps(ring, k)
        if not lat.contains([a - b for a, b in zip(kv, dv)]):
            return False
    return True


# ---------------------------------------------------------------------------
# PBW exponent-coordinate arithmetic

def _scalar_ratio(x, y):
    """The c with x == y * c; raises if the two are not proportional."""
    m, cy = next(iter(y.terms.items()))
    c = x.terms[m] / cy
    if x != y * c:
        raise ValueError("elements are not proportional")
    return c


class PBWContext:
    """Root vectors of one longest word plus derived straightening rules."""

    def __init__(self, alg, word, side="plus"):
        self.alg = alg
        self.word = tuple(word)
        self.side = side
        vecs = root_vectors(alg, self.word)
        pick = (0, 2) if side == "plus" else (1, 3)
        self.letters = [v[pick[0]] for v in vecs]
        self.bars = [v[pick[1]] for v in vecs]
        self.betas = beta_sequence(alg.datum, self.word)
        self.bases = [
            alg.chi.chi(_frame_vec(alg, b), _frame_vec(alg, b)) for b in self.betas
        ]
        self.k = len(self.word)
        self.bar_scalars = [
            _scalar_ratio(b, p) for b, p in zip(self.bars, self.letters)
        ]
        self._rules = {}
        self._letter_memo = {}
        self._mono_memo = {}

    # -- word-level pieces, used only while deriving rules ------------------

    def monomial_element(self, exps):
        """Ascending product of plain root-vector powers, in normal form."""
        exps = tuple(exps)
        hit = self._mono_memo.get(exps)
        if hit is not None:
            return hit
        out = self.alg.one()
        for t, x in enumerate(exps):
            for _ in range(x):
                out = out * self.letters[t]
        self._mono_memo[exps] = out
        return out

    def _middle_candidates(self, s, t):
        """Exponent tuples supported strictly between t and s matching
        beta_s + beta_t in content."""
        target = tuple(a + b for a, b in zip(self.betas[s], self.betas[t]))
        idxs = list(range(t + 1, s))
        out = []

        def rec(pos, rest, acc):
            if pos == len(idxs):
                if not any(rest):
                    out.append(tuple(acc))
                return
            b = self.betas[idxs[pos]]
            lim = min(rest[j] // b[j] for j in range(len(rest)) if b[j])
            for x in range(lim + 1):
                nxt = [r - x * bj for r, bj in zip(rest, b)]
                if all(v >= 0 for v in nxt):
                    rec(pos + 1, nxt, acc + [x])

        rec(0, list(target), [])
        full = []
        for cand in out:
            e = [0] * self.k
            for pos, idx in enumerate(idxs):
                e[idx] = cand[pos]
            full.append(tuple(e))
        return full

    def rule(self, s, t):
        """(swap coefficient, middle-term dict) with
        E_s E_t == swap * E_t E_s + sum middle[exps] * monomial(exps)."""
        key = (s, t)
        hit = self._rules.get(key)
        if hit is not None:
            return hit
        if s <= t:
            raise ValueError("rule wants s > t")
        z = self.letters[s] * self.letters[t]
        w = self.letters[t] * self.letters[s]
        cands = self._middle_candidates(s, t)
        cols = [w] + [self.monomial_element(c) for c in cands]
        points = sorted({m for col in cols for m in col.terms} | set(z.terms))
        ring = self.alg.ring
        matrix = [[col.terms.get(p, ring.zero()) for col in cols] for p in points]
        rhs = [z.terms.get(p, ring.zero()) for p in points]
        sol = _solve(matrix, rhs)
        if sol is None:
            raise RuntimeError(f"straightening of pair ({s}, {t}) is not in span")
        swap = sol[0]
        middle = {c: v for c, v in zip(cands, sol[1:]) if not v.is_zero()}
        total = w * swap
        for c, v in middle.items():
            total = total + self.monomial_element(c) * v
        if total != z:
            raise RuntimeError(f"straightening residual for pair ({s}, {t})")
        out = (swap, middle)
        self._rules[key] = out
        return out

    # -- exponent-coordinate multiplication ---------------------------------

    def mul_letter(self, exps, t):
        """PBW coordinates of (ascending monomial exps) * letter_t."""
        key = (exps, t)
        hit = self._letter_memo.get(key)
        if hit is not None:
            return hit
        s = -1
        for u in range(self.k - 1, t, -1):
            if exps[u]:
                s = u
                break
        if s < 0:
            lifted = list(exps)
            lifted[t] += 1
            out = {tuple(lifted): self.alg.ring.one()}
            self._letter_memo[key] = out
            return out
        head = list(exps)
        head[s] -= 1
        head = tuple(head)
        swap, middle = self.rule(s, t)
        out = {}
        for e2, c2 in self.mul_letter(head, t).items():
            for e3, c3 in self.mul_letter(e2, s).items():
                _acc(out, e3, c2 * c3 * swap)
        for mexps, mc in middle.items():
            part = {head: mc}
            for u in range(self.k):
                for _ in range(mexps[u]):
                    part = self.mul_dict_letter(part, u)
            for e3, c3 in part.items():
                _acc(out, e3, c3)
        out = {e: c for e, c in out.items() if not c.is_zero()}
        self._letter_memo[key] = out
        return out

    def mul_dict_letter(self, d, t):
        out = {}
        for e, c in d.items():
            for e2, c2 in self.mul_letter(e, t).items():
                _acc(out, e2, c * c2)
        return {e: c for e, c in out.items() if not c.is_zero()}

    def mul(self, exps1, exps2):
        """Coordinates of (monomial exps1) * (monomial exps2)."""
        d = {tuple(exps1): self.alg.ring.one()}
        for t in range(self.k):
            for _ in range(exps2[t]):
                d = self.mul_dict_letter(d, t)
        return d

    # -- divided normalization ----------------------------------------------

    def divided_scalar(self, exps):
        """Bar divided monomial == (plain monomial) * this scalar."""
        c = self.alg.ring.one()
        for t, x in enumerate(exps):
            if x:
                c = c * self.bar_scalars[t] ** x / q_factorial(x, self.bases[t])
        return c

    def divided_mul(self, exps1, exps2):
        """Product of two divided monomials in the divided basis."""
        sin = self.divided_scalar(exps1) * self.divided_scalar(exps2)
        out = {}
        for y, c in self.mul(exps1, exps2).items():
            out[y] = c * sin / self.divided_scalar(y)
        return out

    def element(self, d):
        """Word-level element of a plain PBW coordinate dict (oracle route)."""
        out = self.alg.zero()
        for e, c in d.items():
            out = out + self.monomial_element(e) * c
        return out


def _acc(d, k, c):
    prev = d.get(k)
    d[k] = c if prev is None else prev + c


def _solve(matrix, rhs):
    from .linalg import solve

    return solve(matrix, rhs)


_CTX_CACHE = {}


def pbw_context(alg, word, side="plus"):
    key = (alg.chi.tag, alg.frame, tuple(word), side)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = PBWContext(alg, word, side)
        _CTX_CACHE[key] = ctx
    return ctx


def divided_element(alg, m):
    """The UElement of a DividedMonomial (word-level; small cases only)."""
    ctx = pbw_context(alg, m.word, m.side)
    return ctx.monomial_element(m.exps) * ctx.divided_scalar(m.exps)


def expand_divided_product(alg, m1, m2):
    """Re-expansion of m1 * m2 in the ordered divided-power basis."""
    if m1.word != m2.word or m1.side != m2.side:
        raise ValueError("factors live in different PBW contexts")
    ctx = pbw_context(alg, m1.word, m1.side)
    return {
        DividedMonomial(m1.word, y, m1.side): c
        for y, c in ctx.divided_mul(m1.exps, m2.exps).items()
    }


def a_integral_straightening_check(alg, word, side="plus", xmax=2):
    """Every out-of-order product of two divided powers expands A-integrally.

    Runs over all index pairs s > t and exponents 1 <= x, y <= xmax and
    checks every re-expansion coefficient with is_a_integral.
    """
    ctx = pbw_context(alg, word, side)
    chi = alg.chi
    for s in range(ctx.k):
        for t in range(s):
            for x in range(1, xmax + 1):
                for y in range(1, xmax + 1):
                    e1 = tuple(x if u == s else 0 for u in range(ctx.k))
                    e2 = tuple(y if u == t else 0 for u in range(ctx.k))
                    for c in ctx.divided_mul(e1, e2).values():
                        if not is_a_integral(c, chi):
                            return False
    return True


def simple_divided_positions(ctx):
    """Word positions carrying the simple roots."""
    rank = len(ctx.betas[0])
    out = []
    for i in range(rank):
        unit = tuple(1 if j == i else 0 for j in range(rank))
        out.append(ctx.betas.index(unit))
    return out


def simple_divided_product_check(alg, word, side="plus", xmax=3):
    """Products of two divided simple-generator powers expand A-integrally."""
    ctx = pbw_context(alg, word, side)
    chi = alg.chi
    pos = simple_divided_positions(ctx)
    for s in pos:
        for t in pos:
            for x in range(1, xmax + 1):
                for y in range(1, xmax + 1):
                    e1 = tuple(x if u == s else 0 for u in range(ctx.k))
                    e2 = tuple(y if u == t else 0 for u in range(ctx.k))
                    for c in ctx.divided_mul(e1, e2).values():
                        if not is_a_integral(c, chi):
                            return False
    return True


def upsilon_mirror_check(alg, word, s, t, x, y):
    """Minus-side straightening is the upsilon transfer of the plus side.

    Fbar_{n;u} = r_u * Upsilon(Ebar^op_{n;u}) for unit scalars r_u, so the
    coefficient of exps in Fbar_s^{(x)} Fbar_t^{(y)} must match the
    opposite-bicharacter Ebar coefficient times prod r_u^{x + y - exps_u}
    (exponent sums taken per letter).
    """
    from .lusztig import upsilon

    up = upsilon(alg)
    src = up.source
    mctx = pbw_context(alg, word, "minus")
    pctx = pbw_context(src, word, "plus")
    ratios = [
        _scalar_ratio(mctx.bars[u], up.apply(pctx.bars[u])) for u in range(mctx.k)
    ]
    e1 = tuple(x if u == s else 0 for u in range(mctx.k))
    e2 = tuple(y if u == t else 0 for u in range(mctx.k))
    left = mctx.divided_mul(e1, e2)
    right = pctx.divided_mul(e1, e2)
    if set(left) != set(right):
        return False
    for exps, c in left.items():
        scale = alg.ring.one()
        for u in range(mctx.k):
            scale = scale * ratios[u] ** (e1[u] + e2[u] - exps[u])
        if c != right[exps] * scale:
            return False
    return True


def _content_tuples(ctx, mu):
    out = []

    def rec(t, rest, acc):
        if t == ctx.k:
            if not any(rest):
                out.append(tuple(acc))
            return
        b = ctx.betas[t]
        lim = min(rest[j] // b[j] for j in range(len(rest)) if b[j])
        for v in range(lim + 1):
            nxt = [r - v * bj for r, bj in zip(rest, b)]
            if all(w >= 0 for w in nxt):
                rec(t + 1, nxt, acc + [v])

    rec(0, list(mu), [])
    return out


def permuted_basis_check(alg, word, maxht, side="plus", perm=None):
    """Reversed-order divided monomials over the identity-order basis.

    The change-of-basis matrix in each graded component must have
    A-integral entries and determinant an A-unit.
    """
    ctx = pbw_context(alg, word, side)
    chi = alg.chi
    if perm is None:
        perm = tuple(range(ctx.k - 1, -1, -1))
    rank = alg.datum.rank
    contents = [
        mu
        for mu in _weights_up_to(rank, maxht)
        if any(mu)
    ]
    from .linalg import det as _det

    for mu in contents:
        tuples = _content_tuples(ctx, mu)
        if not tuples:
            continue
        rows = []
        for exps in tuples:
            d = {(0,) * ctx.k: ctx.alg.ring.one()}
            scal = ctx.alg.ring.one()
            for u in perm:
                if exps[u]:
                    step = tuple(exps[u] if v == u else 0 for v in range(ctx.k))
                    d2 = {}
                    for e, c in d.items():
                        for e2, c2 in ctx.mul(e, step).items():
                            _acc(d2, e2, c * c2)
                    d = d2
                    scal = scal * ctx.divided_scalar(step)
            row = {}
            for e, c in d.items():
                row[e] = c * scal / ctx.divided_scalar(e)
            rows.append(row)
        mat = [
            [row.get(e, alg.ring.zero()) for e in tuples]
            for row in rows
        ]
        for row in mat:
            for c in row:
                if not is_a_integral(c, chi):
                    return False
        dv = _det(mat)
        if not (is_a_integral(dv, chi) and is_a_integral(dv.inverse(), chi)):
            return False
    return True


def _weights_up_to(rank, maxht):
    out = []

    def rec(i, rest, acc):
        if i == rank:
            out.append(tuple(acc))
            return
        for v in range(rest + 1):
            rec(i + 1, rest - v, acc + [v])

    rec(0, maxht, [])
    return [w for w in out if sum(w) <= maxht]


# ---------------------------------------------------------------------------
# the torus subalgebra over A

class U0Bracket:
    """Product form prod_{t=1}^p (x^{l-t+1} K_pi(i) - L_pi(i)) / (x^t - 1)."""

    __slots__ = ("i", "l", "p", "x")

    def __init__(self, i, l, p, x=None):
        if p < 0:
            raise ValueError("p must be nonnegative")
        self.i = i
        self.l = l
        self.p = p
        self.x = x


def u0_bracket_eval(alg, b):
    x = b.x if b.x is not None else alg.q(b.i, b.i)
    out = alg.one()
    kk = alg.k_pi(b.i)
    ll = alg.l_pi(b.i)
    one = alg.ring.one()
    for t in range(1, b.p + 1):
        out = out * (kk * x ** (b.l - t + 1) - ll) * (x ** t - one).inverse()
    return out


def bracket_difference_check(alg, i, l, p):
    """[l; p] - [l+1; p] == -x^{l-p+1} [l; p-1] K (p >= 1)."""
    x = alg.q(i, i)
    lhs = u0_bracket_eval(alg, U0Bracket(i, l, p)) - u0_bracket_eval(
        alg, U0Bracket(i, l + 1, p)
    )
    rhs = (
        u0_bracket_eval(alg, U0Bracket(i, l, p - 1))
        * alg.k_pi(i)
        * (-(x ** (l - p + 1)))
    )
    return lhs == rhs


def bracket_product_check(alg, i, l, p):
    """[0; l] [-l; p] == (p+l choose p)_x [0; p+l]."""
    x = alg.q(i, i)
    lhs = u0_bracket_eval(alg, U0Bracket(i, 0, l)) * u0_bracket_eval(
        alg, U0Bracket(i, -l, p)
    )
    rhs = u0_bracket_eval(alg, U0Bracket(i, 0, p + l)) * q_binomial(p, l, x)
    return lhs == rhs


def _u0_candidate(alg, data):
    """data: tuple of (x_i, y_i, z_i) per index."""
    out = alg.one()
    for i, (x, y, z) in enumerate(data):
        if x:
            out = out * alg.k_pi(i) ** x
        if y:
            sgn = 1 if y > 0 else -1
            kl = alg.k_pi(i, sgn) * alg.l_pi(i, sgn)
            out = out * kl ** abs(y)
        if z:
            out = out * u0_bracket_eval(alg, U0Bracket(i, 0, z))
    return out


def _torus_points(x):
    return {(m[1], m[2]): c for m, c in x.terms.items()}


def _sparse_independent(cols, ring):
    """Sparse Gaussian elimination; True iff the columns are independent."""
    pivots = {}
    for col in cols:
        col = dict(col)
        while col:
            p = max(col)
            piv = pivots.get(p)
            if piv is None:
                inv = col[p].inverse()
                pivots[p] = {k: v * inv for k, v in col.items()}
                break
            f = col.pop(p)
            for k, v in piv.items():
                if k == p:
                    continue
                nv = col.get(k, ring.zero()) - v * f
                if nv.is_zero():
                    col.pop(k, None)
                else:
                    col[k] = nv
        else:
            return False
    return True


def u0a_basis_check(alg, bound):
    """Torus-basis independence plus A-integral products.

    Candidates K^{x}(KL)^{y}[K, L, 0; z] per index with x in {0, 1},
    |y| <= bound, z <= bound: checked independent; products of two
    one-index candidates re-expand with A-integral coefficients.
    """
    rank = alg.datum.rank
    per = [
        (x, y, z)
        for x in (0, 1)
        for y in range(-bound, bound + 1)
        for z in range(bound + 1)
    ]
    datas = [()]
    for _ in range(rank):
        datas = [d + (p,) for d in datas for p in per]
    cols = [_torus_points(_u0_candidate(alg, d)) for d in datas]
    if not _sparse_independent(cols, alg.ring):
        return False
    chi = alg.chi
    for i in range(rank):
        triv = tuple((0, 0, 0) for _ in range(rank))
        for a, c1 in enumerate(per):
            for c2 in per[a:]:  # the torus is commutative
                prod = _u0_candidate(alg, _with(triv, i, c1)) * _u0_candidate(
                    alg, _with(triv, i, c2)
                )
                if not _u0_expand_integral(alg, i, prod, c1, c2, chi):
                    return False
    return True


def _with(data, i, val):
    out = list(data)
    out[i] = val
    return tuple(out)


def _u0_expand_integral(alg, i, prod, c1, c2, chi):
    # one extra bracket absorbs K^2 when both factors carry the K flag
    zmax = c1[2] + c2[2] + 1
    mid = c1[1] + c2[1]
    cands = [
        (x, y, z)
        for x in (0, 1)
        for y in range(mid - zmax, mid + 3)
        for z in range(zmax + 1)
    ]
    rank = alg.datum.rank
    triv = tuple((0, 0, 0) for _ in range(rank))
    cols = [_torus_points(_u0_candidate(alg, _with(triv, i, c))) for c in cands]
    target = _torus_points(prod)
    points = sorted(set(target) | {p for col in cols for p in col})
    ring = alg.ring
    matrix = [[col.get(p, ring.zero()) for col in cols] for p in points]
    rhs = [target.get(p, ring.zero()) for p in points]
    sol = _solve(matrix, rhs)
    if sol is None:
        return False
    return all(is_a_integral(c, chi) for c in sol)


# ---------------------------------------------------------------------------
# triangular decomposition over A

def hbar_witness_check(alg, i):
    """[K, L, 0; 1] == Ebar_i Fbar_i - Fbar_i Ebar_i, so the bracket
    generators of the torus A-form already live in the big A-form."""
    lhs = u0_bracket_eval(alg, U0Bracket(i, 0, 1))
    eb = alg.ebar(i)
    fb = alg.fbar(i)
    return lhs == eb * fb - fb * eb


def _divided_simple(alg, i, x, side):
    base = alg.q(i, i)
    if side == "plus":
        v = alg.ebar(i) ** x
    else:
        v = alg.fbar(i) ** x
    return v * q_factorial(x, base).inverse()


def _simple_tuples(rank, maxht):
    return [t for t in _weights_up_to(rank, maxht)]


def triangular_a_check(alg, bound):
    """Independence of F.torus.E triples and A-integral re-expansion.

    The triple family runs over divided simple-letter monomials with
    height <= min(bound, 2) on each flank and one-index torus candidates
    with |y|, z <= 1.  Products Ebar_i^{(x)} Fbar_j^{(y)} (x, y <= bound)
    are re-expanded in the triangular family with every coefficient
    A-integral: in normal form the flank words split the product into
    bigrade blocks, so each block is a torus-only solve.
    """
    rank = alg.datum.rank
    chi = alg.chi
    for i in range(rank):
        if not hbar_witness_check(alg, i):
            return False
    indep_ht = min(bound, 2)
    flanks = {}
    for exps in _simple_tuples(rank, indep_ht):
        ev = alg.one()
        fv = alg.one()
        for i, x in enumerate(exps):
            if x:
                ev = ev * _divided_simple(alg, i, x, "plus")
                fv = fv * _divided_simple(alg, i, x, "minus")
        flanks[exps] = (fv, ev)
    per = [(x, y, z) for x in (0, 1) for y in (-1, 0, 1) for z in (0, 1)]
    datas = [()]
    for _ in range(rank):
        datas = [d + (p,) for d in datas for p in per]
    torus = {d: _u0_candidate(alg, d) for d in datas}
    cols = []
    for fe in flanks:
        for ee in flanks:
            if sum(fe) + sum(ee) > indep_ht:
                continue
            fv = flanks[fe][0]
            ev = flanks[ee][1]
            for d in datas:
                el = fv * torus[d] * ev
                cols.append(dict(el.terms))
    if not _sparse_independent(cols, alg.ring):
        return False
    for i in range(rank):
        for j in range(rank):
            for x in range(1, bound + 1):
                for y in range(1, bound + 1):
                    prod = _divided_simple(alg, i, x, "plus") * _divided_simple(
                        alg, j, y, "minus"
                    )
                    if not _triangular_expand_integral(alg, prod, bound, chi):
                        return False
    return True


def _flank_scalar(alg, word, side):
    """Coefficient of a normal word as a product of divided simple letters."""
    counts = [0] * alg.datum.rank
    for i in word:
        counts[i] += 1
    v = alg.one()
    for i, x in enumerate(counts):
        if x:
            v = v * _divided_simple(alg, i, x, side)
    (c,) = v.terms.values()
    return c


def _triangular_expand_integral(alg, prod, bound, chi):
    """Each bigrade block of prod must be an A-integral torus combination
    sandwiched between divided flank monomials."""
    ring = alg.ring
    rank = alg.datum.rank
    groups = {}
    for (fw, kv, lv, ew), c in prod.terms.items():
        groups.setdefault((fw, ew), {})[(kv, lv)] = c
    for (fw, ew), target in groups.items():
        cf = _flank_scalar(alg, fw, "minus")
        ce = _flank_scalar(alg, ew, "plus")
        norm = (cf * ce).inverse()
        target = {p: c * norm for p, c in target.items()}
        ident = all(
            alg.frame[i][j] == (1 if i == j else 0)
            for i in range(rank)
            for j in range(rank)
        )
        if ident:
            support = sorted(
                {t for (kv, lv) in target for t in range(rank) if kv[t] or lv[t]}
            )
        else:
            support = list(range(rank))
        w = bound + 1
        per = [
            (x, y, z)
            for x in (0, 1)
            for y in range(-w, w + 1)
            for z in range(w + 1)
        ]
        datas = [()]
        for t in range(rank):
            if t in support:
                datas = [d + (p,) for d in datas for p in per]
            else:
                datas = [d + ((0, 0, 0),) for d in datas]
        cols = [_torus_points(_u0_candidate(alg, d)) for d in datas]
        points = sorted(set(target) | {p for col in cols for p in col})
        matrix = [[col.get(p, ring.zero()) for col in cols] for p in points]
        rhs = [target.get(p, ring.zero()) for p in points]
        sol = _solve(matrix, rhs)
        if sol is None:
            return False
        if not all(is_a_integral(c, chi) for c in sol):
            return False
    return True


# ---------------------------------------------------------------------------
# the two G2 rational bases

def g2_q_bases(alg, kind, a):
    """Q1(a) (divided-power normalized) or Q2(a) (hat vectors) as a UElement."""
    from .g2suite import handles

    if len(a) != 6 or any(x < 0 for x in a):
        raise ValueError("exponent vector must be six nonnegative integers")
    h = handles(alg)
    q = h["q"]
    f2 = q_factorial(2, q)
    f3 = q_factorial(3, q)
    if kind == "Q1":
        facs = [
            h["E_2"],
            h["E_12"],
            h["E_11212"] * f3.inverse(),
            h["E_112"] * f2.inverse(),
            h["E_1112"] * f3.inverse(),
            h["E_1"],
        ]
        bases = [q ** 3, q, q ** 3, q, q ** 3, q]
        out = alg.one()
        den = alg.ring.one()
        for t, x in enumerate(a):
            for _ in range(x):
                out = out * facs[t]
            den = den * q_factorial(x, bases[t])
        return out * den.inverse()
    if kind == "Q2":
        facs = [h[nm] for nm in ("Eh_2", "Eh_12", "Eh_11212", "Eh_112", "Eh_1112", "Eh_1")]
        out = alg.one()
        for t, x in enumerate(a):
            for _ in range(x):
                out = out * facs[t]
        return out
    raise ValueError(f"unknown kind {kind!r}")

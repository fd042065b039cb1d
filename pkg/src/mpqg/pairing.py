"""The bilinear pairing between the upper and lower halves.

Values on generators:  pair(K_a, L_b) = chi(a, b),  pair(E_i, F_j) = delta_ij,
extended by  pair(X K_a, Y L_b) = pair(X, Y) chi(a, b)  and the coproduct
recursion that peels the rightmost E letter against the left coproduct leg of
the F word.  The plus argument must live in the span of K E monomials, the
minus argument in the span of F L monomials; anything else raises
``PairingDomainError``.
"""

from .coeff import q_factorial
from .hopf import _cop_fword, antipode, antipode_inv, coproduct
from .linalg import det as _det
from .ualg import UElement

__all__ = [
    "PairingDomainError",
    "pair",
    "gram_matrix",
    "gram_det",
    "gram_nondegeneracy",
    "cross_commutation_check",
    "antipode_compat_check",
    "pbw_orthogonality_check",
    "g2_dual_basis_check",
]


class PairingDomainError(ValueError):
    """One of the arguments lives on the wrong side of the triangular split."""


def _pair_caches(alg):
    c = getattr(alg, "_pair_memo", None)
    if c is None:
        c = {}
        alg._pair_memo = c
    return c


def _theta_words(alg, e, f):
    """pair(E_e, F_f) on plain words."""
    ring = alg.ring
    if not e and not f:
        return ring.one()
    if len(e) != len(f):
        return ring.zero()
    memo = _pair_caches(alg)
    key = (e, f)
    hit = memo.get(key)
    if hit is not None:
        return hit
    i = e[-1]
    head = e[:-1]
    total = ring.zero()
    for (leg1, leg2), c in _cop_fword(alg, f).terms.items():
        g1 = leg1[0]
        if len(g1) == 1 and g1[0] == i:
            sub = _theta_words(alg, head, leg2[0])
            if not sub.is_zero():
                total = total + c * sub
    memo[key] = total
    return total


def _check_plus(x):
    for (f, k, l, e) in x.terms:
        if f or any(l):
            raise PairingDomainError(
                "plus argument must be spanned by K E monomials; "
                f"offending monomial has fword={f} lvec={l}"
            )


def _check_minus(y):
    for (f, k, l, e) in y.terms:
        if e or any(k):
            raise PairingDomainError(
                "minus argument must be spanned by F L monomials; "
                f"offending monomial has eword={e} kvec={k}"
            )


def pair(x, y):
    """The pairing on U>=0 x U<=0."""
    if x.algebra is not y.algebra:
        raise ValueError("pairing arguments from different algebras")
    alg = x.algebra
    _check_plus(x)
    _check_minus(y)
    chi = alg.chi.chi
    total = alg.ring.zero()
    for (_, k, _, e), c1 in x.terms.items():
        we = alg.wt(e)
        kzero = not any(k)
        for (f, _, l, _), c2 in y.terms.items():
            tv = _theta_words(alg, e, f)
            if tv.is_zero():
                continue
            c = c1 * c2 * tv
            if not kzero:
                c = c * chi(k, we) * chi(k, l)
            total = total + c
    return total


def gram_matrix(alg, mu):
    """pair(E_w, F_v) over the normal-word basis of the given content."""
    words = alg.normal_words_plus(mu)
    rows = []
    for w in words:
        row = []
        ew = alg.from_words((), alg._zero_vec, alg._zero_vec, w)
        for v in words:
            fv = alg.from_words(v, alg._zero_vec, alg._zero_vec, ())
            row.append(pair(ew, fv))
        rows.append(row)
    return words, rows


def gram_det(alg, mu):
    words, rows = gram_matrix(alg, mu)
    if not words:
        return alg.ring.one()
    return _det(rows)


def gram_nondegeneracy(alg, mu):
    """The weight-mu Gram matrix has nonzero determinant."""
    return not gram_det(alg, mu).is_zero()


def _bounded_tuples(k, bound):
    """All exponent tuples of length k with entry sum <= bound."""
    if k == 0:
        yield ()
        return
    for head in range(bound + 1):
        for rest in _bounded_tuples(k - 1, bound - head):
            yield (head,) + rest


def _frame_vec(alg, coords):
    v = [0] * len(alg.frame[0])
    for i, c in enumerate(coords):
        if c:
            for j, fj in enumerate(alg.frame[i]):
                v[j] += c * fj
    return tuple(v)


def pbw_orthogonality_check(alg, word, bound):
    """Descending PBW monomials pair diagonally.

    For exponent tuples x, y with entry sum <= bound,

        pair(E_k^{x_k} ... E_1^{x_1}, F_k^{y_k} ... F_1^{y_1})
            = prod_t delta(x_t, y_t) (x_t)_{chi(beta_t, beta_t)}!

    where E_t, F_t are the PBW vectors along the reduced longest word and
    beta_t its positive-root sequence.
    """
    from .lusztig import root_vectors
    from .weyl import beta_sequence

    vecs = root_vectors(alg, word)
    betas = beta_sequence(alg.datum, word)
    bases = [alg.chi.chi(_frame_vec(alg, b), _frame_vec(alg, b)) for b in betas]
    k = len(word)
    tuples = list(_bounded_tuples(k, bound))
    eprod = {}
    fprod = {}
    for xs in tuples:
        pe = alg.one()
        pf = alg.one()
        for t in range(k - 1, -1, -1):
            for _ in range(xs[t]):
                pe = pe * vecs[t][0]
                pf = pf * vecs[t][1]
        eprod[xs] = pe
        fprod[xs] = pf
    one = alg.ring.one()
    zero = alg.ring.zero()
    for xs in tuples:
        diag = one
        for t in range(k):
            diag = diag * q_factorial(xs[t], bases[t])
        for ys in tuples:
            want = diag if xs == ys else zero
            if pair(eprod[xs], fprod[ys]) != want:
                return False
    return True


def g2_dual_basis_check(alg, bound):
    """Dual bases on the triple-bond rank-2 type.

    Q1 runs over rescaled divided-power monomials in the plain composite
    root vectors; Q2 over plain monomials in the hat vectors of the
    opposite-bicharacter algebra, transferred through upsilon.  The pairing
    of the two families is the identity matrix.
    """
    from .aform import g2_q_bases
    from .lusztig import upsilon

    up = upsilon(alg)
    one = alg.ring.one()
    tuples = list(_bounded_tuples(6, bound))
    q1 = {}
    q2 = {}
    for xs in tuples:
        q1[xs] = g2_q_bases(alg, "Q1", xs)
        q2[xs] = up.apply(g2_q_bases(up.source, "Q2", xs))
    zero = alg.ring.zero()
    for xs in tuples:
        for ys in tuples:
            want = one if xs == ys else zero
            if pair(q1[xs], q2[ys]) != want:
                return False
    return True


def cross_commutation_check(x, y):
    """sum pair(x1, y1) y2 x2  ==  sum x1 y1 pair(x2, y2)."""
    alg = x.algebra
    cx = coproduct(x)
    cy = coproduct(y)
    one = alg.ring.one()
    lhs = alg.zero()
    rhs = alg.zero()
    for (x1, x2), cxv in cx.terms.items():
        ex1 = UElement(alg, {x1: one})
        ex2 = UElement(alg, {x2: one})
        for (y1, y2), cyv in cy.terms.items():
            c = cxv * cyv
            ey1 = UElement(alg, {y1: one})
            ey2 = UElement(alg, {y2: one})
            p1 = pair(ex1, ey1)
            if not p1.is_zero():
                lhs = lhs + ey2 * ex2 * (c * p1)
            p2 = pair(ex2, ey2)
            if not p2.is_zero():
                rhs = rhs + ex1 * ey1 * (c * p2)
    return lhs == rhs


def antipode_compat_check(x, y):
    """pair(S(x), y) == pair(x, S^-1(y))."""
    return pair(antipode(x), y) == pair(x, antipode_inv(y))

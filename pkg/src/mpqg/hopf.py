"""Coproduct, counit, antipode.

The coproduct lands in the slot-wise tensor square (no braiding): both legs
multiply independently in U(chi, pi).  Values on generators:

    cop(E_i) = E_i (x) 1  +  K_pi(i) (x) E_i
    cop(F_i) = F_i (x) L_pi(i)  +  1 (x) F_i
    cop(K_a) = K_a (x) K_a,   cop(L_a) = L_a (x) L_a

and the antipode is the algebra antihomomorphism with

    S(K_a) = K_-a,  S(E_i) = -K_-pi(i) E_i,  S(F_i) = -F_i L_-pi(i).

Everything is computed monomial-by-monomial with per-word caches hanging off
the algebra object.
"""

from .coeff import q_factorial, q_number, shifted_factorial
from .ualg import UElement

__all__ = [
    "TensorElem",
    "Tensor3",
    "coproduct",
    "counit",
    "antipode",
    "antipode_inv",
    "tensor",
    "cop_left",
    "cop_right",
    "serre_coproduct_expected",
    "coassociativity_check",
    "counit_check",
    "antipode_check",
    "hopf_axioms_check",
    "coproduct_serre_check",
]


class TensorElem:
    """Element of U (x) U with exact coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return TensorElem(self.algebra, out)

    def __neg__(self):
        return TensorElem(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TensorElem(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        alg = self.algebra
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                c = c1 * c2
                left = {}
                alg.mul_mono(a1, alg.ring.one(), a2, c, left)
                right = {}
                alg.mul_mono(b1, alg.ring.one(), b2, alg.ring.one(), right)
                for ma, ca in left.items():
                    for mb, cb in right.items():
                        key = (ma, mb)
                        prev = out.get(key)
                        s = ca * cb if prev is None else prev + ca * cb
                        out[key] = s
        return TensorElem(alg, out)

    def apply(self, fn_left, fn_right):
        """Map slots through UElement-valued functions and recombine."""
        alg = self.algebra
        acc = alg.zero()
        for (a, b), c in self.terms.items():
            xa = fn_left(UElement(alg, {a: alg.ring.one()}))
            xb = fn_right(UElement(alg, {b: alg.ring.one()}))
            acc = acc + xa * xb * c
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            bits.append(f"({c}) [{_mstr(a)} (x) {_mstr(b)}]")
        return " + ".join(bits)

    __repr__ = __str__


def _mstr(m):
    from .ualg import _mono_str

    return _mono_str(m)


class Tensor3:
    """Element of U (x) U (x) U; only construction and comparison."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def __eq__(self, other):
        return (
            isinstance(other, Tensor3)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def is_zero(self):
        return not self.terms


def tensor(x, y):
    """UElement (x) UElement -> TensorElem."""
    alg = x.algebra
    out = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            out[(m1, m2)] = c1 * c2
    return TensorElem(alg, out)


def _caches(alg):
    c = getattr(alg, "_hopf_caches", None)
    if c is None:
        c = {"cop_e": {}, "cop_f": {}, "s_e": {}, "s_f": {}, "si_e": {}, "si_f": {}}
        alg._hopf_caches = c
    return c


def _cop_eword(alg, w):
    cache = _caches(alg)["cop_e"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    one = alg.ring.one()
    z = (0,) * alg.rank
    if not w:
        t = TensorElem(alg, {(((), z, z, ()), ((), z, z, ())): one})
    else:
        i = w[-1]
        head = _cop_eword(alg, w[:-1])
        pi = alg.frame[i]
        step = TensorElem(
            alg,
            {
                (((), z, z, (i,)), ((), z, z, ())): one,
                (((), pi, z, ()), ((), z, z, (i,))): one,
            },
        )
        t = head * step
    cache[w] = t
    return t


def _cop_fword(alg, w):
    cache = _caches(alg)["cop_f"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    one = alg.ring.one()
    z = (0,) * alg.rank
    if not w:
        t = TensorElem(alg, {(((), z, z, ()), ((), z, z, ())): one})
    else:
        i = w[-1]
        head = _cop_fword(alg, w[:-1])
        pi = alg.frame[i]
        step = TensorElem(
            alg,
            {
                (((i,), z, z, ()), ((), z, pi, ())): one,
                (((), z, z, ()), ((i,), z, z, ())): one,
            },
        )
        t = head * step
    cache[w] = t
    return t


def coproduct(x):
    alg = x.algebra
    out = {}
    z = (0,) * alg.rank
    one = alg.ring.one()
    for (f, k, l, e), c in x.terms.items():
        t = _cop_fword(alg, f)
        if any(k) or any(l):
            torus = TensorElem(alg, {(((), k, l, ()), ((), k, l, ())): one})
            t = t * torus
        t = t * _cop_eword(alg, e)
        for m, cm in t.terms.items():
            prev = out.get(m)
            s = c * cm if prev is None else prev + c * cm
            out[m] = s
    return TensorElem(alg, out)


def counit(x):
    alg = x.algebra
    acc = alg.ring.zero()
    for (f, k, l, e), c in x.terms.items():
        if not f and not e:
            acc = acc + c
    return acc


def _s_eword(alg, w):
    cache = _caches(alg)["s_e"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    if not w:
        out = alg.one()
    else:
        i = w[-1]
        mpi = tuple(-t for t in alg.frame[i])
        head = _s_eword(alg, w[:-1])
        out = (-(alg.k(mpi) * alg.e(i))) * head
    cache[w] = out
    return out


def _s_fword(alg, w):
    cache = _caches(alg)["s_f"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    if not w:
        out = alg.one()
    else:
        i = w[-1]
        mpi = tuple(-t for t in alg.frame[i])
        head = _s_fword(alg, w[:-1])
        out = (-(alg.f(i) * alg.l(mpi))) * head
    cache[w] = out
    return out


def antipode(x):
    alg = x.algebra
    acc = alg.zero()
    for (f, k, l, e), c in x.terms.items():
        piece = _s_eword(alg, e)
        if any(k) or any(l):
            piece = piece * alg.k(tuple(-t for t in k)) * alg.l(tuple(-t for t in l))
        piece = piece * _s_fword(alg, f)
        acc = acc + piece * c
    return acc


def _si_eword(alg, w):
    cache = _caches(alg)["si_e"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    if not w:
        out = alg.one()
    else:
        i = w[-1]
        mpi = tuple(-t for t in alg.frame[i])
        head = _si_eword(alg, w[:-1])
        out = (-(alg.e(i) * alg.k(mpi))) * head
    cache[w] = out
    return out


def _si_fword(alg, w):
    cache = _caches(alg)["si_f"]
    hit = cache.get(w)
    if hit is not None:
        return hit
    if not w:
        out = alg.one()
    else:
        i = w[-1]
        mpi = tuple(-t for t in alg.frame[i])
        head = _si_fword(alg, w[:-1])
        out = (-(alg.l(mpi) * alg.f(i))) * head
    cache[w] = out
    return out


def antipode_inv(x):
    alg = x.algebra
    acc = alg.zero()
    for (f, k, l, e), c in x.terms.items():
        piece = _si_eword(alg, e)
        if any(k) or any(l):
            piece = piece * alg.k(tuple(-t for t in k)) * alg.l(tuple(-t for t in l))
        piece = piece * _si_fword(alg, f)
        acc = acc + piece * c
    return acc


def cop_left(t):
    """Apply the coproduct to the left slot: U(x)U -> U(x)U(x)U."""
    alg = t.algebra
    out = {}
    for (a, b), c in t.terms.items():
        inner = coproduct(UElement(alg, {a: alg.ring.one()}))
        for (a1, a2), ci in inner.terms.items():
            key = (a1, a2, b)
            prev = out.get(key)
            s = c * ci if prev is None else prev + c * ci
            out[key] = s
    return Tensor3(alg, out)


def cop_right(t):
    """Apply the coproduct to the right slot."""
    alg = t.algebra
    out = {}
    for (a, b), c in t.terms.items():
        inner = coproduct(UElement(alg, {b: alg.ring.one()}))
        for (b1, b2), ci in inner.terms.items():
            key = (a, b1, b2)
            prev = out.get(key)
            s = c * ci if prev is None else prev + c * ci
            out[key] = s
    return Tensor3(alg, out)


def serre_coproduct_expected(alg, r, i, j):
    """Closed form of cop(E_{r; i, j})."""
    qii = alg.q(i, i)
    qq = alg.q(i, j) * alg.q(j, i)
    pi = alg.frame[i]
    pj = alg.frame[j]
    total = tensor(alg.serre_e(r, i, j), alg.one())
    fr = q_factorial(r, qii)
    for k in range(r + 1):
        num = fr * shifted_factorial(k, qii, qii ** (r - k) * qq)
        den = q_factorial(k, qii) * q_factorial(r - k, qii)
        coefficient = num / den
        kvec = tuple((r - k) * a + b for a, b in zip(pi, pj))
        left = alg.e(i) ** k * alg.k(kvec)
        right = alg.serre_e(r - k, i, j)
        total = total + tensor(left, right).scale(coefficient)
    return total


# ---------------------------------------------------------------------------
# axiom checks

def _ident(u):
    return u


def coassociativity_check(x):
    """(cop (x) id) cop == (id (x) cop) cop on x."""
    t = coproduct(x)
    return cop_left(t) == cop_right(t)


def counit_check(x):
    """Both counit contractions of cop(x) give back x."""
    alg = x.algebra

    def emb(u):
        return alg.one() * counit(u)

    t = coproduct(x)
    return t.apply(emb, _ident) == x and t.apply(_ident, emb) == x


def antipode_check(x):
    """mul (S (x) id) cop == counit . unit == mul (id (x) S) cop on x."""
    alg = x.algebra
    t = coproduct(x)
    want = alg.one() * counit(x)
    return t.apply(antipode, _ident) == want and t.apply(_ident, antipode) == want


def hopf_axioms_check(x):
    return coassociativity_check(x) and counit_check(x) and antipode_check(x)


def coproduct_serre_check(alg, r, i, j):
    return coproduct(alg.serre_e(r, i, j)) == serre_coproduct_expected(alg, r, i, j)

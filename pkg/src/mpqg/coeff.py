"""Exact scalars: fractions over Z[params] extended by square-root symbols.

A ring is a fixed tuple of invertible-by-fraction parameters plus optional
symbols ``s`` carrying a defining square ``s^2 = poly(params)``.  Every
coefficient is kept in a canonical form:

* numerator: integer polynomial in params and symbols, each symbol exponent
  reduced below 2 via its defining square,
* denominator: symbol-free integer polynomial, positive leading coefficient
  (packed-key order), and no common polynomial factor with any symbol
  component of the numerator.

Canonical form makes equality structural, which everything downstream
(normal forms, linear solving, acceptance checks) relies on.
"""

import re

from .kernels import BITS, MASK, mono_den_reduce, p_add, p_mul, p_neg
from .kernels import sym_reduce as k_sym_reduce
from .poly import p_divexact, p_gcd, unpack

__all__ = [
    "ParamRing",
    "Coeff",
    "q_number",
    "q_factorial",
    "q_binomial",
    "shifted_factor",
    "shifted_factorial",
]

_ONE = {0: 1}

_NAME_RE = re.compile(r"[A-Za-z_]\w*\Z")


class ParamRing:
    """Interned coefficient ring; equal signatures yield the same object."""

    _cache = {}

    def __new__(cls, params, sym_defs=None):
        params = tuple(params)
        sym_defs = dict(sym_defs or {})
        key = (params, tuple(sorted((s, tuple(sorted(d.items()))) for s, d in sym_defs.items())))
        hit = cls._cache.get(key)
        if hit is not None:
            return hit
        self = object.__new__(cls)
        self._init(params, sym_defs)
        cls._cache[key] = self
        return self

    def _init(self, params, sym_defs):
        syms = tuple(sorted(sym_defs))
        names = params + syms
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError(f"bad variable name {n!r}")
        self.params = params
        self.syms = syms
        self.names = names
        self.nparams = len(params)
        self.nvars = len(names)
        self.param_mask = (1 << (self.nparams * BITS)) - 1
        self._index = {n: i for i, n in enumerate(names)}
        for s, d in sym_defs.items():
            for k in d:
                if k & ~self.param_mask:
                    raise ValueError(f"defining square of {s} must only involve params")
        self.sym_defs = sym_defs
        self._sym_shifts = tuple((self.nparams + s) * BITS for s in range(len(syms)))
        self._sym_bases = tuple(sym_defs[s] for s in syms)
        self._defpow_k = {}
        self._zero = Coeff(self, {}, dict(_ONE))
        self._one = Coeff(self, dict(_ONE), dict(_ONE))

    # -- constructors --------------------------------------------------

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_int(self, n):
        if n == 0:
            return self._zero
        return Coeff(self, {0: int(n)}, dict(_ONE))

    def gen(self, name):
        i = self._index.get(name)
        if i is None:
            raise KeyError(f"{name!r} is not a variable of this ring")
        return Coeff(self, {1 << (i * BITS): 1}, dict(_ONE))

    def unpack(self, key):
        return unpack(key, self.nvars)

    def index(self, name):
        return self._index[name]

    def laurent(self, c, exps):
        """c * prod names[i]^exps[i]; negative exponents go to the denominator."""
        if c == 0:
            return self._zero
        nk = dk = 0
        for i, e in enumerate(exps):
            if e > 0:
                nk |= e << (i * BITS)
            elif e < 0:
                if i >= self.nparams:
                    raise ValueError("negative symbol exponent in laurent()")
                dk |= (-e) << (i * BITS)
        num, den = self.normalize(self.sym_reduce({nk: int(c)}), {dk: 1})
        return Coeff(self, num, den)

    # -- symbol reduction ----------------------------------------------

    def sym_reduce(self, f):
        if not self.syms or not f:
            return f
        return k_sym_reduce(f, self.param_mask, self._sym_shifts, self._sym_bases, self._defpow_k)

    # -- canonicalization ----------------------------------------------

    def _sym_split(self, num):
        comps = {}
        pm = self.param_mask
        for k, c in num.items():
            comps.setdefault(k & ~pm, {})[k & pm] = c
        return comps

    def normalize(self, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return {}, dict(_ONE)
        if den == _ONE:
            return num, den
        if len(den) == 1:
            return self._normalize_mono_den(num, den)
        comps = self._sym_split(num)
        g = den
        for comp in comps.values():
            g = p_gcd(g, comp, self.nparams)
            if g == _ONE:
                break
        if g != _ONE:
            den = p_divexact(den, g, self.nparams)
            num = {}
            for sk, comp in comps.items():
                q = p_divexact(comp, g, self.nparams)
                for k, c in q.items():
                    num[k + sk] = c
        if den[max(den)] < 0:
            den = p_neg(den)
            num = p_neg(num)
        return num, den

    def _normalize_mono_den(self, num, den):
        """Monomial denominator: gcd is a fieldwise minimum, no heavy lifting."""
        return mono_den_reduce(num, den, self.nparams, self.param_mask)

    def rationalize(self, num, den):
        """Clear symbols out of den by conjugation; may raise on zero divisors."""
        pm = self.param_mask
        guard = 0
        while any(k & ~pm for k in den):
            k0 = next(k for k in den if k & ~pm)
            s = next(s for s in range(len(self.syms)) if (k0 >> ((self.nparams + s) * BITS)) & 1)
            bit = 1 << ((self.nparams + s) * BITS)
            conj = {k: (-c if k & bit else c) for k, c in den.items()}
            den = self.sym_reduce(p_mul(den, conj))
            num = self.sym_reduce(p_mul(num, conj))
            if not den:
                raise ZeroDivisionError("inverting a zero divisor")
            guard += 1
            if guard > len(self.syms):
                raise RuntimeError("rationalization failed to terminate")
        return num, den

    # -- printing --------------------------------------------------------

    def _term_str(self, k, c, aliases):
        factors = []
        for i, name in enumerate(self.names):
            e = (k >> (i * BITS)) & MASK
            if not e:
                continue
            if aliases and name in aliases:
                alias, pw = aliases[name]
                if e % pw == 0:
                    name, e = alias, e // pw
            factors.append(name if e == 1 else f"{name}^{e}")
        if not factors:
            return str(abs(c))
        body = "*".join(factors)
        return body if abs(c) == 1 else f"{abs(c)}*{body}"

    def poly_str(self, f, aliases=None):
        if not f:
            return "0"
        parts = []
        for k in sorted(f, reverse=True):
            c = f[k]
            t = self._term_str(k, c, aliases)
            if not parts:
                parts.append(f"-{t}" if c < 0 else t)
            else:
                parts.append(f" - {t}" if c < 0 else f" + {t}")
        return "".join(parts)

    def fraction_str(self, num, den, aliases=None):
        if den == _ONE:
            return self.poly_str(num, aliases)
        if len(num) == 1 and len(den) == 1:
            (kn, cn), (kd, cd) = next(iter(num.items())), next(iter(den.items()))
            if cd == 1:
                factors = []
                for i, name in enumerate(self.names):
                    e = ((kn >> (i * BITS)) & MASK) - ((kd >> (i * BITS)) & MASK)
                    if not e:
                        continue
                    if aliases and name in aliases:
                        alias, pw = aliases[name]
                        if e % pw == 0:
                            name, e = alias, e // pw
                    factors.append(name if e == 1 else f"{name}^{e}")
                if not factors:
                    return str(cn)
                body = "*".join(factors)
                if cn == 1:
                    return body
                if cn == -1:
                    return f"-{body}"
                return f"{cn}*{body}"
        return f"({self.poly_str(num, aliases)})/({self.poly_str(den, aliases)})"

    # -- parsing -----------------------------------------------------------

    def parse(self, text):
        return _Parser(self, text).parse()

    def __repr__(self):
        return f"ParamRing(params={self.params}, syms={self.syms})"


class Coeff:
    """One canonical fraction.  Immutable; arithmetic returns new objects."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring, num, den):
        self.ring = ring
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _ONE and self.den == _ONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.ring is other.ring and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (id(self.ring), tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))
            )
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, Coeff):
            if other.ring is not self.ring:
                raise ValueError("mixing coefficients from different rings")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = self.ring
        if self.den == o.den:
            num = p_add(self.num, o.num)
            den = self.den
        elif self.den == _ONE:
            num = p_add(p_mul(self.num, o.den), o.num)
            den = o.den
        elif o.den == _ONE:
            num = p_add(self.num, p_mul(o.num, self.den))
            den = self.den
        else:
            g = p_gcd(self.den, o.den, r.nparams)
            if g == _ONE:
                num = p_add(p_mul(self.num, o.den), p_mul(o.num, self.den))
                den = p_mul(self.den, o.den)
            else:
                db = p_divexact(self.den, g, r.nparams)
                dd = p_divexact(o.den, g, r.nparams)
                num = p_add(p_mul(self.num, dd), p_mul(o.num, db))
                den = p_mul(self.den, dd)
        num, den = r.normalize(num, den)
        return Coeff(r, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Coeff(self.ring, p_neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__add__(-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = self.ring
        num = r.sym_reduce(p_mul(self.num, o.num))
        if self.den == _ONE and o.den == _ONE:
            return Coeff(r, num, dict(_ONE))
        den = p_mul(self.den, o.den)
        num, den = r.normalize(num, den)
        return Coeff(r, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero")
        r = self.ring
        num, den = r.rationalize(self.den, self.num)
        num, den = r.normalize(num, den)
        return Coeff(r, num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.inverse())

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self):
        return self.ring.fraction_str(self.num, self.den)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# q-combinatorics


def q_number(r, x):
    """(r)_x = 1 + x + ... + x^(r-1)."""
    if r < 0:
        raise ValueError(f"(r)_x needs r >= 0, got {r}")
    out = x.ring.zero()
    acc = x.ring.one()
    for _ in range(r):
        out = out + acc
        acc = acc * x
    return out


def q_factorial(r, x):
    if r < 0:
        raise ValueError(f"(r)_x! needs r >= 0, got {r}")
    out = x.ring.one()
    for k in range(1, r + 1):
        out = out * q_number(k, x)
    return out


def shifted_factor(r, x, y):
    """(r; x, y) = 1 - x^(r-1) * y."""
    if r < 1:
        raise ValueError(f"(r; x, y) needs r >= 1, got {r}")
    return x.ring.one() - x ** (r - 1) * y


def shifted_factorial(r, x, y):
    if r < 0:
        raise ValueError(f"(r; x, y)! needs r >= 0, got {r}")
    out = x.ring.one()
    for k in range(1, r + 1):
        out = out * shifted_factor(k, x, y)
    return out


def q_binomial(k, r, x):
    """Gaussian binomial (k+r choose r)_x."""
    if k < 0 or r < 0:
        raise ValueError(f"binomial needs k, r >= 0, got {k}, {r}")
    return q_factorial(k + r, x) / (q_factorial(k, x) * q_factorial(r, x))


# ---------------------------------------------------------------------------
# parser

_TOKENS = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\^|\*|/|\+|\-|\(|\)))")


class _Parser:
    def __init__(self, ring, text):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKENS.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"bad token at {text[pos:]!r}")
                break
            pos = m.end()
            if m.group(1):
                self.toks.append(("int", int(m.group(1))))
            elif m.group(2):
                self.toks.append(("name", m.group(2)))
            else:
                self.toks.append((m.group(3), None))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        if self.peek() != kind:
            raise ValueError(f"expected {kind!r} at token {self.pos} in {self.text!r}")
        return self.take()

    def parse(self):
        v = self.expr()
        if self.pos != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")
        return v

    def expr(self):
        neg = False
        while self.peek() == "-":
            self.take()
            neg = not neg
        v = self.term()
        if neg:
            v = -v
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            f = self.factor()
            v = v * f if op == "*" else v / f
        return v

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        v = self.atom()
        if self.peek() == "^":
            self.take()
            v = v ** self.exponent()
        return v

    def atom(self):
        kind, val = self.take() if self.pos < len(self.toks) else (None, None)
        if kind == "int":
            return self.ring.from_int(val)
        if kind == "name":
            return self.ring.gen(val)
        if kind == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ValueError(f"unexpected token {kind!r} in {self.text!r}")

    def exponent(self):
        neg = False
        if self.peek() == "(":
            self.take()
            if self.peek() == "-":
                self.take()
                neg = True
            n = self.expect("int")[1]
            self.expect(")")
        else:
            if self.peek() == "-":
                self.take()
                neg = True
            n = self.expect("int")[1]
        return -n if neg else n

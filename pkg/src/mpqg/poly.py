"""Sparse multivariate integer polynomials on packed exponent keys.

Everything here works on the plain dict representation of ``kernels`` plus an
``nvars`` context.  This layer adds the order-dependent operations: leading
terms (packed-key comparison is lex with the highest variable most
significant), exact division, content/primitive decomposition and gcd.

gcd strategy: integer-content split, then a heuristic evaluate-and-
reconstruct gcd (verified by exact trial division, so a wrong candidate can
never escape), with a primitive pseudo-remainder-sequence fallback for the
rare inputs the heuristic keeps missing.
"""

import math

from .kernels import BITS, MASK, p_mul, p_mul_term, p_scale, p_sub

__all__ = [
    "pack",
    "unpack",
    "p_one",
    "p_const",
    "max_key",
    "key_divides",
    "p_divexact",
    "p_content",
    "p_primitive",
    "p_gcd",
    "p_pow",
    "vars_present",
]


class HeuristicGCDFailed(Exception):
    pass


def pack(exps):
    key = 0
    for s, e in enumerate(exps):
        if e:
            if e < 0 or e > MASK:
                raise OverflowError(f"exponent {e} out of packed range")
            key |= e << (s * BITS)
    return key


def unpack(key, nvars):
    return tuple((key >> (s * BITS)) & MASK for s in range(nvars))


def p_one():
    return {0: 1}


def p_const(c):
    return {0: c} if c else {}


def max_key(f):
    return max(f)


def key_divides(ka, kb, nvars):
    """True when monomial ka divides kb (fieldwise <=)."""
    for s in range(nvars):
        sh = s * BITS
        if (ka >> sh) & MASK > (kb >> sh) & MASK:
            return False
    return True


def vars_present(f, nvars):
    seen = [0] * nvars
    for k in f:
        for s in range(nvars):
            if (k >> (s * BITS)) & MASK:
                seen[s] = 1
    return [s for s in range(nvars) if seen[s]]


def p_pow(f, n):
    if n < 0:
        raise ValueError("negative power of a polynomial")
    out = p_one()
    base = f
    while n:
        if n & 1:
            out = p_mul(out, base)
        base = p_mul(base, base)
        n >>= 1
    return out


def p_divexact(f, g, nvars):
    """f // g when the division is exact, else None."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    kg = max(g)
    cg = g[kg]
    rem = dict(f)
    quo = {}
    while rem:
        kr = max(rem)
        if not key_divides(kg, kr, nvars):
            return None
        cr = rem[kr]
        if cr % cg:
            return None
        t = cr // cg
        kq = kr - kg
        quo[kq] = t
        rem = p_sub(rem, p_mul_term(g, kq, t))
    return quo


def p_content(f):
    c = 0
    for v in f.values():
        c = math.gcd(c, v)
        if c == 1:
            return 1
    return c


def div_int(f, c):
    if c == 1:
        return dict(f)
    return {k: v // c for k, v in f.items()}


def p_primitive(f):
    """(integer content with the leading sign, primitive part)."""
    if not f:
        return 0, {}
    c = p_content(f)
    if f[max(f)] < 0:
        c = -c
    return c, div_int(f, c)


# ---------------------------------------------------------------------------
# gcd


def _deg_in(f, var):
    sh = var * BITS
    d = 0
    for k in f:
        e = (k >> sh) & MASK
        if e > d:
            d = e
    return d


def _eval_var(f, var, value):
    """Substitute an integer for one variable."""
    sh = var * BITS
    out = {}
    clear = ~(MASK << sh)
    for k, c in f.items():
        e = (k >> sh) & MASK
        k2 = k & clear
        c2 = c * value**e
        s = out.get(k2, 0) + c2
        if s:
            out[k2] = s
        elif k2 in out:
            del out[k2]
    return out


def _interpolate(h, var, xi):
    """Inverse of evaluation at xi: xi-adic digits with balanced remainders."""
    sh = var * BITS
    out = {}
    i = 0
    while h:
        rest = {}
        for k, c in h.items():
            d = c % xi
            if d > xi // 2:
                d -= xi
            if d:
                k2 = k + (i << sh)
                out[k2] = d
            c = (c - d) // xi
            if c:
                rest[k] = c
        h = rest
        i += 1
        if i > MASK:
            raise HeuristicGCDFailed("runaway interpolation")
    return out


def _strip_mono(f, nvars):
    """Factor out the per-variable minimum exponents: f = x^key * core."""
    it = iter(f)
    mk = next(it)
    for k in it:
        if not mk:
            break
        nk = 0
        for s in range(nvars):
            sh = s * BITS
            a = (mk >> sh) & MASK
            if a:
                b = (k >> sh) & MASK
                nk |= (a if a < b else b) << sh
        mk = nk
    if not mk:
        return 0, f
    return mk, {k - mk: c for k, c in f.items()}


def _heugcd(f, g, nvars, depth=0):
    kf, f = _strip_mono(f, nvars)
    kg, g = _strip_mono(g, nvars)
    common = 0
    if kf and kg:
        for s in range(nvars):
            sh = s * BITS
            a = (kf >> sh) & MASK
            b = (kg >> sh) & MASK
            common |= (a if a < b else b) << sh
    vs = sorted(set(vars_present(f, nvars)) | set(vars_present(g, nvars)))
    if not vs:
        c = math.gcd(f.get(0, 0), g.get(0, 0))
        return {common: c} if c else {}
    var = vs[-1]
    fn = max(abs(c) for c in f.values())
    gn = max(abs(c) for c in g.values())
    xi = 2 * min(fn, gn) + 29
    for _ in range(6):
        fe = _eval_var(f, var, xi)
        ge = _eval_var(g, var, xi)
        if fe and ge:
            h = _heugcd(fe, ge, nvars, depth + 1)
            cand = _interpolate(h, var, xi)
            _, cand = p_primitive(cand)
            if cand and p_divexact(f, cand, nvars) is not None and p_divexact(g, cand, nvars) is not None:
                return p_mul_term(cand, common, 1) if common else cand
        xi = (xi * 73794) // 27011
        xi += 1 - (xi % 2)
    raise HeuristicGCDFailed


def _coeffs_wrt(f, var):
    """Split into {x-degree: coefficient poly (var cleared)}."""
    sh = var * BITS
    clear = ~(MASK << sh)
    out = {}
    for k, c in f.items():
        e = (k >> sh) & MASK
        out.setdefault(e, {})[k & clear] = c
    return out


def _from_coeffs(cs, var):
    sh = var * BITS
    out = {}
    for e, p in cs.items():
        for k, c in p.items():
            out[k + (e << sh)] = c
    return out


def _prem(f, g, var, nvars):
    """Pseudo-remainder of f by g wrt var."""
    dg = _deg_in(g, var)
    lcg = _from_coeffs({0: _coeffs_wrt(g, var).get(dg, {})}, var)
    r = f
    dr = _deg_in(r, var)
    sh = var * BITS
    while r and dr >= dg:
        lcr = {k - (dr << sh): c for k, c in r.items() if (k >> sh) & MASK == dr}
        r = p_sub(p_mul(r, lcg), p_mul(p_mul_term(g, (dr - dg) << sh, 1), lcr))
        if not r:
            break
        dr = _deg_in(r, var)
    return r


def _content_wrt(f, var, nvars):
    cs = _coeffs_wrt(f, var)
    cont = {}
    for p in cs.values():
        cont = p_gcd(cont, p, nvars)
        if cont == {0: 1}:
            break
    return cont


def _prsgcd(f, g, nvars):
    vs = sorted(set(vars_present(f, nvars)) | set(vars_present(g, nvars)))
    if not vs:
        return {0: math.gcd(f.get(0, 0), g.get(0, 0))}
    var = vs[-1]
    cf = _content_wrt(f, var, nvars)
    cg = _content_wrt(g, var, nvars)
    cont = p_gcd(cf, cg, nvars)
    f = p_divexact(f, cf, nvars)
    g = p_divexact(g, cg, nvars)
    if _deg_in(f, var) < _deg_in(g, var):
        f, g = g, f
    while g:
        r = _prem(f, g, var, nvars)
        if r:
            rc = _content_wrt(r, var, nvars)
            r = p_divexact(r, rc, nvars)
        f, g = g, r
    _, f = p_primitive(f)
    return p_mul(cont, f)


def p_gcd(f, g, nvars):
    """gcd over Z, primitive-normalized with positive leading coefficient."""
    if not f:
        _, gp = p_primitive(g)
        c = abs(p_content(g))
        return p_scale(gp, c)
    if not g:
        _, fp = p_primitive(f)
        c = abs(p_content(f))
        return p_scale(fp, c)
    if f == g:
        cf, fp = p_primitive(f)
        return p_scale(fp, abs(cf))
    cf, fp = p_primitive(f)
    cg, gp = p_primitive(g)
    c = math.gcd(cf, cg)
    kf, fp = _strip_mono(fp, nvars)
    kg, gp = _strip_mono(gp, nvars)
    common = 0
    for s in range(nvars):
        sh = s * BITS
        a = (kf >> sh) & MASK
        b = (kg >> sh) & MASK
        m = a if a < b else b
        if m:
            common |= m << sh
    if fp == {0: 1} or gp == {0: 1}:
        return {common: c}
    try:
        h = _heugcd(fp, gp, nvars)
    except HeuristicGCDFailed:
        h = _prsgcd(fp, gp, nvars)
    _, h = p_primitive(h)
    return p_mul_term(h, common, c)

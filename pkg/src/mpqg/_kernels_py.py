"""Pure-Python polynomial kernels.

A polynomial in ``n`` variables over the integers is a dict mapping a packed
exponent key to a nonzero integer coefficient.  Variable ``s`` occupies the
bit field ``[s*BITS, (s+1)*BITS)`` of the key, so multiplying monomials is a
single integer addition.  Exponents are always nonnegative (Laurent behaviour
lives in the fraction layer, not here).

The same functions exist in ``_kernels_cy.pyx``; ``kernels.py`` picks one
implementation at import time.
"""

BITS = 24
MASK = (1 << BITS) - 1

BACKEND = "python"


def p_add(a, b):
    """Sum of two polynomial dicts."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def p_sub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def p_neg(a):
    return {k: -c for k, c in a.items()}


def p_scale(a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {k: v * c for k, v in a.items()}


def p_mul_term(a, key, coef):
    """Multiply by the monomial ``coef * x^key``."""
    if coef == 0:
        return {}
    if key == 0:
        return p_scale(a, coef)
    return {k + key: v * coef for k, v in a.items()}


def p_mul(a, b):
    """Raw product (no root-symbol reduction)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _def_pow(s, k, sym_bases, defpow):
    key = (s, k)
    hit = defpow.get(key)
    if hit is None:
        hit = {0: 1}
        for _ in range(k):
            hit = p_mul(hit, sym_bases[s])
        defpow[key] = hit
    return hit


def sym_reduce(f, param_mask, sym_shifts, sym_bases, defpow):
    """Reduce every root-symbol exponent below 2 via its defining square.

    ``sym_shifts[s]`` is the bit offset of symbol ``s`` in the packed key,
    ``sym_bases[s]`` its square as a param-only dict; ``defpow`` caches powers
    of the squares across calls (owned by the ring).
    """
    out = {}
    for k, c in f.items():
        if not (k & ~param_mask):
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
            continue
        base = k
        extra = None
        for s, sh in enumerate(sym_shifts):
            e = (k >> sh) & MASK
            if e >= 2:
                base -= (e & ~1) << sh
                dp = _def_pow(s, e >> 1, sym_bases, defpow)
                extra = dp if extra is None else p_mul(extra, dp)
        if extra is None:
            v = out.get(base, 0) + c
            if v:
                out[base] = v
            elif base in out:
                del out[base]
        else:
            for k2, c2 in extra.items():
                kk = k2 + base
                v = out.get(kk, 0) + c * c2
                if v:
                    out[kk] = v
                elif kk in out:
                    del out[kk]
    return out


def mono_den_reduce(num, den, nparams, param_mask):
    """Cancel a single-term denominator against ``num``; fix the sign.

    The gcd with a monomial is a per-variable minimum plus an integer gcd,
    so no polynomial gcd machinery is needed.
    """
    from math import gcd

    (kd, cd), = den.items()
    gk = kd
    gc = cd if cd > 0 else -cd
    for k, c in num.items():
        if gc != 1:
            gc = gcd(gc, c)
        if gk:
            k &= param_mask
            nk = 0
            sh = 0
            g = gk
            while g:
                a = g & MASK
                if a:
                    b = (k >> sh) & MASK
                    nk |= (a if a < b else b) << sh
                g >>= BITS
                sh += BITS
            gk = nk
        if not gk and gc == 1:
            break
    if gk or gc != 1:
        num = {k - gk: c // gc for k, c in num.items()}
        den = {kd - gk: cd // gc}
        kd -= gk
        cd //= gc
    if cd < 0:
        num = {k: -c for k, c in num.items()}
        den = {kd: -cd}
    return num, den

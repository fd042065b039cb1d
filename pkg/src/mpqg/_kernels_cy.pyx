# cython: language_level=3
"""Compiled twin of ``_kernels_py``.

Same packed-key dict representation; the win is tighter dict loops.  Keys and
coefficients stay arbitrary-precision Python ints, so results are bit-exact
against the pure kernels (the benchmark and the test suite both compare).
"""

BITS = 24
MASK = (1 << BITS) - 1

BACKEND = "cython"


def p_add(dict a, dict b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def p_sub(dict a, dict b):
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def p_neg(dict a):
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def p_scale(dict a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    cdef dict out = {}
    for k, v in a.items():
        out[k] = v * c
    return out


def p_mul_term(dict a, key, coef):
    if coef == 0:
        return {}
    if key == 0:
        return p_scale(a, coef)
    cdef dict out = {}
    for k, v in a.items():
        out[k + key] = v * coef
    return out


def p_mul(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


cdef dict _def_pow(Py_ssize_t s, object k, tuple sym_bases, dict defpow):
    key = (s, k)
    hit = defpow.get(key)
    if hit is None:
        hit = {0: 1}
        for _ in range(k):
            hit = p_mul(hit, sym_bases[s])
        defpow[key] = hit
    return hit


def sym_reduce(dict f, param_mask, tuple sym_shifts, tuple sym_bases, dict defpow):
    cdef dict out = {}
    cdef dict extra
    cdef Py_ssize_t s
    cdef Py_ssize_t nsyms = len(sym_shifts)
    for k, c in f.items():
        if not (k & ~param_mask):
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
            continue
        base = k
        extra = None
        for s in range(nsyms):
            sh = sym_shifts[s]
            e = (k >> sh) & MASK
            if e >= 2:
                base = base - ((e & ~1) << sh)
                dp = _def_pow(s, e >> 1, sym_bases, defpow)
                extra = dp if extra is None else p_mul(extra, dp)
        if extra is None:
            v = out.get(base)
            if v is None:
                out[base] = c
            else:
                v = v + c
                if v:
                    out[base] = v
                else:
                    del out[base]
        else:
            for k2, c2 in extra.items():
                kk = k2 + base
                v = out.get(kk)
                if v is None:
                    out[kk] = c * c2
                else:
                    v = v + c * c2
                    if v:
                        out[kk] = v
                    else:
                        del out[kk]
    return out


def mono_den_reduce(dict num, dict den, Py_ssize_t nparams, param_mask):
    from math import gcd

    cdef dict nnum, nden
    (kd, cd), = den.items()
    gk = kd
    gc = cd if cd > 0 else -cd
    one = 1
    for k, c in num.items():
        if gc != one:
            gc = gcd(gc, c)
        if gk:
            k = k & param_mask
            nk = 0
            sh = 0
            g = gk
            while g:
                a = g & MASK
                if a:
                    b = (k >> sh) & MASK
                    nk = nk | ((a if a < b else b) << sh)
                g = g >> BITS
                sh = sh + BITS
            gk = nk
        if (not gk) and gc == one:
            break
    if gk or gc != one:
        nnum = {}
        for k, c in num.items():
            nnum[k - gk] = c // gc
        num = nnum
        kd = kd - gk
        cd = cd // gc
        den = {kd: cd}
    if cd < 0:
        nnum = {}
        for k, c in num.items():
            nnum[k] = -c
        num = nnum
        den = {kd: -cd}
    return num, den

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py.

Same functions, same conventions, same results; only the loop plumbing is
typed.  Coefficient arithmetic stays in exact rationals (gmpy2.mpq or
Fraction), so the speedup comes from monomial bookkeeping, not rounding.
"""

from .scalars import Scalar

BACKEND = "cy"

cdef object _SCALAR = Scalar
cdef object _NEW = Scalar.__new__


cdef inline object _mk(object a, object b):
    # bypasses Scalar._make validation; arguments are always closed
    # rational results of arithmetic on already-validated coefficients
    cdef object s = _NEW(_SCALAR)
    s.a = a
    s.b = b
    return s


cdef inline int _bit_index(unsigned long long low):
    cdef int i = 0
    while not (low & 1):
        low >>= 1
        i += 1
    return i


cdef inline int _popcount(unsigned long long x):
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef int _cliff_mul(unsigned long long s, unsigned long long t,
                    unsigned long long *out):
    cdef unsigned long long r = s, low
    cdef int sign = 1, i
    while t:
        low = t & (t - 1)
        low = t ^ low  # lowest set bit
        t &= t - 1
        i = _bit_index(low)
        if _popcount(r >> (i + 1)) & 1:
            sign = -sign
        if r & low:
            sign = -sign
            r ^= low
        else:
            r |= low
    out[0] = r
    return sign


def cliff_mul(s, t):
    """Multiply Clifford words given as masks: p_S * p_T = sign * p_R."""
    cdef unsigned long long r
    cdef int sign = _cliff_mul(s, t, &r)
    return sign, r


cdef int _conj_mask(tuple p, unsigned long long mask, unsigned long long *out):
    cdef int imgs[64]
    cdef int m = 0, i, j, sign = 1
    cdef unsigned long long r = 0, low
    while mask:
        low = mask ^ (mask & (mask - 1))
        mask &= mask - 1
        imgs[m] = <int> p[_bit_index(low)]
        m += 1
    for i in range(m):
        for j in range(i + 1, m):
            if imgs[i] > imgs[j]:
                sign = -sign
        r |= (<unsigned long long> 1) << imgs[i]
    out[0] = r
    return sign


def conj_mask(p, mask):
    """sigma * p_T * sigma^{-1} = sign * p_{sigma(T)} for sigma = p."""
    cdef unsigned long long r
    cdef int sign = _conj_mask(p, mask, &r)
    return sign, r


def perm_compose(p, q):
    """(p o q)[i] = p[q[i]]: apply q first."""
    return tuple([p[j] for j in q])


def perm_inverse(p):
    cdef list inv = [0] * len(p)
    cdef int i
    for i in range(len(p)):
        inv[<object> p[i]] = i
    return tuple(inv)


def mono_mul(m1, p1, m2, p2):
    """(p_{m1} p1) * (p_{m2} p2) -> (sign, mask, perm) in normal form."""
    cdef unsigned long long conj, mask
    cdef int s1 = _conj_mask(p1, m2, &conj)
    cdef int s2 = _cliff_mul(m1, conj, &mask)
    return s1 * s2, mask, tuple([p1[j] for j in p2])


def terms_mul(t1, t2):
    """Product of two elements given as {(mask, perm): Scalar} dicts."""
    cdef dict out = {}
    cdef unsigned long long conj, mask
    cdef int s1, s2
    cdef tuple k1, k2, key, p1, p2
    cdef object c1, c2, old, a, b, a1, b1
    for k1, c1 in (<dict> t1).items():
        p1 = <tuple> k1[1]
        a1 = c1.a
        b1 = c1.b
        for k2, c2 in (<dict> t2).items():
            p2 = <tuple> k2[1]
            s1 = _conj_mask(p1, k2[0], &conj)
            s2 = _cliff_mul(k1[0], conj, &mask)
            key = (mask, tuple([p1[j] for j in p2]))
            a = a1 * c2.a + 2 * b1 * c2.b
            b = a1 * c2.b + b1 * c2.a
            if s1 * s2 < 0:
                a = -a
                b = -b
            old = out.get(key)
            if old is not None:
                a = old.a + a
                b = old.b + b
            out[key] = _mk(a, b)
    return {k: v for k, v in out.items() if v.a or v.b}


def terms_axpy(dst, c, src):
    """dst += c * src for dicts of Scalars over arbitrary keys, in place."""
    cdef object ca = c.a, cb = c.b, a, b, old, v
    cdef dict d = <dict> dst
    for key, v in (<dict> src).items():
        a = ca * v.a + 2 * cb * v.b
        b = ca * v.b + cb * v.a
        old = d.get(key)
        if old is not None:
            a = old.a + a
            b = old.b + b
            if a or b:
                d[key] = _mk(a, b)
            else:
                del d[key]
        elif a or b:
            d[key] = _mk(a, b)


def terms_scale(t, c):
    """c * t as a new dict; c must be nonzero."""
    cdef object ca = c.a, cb = c.b, v
    cdef dict out = {}
    for k, v in (<dict> t).items():
        out[k] = _mk(ca * v.a + 2 * cb * v.b, ca * v.b + cb * v.a)
    return out


def ech_reduce(v, pivots, rows):
    """Eliminate every pivot key from v in place; return the coefficients.

    pivots is an ascending list of keys, rows maps each pivot to a vector
    with that key as its minimal element and coefficient 1, so one pass
    suffices: eliminating a pivot only introduces larger keys.
    """
    cdef dict dv = <dict> v, drows = <dict> rows, row, coeffs = {}
    cdef object pk, c, ca, cb, a, b, old, val
    for pk in (<list> pivots):
        c = dv.get(pk)
        if c is None:
            continue
        coeffs[pk] = c
        ca = c.a
        cb = c.b
        row = <dict> drows[pk]
        for key, val in row.items():
            a = ca * val.a + 2 * cb * val.b
            b = ca * val.b + cb * val.a
            old = dv.get(key)
            if old is not None:
                a = old.a - a
                b = old.b - b
                if a or b:
                    dv[key] = _mk(a, b)
                else:
                    del dv[key]
            elif a or b:
                dv[key] = _mk(-a, -b)
    return coeffs


cdef int _word_perm(tuple word, tuple p, list out):
    cdef int k = len(word), i, j, m = 0, sign = 1
    cdef int odd_imgs[64]
    cdef int c, pi
    for i in range(k):
        c = <int> word[i]
        pi = <int> p[i]
        out[pi] = word[i]
        if c & 1:
            odd_imgs[m] = pi
            m += 1
    for i in range(m):
        for j in range(i + 1, m):
            if odd_imgs[i] > odd_imgs[j]:
                sign = -sign
    return sign


def word_perm(word, p):
    """Move factor i to slot p[i]; Koszul sign counts inverted odd pairs."""
    cdef list out = [0] * len(word)
    cdef int sign = _word_perm(word, p, out)
    return sign, tuple(out)


def word_pflip(word, i):
    """Parity flip P at factor i with the Koszul prefix sign."""
    cdef int pre = 0, m, c, sign
    cdef tuple w = <tuple> word
    for m in range(i):
        pre ^= (<int> w[m]) & 1
    c = <int> w[i]
    if c & 1:
        sign = -1 if pre == 0 else 1
        c -= 1
    else:
        sign = -1 if pre else 1
        c += 1
    return sign, w[:i] + (c,) + w[i + 1 :]


cdef int _mono_apply(unsigned long long mask, tuple perm, tuple word, list buf):
    # buf has length k; on return holds the image word letters
    cdef int sign = _word_perm(word, perm, buf)
    cdef int k = len(word), i, c, pre, m
    cdef unsigned long long bit
    i = 63
    while mask:
        bit = (<unsigned long long> 1) << i
        if mask & bit:
            mask ^= bit
            pre = 0
            for m in range(i):
                pre ^= (<int> buf[m]) & 1
            c = <int> buf[i]
            if c & 1:
                if pre == 0:
                    sign = -sign
                buf[i] = c - 1
            else:
                if pre:
                    sign = -sign
                buf[i] = c + 1
        i -= 1
    return sign


def mono_apply(mask, perm, word):
    """Apply the monomial p_mask * perm to a tensor word."""
    cdef list buf = [0] * len(word)
    cdef int sign = _mono_apply(mask, perm, word, buf)
    return sign, tuple(buf)


def terms_apply(terms, vec):
    """Apply an algebra element to a vector: both sparse dicts."""
    cdef dict out = {}
    cdef tuple key, word, w
    cdef object c, v, a, b, ca, cb, old
    cdef int sign
    cdef list buf
    for key, c in (<dict> terms).items():
        ca = c.a
        cb = c.b
        for word, v in (<dict> vec).items():
            buf = [0] * len(word)
            sign = _mono_apply(key[0], <tuple> key[1], word, buf)
            w = tuple(buf)
            a = ca * v.a + 2 * cb * v.b
            b = ca * v.b + cb * v.a
            if sign < 0:
                a = -a
                b = -b
            old = out.get(w)
            if old is not None:
                a = old.a + a
                b = old.b + b
            out[w] = _mk(a, b)
    return {k: v for k, v in out.items() if v.a or v.b}


def word_E(word, a, b):
    """E_{ab} on a word: one letter of index b reindexed to a, parity kept."""
    cdef list res = []
    cdef tuple w = <tuple> word
    cdef int i, c
    for i in range(len(w)):
        c = <int> w[i]
        if c >> 1 == b:
            res.append((1, w[:i] + ((a << 1) | (c & 1),) + w[i + 1 :]))
    return res


def word_F(word, a, b):
    """F_{ab} on a word: index b to index a with parity flipped."""
    cdef list res = []
    cdef tuple w = <tuple> word
    cdef int i, c, pre = 0, sign
    for i in range(len(w)):
        c = <int> w[i]
        if c >> 1 == b:
            sign = -1 if pre else 1
            res.append((sign, w[:i] + ((a << 1) | (1 - (c & 1)),) + w[i + 1 :]))
        pre ^= c & 1
    return res

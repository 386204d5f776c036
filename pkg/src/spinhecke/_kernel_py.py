"""Pure-Python kernel for the inner loops.

Conventions shared with the compiled twin (_kernel_cy):

* permutations are tuples ``p`` with ``p[i]`` the 0-based image of ``i``;
  the product ``perm_compose(p, q)`` is "q first, then p";
* a Clifford word p_{s1}...p_{sm} with s1 < ... < sm is a bitmask with bit
  s set per factor (0-based); p_i^2 = -1 and distinct p anticommute;
* an element of the semidirect product is a dict mapping (mask, perm) to a
  nonzero Scalar, normal form Clifford-word-times-permutation;
* a tensor word is a tuple of letter codes 2*index + parity (0-based index),
  and a vector is a dict mapping words to nonzero Scalars.

Operators act on the left: the right factor of a product acts first.  A
permutation moves the i-th tensor factor to slot p[i] and picks up the
Koszul sign of the induced rearrangement of odd factors.
"""

from .scalars import Scalar

BACKEND = "py"


def cliff_mul(s, t):
    """Multiply Clifford words given as masks: p_S * p_T = sign * p_R."""
    sign = 1
    r = s
    while t:
        low = t & -t
        t ^= low
        # p_i moves left past every factor of r with larger index
        if (r >> low.bit_length()).bit_count() & 1:
            sign = -sign
        if r & low:
            sign = -sign  # p_i * p_i = -1
            r ^= low
        else:
            r |= low
    return sign, r


def conj_mask(p, mask):
    """sigma * p_T * sigma^{-1} = sign * p_{sigma(T)} for sigma = p."""
    imgs = []
    t = mask
    while t:
        low = t & -t
        t ^= low
        imgs.append(p[low.bit_length() - 1])
    sign = 1
    m = len(imgs)
    out = 0
    for i in range(m):
        for j in range(i + 1, m):
            if imgs[i] > imgs[j]:
                sign = -sign
        out |= 1 << imgs[i]
    return sign, out


def perm_compose(p, q):
    """(p o q)[i] = p[q[i]]: apply q first."""
    return tuple(p[j] for j in q)


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def mono_mul(m1, p1, m2, p2):
    """(p_{m1} p1) * (p_{m2} p2) -> (sign, mask, perm) in normal form."""
    s1, conj = conj_mask(p1, m2)
    s2, mask = cliff_mul(m1, conj)
    return s1 * s2, mask, perm_compose(p1, p2)


def terms_mul(t1, t2):
    """Product of two elements given as {(mask, perm): Scalar} dicts."""
    out = {}
    for (m1, p1), c1 in t1.items():
        a1 = c1.a
        b1 = c1.b
        for (m2, p2), c2 in t2.items():
            s1, conj = conj_mask(p1, m2)
            s2, mask = cliff_mul(m1, conj)
            key = (mask, tuple(p1[j] for j in p2))
            a = a1 * c2.a + 2 * b1 * c2.b
            b = a1 * c2.b + b1 * c2.a
            if s1 * s2 < 0:
                a = -a
                b = -b
            old = out.get(key)
            if old is not None:
                a = old.a + a
                b = old.b + b
            out[key] = Scalar._make(a, b)
    return {k: v for k, v in out.items() if v.a or v.b}


def terms_axpy(dst, c, src):
    """dst += c * src for dicts of Scalars over arbitrary keys, in place."""
    ca = c.a
    cb = c.b
    for key, v in src.items():
        a = ca * v.a + 2 * cb * v.b
        b = ca * v.b + cb * v.a
        old = dst.get(key)
        if old is not None:
            a = old.a + a
            b = old.b + b
            if a or b:
                dst[key] = Scalar._make(a, b)
            else:
                del dst[key]
        elif a or b:
            dst[key] = Scalar._make(a, b)


def terms_scale(t, c):
    """c * t as a new dict; c must be nonzero."""
    ca = c.a
    cb = c.b
    return {
        k: Scalar._make(ca * v.a + 2 * cb * v.b, ca * v.b + cb * v.a)
        for k, v in t.items()
    }


def ech_reduce(v, pivots, rows):
    """Eliminate every pivot key from v in place; return the coefficients.

    pivots is an ascending list of keys, rows maps each pivot to a vector
    with that key as its minimal element and coefficient 1, so one pass
    suffices: eliminating a pivot only introduces larger keys.
    """
    coeffs = {}
    for pk in pivots:
        c = v.get(pk)
        if c is not None:
            coeffs[pk] = c
            terms_axpy(v, -c, rows[pk])
    return coeffs


def word_perm(word, p):
    """Move factor i to slot p[i]; Koszul sign counts inverted odd pairs."""
    out = [0] * len(word)
    odd_imgs = []
    for i, c in enumerate(word):
        out[p[i]] = c
        if c & 1:
            odd_imgs.append(p[i])
    sign = 1
    for i in range(len(odd_imgs)):
        for j in range(i + 1, len(odd_imgs)):
            if odd_imgs[i] > odd_imgs[j]:
                sign = -sign
    return sign, tuple(out)


def word_pflip(word, i):
    """Parity flip P at factor i with the Koszul prefix sign.

    P sends an even letter to its odd partner and an odd letter to minus
    its even partner, so P^2 = -1.
    """
    pre = 0
    for m in range(i):
        pre ^= word[m] & 1
    c = word[i]
    if c & 1:
        sign = -1 if pre == 0 else 1
        c -= 1
    else:
        sign = -1 if pre else 1
        c += 1
    return sign, word[:i] + (c,) + word[i + 1 :]


def mono_apply(mask, perm, word):
    """Apply the monomial p_mask * perm to a tensor word."""
    sign, w = word_perm(word, perm)
    # rightmost Clifford factor acts first, i.e. descending index order
    m = mask
    while m:
        i = m.bit_length() - 1
        m ^= 1 << i
        s, w = word_pflip(w, i)
        sign *= s
    return sign, w


def terms_apply(terms, vec):
    """Apply an algebra element to a vector: both sparse dicts."""
    out = {}
    for (mask, perm), c in terms.items():
        ca = c.a
        cb = c.b
        for word, v in vec.items():
            sign, w = mono_apply(mask, perm, word)
            a = ca * v.a + 2 * cb * v.b
            b = ca * v.b + cb * v.a
            if sign < 0:
                a = -a
                b = -b
            old = out.get(w)
            if old is not None:
                a = old.a + a
                b = old.b + b
            out[w] = Scalar._make(a, b)
    return {k: v for k, v in out.items() if v.a or v.b}


def word_E(word, a, b):
    """E_{ab} on a word: replace one letter of index b by index a, parity kept.

    Returns the list of (sign, word) contributions, one per matching factor.
    The operator is even, so every sign is +1.
    """
    res = []
    for i, c in enumerate(word):
        if c >> 1 == b:
            res.append((1, word[:i] + ((a << 1) | (c & 1),) + word[i + 1 :]))
    return res


def word_F(word, a, b):
    """F_{ab} on a word: index b to index a with parity flipped.

    Sends e_b to the odd letter and the odd letter to e_a, both with
    coefficient +1 before the Koszul prefix sign (the operator is odd).
    """
    res = []
    pre = 0
    for i, c in enumerate(word):
        if c >> 1 == b:
            sign = -1 if pre else 1
            res.append((sign, word[:i] + ((a << 1) | (1 - (c & 1)),) + word[i + 1 :]))
        pre ^= c & 1
    return res

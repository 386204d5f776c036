"""Kernel primitives and backend parity.

The compiled extension and the pure-Python module must agree bit for bit
on every primitive; the parity tests run identical random workloads
through both whenever the extension is importable.
"""

import itertools
import random

import pytest

from spinhecke import kernel
from spinhecke import _kernel_py as kpy
from spinhecke.scalars import ONE, Q, SQRT2, Scalar

try:
    from spinhecke import _kernel_cy as kcy
except ImportError:  # pragma: no cover - extension not built
    kcy = None

needs_cy = pytest.mark.skipif(kcy is None, reason="compiled kernel not built")


def rand_scalar(rng):
    return Scalar(Q(rng.randint(-4, 4), rng.randint(1, 3)),
                  Q(rng.randint(-4, 4), rng.randint(1, 3)))


def rand_terms(rng, k, nterms):
    out = {}
    for _ in range(nterms):
        mask = rng.randrange(1 << k)
        perm = tuple(rng.sample(range(k), k))
        c = rand_scalar(rng)
        if c:
            out[(mask, perm)] = c
    return out


def rand_vec(rng, n, k, nterms):
    out = {}
    for _ in range(nterms):
        word = tuple(rng.randrange(2 * n) for _ in range(k))
        c = rand_scalar(rng)
        if c:
            out[word] = c
    return out


def test_cliff_mul_examples():
    # p_1 p_1 = -1; p_2 p_1 = -p_1 p_2 (0-based masks)
    assert kernel.cliff_mul(0b01, 0b01) == (-1, 0)
    assert kernel.cliff_mul(0b10, 0b01) == (-1, 0b11)
    assert kernel.cliff_mul(0b01, 0b10) == (1, 0b11)
    assert kernel.cliff_mul(0, 0b101) == (1, 0b101)


def test_cliff_mul_is_associative():
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randrange(16) for _ in range(3))
        s1, ab = kernel.cliff_mul(a, b)
        s2, ab_c = kernel.cliff_mul(ab, c)
        t1, bc = kernel.cliff_mul(b, c)
        t2, a_bc = kernel.cliff_mul(a, bc)
        assert (s1 * s2, ab_c) == (t1 * t2, a_bc)


def test_perm_compose_applies_right_factor_first():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert kernel.perm_compose(p, q) == (1, 0, 2)
    assert kernel.perm_compose(p, kernel.perm_inverse(p)) == (0, 1, 2)


def test_conj_mask_relabels_indices():
    # sigma p_1 sigma^{-1} = p_{sigma(1)} without sign for a single factor
    assert kernel.conj_mask((1, 0, 2), 0b001) == (1, 0b010)
    # two factors reordered by the permutation cost one swap
    assert kernel.conj_mask((1, 0, 2), 0b011) == (-1, 0b011)


def test_word_perm_koszul_sign():
    # swapping two odd letters is odd
    assert kernel.word_perm((1, 1), (1, 0)) == (-1, (1, 1))
    # an even letter passes freely
    assert kernel.word_perm((0, 1), (1, 0)) == (1, (1, 0))


def test_word_pflip_squares_to_minus_one():
    for word in itertools.product(range(4), repeat=3):
        for i in range(3):
            s1, w1 = kernel.word_pflip(word, i)
            s2, w2 = kernel.word_pflip(w1, i)
            assert (s1 * s2, w2) == (-1, word)


def test_mono_apply_order_matches_mono_mul():
    # acting by a product equals acting twice, for random monomials
    rng = random.Random(11)
    k = 4
    for _ in range(300):
        m1, m2 = rng.randrange(1 << k), rng.randrange(1 << k)
        p1 = tuple(rng.sample(range(k), k))
        p2 = tuple(rng.sample(range(k), k))
        word = tuple(rng.randrange(4) for _ in range(k))
        sign, mask, perm = kernel.mono_mul(m1, p1, m2, p2)
        s2, w2 = kernel.mono_apply(m2, p2, word)
        s1, w1 = kernel.mono_apply(m1, p1, w2)
        s, w = kernel.mono_apply(mask, perm, word)
        assert (sign * s, w) == (s1 * s2, w1)


def test_terms_mul_is_associative_and_bilinear():
    rng = random.Random(23)
    for _ in range(40):
        x = rand_terms(rng, 3, 3)
        y = rand_terms(rng, 3, 3)
        z = rand_terms(rng, 3, 3)
        assert kernel.terms_mul(kernel.terms_mul(x, y), z) == kernel.terms_mul(
            x, kernel.terms_mul(y, z))
        xy = dict(x)
        for key, c in y.items():
            kernel.terms_axpy(xy, ONE, {key: c})
        lhs = kernel.terms_mul(xy, z)
        rhs = kernel.terms_mul(x, z)
        for key, c in kernel.terms_mul(y, z).items():
            kernel.terms_axpy(rhs, ONE, {key: c})
        assert lhs == rhs


def test_terms_apply_is_a_module_action():
    rng = random.Random(37)
    for _ in range(40):
        x = rand_terms(rng, 3, 3)
        y = rand_terms(rng, 3, 3)
        v = rand_vec(rng, 2, 3, 4)
        via_product = kernel.terms_apply(kernel.terms_mul(x, y), v)
        stepwise = kernel.terms_apply(x, kernel.terms_apply(y, v))
        assert via_product == stepwise


def test_terms_axpy_and_scale():
    v = {(0, (0, 1)): ONE}
    kernel.terms_axpy(v, -ONE, {(0, (0, 1)): ONE})
    assert v == {}
    v = {(1, (0, 1)): SQRT2}
    out = kernel.terms_scale(v, SQRT2)
    assert out == {(1, (0, 1)): Scalar(2)}


def test_ech_reduce_eliminates_all_pivots():
    rng = random.Random(41)
    for _ in range(60):
        rows = {}
        pivots = []
        for pk in sorted(rng.sample(range(20), 6)):
            row = {pk: ONE}
            for _ in range(3):
                j = rng.randrange(pk + 1, 25)
                c = rand_scalar(rng)
                if c:
                    row[j] = c
            rows[pk] = row
            pivots.append(pk)
        v = {rng.randrange(25): rand_scalar(rng) for _ in range(6)}
        v = {k: c for k, c in v.items() if c}
        check = dict(v)
        coeffs = kernel.ech_reduce(v, pivots, rows)
        assert not set(v) & set(pivots)
        # v_out + sum coeffs[pk] * rows[pk] reassembles the input
        for pk, c in coeffs.items():
            kernel.terms_axpy(v, c, rows[pk])
        assert v == check


@needs_cy
def test_backends_agree():
    rng = random.Random(7)
    assert kpy.BACKEND == "py" and kcy.BACKEND == "cy"
    for _ in range(60):
        k = rng.randint(1, 5)
        x = rand_terms(rng, k, 4)
        y = rand_terms(rng, k, 4)
        v = rand_vec(rng, 2, k, 4)
        assert kpy.terms_mul(x, y) == kcy.terms_mul(x, y)
        assert kpy.terms_apply(x, v) == kcy.terms_apply(x, v)
        c = rand_scalar(rng)
        if c:
            assert kpy.terms_scale(x, c) == kcy.terms_scale(x, c)
            d1, d2 = dict(y), dict(y)
            kpy.terms_axpy(d1, c, x)
            kcy.terms_axpy(d2, c, x)
            assert d1 == d2
        for mask in range(1 << k):
            s = rng.randrange(1 << k)
            assert kpy.cliff_mul(mask, s) == kcy.cliff_mul(mask, s)
        p = tuple(rng.sample(range(k), k))
        mask = rng.randrange(1 << k)
        assert kpy.conj_mask(p, mask) == kcy.conj_mask(p, mask)
        word = tuple(rng.randrange(4) for _ in range(k))
        assert kpy.mono_apply(mask, p, word) == kcy.mono_apply(mask, p, word)
        for a in range(2):
            for b in range(2):
                assert kpy.word_E(word, a, b) == kcy.word_E(word, a, b)
                assert kpy.word_F(word, a, b) == kcy.word_F(word, a, b)


@needs_cy
def test_backends_agree_on_ech_reduce():
    rng = random.Random(13)
    for _ in range(40):
        rows = {}
        pivots = []
        for pk in sorted(rng.sample(range(15), 5)):
            row = {pk: ONE}
            for _ in range(2):
                c = rand_scalar(rng)
                if c:
                    row[rng.randrange(pk + 1, 20)] = c
            rows[pk] = row
            pivots.append(pk)
        v = {k: c for k in rng.sample(range(20), 8) if (c := rand_scalar(rng))}
        v1, v2 = dict(v), dict(v)
        c1 = kpy.ech_reduce(v1, pivots, rows)
        c2 = kcy.ech_reduce(v2, pivots, rows)
        assert (v1, c1) == (v2, c2)

"""Exact sparse linear algebra: echelon bases, kernels, centralizers."""

import random

import pytest

from spinhecke.kernel import terms_axpy, terms_mul
from spinhecke.linalg import (
    Echelon,
    SparseMatrix,
    kernel_of_columns,
    matvec,
    module_closure,
    proportional,
    rank_kernel,
    solve_in_span,
    span_closure,
    supercommutant,
)
from spinhecke.scalars import ONE, Q, SQRT2, Scalar


def rand_matrix(rng, nrows, ncols, density=0.5):
    entries = {}
    for r in range(nrows):
        for c in range(ncols):
            if rng.random() < density:
                v = Scalar(rng.randint(-3, 3), rng.randint(-1, 1))
                if v:
                    entries[(r, c)] = v
    return SparseMatrix(nrows, ncols, entries)


def test_echelon_insert_and_reduce():
    ech = Echelon()
    assert ech.insert({0: ONE, 1: ONE}) == 0
    assert ech.insert({1: SQRT2}) == 1
    # dependent vector is rejected
    assert ech.insert({0: Scalar(2), 1: Scalar(2)}) is None
    assert len(ech) == 2
    res, coeffs = ech.reduce({0: ONE, 2: ONE})
    assert res == {2: ONE}
    # eliminating pivot 0 introduces key 1, which row 1 then clears
    assert coeffs == {0: ONE, 1: -ONE}
    assert ech.contains({0: Scalar(5), 1: Scalar(-3, 2)})
    assert not ech.contains({2: ONE})


def test_echelon_rows_stay_pivot_normalized():
    rng = random.Random(3)
    ech = Echelon()
    offered = []
    for _ in range(30):
        vec = {rng.randrange(12): Scalar(rng.randint(-4, 4), rng.randint(-2, 2))
               for _ in range(4)}
        vec = {k: c for k, c in vec.items() if c}
        offered.append(vec)
        ech.insert(vec)
    for pk, row in ech.rows.items():
        assert min(row) == pk
        assert row[pk] == ONE
    # residuals of reduce never retain a pivot key, and every offered
    # vector lies in the span of the accepted rows
    for vec in offered:
        res, _ = ech.reduce(vec)
        assert not set(res) & set(ech.rows)
        assert ech.contains(vec)


def test_echelon_coords_track_offered_inputs():
    ech = Echelon(track=True)
    v0 = {0: ONE, 1: ONE}
    v1 = {1: ONE, 2: ONE}
    ech.insert(v0)
    ech.insert(v1)
    target = {0: Scalar(2), 1: ONE, 2: -ONE}
    co = ech.coords(target)
    assert co is not None
    recon = {}
    for idx, c in co.items():
        terms_axpy(recon, c, [v0, v1][idx])
    assert recon == target
    assert ech.coords({3: ONE}) is None


def test_kernel_vectors_annihilate_columns():
    rng = random.Random(17)
    for _ in range(25):
        mat = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        rank, kern = rank_kernel(mat)
        cols = mat.columns()
        assert rank + len(kern) == mat.ncols
        for kv in kern:
            out = matvec(cols, kv)
            assert out == {}


def test_rank_equals_transpose_rank():
    rng = random.Random(29)
    for _ in range(25):
        mat = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        tr = SparseMatrix(mat.ncols, mat.nrows,
                          {(c, r): v for (r, c), v in mat.entries.items()})
        assert rank_kernel(mat)[0] == rank_kernel(tr)[0]


def test_sparse_matrix_bounds_checked():
    mat = SparseMatrix(2, 2, {(2, 0): ONE})
    with pytest.raises(IndexError):
        mat.columns()


def test_span_closure_generates_a_group_algebra():
    # the span of all products of two transpositions in QS_3 is all of it
    from spinhecke.algebra import s_elem

    gens = [s_elem(3, 1, 2).terms, s_elem(3, 2, 3).terms]
    basis = span_closure(gens, terms_mul)
    assert len(basis) == 6


def test_module_closure_queue_is_exhaustive():
    # closing {e_0} under the shift map hits every basis vector
    def shift(v):
        return {(k + 1) % 5: c for k, c in v.items()}

    ech = module_closure([{0: ONE}], [shift])
    assert len(ech) == 5


def test_solve_in_span_and_proportional():
    cols = [{0: ONE, 1: ONE}, {1: SQRT2}]
    x = solve_in_span(cols, {0: Scalar(2), 1: Scalar(2, 1)})
    assert x == {0: Scalar(2), 1: ONE}
    assert solve_in_span(cols, {2: ONE}) is None
    assert proportional({0: ONE, 1: SQRT2}, {0: SQRT2, 1: Scalar(2)}) == SQRT2
    assert proportional({0: ONE}, {}) == Scalar(0)
    assert proportional({0: ONE, 1: ONE}, {0: ONE}) is None
    with pytest.raises(ValueError):
        proportional({}, {0: ONE})


def identity_cols(d):
    return [{i: ONE} for i in range(d)]


def test_supercommutant_of_identity_is_everything():
    # one even generator = identity: no constraint beyond parity blocks
    gens = [(identity_cols(2), 0)]
    even, odd = supercommutant(gens, [0, 1])
    assert len(even) == 2 and len(odd) == 2


def test_supercommutant_koszul_sign():
    # V = C^{1|1} with the odd swap J: X J = (-1)^{p(X)} J X
    J = [{1: ONE}, {0: -ONE}]
    even, odd = supercommutant([(J, 1)], [0, 1])
    # even: scalars a*id; odd: multiples of the swap with the sign built in
    assert len(even) == 1 and len(odd) == 1
    for m in even:
        assert m.get((0, 0)) == m.get((1, 1))


def test_supercommutant_block_restriction_matches_full_solve():
    # blocks that X provably preserves (here: eigenspaces of a diagonal
    # even generator) must not change the answer
    diag = [{0: ONE}, {1: Scalar(2)}, {2: ONE}, {3: Scalar(2)}]
    gens = [(diag, 0)]
    parities = [0, 0, 1, 1]
    full_even, full_odd = supercommutant(gens, parities)
    blk_even, blk_odd = supercommutant(gens, parities, block_of=[0, 1, 0, 1])
    assert len(full_even) == len(blk_even)
    assert len(full_odd) == len(blk_odd)

"""Exact sparse linear algebra over Q(sqrt2).

A vector is a dict mapping keys to nonzero Scalars.  Keys only need to be
hashable and totally ordered (tuples of ints throughout this package); the
pivot of a vector is its minimal key, and all routines are deterministic
given input order.

The workhorse is :class:`Echelon`, a growable echelon collection of rows.
Rows are normalized (pivot coefficient 1) and reduced against all earlier
rows at insertion; since a pivot is the minimal key of its row, a single
ascending pass over the pivots reduces any vector.  With ``track=True``
each row remembers the combination of offered inputs that produced it,
which yields coordinates, kernels and dependency witnesses.
"""

from bisect import insort
from dataclasses import dataclass, field

from .kernel import ech_reduce, terms_axpy, terms_scale
from .scalars import ONE, Scalar


class Echelon:
    """Growable echelon basis of sparse vectors."""

    def __init__(self, track=False):
        self.rows = {}  # pivot key -> row vector
        self.hist = {} if track else None  # pivot key -> {input index: Scalar}
        self.order = []  # pivot keys in insertion order
        self._pivots = []  # pivot keys, ascending
        self.ninputs = 0  # every offered vector counts, accepted or not
        self.last_dependency = None

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return (residual, coeffs) with vec = sum coeffs[p]*row[p] + residual."""
        v = dict(vec)
        coeffs = ech_reduce(v, self._pivots, self.rows)
        return v, coeffs

    def insert(self, vec):
        """Offer a vector; return its pivot key if independent, else None.

        When tracking, a rejected vector leaves ``last_dependency``: a map
        from input indices to Scalars whose combination equals the vector.
        """
        idx = self.ninputs
        self.ninputs += 1
        v, coeffs = self.reduce(vec)
        if self.hist is not None:
            combo = {}
            for pk, c in coeffs.items():
                terms_axpy(combo, c, self.hist[pk])
        if not v:
            if self.hist is not None:
                self.last_dependency = combo
            return None
        pivot = min(v)
        inv = v[pivot].inverse()
        row = terms_scale(v, inv)
        if self.hist is not None:
            h = {idx: ONE}
            terms_axpy(h, -ONE, combo)
            self.hist[pivot] = terms_scale(h, inv)
        self.rows[pivot] = row
        insort(self._pivots, pivot)
        self.order.append(pivot)
        return pivot

    def contains(self, vec):
        res, _ = self.reduce(vec)
        return not res

    def coords(self, vec):
        """Coordinates of vec over the accepted inputs (by offer index), or None."""
        if self.hist is None:
            raise ValueError("coords requires track=True")
        res, coeffs = self.reduce(vec)
        if res:
            return None
        out = {}
        for pk, c in coeffs.items():
            terms_axpy(out, c, self.hist[pk])
        return out

    def basis(self):
        """Current rows in insertion order."""
        return [self.rows[pk] for pk in self.order]


@dataclass
class SparseMatrix:
    """Sparse matrix with explicit shape; entries map (row, col) to Scalar."""

    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)

    def columns(self):
        cols = [{} for _ in range(self.ncols)]
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry {(r, c)} outside {self.nrows}x{self.ncols}")
            if v:
                cols[c][r] = v
        return cols


def kernel_of_columns(cols):
    """Exact rank and kernel of the matrix whose columns are given.

    Returns (rank, basis) where each basis vector is a dict over column
    indices with sum_j v[j] * cols[j] = 0.
    """
    ech = Echelon(track=True)
    kernel = []
    for idx, col in enumerate(cols):
        if ech.insert(col) is None:
            vec = {idx: ONE}
            for j, c in ech.last_dependency.items():
                vec[j] = -c
            kernel.append(vec)
    return len(ech), kernel


def rank_kernel(mat: SparseMatrix):
    """Rank and kernel basis of a SparseMatrix; rank + nullity = ncols."""
    return kernel_of_columns(mat.columns())


def span_closure(seed, product):
    """Basis of the smallest product-closed subspace containing the seed.

    That subspace is the span of all nonempty products of seed vectors, so
    it suffices to close the seed span under left multiplication by the
    seeds themselves.  Returns the reduced basis rows in insertion order.
    """
    seeds = [v for v in seed if v]
    return module_closure(seeds, [lambda x, s=s: product(s, x) for s in seeds]).basis()


def module_closure(seed, ops):
    """Echelon basis of the smallest ops-stable subspace containing seed.

    ops are linear maps dict -> dict.  Newly accepted rows are queued in
    reduced form, which keeps supports small.
    """
    ech = Echelon()
    work = []

    def offer(v):
        if v:
            pk = ech.insert(v)
            if pk is not None:
                work.append(dict(ech.rows[pk]))

    for v in seed:
        offer(v)
    qi = 0
    while qi < len(work):
        x = work[qi]
        qi += 1
        for op in ops:
            offer(op(x))
    return ech


def matvec(cols, vec):
    """Apply a matrix given by columns to a vector over column indices."""
    out = {}
    for j, c in vec.items():
        terms_axpy(out, c, cols[j])
    return out


def solve_in_span(cols, target):
    """Coefficients x with sum x[j]*cols[j] = target, or None if unsolvable."""
    ech = Echelon(track=True)
    for col in cols:
        ech.insert(col)
    return ech.coords(target)


def proportional(x, y):
    """Return c with y = c*x (x nonzero), or None if not proportional."""
    if not x:
        raise ValueError("reference vector is zero")
    if not y:
        return Scalar(0)
    pivot = min(x)
    c = y.get(pivot)
    if c is None:
        return None
    c = c * x[pivot].inverse()
    diff = dict(y)
    terms_axpy(diff, -c, x)
    return c if not diff else None


def supercommutant(gens, parities, block_of=None):
    """Homogeneous solutions X of X g = (-1)^{p(X) p(g)} g X for all g.

    gens is a list of (columns, parity) pairs acting on a space whose basis
    parities are given; X is sought as an even matrix (preserving the
    grading) and as an odd matrix (reversing it) separately.  Returns
    (even_basis, odd_basis), each a list of {(row, col): Scalar} matrices.

    block_of, when given, restricts the unknowns to entries within one
    block: the caller asserts every solution is block-diagonal (e.g. the
    blocks are joint eigenspaces of operators X must commute with).
    """
    d = len(parities)
    out = []
    for px in (0, 1):
        unknowns = [
            (r, c)
            for r in range(d)
            for c in range(d)
            if (parities[r] + parities[c]) % 2 == px
            and (block_of is None or block_of[r] == block_of[c])
        ]
        cols = []
        for (i, j) in unknowns:
            col = {}
            for gi, (gcols, pg) in enumerate(gens):
                sign = -1 if (px and pg) else 1
                # (X G)_{i,c} picks up X_{i,j} G_{j,c}
                for c in range(d):
                    v = gcols[c].get(j)
                    if v is not None:
                        key = (gi, i, c)
                        acc = col.get(key)
                        col[key] = acc + v if acc is not None else v
                # -sign (G X)_{r,j} picks up G_{r,i} X_{i,j}
                for r, v in gcols[i].items():
                    key = (gi, r, j)
                    w = -v if sign > 0 else v
                    acc = col.get(key)
                    w = acc + w if acc is not None else w
                    col[key] = w
            cols.append({k: v for k, v in col.items() if v})
        _, kern = kernel_of_columns(cols)
        out.append([{unknowns[j]: c for j, c in sorted(k.items())} for k in kern])
    return out[0], out[1]

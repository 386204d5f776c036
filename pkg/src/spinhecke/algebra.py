"""The Hecke-Clifford algebra H_k and its spin subalgebra.

H_k is the semidirect product of the symmetric group S_k with the Clifford
algebra C_k on anticommuting generators p_1..p_k, p_i^2 = -1, the group
acting by permuting Clifford indices.  Every element has a normal form as a
sum of monomials p_S * sigma (Clifford word left, permutation right) with
coefficients in Q(sqrt2).

The spin transpositions

    tau_ij = (1/sqrt2) (p_i - p_j) s_ij,   tau_ji = -tau_ij,

are odd, square to 1, anticommute when the index pairs are disjoint, and
satisfy the braid-type relation tau_ij tau_jk tau_ij = -tau_ik.  Their span
under multiplication is a k!-dimensional subalgebra A_k supercommuting with
the Clifford generators.

Everything downstream is built from these: Jucys-Murphy sums (classical,
Clifford-twisted, and the odd pi_i = sums of taus), row symmetrizers rho_t,
the shifted symmetrizers kappa_t with eigenvalue factors j(j+1)/2, the
classical Young symmetrizer pair, the Sergeev idempotent, and the row
idempotents sigma_t.

>>> tau(2, 1, 2) * tau(2, 1, 2) == HElement.one(2)
True
>>> print(kappa_shifted(ShiftedTableau(((1, 2),))))
2 * perm(1 2)
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .kernel import terms_apply, terms_mul, terms_scale
from .scalars import INV_SQRT2, ONE, Q, Scalar, coerce
from .tableaux import ShiftedTableau, stabilizer


class HMonomial(NamedTuple):
    """Normal-form monomial p_mask * perm (mask bit i-1 is p_i; perm 0-based)."""

    mask: int
    perm: tuple

    @property
    def parity(self) -> int:
        return self.mask.bit_count() & 1

    def indices(self) -> tuple[int, ...]:
        """Clifford support as 1-based indices, ascending."""
        return tuple(i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1)


@cache
def _identity(k: int) -> tuple:
    return tuple(range(k))


def _swap(k: int, i: int, j: int) -> tuple:
    p = list(range(k))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


class HElement:
    """Sparse element of H_k: dict from (mask, perm) to nonzero Scalar."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, k):
        return cls(k)

    @classmethod
    def one(cls, k):
        return cls(k, {(0, _identity(k)): ONE})

    @classmethod
    def from_scalar(cls, k, c):
        return cls(k, {(0, _identity(k)): coerce(c)})

    @classmethod
    def from_perm(cls, k, perm):
        """Group element from a 0-based one-line tuple."""
        if sorted(perm) != list(range(k)):
            raise ValueError(f"not a permutation of 0..{k - 1}: {perm}")
        return cls(k, {(0, tuple(perm)): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            acc = out.get(key)
            s = acc + c if acc is not None else c
            if s:
                out[key] = s
            elif acc is not None:
                del out[key]
        return HElement(self.k, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HElement(self.k, {key: -c for key, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HElement):
            self._check(other)
            return HElement(self.k, terms_mul(self.terms, other.terms))
        c = coerce(other)
        if not c:
            return HElement.zero(self.k)
        return HElement(self.k, terms_scale(self.terms, c))

    def __rmul__(self, other):
        if isinstance(other, HElement):
            return NotImplemented
        return self * other

    def __truediv__(self, other):
        return self * coerce(other).inverse()

    def _check(self, other):
        if self.k != other.k:
            raise ValueError(f"rank mismatch: {self.k} vs {other.k}")

    def parity(self):
        """0 or 1 when all terms share Clifford parity, else None."""
        ps = {mask.bit_count() & 1 for (mask, _) in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None if ps else 0

    def nterms(self) -> int:
        return len(self.terms)

    def apply(self, vec):
        """Image dict of a tensor-word vector dict under this element."""
        return terms_apply(self.terms, vec)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"HElement(k={self.k}, {format_element(self)})"


def format_element(x: HElement) -> str:
    """Canonical text form: terms sorted by (perm, mask), 1-based indices."""
    if not x.terms:
        return "0"
    bits = []
    for (mask, perm) in sorted(x.terms, key=lambda mp: (mp[1], mp[0])):
        c = x.terms[(mask, perm)]
        s = str(c)
        if c.a and c.b:
            s = f"({s})"
        part = [s]
        if mask:
            idx = ",".join(str(i) for i in HMonomial(mask, perm).indices())
            part.append(f"p[{idx}]")
        part.append("perm(" + " ".join(str(i + 1) for i in perm) + ")")
        bits.append(" * ".join(part))
    return " + ".join(bits)


def h_mul(x: HElement, y: HElement) -> HElement:
    return x * y


def s_elem(k: int, i: int, j: int) -> HElement:
    """The transposition s_ij as an element of H_k (1-based indices)."""
    _bounds(k, i, j)
    return HElement(k, {(0, _swap(k, i, j)): ONE})


def p_elem(k: int, i: int) -> HElement:
    """The Clifford generator p_i (1-based)."""
    _bounds(k, i, i)
    return HElement(k, {(1 << (i - 1), _identity(k)): ONE})


def tau(k: int, i: int, j: int) -> HElement:
    """Spin transposition tau_ij = (1/sqrt2)(p_i - p_j) s_ij; tau_ji = -tau_ij."""
    _bounds(k, i, j)
    if i == j:
        raise ValueError("tau needs distinct indices")
    if i > j:
        return -tau(k, j, i)
    sw = _swap(k, i, j)
    return HElement(
        k, {(1 << (i - 1), sw): INV_SQRT2, (1 << (j - 1), sw): -INV_SQRT2}
    )


def _bounds(k, i, j):
    if not (1 <= i <= k and 1 <= j <= k):
        raise ValueError(f"index out of range for H_{k}: ({i}, {j})")


def tau_generators(k: int) -> list[HElement]:
    """All tau_ij with i < j, lexicographic in (i, j)."""
    return [tau(k, i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


def check_spin_relations(k: int) -> list[str]:
    """Exhaustively check the defining relations of the spin transpositions.

    Returns human-readable failure descriptions (empty means all hold):
    antisymmetry, squares, anticommutation of disjoint pairs, and the
    braid-type relation tau_ij tau_jk tau_ij = tau_jk tau_ij tau_jk = -tau_ik.
    """
    failures = []
    one = HElement.one(k)
    idx = range(1, k + 1)
    pairs = [(i, j) for i in idx for j in idx if i != j]
    for i, j in pairs:
        if tau(k, i, j) != -tau(k, j, i):
            failures.append(f"tau_{i}{j} != -tau_{j}{i}")
        if tau(k, i, j) * tau(k, i, j) != one:
            failures.append(f"tau_{i}{j}^2 != 1")
    for i, j in pairs:
        for l, m in pairs:
            if len({i, j, l, m}) == 4:
                a, b = tau(k, i, j), tau(k, l, m)
                if a * b != -(b * a):
                    failures.append(f"tau_{i}{j} tau_{l}{m} not anticommuting")
    for i in idx:
        for j in idx:
            for l in idx:
                if len({i, j, l}) == 3:
                    a, b = tau(k, i, j), tau(k, j, l)
                    lhs = a * b * a
                    rhs = b * a * b
                    target = -tau(k, i, l)
                    if lhs != target or rhs != target:
                        failures.append(f"braid failure on ({i},{j},{l})")
    return failures


def jm_elements(k: int, order=None, kind: str = "classical") -> list[HElement]:
    """Jucys-Murphy family along a precedence order (default 1..k).

    Returned list is parallel to the order: position m holds the element
    attached to the entry order[m], summing over the entries that precede
    it.  Kinds:

    * classical: x_i = sum of s_{alpha i} over preceding alpha;
    * odd: pi_i = sum of tau_{alpha i} over preceding alpha;
    * nazarov: x_i = sum over alpha < i (natural order) of
      s_{alpha i} + s_{alpha i} p_alpha p_i, the Clifford-twisted form.
    """
    if order is None:
        order = tuple(range(1, k + 1))
    order = tuple(order)
    if sorted(order) != list(range(1, k + 1)):
        raise ValueError(f"order must be a permutation of 1..{k}: {order}")
    out = []
    for m, i in enumerate(order):
        acc = HElement.zero(k)
        if kind == "classical":
            for a in order[:m]:
                acc = acc + s_elem(k, a, i)
        elif kind == "odd":
            for a in order[:m]:
                acc = acc + tau(k, a, i)
        elif kind == "nazarov":
            for a in range(1, i):
                acc = acc + s_elem(k, a, i) + s_elem(k, a, i) * p_elem(k, a) * p_elem(k, i)
        else:
            raise ValueError(f"unknown JM kind: {kind}")
        out.append(acc)
    return out


def rho(t) -> HElement:
    """Row symmetrizer: plain sum over the row stabilizer of t."""
    k = t.k
    out = {}
    for perm in stabilizer(t, "row"):
        out[(0, perm)] = ONE
    return HElement(k, out)


def kappa_shifted(t: ShiftedTableau) -> HElement:
    """Shifted symmetrizer: product over the reading order I of t of

        j(j+1)/2 - pi_i^2,

    where j is the absolute column of entry i and pi_i sums tau_{alpha i}
    over the entries alpha preceding i in I.  The factors commute (the
    pi_i^2 do), but they are multiplied in reading order for determinism.
    """
    k = t.k
    order = t.reading_order()
    pis = jm_elements(k, order, "odd")
    out = HElement.one(k)
    for m, i in enumerate(order):
        j = t.column_of(i)
        factor = HElement.from_scalar(k, Scalar(Q(j * (j + 1), 2))) - pis[m] * pis[m]
        out = out * factor
    return out


def young_symmetrizers(t) -> tuple[HElement, HElement]:
    """The two classical symmetrizer forms of an ordinary tableau.

    First form: (sum of sgn(sigma) sigma over the column stabilizer) * rho_t.
    Second form: product over the column reading order I of (j - x_i) times
    rho_t, where j is the column of i and x_i is the classical JM element
    with precedence I.  The two are proportional with a nonzero ratio.
    """
    k = t.k
    signed = {}
    for perm in stabilizer(t, "column"):
        sgn = _perm_sign(perm)
        signed[(0, perm)] = ONE if sgn > 0 else -ONE
    e_col = HElement(k, signed) * rho(t)
    order = t.reading_order()
    xs = jm_elements(k, order, "classical")
    prod = HElement.one(k)
    for m, i in enumerate(order):
        j = t.column_of(i)
        prod = prod * (HElement.from_scalar(k, j) - xs[m])
    e_jm = prod * rho(t)
    return e_col, e_jm


def _perm_sign(perm) -> int:
    sign = 1
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def sergeev_idempotent(k: int) -> HElement:
    """e_k = prod_{i=2..k} (2 / (i(i-1))) pi_i^2 with natural-order pi.

    Idempotent in A_k; its left A_k-module has dimension 2^{k-1}.
    """
    out = HElement.one(k)
    if k < 2:
        return out
    pis = jm_elements(k, None, "odd")
    for i in range(2, k + 1):
        pi = pis[i - 1]
        out = out * (pi * pi) * Scalar(Q(2, i * (i - 1)))
    return out


def _row_idempotent(k: int, entries) -> HElement:
    """Sergeev construction relabeled onto the given entries, ascending."""
    ent = sorted(entries)
    out = HElement.one(k)
    for m in range(2, len(ent) + 1):
        pi = HElement.zero(k)
        for a in ent[:m - 1]:
            pi = pi + tau(k, a, ent[m - 1])
        out = out * (pi * pi) * Scalar(Q(2, m * (m - 1)))
    return out


def sigma_t(t: ShiftedTableau) -> HElement:
    """Product over rows of the row idempotents; length-1 rows give 1."""
    out = HElement.one(t.k)
    for row in t.row_sets():
        out = out * _row_idempotent(t.k, row)
    return out


def p_t_element(t: ShiftedTableau, i: int, mode: str = "row") -> HElement:
    """Sum of Clifford generators over the i-th row (or absolute column) of t."""
    if mode == "row":
        if not (1 <= i <= len(t.rows)):
            raise ValueError(f"row {i} out of range")
        entries = t.row_sets()[i - 1]
    elif mode == "column":
        cols = {}
        for r, c in t.cells():
            cols.setdefault(c, []).append(t.entry(r, c))
        if i not in cols:
            raise ValueError(f"column {i} out of range")
        entries = cols[i]
    else:
        raise ValueError(f"unknown mode: {mode}")
    out = HElement.zero(t.k)
    for a in entries:
        out = out + p_elem(t.k, a)
    return out

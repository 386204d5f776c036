"""The tensor superspace W = V^(x)k and its two commuting actions.

V has homogeneous basis e_1..e_n (even) and their odd partners; a letter is
encoded as 2*(index-1) + parity and a basis word of W is a k-tuple of letter
codes.  Vectors are sparse Scalar combinations of words.

Two supercommuting actions live here:

* the Hecke-Clifford side acts by permuting tensor factors with Koszul
  signs and by the parity flip P (P e = odd partner, P odd = -even, so
  P^2 = -1) applied per factor with the odd-operator prefix sign;
* the matrix superalgebra side acts by the even operators E_ab (index b
  to index a, parity kept) and the odd operators F_ab (index b to index a,
  parity flipped), summed over tensor positions with Koszul prefix signs.

Weights are index-count vectors: E_aa counts the letters of index a.  The
highest-weight space R^lam of a weight lam is the joint kernel of the
strictly-upper E_ab and F_ab (a < b) inside the lam-weight space.

>>> v = WVector(1, 2, {(0, 0): ONE})
>>> print(act_F(1, 1, v))
1 * 1~ 1 + 1 * 1 1~
"""

from __future__ import annotations

from .kernel import (
    terms_apply,
    terms_axpy,
    terms_scale,
    word_E,
    word_F,
)
from .linalg import Echelon, kernel_of_columns
from .scalars import ONE, Scalar, coerce
from .tableaux import ShiftedTableau, StrictPartition
from .algebra import HElement, p_t_element


def letter_code(index: int, parity: int) -> int:
    """Encode a 1-based letter index with parity 0 (even) or 1 (odd)."""
    return ((index - 1) << 1) | parity


def format_word(word) -> str:
    return " ".join(f"{(c >> 1) + 1}{'~' if c & 1 else ''}" for c in word)


def word_parity(word) -> int:
    return sum(c & 1 for c in word) & 1


def word_weight(word, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for c in word:
        counts[c >> 1] += 1
    return tuple(counts)


class WVector:
    """Sparse vector in W: dict from words to nonzero Scalars."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n: int, k: int, terms=None):
        self.n = n
        self.k = k
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, n, k, word):
        return cls(n, k, {tuple(word): ONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WVector):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        terms_axpy(out, ONE, other.terms)
        return WVector(self.n, self.k, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        terms_axpy(out, -ONE, other.terms)
        return WVector(self.n, self.k, out)

    def __neg__(self):
        return WVector(self.n, self.k, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        c = coerce(other)
        if not c:
            return WVector(self.n, self.k)
        return WVector(self.n, self.k, terms_scale(self.terms, c))

    __rmul__ = __mul__

    def _check(self, other):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(f"shape mismatch: {(self.n, self.k)} vs {(other.n, other.k)}")

    def parity(self):
        ps = {word_parity(w) for w in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None if ps else 0

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            s = str(c)
            if c.a and c.b:
                s = f"({s})"
            bits.append(f"{s} * {format_word(w)}")
        return " + ".join(bits)

    def __repr__(self):
        return f"WVector(n={self.n}, k={self.k}, {self})"


def act_h(x: HElement, v: WVector) -> WVector:
    """Apply an algebra element (permutations with Koszul signs, parity flips)."""
    if x.k != v.k:
        raise ValueError(f"rank mismatch: element k={x.k}, vector k={v.k}")
    return WVector(v.n, v.k, terms_apply(x.terms, v.terms))


def _apply_letters(vec: dict, a: int, b: int, word_op) -> dict:
    out = {}
    for word, c in vec.items():
        for sign, w in word_op(word, a, b):
            cc = -c if sign < 0 else c
            acc = out.get(w)
            if acc is not None:
                cc = acc + cc
            if cc:
                out[w] = cc
            elif acc is not None:
                del out[w]
    return out


def apply_E(vec: dict, a: int, b: int) -> dict:
    """Dict-level E_ab (1-based indices)."""
    return _apply_letters(vec, a - 1, b - 1, word_E)


def apply_F(vec: dict, a: int, b: int) -> dict:
    """Dict-level F_ab (1-based indices)."""
    return _apply_letters(vec, a - 1, b - 1, word_F)


def act_E(a: int, b: int, v: WVector) -> WVector:
    if not (1 <= a <= v.n and 1 <= b <= v.n):
        raise ValueError(f"E index out of range for n={v.n}: ({a}, {b})")
    return WVector(v.n, v.k, apply_E(v.terms, a, b))


def act_F(a: int, b: int, v: WVector) -> WVector:
    if not (1 <= a <= v.n and 1 <= b <= v.n):
        raise ValueError(f"F index out of range for n={v.n}: ({a}, {b})")
    return WVector(v.n, v.k, apply_F(v.terms, a, b))


def act_q(kind: str, a: int, b: int, v: WVector) -> WVector:
    if kind == "E":
        return act_E(a, b, v)
    if kind == "F":
        return act_F(a, b, v)
    raise ValueError(f"unknown generator kind: {kind}")


def basis_words(n: int, k: int) -> list[tuple[int, ...]]:
    """All (2n)^k words in lexicographic order."""
    words = [()]
    for _ in range(k):
        words = [w + (c,) for w in words for c in range(2 * n)]
    return words


def weight_space(lam, n: int, k: int) -> list[tuple[int, ...]]:
    """All words whose index counts match lam (any parities), lexicographic."""
    lam = tuple(lam.parts) if isinstance(lam, StrictPartition) else tuple(lam)
    if len(lam) > n:
        raise ValueError(f"weight {lam} needs n >= {len(lam)}")
    if sum(lam) != k:
        raise ValueError(f"weight {lam} does not sum to k={k}")
    counts = lam + (0,) * (n - len(lam))
    out = []

    def rec(word, remaining):
        if len(word) == k:
            out.append(tuple(word))
            return
        for c in range(2 * n):
            idx = c >> 1
            if remaining[idx]:
                remaining[idx] -= 1
                word.append(c)
                rec(word, remaining)
                word.pop()
                remaining[idx] += 1

    rec([], list(counts))
    return out


def vt(t: ShiftedTableau, n: int) -> WVector:
    """Pure tensor with the even letter of index row_of(entry) at each slot."""
    if len(t.rows) > n:
        raise ValueError(f"shape {t.shape} too tall for n={n}")
    word = tuple(letter_code(t.row_of(pos + 1), 0) for pos in range(t.k))
    return WVector(n, t.k, {word: ONE})


def raising_pairs(n: int) -> list[tuple[str, int, int]]:
    """The strictly-upper generator labels, E before F, lexicographic."""
    return [(kind, a, b) for kind in ("E", "F") for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def highest_weight_space(lam, n: int, k: int) -> list[WVector]:
    """Echelon basis of the joint kernel of the raising operators on the
    lam-weight space, split by word parity (the kernel is parity-graded
    because E preserves and F reverses word parity)."""
    words = weight_space(lam, n, k)
    raisers = raising_pairs(n)
    out = []
    for par in (0, 1):
        cls = [w for w in words if word_parity(w) == par]
        if not raisers:
            out.extend(WVector.unit(n, k, w) for w in cls)
            continue
        cols = []
        for w in cls:
            col = {}
            for op_idx, (kind, a, b) in enumerate(raisers):
                hits = (word_E if kind == "E" else word_F)(w, a - 1, b - 1)
                for sign, w2 in hits:
                    key = (op_idx, w2)
                    c = -ONE if sign < 0 else ONE
                    acc = col.get(key)
                    if acc is not None:
                        c = acc + c
                    if c:
                        col[key] = c
                    elif acc is not None:
                        del col[key]
            cols.append(col)
        _, kern = kernel_of_columns(cols)
        for kv in kern:
            vec = {}
            for j, c in kv.items():
                vec[cls[j]] = c
            out.append(WVector(n, k, vec))
    return out


def mt_space(t: ShiftedTableau, n: int, mode: str = "row") -> list[WVector]:
    """Echelon basis of the image of the diagonal-eigenvector projector

        e = prod_i (1/2) (1 - (1/lam_i) p_t^i F_ii)

    on the lam-weight space; its image is the space where F_ii acts as the
    Clifford sum p_t^i (row or column mode) and E_ii as lam_i.
    """
    lam = t.shape
    k = t.k
    pts = [p_t_element(t, i, mode) for i in range(1, len(lam.parts) + 1)]

    def project(vec: dict) -> dict:
        v = dict(vec)
        for i, lam_i in enumerate(lam.parts, start=1):
            w = apply_F(v, i, i)
            w = terms_apply(pts[i - 1].terms, w)
            # v <- (v - w/lam_i) / 2
            terms_axpy(v, Scalar(-1) / lam_i, w)
            v = terms_scale(v, Scalar(1) / 2)
        return v

    ech = Echelon()
    order = []
    for w in weight_space(lam, n, k):
        img = project({w: ONE})
        if img and ech.insert(img) is not None:
            order.append(ech.order[-1])
    return [WVector(n, k, ech.rows[pk]) for pk in ech.order]


def howe_failures(n: int, k: int) -> list[str]:
    """Exhaustive supercommutation check of the two actions on basis words.

    Returns failure descriptions; empty means x(h(w)) agrees with
    (-1)^{p(x)p(h)} h(x(w)) for every generator pair on every word.
    """
    from .algebra import p_elem, s_elem, tau

    hgens = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            hgens.append((f"s_{i}{j}", s_elem(k, i, j), 0))
            hgens.append((f"tau_{i}{j}", tau(k, i, j), 1))
    for i in range(1, k + 1):
        hgens.append((f"p_{i}", p_elem(k, i), 1))
    qgens = [(f"{kind}_{a}{b}", kind, a, b, 0 if kind == "E" else 1)
             for kind in ("E", "F")
             for a in range(1, n + 1) for b in range(1, n + 1)]
    failures = []
    for word in basis_words(n, k):
        v = WVector.unit(n, k, word)
        for hname, h, ph in hgens:
            hv = act_h(h, v)
            for qname, kind, a, b, pq in qgens:
                lhs = act_q(kind, a, b, hv)
                rhs = act_h(h, act_q(kind, a, b, v))
                if ph and pq:
                    rhs = -rhs
                if lhs != rhs:
                    failures.append(f"{qname} o {hname} != sign {hname} o {qname} on {format_word(word)}")
    return failures

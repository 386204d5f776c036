"""Strict partitions, shifted and ordinary tableaux.

Conventions:

* partitions are tuples of positive parts, written "3,2,1" in literals;
* a strict partition has strictly decreasing parts; delta(lam) is 0 when
  the number of parts is even and 1 when it is odd;
* the shifted diagram of a strict partition puts row i (1-based) in the
  absolute columns i .. lam_i + i - 1; an ordinary diagram uses columns
  1 .. lam_i;
* tableaux are bijective fillings with 1..k, stored as row tuples and
  written "1,2;3" in literals (rows separated by semicolons);
* the reading order lists entries column by column, left to right, top to
  bottom inside a column;
* permutations returned by stabilizers are 0-based one-line tuples, the
  format the algebra layer consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache


@dataclass(frozen=True)
class StrictPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {p}")
        if any(p[i] <= p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must strictly decrease: {p}")

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def delta(self) -> int:
        return len(self.parts) % 2

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(str(x) for x in self.parts)


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a partition literal like "3,2,1" (weakly decreasing, positive)."""
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition literal: {text!r}") from None
    if not parts or any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {text!r}")
    return parts


def parse_tableau(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse a tableau literal like "1,2;3" into row tuples."""
    try:
        rows = tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))
    except ValueError:
        raise ValueError(f"bad tableau literal: {text!r}") from None
    return rows


def strict_partitions(k: int) -> list[StrictPartition]:
    """All strict partitions of k, lexicographically descending."""
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(StrictPartition(tuple(acc)))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p - 1, acc)
            acc.pop()

    rec(k, k, [])
    return out


def partitions(k: int) -> list[tuple[int, ...]]:
    """All partitions of k (weakly decreasing), lexicographically descending."""
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(k, k, [])
    return out


def dominance_leq(lam, mu) -> bool:
    """Partial-sum comparison, defined for partitions of the same number."""
    la = tuple(lam.parts) if isinstance(lam, StrictPartition) else tuple(lam)
    mu_ = tuple(mu.parts) if isinstance(mu, StrictPartition) else tuple(mu)
    if sum(la) != sum(mu_):
        raise ValueError(f"dominance needs equal sizes: {la} vs {mu_}")
    sa = sb = 0
    for m in range(max(len(la), len(mu_))):
        sa += la[m] if m < len(la) else 0
        sb += mu_[m] if m < len(mu_) else 0
        if sa > sb:
            return False
    return True


class _Tableau:
    """Shared plumbing for shifted and ordinary tableaux."""

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        k = sum(len(r) for r in self.rows)
        seen = sorted(x for row in self.rows for x in row)
        if seen != list(range(1, k + 1)):
            raise ValueError(f"entries must be a bijection with 1..{k}: {self.rows}")
        self.k = k
        self._pos = {}
        for i, row in enumerate(self.rows, start=1):
            for off, val in enumerate(row):
                self._pos[val] = (i, self._col0(i) + off)

    def _col0(self, i):
        raise NotImplementedError

    def cells(self):
        """All (row, column) cells, 1-based, row-reading order."""
        return [
            (i, self._col0(i) + off)
            for i, row in enumerate(self.rows, start=1)
            for off in range(len(row))
        ]

    def position(self, value):
        return self._pos[value]

    def row_of(self, value) -> int:
        return self._pos[value][0]

    def column_of(self, value) -> int:
        return self._pos[value][1]

    def entry(self, i, j):
        return self.rows[i - 1][j - self._col0(i)]

    def reading_order(self) -> tuple[int, ...]:
        """Entries column by column left to right, top to bottom in a column."""
        cells = sorted(self.cells(), key=lambda rc: (rc[1], rc[0]))
        return tuple(self.entry(i, j) for i, j in cells)

    def row_sets(self):
        return [tuple(sorted(row)) for row in self.rows]

    def column_sets(self):
        bycol = {}
        for i, j in self.cells():
            bycol.setdefault(j, []).append(self.entry(i, j))
        return [tuple(sorted(bycol[j])) for j in sorted(bycol)]

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        bycol = {}
        for i, j in self.cells():
            bycol.setdefault(j, []).append((i, self.entry(i, j)))
        for j, col in bycol.items():
            col.sort()
            if any(col[i][1] >= col[i + 1][1] for i in range(len(col) - 1)):
                return False
        return True

    def __eq__(self, other):
        return type(self) is type(other) and self.rows == other.rows

    def __hash__(self):
        return hash((type(self).__name__, self.rows))

    def __str__(self):
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({self.rows})"


class ShiftedTableau(_Tableau):
    """Bijective filling of the shifted diagram of a strict partition."""

    def __init__(self, rows):
        super().__init__(rows)
        self.shape = StrictPartition(tuple(len(r) for r in self.rows))

    def _col0(self, i):
        return i

    @classmethod
    def columnwise(cls, shape) -> "ShiftedTableau":
        """The filling that writes 1..k in reading order (column by column)."""
        shape = shape if isinstance(shape, StrictPartition) else StrictPartition(tuple(shape))
        cells = []
        for i, lam in enumerate(shape, start=1):
            cells.extend((i, i + off) for off in range(lam))
        cells.sort(key=lambda rc: (rc[1], rc[0]))
        grid = {}
        for val, (i, j) in enumerate(cells, start=1):
            grid[(i, j)] = val
        rows = [
            tuple(grid[(i, i + off)] for off in range(lam))
            for i, lam in enumerate(shape, start=1)
        ]
        return cls(rows)


class OrdinaryTableau(_Tableau):
    """Bijective filling of an ordinary Young diagram."""

    def __init__(self, rows):
        super().__init__(rows)
        shape = tuple(len(r) for r in self.rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"row lengths must weakly decrease: {shape}")
        if any(x <= 0 for x in shape):
            raise ValueError(f"empty row in {rows}")
        self.shape = shape

    def _col0(self, i):
        return 1


def _fillings(cls, shape_rows):
    """All bijective fillings, lexicographic on the row-reading word."""
    k = sum(shape_rows)
    out = []
    for perm in itertools.permutations(range(1, k + 1)):
        rows = []
        pos = 0
        for n in shape_rows:
            rows.append(perm[pos : pos + n])
            pos += n
        out.append(cls(rows))
    return out


def enumerate_fillings(shape, shifted=True):
    rows = tuple(shape.parts) if isinstance(shape, StrictPartition) else tuple(shape)
    return _fillings(ShiftedTableau if shifted else OrdinaryTableau, rows)


def enumerate_standard_shifted(shape) -> list[ShiftedTableau]:
    """All standard shifted tableaux of the given strict shape."""
    return [t for t in enumerate_fillings(shape, shifted=True) if t.is_standard()]


def enumerate_standard_ordinary(shape) -> list[OrdinaryTableau]:
    return [t for t in enumerate_fillings(shape, shifted=False) if t.is_standard()]


@cache
def _arrangement_perms(groups):
    """Permutations (0-based one-line) preserving each group of values setwise."""
    out = []
    for choice in itertools.product(*[itertools.permutations(g) for g in groups]):
        perm = list(range(sum(len(g) for g in groups)))
        for g, arr in zip(groups, choice):
            for val, img in zip(g, arr):
                perm[val - 1] = img - 1
        out.append(tuple(perm))
    return out


def stabilizer(t, mode="row"):
    """Row or column stabilizer of a tableau as 0-based permutation tuples.

    Column mode is an ordinary-tableau notion; shifted tableaux only ever
    use columns through the reading order, never through a stabilizer.
    """
    if mode == "row":
        groups = tuple(t.row_sets())
    elif mode == "column":
        if not isinstance(t, OrdinaryTableau):
            raise ValueError("column stabilizer is only defined for ordinary tableaux")
        groups = tuple(t.column_sets())
    else:
        raise ValueError(f"unknown stabilizer mode: {mode}")
    return _arrangement_perms(groups)


def row_equivalent_fillings(t: ShiftedTableau) -> list[ShiftedTableau]:
    """All fillings sharing the row sets of t (row-internal rearrangements)."""
    out = []
    for choice in itertools.product(*[itertools.permutations(r) for r in t.row_sets()]):
        out.append(ShiftedTableau(choice))
    return out

"""Finitely generated abelian groups and exact integer matrices.

Groups are stored in invariant-factor form: a free rank together with a
divisibility chain ``d1 | d2 | ... | dt`` of torsion coefficients, each at
least 2.  Two groups are isomorphic exactly when their canonical forms are
equal, so ``==`` on :class:`FgAbGroup` is an isomorphism test.

Text form used everywhere (CLI included)::

    0            trivial group
    Z            infinite cyclic
    Z^r          free of rank r
    Z/n          cyclic of order n >= 2
    Z^2 + Z/4 + Z/6   direct sums, whitespace ignored
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import factorint

__all__ = [
    "IntMatrix",
    "FgAbGroup",
    "GroupMorphism",
    "ParseError",
    "smith_normal_form",
    "cokernel",
    "direct_sum",
    "order",
    "canonical_torsion",
]


class ParseError(ValueError):
    """Malformed group expression; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, Python ints throughout."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            data[i][i] = v
        return cls.from_rows(data, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, list[int]]:
    """Diagonalize ``m`` by unimodular row and column operations.

    Returns the diagonal matrix and its nonzero diagonal, which is the
    divisibility chain of invariant factors (length = rank of ``m``).
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]

    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            dirty = False
            p = a[t][t]
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                    dirty = dirty or ri[t] != 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # bring the smallest survivor of row/column t onto the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, nrows)
                 for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[bad][j]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]

    diag = []
    for t in range(min(nrows, ncols)):
        if a[t][t] == 0:
            break
        diag.append(a[t][t])
    return IntMatrix.from_rows(a, ncols), diag


def canonical_torsion(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of ``Z/o1 + Z/o2 + ...`` (orders >= 1, ascending chain).

    Works through primary parts: each order is split into prime powers, and
    the i-th largest power of every prime is multiplied into the i-th
    largest invariant factor.
    """
    powers: dict[int, list[int]] = defaultdict(list)
    for o in orders:
        if o < 1:
            raise ValueError(f"cyclic order must be positive, got {o}")
        for p, e in factorint(o).items():
            powers[p].append(p ** e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    factors = [1] * length
    for plist in powers.values():
        for i, q in enumerate(sorted(plist, reverse=True)):
            factors[i] *= q
    return tuple(sorted(factors))


@dataclass(frozen=True, order=True)
class FgAbGroup:
    """``Z^free_rank + Z/d1 + ... + Z/dt`` with ``d1 | d2 | ... | dt``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
        for lo, hi in zip(self.torsion, self.torsion[1:]):
            if hi % lo:
                raise ValueError(f"invariant factors {self.torsion} do not form a divisibility chain")

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls()

    @classmethod
    def free(cls, rank: int = 1) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = 1`` the trivial group."""
        if n < 0:
            raise ValueError("cyclic order must be non-negative")
        if n == 0:
            return cls(1, ())
        return cls(0, canonical_torsion([n]) if n > 1 else ())

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FgAbGroup":
        """Direct sum of cyclic groups; an order of 0 stands for ``Z``."""
        orders = list(orders)
        free = sum(1 for o in orders if o == 0)
        return cls(free, canonical_torsion(o for o in orders if o > 0))

    @classmethod
    def parse(cls, text: str) -> "FgAbGroup":
        return _parse(text)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    @property
    def has_2_torsion(self) -> bool:
        return any(d % 2 == 0 for d in self.torsion)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def orders(self) -> list[int]:
        """Cyclic orders of the standard generators, free ones first (0 = infinite)."""
        return [0] * self.free_rank + list(self.torsion)

    def primary_decomposition(self) -> list[int]:
        """Prime-power orders of the torsion part, sorted."""
        out = []
        for d in self.torsion:
            out.extend(p ** e for p, e in factorint(d).items())
        return sorted(out)

    def torsion_subgroup(self) -> "FgAbGroup":
        return FgAbGroup(0, self.torsion)

    def free_part(self) -> "FgAbGroup":
        return FgAbGroup(self.free_rank, ())

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return direct_sum(self, other)

    def __str__(self) -> str:
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append(f"Z^{self.free_rank}")
        terms.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"Z\s*/\s*(\d+)|Z\s*\^\s*(\d+)|Z|0")


def _parse(text: str) -> FgAbGroup:
    pos = 0
    n = len(text)
    orders: list[int] = []
    free = 0

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty group expression", pos)
    while True:
        m = _TERM.match(text, pos)
        if m is None:
            raise ParseError(f"expected a term, found {text[pos:pos + 8]!r}", pos)
        if m.group(1) is not None:
            k = int(m.group(1))
            if k < 2:
                raise ValueError(f"Z/{k} is not allowed: cyclic orders must be >= 2")
            orders.append(k)
        elif m.group(2) is not None:
            free += int(m.group(2))
        elif m.group(0) == "Z":
            free += 1
        pos = skip_ws(m.end())
        if pos == n:
            break
        if text[pos] != "+":
            raise ParseError(f"expected '+', found {text[pos]!r}", pos)
        pos = skip_ws(pos + 1)
        if pos == n:
            raise ParseError("dangling '+'", pos)
    return FgAbGroup(free, canonical_torsion(orders))


@dataclass(frozen=True)
class GroupMorphism:
    """Homomorphism given by its action on standard generators.

    Column ``j`` of ``matrix`` holds the image of generator ``j`` of
    ``source`` in target coordinates (target entries read modulo their
    cyclic orders).
    """

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.ngens, self.source.ngens):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{self.target.ngens} x {self.source.ngens}"
            )
        if not self.respects_relations():
            raise ValueError("matrix does not respect the torsion relations of the source")

    def respects_relations(self) -> bool:
        src, tgt = self.source.orders(), self.target.orders()
        for j, d in enumerate(src):
            for i, e in enumerate(tgt):
                x = d * self.matrix[i, j]
                if (e == 0 and x != 0) or (e > 0 and x % e):
                    return False
        return True

    def __call__(self, element: Sequence[int]) -> tuple[int, ...]:
        tgt = self.target.orders()
        out = []
        for i, e in enumerate(tgt):
            v = sum(self.matrix[i, j] * x for j, x in enumerate(element))
            out.append(v % e if e else v)
        return tuple(out)


def cokernel(m: IntMatrix) -> FgAbGroup:
    """``Z^cols / (row space of m)``; rows are relations, columns generators."""
    _, diag = smith_normal_form(m)
    return FgAbGroup(m.cols - len(diag), tuple(d for d in diag if d > 1))


def direct_sum(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return FgAbGroup(g.free_rank + h.free_rank, canonical_torsion(g.torsion + h.torsion))


def order(g: FgAbGroup) -> int | float:
    """Cardinality, ``math.inf`` for groups with a free summand."""
    if g.free_rank:
        return math.inf
    return math.prod(g.torsion)

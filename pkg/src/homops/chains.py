"""Finite free chain complexes over the integers.

Used as cellular models: ``moore_complex`` builds reduced cellular chains of
a Moore space, and ``tensor_complex`` of two such complexes models the smash
product of the spaces.  Boundary matrices follow the column convention,
``boundaries[n]`` has shape ``(rank(n-1), rank(n))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from homops.abgroup import FgAbGroup, IntMatrix, smith_normal_form
from homops.errors import require_degree
from homops import functors

__all__ = [
    "ChainComplex",
    "DegreeCheck",
    "KunnethReport",
    "moore_complex",
    "tensor_complex",
    "homology",
    "kunneth_check",
]


def _kron(a: IntMatrix, b: IntMatrix, scale: int = 1) -> IntMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([scale * a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return IntMatrix.from_rows(rows, a.cols * b.cols)


@dataclass(frozen=True)
class ChainComplex:
    ranks: Mapping[int, int]
    boundaries: Mapping[int, IntMatrix] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "ranks", {n: r for n, r in self.ranks.items() if r})
        object.__setattr__(
            self, "boundaries",
            {n: m for n, m in self.boundaries.items() if m.rows and m.cols},
        )
        for n, m in self.boundaries.items():
            if m.shape != (self.rank(n - 1), self.rank(n)):
                raise ValueError(
                    f"boundary {n} has shape {m.shape}, expected {(self.rank(n - 1), self.rank(n))}"
                )
        for n in self.boundaries:
            if n - 1 in self.boundaries and not (self.boundaries[n - 1] @ self.boundaries[n]).is_zero():
                raise ValueError(f"boundary {n - 1} o boundary {n} is not zero")

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def boundary(self, n: int) -> IntMatrix:
        m = self.boundaries.get(n)
        return m if m is not None else IntMatrix.zeros(self.rank(n - 1), self.rank(n))

    @property
    def degrees(self) -> list[int]:
        return sorted(self.ranks)

    def homology(self, n: int) -> FgAbGroup:
        return homology(self, n)


def moore_complex(g: FgAbGroup, n: int) -> ChainComplex:
    """Cells of M(G, n): an n-cell per summand of G and an (n+1)-cell per torsion summand."""
    require_degree(n, 2)
    ranks = {n: g.ngens, n + 1: len(g.torsion)}
    column = [[0] * len(g.torsion) for _ in range(g.ngens)]
    for i, d in enumerate(g.torsion):
        column[g.free_rank + i][i] = d
    boundaries = {n + 1: IntMatrix.from_rows(column, len(g.torsion))} if g.torsion else {}
    return ChainComplex(ranks, boundaries)


def tensor_complex(c: ChainComplex, d: ChainComplex, sign_on: str = "second") -> ChainComplex:
    """Tensor product complex with Koszul signs.

    ``sign_on="second"``: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
    ``sign_on="first"``:  d(x (x) y) = (-1)^|y| dx (x) y + x (x) dy.
    Both give isomorphic complexes, hence the same homology.
    """
    if sign_on not in ("first", "second"):
        raise ValueError("sign_on must be 'first' or 'second'")
    blocks: dict[int, list[tuple[int, int]]] = {}
    for i in c.degrees:
        for j in d.degrees:
            blocks.setdefault(i + j, []).append((i, j))
    for n in blocks:
        blocks[n].sort()

    def offsets(n):
        off, pos = {}, 0
        for i, j in blocks.get(n, []):
            off[(i, j)] = pos
            pos += c.rank(i) * d.rank(j)
        return off, pos

    ranks = {n: offsets(n)[1] for n in blocks}
    boundaries = {}
    for n in blocks:
        src_off, src_dim = offsets(n)
        tgt_off, tgt_dim = offsets(n - 1)
        if not tgt_dim:
            continue
        out = [[0] * src_dim for _ in range(tgt_dim)]

        def place(block: IntMatrix, r0: int, c0: int):
            for a in range(block.rows):
                for b in range(block.cols):
                    if block[a, b]:
                        out[r0 + a][c0 + b] += block[a, b]

        for (i, j), c0 in src_off.items():
            if (i - 1, j) in tgt_off:
                s = (-1) ** j if sign_on == "first" else 1
                place(_kron(c.boundary(i), IntMatrix.identity(d.rank(j)), s), tgt_off[(i - 1, j)], c0)
            if (i, j - 1) in tgt_off:
                s = (-1) ** i if sign_on == "second" else 1
                place(_kron(IntMatrix.identity(c.rank(i)), d.boundary(j), s), tgt_off[(i, j - 1)], c0)
        boundaries[n] = IntMatrix.from_rows(out, src_dim)
    return ChainComplex(ranks, boundaries)


def homology(c: ChainComplex, n: int) -> FgAbGroup:
    """ker d_n / im d_{n+1}.

    ker d_n is a direct summand of C_n, so the free rank is
    rank C_n - rank d_n - rank d_{n+1} and the torsion is read off the
    invariant factors of d_{n+1}.
    """
    _, out_diag = smith_normal_form(c.boundary(n))
    _, in_diag = smith_normal_form(c.boundary(n + 1))
    free = c.rank(n) - len(out_diag) - len(in_diag)
    return FgAbGroup(free, tuple(x for x in in_diag if x > 1))


@dataclass(frozen=True)
class DegreeCheck:
    degree: int
    expected: FgAbGroup
    computed: FgAbGroup

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class KunnethReport:
    g1: FgAbGroup
    q1: int
    g2: FgAbGroup
    q2: int
    checks: tuple[DegreeCheck, ...]

    @property
    def passed(self) -> bool:
        return all(ch.ok for ch in self.checks)

    def to_dict(self) -> dict:
        return {
            "g1": str(self.g1), "q1": self.q1, "g2": str(self.g2), "q2": self.q2,
            "passed": self.passed,
            "degrees": [
                {"degree": ch.degree, "expected": str(ch.expected),
                 "computed": str(ch.computed), "ok": ch.ok}
                for ch in self.checks
            ],
        }


def kunneth_check(g1: FgAbGroup, q1: int, g2: FgAbGroup, q2: int) -> KunnethReport:
    """Compare homology of M(g1,q1) (x) M(g2,q2) cells with the Kunneth prediction."""
    require_degree(q1, 2, "q1")
    require_degree(q2, 2, "q2")
    cx = tensor_complex(moore_complex(g1, q1), moore_complex(g2, q2))
    q = q1 + q2
    expected = {q: functors.tensor(g1, g2), q + 1: functors.tor(g1, g2)}
    degrees = sorted(set(cx.degrees) | {q - 1, q, q + 1, q + 2})
    checks = tuple(
        DegreeCheck(n, expected.get(n, FgAbGroup.trivial()), homology(cx, n)) for n in degrees
    )
    return KunnethReport(g1, q1, g2, q2, checks)

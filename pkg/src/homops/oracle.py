"""Brute-force Hom / Ext / tensor / Tor for finite abelian groups.

Nothing here uses the gcd formulas of :mod:`homops.functors`.  Hom and Tor
are found by listing group elements and identifying the resulting subgroup
from its element orders; Ext and tensor go through explicit presentations
and Smith normal form.  The point is to have a second, unrelated route to
the same answers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from homops.abgroup import FgAbGroup, IntMatrix, cokernel, order

__all__ = [
    "DEFAULT_BOUND",
    "BoundExceeded",
    "ElementTable",
    "element_table",
    "identify",
    "oracle_hom_count",
    "oracle_hom",
    "oracle_ext",
    "oracle_tensor",
    "oracle_tor",
]

DEFAULT_BOUND = 10_000


class BoundExceeded(RuntimeError):
    """The enumeration would examine more candidates than allowed."""


@dataclass(frozen=True)
class ElementTable:
    group: FgAbGroup
    elements: tuple[tuple[int, ...], ...]

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.group.torsion

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def scale(self, k, x):
        return tuple((k * a) % m for a, m in zip(x, self.moduli))

    def element_order(self, x) -> int:
        return math.lcm(*(m // math.gcd(a, m) for a, m in zip(x, self.moduli))) if x else 1

    def killed_by(self, d: int) -> list[tuple[int, ...]]:
        return [x for x in self.elements if not any(self.scale(d, x))]


def _require_finite(g: FgAbGroup, what: str):
    if not g.is_finite:
        raise ValueError(f"{what} must be finite, got {g}")


@lru_cache(maxsize=None)
def element_table(g: FgAbGroup, bound: int = DEFAULT_BOUND) -> ElementTable:
    _require_finite(g, "group")
    if order(g) > bound:
        raise BoundExceeded(f"|{g}| = {order(g)} exceeds bound {bound}")
    elements = tuple(itertools.product(*(range(d) for d in g.torsion)))
    return ElementTable(g, elements)


def identify(orders_of_elements: list[int]) -> FgAbGroup:
    """Isomorphism type of a finite abelian group from the orders of all its elements.

    For each prime p, the number of elements killed by p^j is p^(r_1 + ... + r_j)
    where r_i counts cyclic p-primary factors of order >= p^i.
    """
    total = len(orders_of_elements)
    cyclic_orders = []
    for p, e in factorint(total).items():
        counts = [1]
        while counts[-1] < p ** e:
            j = len(counts)
            counts.append(sum(1 for o in orders_of_elements if (p ** j) % o == 0))
        ranks = [_exact_log(counts[j] // counts[j - 1], p) for j in range(1, len(counts))] + [0]
        for j in range(len(ranks) - 1):
            cyclic_orders.extend([p ** (j + 1)] * (ranks[j] - ranks[j + 1]))
    return FgAbGroup.from_orders(cyclic_orders)


def _exact_log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        if n % p:
            raise ArithmeticError("element counts are not those of an abelian group")
        n //= p
        k += 1
    return k


@lru_cache(maxsize=None)
def _torsion_points(h: FgAbGroup, d: int, bound: int) -> tuple[int, FgAbGroup]:
    """Number and isomorphism type of the elements of ``h`` killed by ``d``."""
    table = element_table(h, bound)
    sub = table.killed_by(d)
    return len(sub), identify([table.element_order(x) for x in sub])


def _check_candidates(g: FgAbGroup, h: FgAbGroup, bound: int):
    candidates = len(g.torsion) * order(h)
    if candidates > bound:
        raise BoundExceeded(f"{candidates} candidate generator images exceed bound {bound}")


def oracle_hom_count(g: FgAbGroup, h: FgAbGroup, bound: int = DEFAULT_BOUND) -> int:
    """Count homomorphisms ``g -> h`` by testing every candidate generator image.

    The standard generators of ``g`` satisfy only the relations ``d_i x_i = 0``,
    so a homomorphism is a free choice, per generator, of an element of ``h``
    annihilated by ``d_i``.
    """
    _require_finite(g, "source")
    _require_finite(h, "target")
    _check_candidates(g, h, bound)
    return math.prod(_torsion_points(h, d, bound)[0] for d in g.torsion)


def _annihilated_sum(g: FgAbGroup, h: FgAbGroup, bound: int) -> FgAbGroup:
    _require_finite(g, "first argument")
    _require_finite(h, "second argument")
    _check_candidates(g, h, bound)
    out = FgAbGroup.trivial()
    for d in g.torsion:
        out = out + _torsion_points(h, d, bound)[1]
    return out


def oracle_hom(g: FgAbGroup, h: FgAbGroup, bound: int = DEFAULT_BOUND) -> FgAbGroup:
    """Hom(g, h) as a group: the product over generators of the admissible images."""
    return _annihilated_sum(g, h, bound)


def oracle_tor(g: FgAbGroup, h: FgAbGroup, bound: int = DEFAULT_BOUND) -> FgAbGroup:
    """Tor(g, h) as the kernel of ``d_i`` acting on ``h``, one copy per factor of ``g``.

    Comes from tensoring the resolution ``0 -> Z^t -> Z^t -> g -> 0`` with ``h``.
    """
    return _annihilated_sum(g, h, bound)


def _block_presentation(h: FgAbGroup, copies: int, scalars: list[int]) -> IntMatrix:
    """Relations of ``h^copies`` plus ``scalars[i] * e`` for every generator ``e`` of copy ``i``."""
    orders = h.orders()
    k = len(orders)
    rows = []
    for i in range(copies):
        for j, e in enumerate(orders):
            if e:
                row = [0] * (copies * k)
                row[i * k + j] = e
                rows.append(row)
            row = [0] * (copies * k)
            row[i * k + j] = scalars[i]
            rows.append(row)
    return IntMatrix.from_rows(rows, copies * k)


def oracle_ext(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    """Ext(g, h) as the cokernel of ``Hom(Z^t, h) -> Hom(Z^t, h)`` from a free resolution of ``g``."""
    _require_finite(g, "first argument")
    t = len(g.torsion)
    if t == 0 or h.is_trivial:
        return FgAbGroup.trivial()
    return cokernel(_block_presentation(h, t, list(g.torsion)))


def oracle_tensor(g: FgAbGroup, h: FgAbGroup, bound: int = DEFAULT_BOUND) -> FgAbGroup:
    """g (x) h presented on generators ``g_i (x) h_j`` with relations ``d_i`` and ``e_j``."""
    _require_finite(g, "first argument")
    _require_finite(h, "second argument")
    gens = [(d, e) for d in g.torsion for e in h.torsion]
    if len(gens) > bound:
        raise BoundExceeded(f"{len(gens)} tensor generators exceed bound {bound}")
    if not gens:
        return FgAbGroup.trivial()
    rows = []
    for idx, (d, e) in enumerate(gens):
        for rel in (d, e):
            row = [0] * len(gens)
            row[idx] = rel
            rows.append(row)
    return cokernel(IntMatrix.from_rows(rows, len(gens)))

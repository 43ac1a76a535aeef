"""Hom, Ext, tensor and Tor of finitely generated abelian groups.

All four functors are additive in each variable, so they reduce to the
cyclic cases::

    Z   (x) H = H         Hom(Z, H) = H          Ext(Z, H) = 0     Tor(Z, H) = 0
    Z/m (x) Z = Z/m       Hom(Z/m, Z) = 0        Ext(Z/m, Z) = Z/m
    Z/m (x) Z/n, Hom(Z/m, Z/n), Ext(Z/m, Z/n), Tor(Z/m, Z/n)  all = Z/gcd(m, n)
"""

from __future__ import annotations

import enum
from math import gcd

from homops.abgroup import FgAbGroup, GroupMorphism, IntMatrix, canonical_torsion

__all__ = ["FunctorKind", "tensor", "tor", "hom", "ext", "apply", "hom_pullback", "hom_pushforward"]


class FunctorKind(enum.Enum):
    HOM = "hom"
    EXT = "ext"
    TENSOR = "tensor"
    TOR = "tor"


def _gcds(ms, ns):
    return [gcd(m, n) for m in ms for n in ns]


def tensor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    a, b = g.free_rank, h.free_rank
    orders = list(h.torsion) * a + list(g.torsion) * b + _gcds(g.torsion, h.torsion)
    return FgAbGroup(a * b, canonical_torsion(orders))


def tor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return FgAbGroup(0, canonical_torsion(_gcds(g.torsion, h.torsion)))


def hom(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    a, b = g.free_rank, h.free_rank
    orders = list(h.torsion) * a + _gcds(g.torsion, h.torsion)
    return FgAbGroup(a * b, canonical_torsion(orders))


def ext(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    b = h.free_rank
    orders = list(g.torsion) * b + _gcds(g.torsion, h.torsion)
    return FgAbGroup(0, canonical_torsion(orders))


_DISPATCH = {
    FunctorKind.HOM: hom,
    FunctorKind.EXT: ext,
    FunctorKind.TENSOR: tensor,
    FunctorKind.TOR: tor,
}


def apply(kind: FunctorKind | str, g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _DISPATCH[FunctorKind(kind)](g, h)


# Induced maps, cyclic groups only.  A cyclic group's order is encoded as
# 0 for Z and m >= 2 for Z/m; Hom(Z/m, Z/n) is identified with Z/gcd(m, n)
# through the generator 1 -> n/gcd(m, n).


def _cyclic_order(g: FgAbGroup) -> int:
    if not g.is_cyclic:
        raise ValueError(f"induced maps are only supported between cyclic groups, got {g}")
    if g.is_trivial:
        return 1
    return 0 if g.free_rank else g.torsion[0]


def _hom_generator(m: int, n: int) -> int | None:
    """Value at 1 of the generator of Hom(Z/m, Z/n); None when the group is 0."""
    if n == 1 or (m != 0 and n == 0) or m == 1:
        return None
    if m == 0:
        return 1
    return n // gcd(m, n)


def _induced(src_hom: FgAbGroup, tgt_hom: FgAbGroup, value: int | None, step: int | None, n: int) -> GroupMorphism:
    if value is None or step is None:
        matrix = IntMatrix.zeros(tgt_hom.ngens, src_hom.ngens)
    else:
        v = value % n if n else value
        if v % step:
            raise ArithmeticError("induced map does not land on the generator lattice")
        matrix = IntMatrix.from_rows([[v // step]], 1)
    return GroupMorphism(src_hom, tgt_hom, matrix)


def hom_pullback(f: GroupMorphism, h: FgAbGroup) -> GroupMorphism:
    """``f^*: Hom(B, H) -> Hom(A, H)`` for ``f: A -> B`` between cyclic groups."""
    m_src, m_tgt, n = _cyclic_order(f.source), _cyclic_order(f.target), _cyclic_order(h)
    src_hom, tgt_hom = hom(f.target, h), hom(f.source, h)
    if src_hom.is_trivial or tgt_hom.is_trivial:
        return GroupMorphism(src_hom, tgt_hom, IntMatrix.zeros(tgt_hom.ngens, src_hom.ngens))
    c = f.matrix[0, 0]
    return _induced(src_hom, tgt_hom, c * _hom_generator(m_tgt, n), _hom_generator(m_src, n), n)


def hom_pushforward(g: FgAbGroup, k: GroupMorphism) -> GroupMorphism:
    """``k_*: Hom(G, H) -> Hom(G, H')`` for ``k: H -> H'`` between cyclic groups."""
    m, n_src, n_tgt = _cyclic_order(g), _cyclic_order(k.source), _cyclic_order(k.target)
    src_hom, tgt_hom = hom(g, k.source), hom(g, k.target)
    if src_hom.is_trivial or tgt_hom.is_trivial:
        return GroupMorphism(src_hom, tgt_hom, IntMatrix.zeros(tgt_hom.ngens, src_hom.ngens))
    c = k.matrix[0, 0]
    return _induced(src_hom, tgt_hom, c * _hom_generator(m, n_src), _hom_generator(m, n_tgt), n_tgt)

"""Classification and counting of binary homotopy operations.

An operation type ``{G1, G2, G3; q1, q2, q3}`` describes natural maps
``pi_q1(X; G1) x pi_q2(X; G2) -> pi_q3(X; G3)``.  This module decides what
can be decided from the type alone: whether it lies in the range where
basic operations are governed by a generalized Whitehead product, whether
they all vanish, the group of basic operations (through the universal
coefficient sequence), and the special shapes (Whitehead and Torsion
products) with their counts, existence and commutation signs.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from math import gcd

from homops import functors
from homops.abgroup import FgAbGroup, order
from homops.errors import DomainError, OutOfRange, Unknown, require_degree
from homops.moorecalc import (
    MooreExpr,
    StemTable,
    UctSequence,
    homotopy_with_coeffs,
    pi_group,
    smash_decompose,
    stem,
)

__all__ = [
    "OperationType",
    "RangeVerdict",
    "RangeCheck",
    "SpecialKind",
    "ExtOperation",
    "SignReport",
    "ClassificationReport",
    "basic_range_check",
    "triviality_check",
    "bo_group",
    "special_kind",
    "count_special_ops",
    "count_whitehead_direct",
    "torsion_exists",
    "ext_ops_enumerate",
    "commutativity_sign",
    "neisendorfer_shift",
    "neisendorfer_degrees",
    "classify",
]


@dataclass(frozen=True)
class OperationType:
    g1: FgAbGroup
    g2: FgAbGroup
    g3: FgAbGroup
    q1: int
    q2: int
    q3: int

    def __post_init__(self):
        for name in ("q1", "q2", "q3"):
            require_degree(getattr(self, name), 2, name)

    @classmethod
    def parse(cls, text: str) -> "OperationType":
        """``"G1,G2,G3;q1,q2,q3"``, e.g. ``"Z/3,Z/3,Z/3;4,4,7"``."""
        m = re.fullmatch(r"\s*\{?([^;]*);([^;}]*)\}?\s*", text)
        if m is None:
            raise ValueError(f"operation type must look like 'G1,G2,G3;q1,q2,q3', got {text!r}")
        groups = [g for g in m.group(1).split(",")]
        degrees = [d for d in m.group(2).split(",")]
        if len(groups) != 3 or len(degrees) != 3:
            raise ValueError(f"need three groups and three degrees, got {text!r}")
        g1, g2, g3 = (FgAbGroup.parse(g) for g in groups)
        q1, q2, q3 = (int(d) for d in degrees)
        return cls(g1, g2, g3, q1, q2, q3)

    @property
    def range_bound(self) -> int:
        """Upper limit for q3 (strict) in the basic-operation range."""
        return self.q1 + self.q2 + min(self.q1, self.q2) - 3

    def __str__(self) -> str:
        return f"{{{self.g1}, {self.g2}, {self.g3}; {self.q1}, {self.q2}, {self.q3}}}"


class RangeVerdict(enum.Enum):
    YES = "yes"
    FREE_RELAXATION = "yes-by-free-relaxation"
    NO = "no"


@dataclass(frozen=True)
class RangeCheck:
    verdict: RangeVerdict
    bound: int
    degrees_ok: bool

    @property
    def in_range(self) -> bool:
        return self.verdict is not RangeVerdict.NO

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "bound": self.bound, "q1_q2_at_least_3": self.degrees_ok}


def basic_range_check(t: OperationType) -> RangeCheck:
    """``q3 < q1 + q2 + min(q1, q2) - 3``, with equality allowed for free G3.

    ``degrees_ok`` records the separate requirement ``q1, q2 >= 3`` under which
    basic operations are defined at all.
    """
    bound = t.range_bound
    if t.q3 < bound:
        verdict = RangeVerdict.YES
    elif t.q3 == bound and t.g3.is_free:
        verdict = RangeVerdict.FREE_RELAXATION
    else:
        verdict = RangeVerdict.NO
    return RangeCheck(verdict, bound, t.q1 >= 3 and t.q2 >= 3)


def _require_range(t: OperationType) -> RangeCheck:
    rc = basic_range_check(t)
    if not rc.in_range:
        raise OutOfRange(f"q3 = {t.q3} is not below q1 + q2 + min(q1, q2) - 3 = {rc.bound}")
    return rc


def triviality_check(t: OperationType) -> bool:
    """True when every basic operation of type ``t`` is zero (``q3 <= q1 + q2 - 3``)."""
    _require_range(t)
    return t.q3 <= t.q1 + t.q2 - 3


def _sigma_smash_bar(t: OperationType) -> MooreExpr:
    """Suspension of M(G1, q1-1) ^ M(G2, q2-1), as a wedge of Moore spaces."""
    bar1 = MooreExpr.atom(t.g1, t.q1 - 1)
    bar2 = MooreExpr.atom(t.g2, t.q2 - 1)
    return smash_decompose(bar1, bar2).suspend()


def bo_group(t: OperationType, table: StemTable | None = None) -> UctSequence:
    """Universal coefficient data of the group of basic operations.

    Basic operations of type ``t`` correspond to pi_q3(S(M1' ^ M2'); G3) with
    ``Mi' = M(Gi, qi - 1)``; the smash is split into Moore spaces first.
    Raises ``Unsupported2Torsion`` when it cannot be.
    """
    rc = _require_range(t)
    if not rc.degrees_ok:
        raise OutOfRange(f"basic operations need q1, q2 >= 3, got q1={t.q1}, q2={t.q2}")
    return homotopy_with_coeffs(_sigma_smash_bar(t), t.q3, t.g3, table)


class SpecialKind(enum.Enum):
    NONE = "none"
    WHITEHEAD = "whitehead"
    TORSION = "torsion"

    @classmethod
    def parse(cls, text: str) -> "SpecialKind":
        aliases = {"w": cls.WHITEHEAD, "whitehead": cls.WHITEHEAD, "t": cls.TORSION, "torsion": cls.TORSION}
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"kind must be w|whitehead|t|torsion, got {text!r}") from None


def special_kind(t: OperationType) -> SpecialKind:
    q = t.q1 + t.q2
    if t.q3 == q - 1 and t.g3 == functors.tensor(t.g1, t.g2) and min(t.q1, t.q2) >= 3:
        return SpecialKind.WHITEHEAD
    if t.q3 == q and t.g3 == functors.tor(t.g1, t.g2) and min(t.q1, t.q2) >= 4:
        return SpecialKind.TORSION
    return SpecialKind.NONE


def torsion_exists(m: int, n: int, q1: int, q2: int) -> bool:
    """Whether a Torsion product of type {Z/m, Z/n; q1, q2} exists.

    It does iff d = gcd(m, n) is odd, or m and n are both even and one of
    them is divisible by 4.
    """
    require_degree(q1, 4, "q1")
    require_degree(q2, 4, "q2")
    if m < 2 or n < 2:
        raise ValueError(f"orders must be >= 2, got m={m}, n={n}")
    d = gcd(m, n)
    return d % 2 == 1 or (m % 2 == 0 and n % 2 == 0 and (m % 4 == 0 or n % 4 == 0))


@dataclass(frozen=True)
class SpecialCount:
    kind: SpecialKind
    count: int | Unknown
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        c = self.count
        return {
            "kind": self.kind.value,
            "count": {"unknown": c.reason} if isinstance(c, Unknown) else c,
            "notes": list(self.notes),
        }


def count_special_ops(t: OperationType, table: StemTable | None = None) -> SpecialCount:
    """Number of Whitehead or Torsion products of type ``t``.

    Equals ``|Ext(G3, pi_{q3+2}(M1 ^ M2))|``.  For Torsion products this
    assumes the Hurewicz map in degree q3 + 1 of the smash is an
    isomorphism; the report says so.
    """
    kind = special_kind(t)
    if kind is SpecialKind.NONE:
        raise OutOfRange(f"{t} is neither a Whitehead nor a Torsion type")
    notes = []
    if t.g3.is_trivial:
        notes.append("coefficient group is trivial: only the zero operation exists")
        return SpecialCount(kind, 1, tuple(notes))
    if kind is SpecialKind.TORSION:
        notes.append("count assumes the Hurewicz map pi_{q3+1}(M1 ^ M2) -> H_{q3+1} is an isomorphism")
        if t.g1.is_cyclic and t.g2.is_cyclic and t.g1.is_finite and t.g2.is_finite:
            m, n = t.g1.torsion[0], t.g2.torsion[0]
            if not torsion_exists(m, n, t.q1, t.q2):
                notes.append(f"no Torsion product of type {{Z/{m}, Z/{n}; {t.q1}, {t.q2}}} exists")
                return SpecialCount(kind, 0, tuple(notes))
        else:
            notes.append("existence criterion only applies to cyclic groups; not checked")
    smash = smash_decompose(MooreExpr.atom(t.g1, t.q1), MooreExpr.atom(t.g2, t.q2))
    pi = pi_group(smash, t.q3 + 2, table)
    if isinstance(pi, Unknown):
        return SpecialCount(kind, pi, tuple(notes))
    notes.append(f"pi_{t.q3 + 2}(M1 ^ M2) = {pi}")
    return SpecialCount(kind, order(functors.ext(t.g3, pi)), tuple(notes))


def count_whitehead_direct(
    g1: FgAbGroup, g2: FgAbGroup, q1: int, q2: int, table: StemTable | None = None
) -> int | Unknown:
    """``|Ext(G3, stem_1(G3) + Tor(G1, G2))|`` with ``G3 = G1 (x) G2``, no space calculus."""
    g3 = functors.tensor(g1, g2)
    s1 = stem(g3, 1, q1 + q2, table)
    if isinstance(s1, Unknown):
        return s1
    return order(functors.ext(g3, s1 + functors.tor(g1, g2)))


@dataclass(frozen=True)
class ExtOperation:
    """The operation whose universal element is ``[i1, i2] o (index * p)``.

    ``p: M(Z/k, q-2) -> S^(q-1)`` collapses the bottom cell, ``q = q1 + q2``.
    """

    index: int
    k: int
    q1: int
    q2: int

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    @property
    def op_type(self) -> OperationType:
        return OperationType(
            FgAbGroup.free(), FgAbGroup.free(), FgAbGroup.cyclic(self.k),
            self.q1, self.q2, self.q1 + self.q2 - 2,
        )

    @property
    def universal_element(self) -> str:
        q = self.q1 + self.q2
        return f"[i1,i2] o ({self.index}p), p: M(Z/{self.k},{q - 2}) -> S^{q - 1}"

    def to_dict(self) -> dict:
        return {"index": self.index, "k": self.k, "type": str(self.op_type),
                "universal_element": self.universal_element, "zero": self.is_zero}


def ext_ops_enumerate(k: int, q1: int, q2: int) -> list[ExtOperation]:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    require_degree(q1, 3, "q1")
    require_degree(q2, 3, "q2")
    return [ExtOperation(i, k, q1, q2) for i in range(k)]


@dataclass(frozen=True)
class SignReport:
    kind: SpecialKind
    q1: int
    q2: int
    epsilon: int

    @property
    def sign(self) -> int:
        return -1 if self.epsilon % 2 else 1

    @property
    def switch(self) -> str:
        op = "(x)" if self.kind is SpecialKind.WHITEHEAD else "*"
        return f"t: G2 {op} G1 -> G1 {op} G2"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "q1": self.q1, "q2": self.q2,
                "epsilon": self.epsilon, "sign": self.sign, "switch": self.switch}


def commutativity_sign(kind: SpecialKind | str, q1: int, q2: int) -> SignReport:
    """Sign relating T(a, b) and the swapped operation: (-1)^(q1 q2), plus one for Torsion."""
    if isinstance(kind, str):
        kind = SpecialKind.parse(kind)
    if kind is SpecialKind.NONE:
        raise ValueError("commutativity sign needs a Whitehead or Torsion kind")
    eps = q1 * q2 + (1 if kind is SpecialKind.TORSION else 0)
    return SignReport(kind, q1, q2, eps)


def neisendorfer_shift(n: int, direction: str) -> int:
    """Reindex between Moore-space and co-Moore-space coefficients.

    ``pi_n(X; Z/p^k) = pi'_{n+1}(X; Z/p^k)``, so ``to_comoore`` adds one and
    ``to_moore`` subtracts one.
    """
    require_degree(n, 2)
    d = direction.replace("-", "_").lower()
    if d in ("to_comoore", "tocomoore"):
        return n + 1
    if d in ("to_moore", "tomoore"):
        require_degree(n - 1, 2, "shifted degree")
        return n - 1
    raise ValueError(f"direction must be to_comoore or to_moore, got {direction!r}")


def neisendorfer_degrees(q1: int, q2: int) -> tuple[int, int, int]:
    """Degrees {q1, q2, q1+q2} of the mod p^k product, re-indexed by co-Moore spaces."""
    return tuple(neisendorfer_shift(q, "to_comoore") for q in (q1, q2, q1 + q2))


@dataclass(frozen=True)
class ClassificationReport:
    op_type: OperationType
    range_check: RangeCheck
    bi_additive_forced: bool
    trivially_zero: bool
    special_kind: SpecialKind
    bo: UctSequence | None
    special_count: SpecialCount | None
    errors: tuple[tuple[str, str], ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "type": str(self.op_type),
            "in_basic_range": self.range_check.verdict.value,
            "range": self.range_check.to_dict(),
            "bi_additive_forced": self.bi_additive_forced,
            "trivially_zero": self.trivially_zero,
            "special_kind": self.special_kind.value,
            "bo": self.bo.to_dict() if self.bo is not None else None,
            "special_count": self.special_count.to_dict() if self.special_count is not None else None,
            "errors": [{"error": name, "message": msg} for name, msg in self.errors],
            "notes": list(self.notes),
        }


def classify(t: OperationType, table: StemTable | None = None) -> ClassificationReport:
    rc = basic_range_check(t)
    notes = [
        "all operations of this type: O = pi_q3(M1 v M2; G3), via the universal element (not computed)",
    ]
    errors: list[tuple[str, str]] = []
    forced = rc.in_range and rc.degrees_ok
    if not rc.degrees_ok:
        notes.append("basic operations require q1, q2 >= 3")
    if forced:
        notes.append("in range: basic <=> j_# T(i1, i2) = 0 <=> bi-additive <=> T(a,0) = T(0,b) = 0")
    else:
        notes.append("out of range: only basic <=> j_# T(i1, i2) = 0 and bi-additive => T(a,0) = 0 => basic hold")
    trivially_zero = rc.in_range and t.q3 <= t.q1 + t.q2 - 3
    if rc.in_range and t.q3 == t.q1 + t.q2 - 2:
        notes.append("q3 = q1 + q2 - 2: non-trivial basic operations can occur (e.g. Ext operations)")

    bo = None
    if forced:
        try:
            bo = bo_group(t, table)
        except DomainError as exc:
            errors.append((exc.name, str(exc)))
    kind = special_kind(t)
    count = None
    if kind is not SpecialKind.NONE:
        try:
            count = count_special_ops(t, table)
        except DomainError as exc:
            errors.append((exc.name, str(exc)))
    return ClassificationReport(t, rc, forced, trivially_zero, kind, bo, count, tuple(errors), tuple(notes))

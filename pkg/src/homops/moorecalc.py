"""Moore spaces under wedge, suspension and smash, and their low homotopy.

A :class:`MooreExpr` is a wedge of atoms ``M(G, n)``, kept in a normal form:
atoms of equal degree are merged (``M(G,n) v M(H,n) = M(G+H, n)``), trivial
groups are dropped, and atoms are sorted by degree.  The empty wedge is a
point.

Homotopy groups come from a :class:`StemTable` of stable stems, and are only
reported where the wedge splits and the stems are stable; everything else is
returned as :class:`~homops.errors.Unknown`.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from sympy import factorint

from homops import functors
from homops.abgroup import FgAbGroup, IntMatrix, direct_sum, order
from homops.chains import ChainComplex, moore_complex
from homops.errors import DegreeTooSmall, Unknown, Unsupported2Torsion, require_degree

__all__ = [
    "MooreAtom",
    "MooreExpr",
    "StemEntry",
    "StemTable",
    "UctSequence",
    "default_stem_table",
    "smash_decompose",
    "stem",
    "pi_group",
    "homotopy_with_coeffs",
]


@dataclass(frozen=True, order=True)
class MooreAtom:
    degree: int
    group: FgAbGroup

    def __post_init__(self):
        require_degree(self.degree, 2)

    def __str__(self) -> str:
        return f"{self.group}@{self.degree}"


@dataclass(frozen=True)
class MooreExpr:
    atoms: tuple[MooreAtom, ...] = ()

    def __post_init__(self):
        merged: dict[int, FgAbGroup] = {}
        for a in self.atoms:
            merged[a.degree] = direct_sum(merged.get(a.degree, FgAbGroup.trivial()), a.group)
        atoms = tuple(MooreAtom(n, g) for n, g in sorted(merged.items()) if not g.is_trivial)
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def atom(cls, group: FgAbGroup, degree: int) -> "MooreExpr":
        return cls((MooreAtom(degree, group),))

    @classmethod
    def point(cls) -> "MooreExpr":
        return cls()

    @classmethod
    def parse(cls, text: str) -> "MooreExpr":
        """``<group>@<degree> | <group>@<degree> ...``; ``*`` is the point."""
        text = text.strip()
        if text == "*":
            return cls()
        atoms = []
        for part in text.split("|"):
            m = re.fullmatch(r"\s*(.+?)\s*@\s*(\d+)\s*", part)
            if m is None:
                raise ValueError(f"expected <group>@<degree>, got {part.strip()!r}")
            atoms.append(MooreAtom(int(m.group(2)), FgAbGroup.parse(m.group(1))))
        return cls(tuple(atoms))

    @property
    def is_point(self) -> bool:
        return not self.atoms

    def wedge(self, other: "MooreExpr") -> "MooreExpr":
        return MooreExpr(self.atoms + other.atoms)

    def suspend(self, times: int = 1) -> "MooreExpr":
        return MooreExpr(tuple(MooreAtom(a.degree + times, a.group) for a in self.atoms))

    def smash(self, other: "MooreExpr") -> "MooreExpr":
        return smash_decompose(self, other)

    def homology(self, n: int) -> FgAbGroup:
        for a in self.atoms:
            if a.degree == n:
                return a.group
        return FgAbGroup.trivial()

    def to_complex(self) -> ChainComplex:
        """Reduced cellular chains: the direct sum of the atoms' Moore complexes."""
        ranks: dict[int, int] = {}
        boundaries: dict[int, IntMatrix] = {}
        for a in self.atoms:
            cx = moore_complex(a.group, a.degree)
            for n, r in cx.ranks.items():
                ranks[n] = ranks.get(n, 0) + r
        # atoms live in distinct degrees, but an atom's top cells can share a
        # degree with the next atom's bottom cells: build block-diagonal maps
        for n in set(ranks):
            rows = [[0] * ranks.get(n, 0) for _ in range(ranks.get(n - 1, 0))]
            r0 = c0 = 0
            for a in self.atoms:
                cx = moore_complex(a.group, a.degree)
                m = cx.boundary(n)
                for i in range(m.rows):
                    for j in range(m.cols):
                        rows[r0 + i][c0 + j] = m[i, j]
                r0 += cx.rank(n - 1)
                c0 += cx.rank(n)
            boundaries[n] = IntMatrix.from_rows(rows, ranks.get(n, 0))
        return ChainComplex(ranks, boundaries)

    def __str__(self) -> str:
        return " | ".join(str(a) for a in self.atoms) if self.atoms else "*"


def smash_decompose(a: MooreExpr | MooreAtom, b: MooreExpr | MooreAtom) -> MooreExpr:
    """Split a smash of Moore spaces into a wedge of Moore spaces.

    ``M(G1,q1) ^ M(G2,q2) = M(G1 (x) G2, q1+q2) v M(Tor(G1,G2), q1+q2+1)``,
    valid as long as at most one of G1, G2 has 2-torsion.  Wedges are
    handled by distributing.
    """
    left = a.atoms if isinstance(a, MooreExpr) else (a,)
    right = b.atoms if isinstance(b, MooreExpr) else (b,)
    out = []
    for x, y in itertools.product(left, right):
        if x.group.has_2_torsion and y.group.has_2_torsion:
            raise Unsupported2Torsion(
                f"both {x.group} and {y.group} have 2-torsion; the smash of "
                f"M({x.group},{x.degree}) and M({y.group},{y.degree}) is not split"
            )
        q = x.degree + y.degree
        out.append(MooreAtom(q, functors.tensor(x.group, y.group)))
        out.append(MooreAtom(q + 1, functors.tor(x.group, y.group)))
    return MooreExpr(tuple(out))


@dataclass(frozen=True)
class StemEntry:
    cls: str
    stem: int
    value: FgAbGroup
    provenance: str


_RECORD = re.compile(
    r"class\s*=\s*(?P<cls>[^,]+?)\s*,\s*stem\s*=\s*(?P<stem>\d+)\s*,"
    r"\s*value\s*=\s*(?P<value>[^,]+?)\s*,\s*provenance\s*=\s*(?P<prov>.*)$"
)


@dataclass(frozen=True)
class StemTable:
    """Stable stems keyed by summand class (``Z``, ``even``, ``odd`` or ``Z/p^e``)."""

    entries: dict[tuple[str, int], StemEntry] = field(default_factory=dict)
    version: str = "unversioned"

    @classmethod
    def loads(cls, text: str) -> "StemTable":
        entries = {}
        version = "unversioned"
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if line.startswith("#"):
                m = re.match(r"#\s*version:\s*(\S+)", line)
                if m:
                    version = m.group(1)
                continue
            if not line:
                continue
            m = _RECORD.match(line)
            if m is None:
                raise ValueError(f"line {lineno}: malformed stem record {line!r}")
            klass = _normalize_class(m.group("cls"), lineno)
            k = int(m.group("stem"))
            if k == 0:
                raise ValueError(f"line {lineno}: stem 0 is fixed by the Hurewicz theorem")
            entries[(klass, k)] = StemEntry(klass, k, FgAbGroup.parse(m.group("value")), m.group("prov").strip())
        return cls(entries, version)

    @classmethod
    def load(cls, path: str | Path) -> "StemTable":
        return cls.loads(Path(path).read_text())

    def merged(self, other: "StemTable") -> "StemTable":
        """Entries of ``other`` override ours."""
        return StemTable({**self.entries, **other.entries}, f"{self.version}+{other.version}")

    def lookup(self, cyclic_order: int, k: int) -> StemEntry | None:
        """Entry for a free (order 0) or prime-power cyclic summand."""
        if cyclic_order == 0:
            return self.entries.get(("Z", k))
        specific = self.entries.get((f"Z/{cyclic_order}", k))
        if specific is not None:
            return specific
        return self.entries.get(("even" if cyclic_order % 2 == 0 else "odd", k))

    def dumps(self) -> str:
        lines = [f"# version: {self.version}"]
        for (klass, k), e in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            lines.append(f"class={klass}, stem={k}, value={e.value}, provenance={e.provenance}")
        return "\n".join(lines) + "\n"


def _normalize_class(text: str, lineno: int) -> str:
    text = text.strip()
    if text in ("Z", "even", "odd"):
        return text
    m = re.fullmatch(r"Z\s*/\s*(\d+)", text)
    if m:
        n = int(m.group(1))
        if n >= 2 and len(factorint(n)) == 1:
            return f"Z/{n}"
    raise ValueError(f"line {lineno}: class must be Z, even, odd or Z/<prime power>, got {text!r}")


def default_stem_table() -> StemTable:
    return StemTable.loads(resources.files("homops").joinpath("data/stems.txt").read_text())


_DEFAULT: StemTable | None = None


def _table(table: StemTable | None) -> StemTable:
    global _DEFAULT
    if table is not None:
        return table
    if _DEFAULT is None:
        _DEFAULT = default_stem_table()
    return _DEFAULT


def stem(g: FgAbGroup, k: int, n: int, table: StemTable | None = None) -> FgAbGroup | Unknown:
    """pi_{n+k}(M(G, n)), assembled over the primary summands of G."""
    if k < 0:
        raise ValueError("stem index must be non-negative")
    if k == 0:
        require_degree(n, 2)
        return g
    require_degree(n, 3, "base degree for a positive stem")
    if n < k + 2:
        return Unknown(f"stem {k} of M({g},{n}) lies outside the stable range n >= k + 2")
    table = _table(table)
    out = FgAbGroup.trivial()
    for o in [0] * g.free_rank + g.primary_decomposition():
        entry = table.lookup(o, k)
        if entry is None:
            what = "Z" if o == 0 else f"Z/{o}"
            return Unknown(f"stem {k} not tabulated for summand {what}")
        out = out + entry.value
    return out


def pi_group(x: MooreExpr, n: int, table: StemTable | None = None) -> FgAbGroup | Unknown:
    """pi_n of a wedge of Moore spaces, where the wedge splits additively."""
    if len(x.atoms) > 1:
        limit = min(a.degree + b.degree - 2 for a, b in itertools.combinations(x.atoms, 2))
        if n > limit:
            return Unknown(f"pi_{n} of {x} is outside the split range n <= {limit}")
    out = FgAbGroup.trivial()
    for a in x.atoms:
        k = n - a.degree
        if k < 0:
            continue
        try:
            part = stem(a.group, k, a.degree, table)
        except DegreeTooSmall as exc:
            return Unknown(f"pi_{n}(M({a.group},{a.degree})) is unstable: {exc}")
        if isinstance(part, Unknown):
            return part
        out = out + part
    return out


@dataclass(frozen=True)
class UctSequence:
    """``0 -> Ext(G, pi_{n+1} X) -> pi_n(X; G) -> Hom(G, pi_n X) -> 0``.

    Only the cardinality of the middle group is recorded: the sequence
    need not split, so its isomorphism class is not determined.
    """

    space: MooreExpr
    degree: int
    coeff: FgAbGroup
    pi_n: FgAbGroup | Unknown
    pi_n_plus_1: FgAbGroup | Unknown
    ext_term: FgAbGroup | None
    hom_term: FgAbGroup | None
    middle_cardinality: int | float | Unknown
    notes: tuple[str, ...] = ()

    @property
    def is_known(self) -> bool:
        return not isinstance(self.middle_cardinality, Unknown)

    def to_dict(self) -> dict:
        def g(v):
            if v is None:
                return None
            return str(v) if isinstance(v, FgAbGroup) else {"unknown": v.reason}

        card = self.middle_cardinality
        if isinstance(card, Unknown):
            card_out = {"unknown": card.reason}
        elif card == math.inf:
            card_out = "infinite"
        else:
            card_out = card
        return {
            "space": str(self.space),
            "degree": self.degree,
            "coeff": str(self.coeff),
            "pi_n": g(self.pi_n),
            "pi_n_plus_1": g(self.pi_n_plus_1),
            "ext_term": g(self.ext_term),
            "hom_term": g(self.hom_term),
            "middle_cardinality": card_out,
            "notes": list(self.notes),
        }


def homotopy_with_coeffs(
    x: MooreExpr, n: int, g: FgAbGroup, table: StemTable | None = None
) -> UctSequence:
    """Universal coefficient data for pi_n(X; G) with X a wedge of Moore spaces."""
    require_degree(n, 2)
    pn = pi_group(x, n, table)
    pn1 = pi_group(x, n + 1, table)
    ext_term = None if isinstance(pn1, Unknown) else functors.ext(g, pn1)
    hom_term = None if isinstance(pn, Unknown) else functors.hom(g, pn)
    if isinstance(pn, Unknown):
        card: int | float | Unknown = pn
    elif isinstance(pn1, Unknown):
        card = pn1
    else:
        card = order(ext_term) * order(hom_term)
    notes = ("middle group determined up to extension; only its order is reported",)
    return UctSequence(x, n, g, pn, pn1, ext_term, hom_term, card, notes)


"""Property sweeps behind ``homops verify all``.

Each sweep returns a :class:`SweepResult`; sizes are parameters so the CLI
can run a quick pass and the test-suite the full one.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from homops import functors, oracle
from homops.abgroup import FgAbGroup
from homops.chains import homology, kunneth_check, moore_complex, tensor_complex
from homops.errors import Unsupported2Torsion
from homops.moorecalc import MooreExpr, homotopy_with_coeffs, smash_decompose
from homops.opsclassify import (
    OperationType,
    SpecialKind,
    bo_group,
    commutativity_sign,
    count_special_ops,
    count_whitehead_direct,
    ext_ops_enumerate,
    torsion_exists,
)
from homops import pointmaps

__all__ = [
    "SweepResult",
    "finite_groups",
    "random_group",
    "functor_oracle_sweep",
    "kunneth_sweep",
    "smash_consistency_sweep",
    "torsion_table_sweep",
    "counting_sweep",
    "uct_sweep",
    "pointmap_sweep",
    "sign_sweep",
    "run_all",
]


@dataclass
class SweepResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "seconds": round(self.seconds, 3), "detail": self.detail}


def _timed(name: str, body: Callable[[], tuple[bool, int, str]]) -> SweepResult:
    start = time.perf_counter()
    ok, cases, detail = body()
    return SweepResult(name, ok, cases, time.perf_counter() - start, detail)


def finite_groups(max_factor: int = 12, max_factors: int = 3) -> list[FgAbGroup]:
    """Every finite group whose invariant-factor chain has length <= max_factors, entries <= max_factor."""
    chains: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_factors):
        nxt = []
        for ch in frontier:
            lo = ch[-1] if ch else 1
            for d in range(max(2, lo), max_factor + 1):
                if d % lo == 0:
                    nxt.append(ch + (d,))
        chains.extend(nxt)
        frontier = nxt
    return [FgAbGroup(0, ch) for ch in chains]


def random_group(rng: random.Random, max_summands: int = 3, max_factor: int = 12) -> FgAbGroup:
    """Random direct sum of 1..max_summands cyclic summands, each Z or Z/n with n <= max_factor."""
    k = rng.randint(1, max_summands)
    return FgAbGroup.from_orders(rng.choice([0] + list(range(2, max_factor + 1))) for _ in range(k))


def functor_oracle_sweep(groups: list[FgAbGroup] | None = None) -> SweepResult:
    groups = finite_groups() if groups is None else groups

    def body():
        bad = []
        for g, h in itertools.product(groups, groups):
            pairs = (
                ("hom", functors.hom(g, h), oracle.oracle_hom(g, h)),
                ("ext", functors.ext(g, h), oracle.oracle_ext(g, h)),
                ("tensor", functors.tensor(g, h), oracle.oracle_tensor(g, h)),
                ("tor", functors.tor(g, h), oracle.oracle_tor(g, h)),
            )
            for name, closed, brute in pairs:
                if closed != brute:
                    bad.append(f"{name}({g}, {h}): {closed} vs oracle {brute}")
            if oracle.oracle_hom_count(g, h) != oracle.oracle_hom_count(h, g):
                bad.append(f"hom count asymmetry for ({g}, {h})")
        n = len(groups) ** 2
        return not bad, n, "; ".join(bad[:3]) or f"{n} pairs agree"

    return _timed("functor/oracle agreement", body)


def _kunneth_family(count: int, seed: int) -> Iterator[tuple[FgAbGroup, int, FgAbGroup, int]]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_group(rng), rng.randint(2, 6), random_group(rng), rng.randint(2, 6)


def kunneth_sweep(count: int = 200, seed: int = 2024) -> SweepResult:
    def body():
        bad = [r for r in (kunneth_check(*args) for args in _kunneth_family(count, seed)) if not r.passed]
        detail = f"first failure: {bad[0].to_dict()}" if bad else f"{count} random pairs pass"
        return not bad, count, detail

    return _timed("Kunneth sweep", body)


def smash_consistency_sweep(count: int = 200, seed: int = 7) -> SweepResult:
    """Tensor-complex homology equals the homology of the split wedge, degree by degree."""

    def body():
        bad, refused, supported = [], 0, 0
        for g1, q1, g2, q2 in _kunneth_family(count, seed):
            a, b = MooreExpr.atom(g1, q1), MooreExpr.atom(g2, q2)
            try:
                wedge = smash_decompose(a, b)
            except Unsupported2Torsion:
                refused += 1
                if not (g1.has_2_torsion and g2.has_2_torsion):
                    bad.append(f"wrongly refused {g1}, {g2}")
                continue
            if g1.has_2_torsion and g2.has_2_torsion:
                bad.append(f"accepted double 2-torsion {g1}, {g2}")
            supported += 1
            cx = tensor_complex(moore_complex(g1, q1), moore_complex(g2, q2))
            wcx = wedge.to_complex()
            for n in range(q1 + q2 - 1, q1 + q2 + 3):
                h = homology(cx, n)
                if h != wedge.homology(n) or h != homology(wcx, n):
                    bad.append(f"{g1}@{q1} ^ {g2}@{q2} at degree {n}: {h} vs {wedge.homology(n)}")
        return not bad, supported + refused, "; ".join(bad[:3]) or f"{supported} split, {refused} refused"

    return _timed("smash decomposition consistency", body)


def _torsion_sentence(m: int, n: int) -> bool:
    d = math.gcd(m, n)
    clause1 = d % 2 == 1
    clause2 = m % 2 == 0 and n % 2 == 0 and (m % 4 == 0 or n % 4 == 0)
    return clause1 or clause2


def torsion_table_sweep(limit: int = 24) -> SweepResult:
    def body():
        bad = [(m, n) for m in range(2, limit + 1) for n in range(2, limit + 1)
               if torsion_exists(m, n, 4, 4) != _torsion_sentence(m, n)]
        odd_prime_powers = [3, 5, 7, 9, 11, 13, 17, 19, 23]
        bad += [(p, p) for p in odd_prime_powers if not torsion_exists(p, p, 4, 4)]
        cases = (limit - 1) ** 2
        return not bad, cases, f"mismatches: {bad[:5]}" if bad else f"{cases} cases match"

    return _timed("Torsion existence table", body)


def counting_sweep() -> SweepResult:
    def body():
        bad = []
        for k in range(2, 13):
            ops = ext_ops_enumerate(k, 3, 4)
            card = bo_group(ops[0].op_type).middle_cardinality
            if len(ops) != k or card != k:
                bad.append(f"Ext ops k={k}: {len(ops)} descriptors, BO order {card}")
        for q1, q2 in itertools.product(range(3, 8), repeat=2):
            t = OperationType(FgAbGroup.free(), FgAbGroup.free(), FgAbGroup.free(), q1, q2, q1 + q2 - 1)
            if count_special_ops(t).count != 1:
                bad.append(f"classical Whitehead count at ({q1},{q2})")
        z3 = FgAbGroup.cyclic(3)
        pipe = count_special_ops(OperationType(z3, z3, z3, 4, 4, 7)).count
        direct = count_whitehead_direct(z3, z3, 4, 4)
        if not (pipe == direct == 3):
            bad.append(f"Z/3 Whitehead count: pipeline {pipe}, direct {direct}")
        return not bad, 11 + 25 + 1, "; ".join(bad) or "all counts as expected"

    return _timed("counting theorems", body)


def uct_sweep(count: int = 300, seed: int = 11) -> SweepResult:
    def body():
        rng = random.Random(seed)
        bad, known = [], 0
        for _ in range(count):
            atoms = [(random_group(rng, 2, 12), rng.randint(3, 9)) for _ in range(rng.randint(1, 2))]
            x = MooreExpr(tuple(MooreExpr.atom(g, n).atoms[0] for g, n in atoms if not g.is_trivial))
            n = rng.randint(2, 11)
            seq = homotopy_with_coeffs(x, n, random_group(rng, 2, 12))
            if seq.ext_term is None or seq.hom_term is None:
                continue
            if seq.ext_term.is_finite and seq.hom_term.is_finite:
                known += 1
                expected = math.prod(seq.ext_term.torsion) * math.prod(seq.hom_term.torsion)
                if seq.middle_cardinality != expected:
                    bad.append(f"{x} n={n}: {seq.middle_cardinality} vs {expected}")
        return not bad, known, "; ".join(bad[:3]) or f"{known} finite sequences multiply"

    return _timed("UCT cardinality law", body)


def pointmap_sweep(denominator: int = 8, random_samples: int = 100) -> SweepResult:
    def body():
        checks = pointmaps.check_identities(denominator, random_samples)
        failed = [c for c in checks if not c.passed]
        detail = "; ".join(f"{c.name}: {c.failures}/{c.cases} fail, e.g. {c.example}" for c in failed)
        return not failed, sum(c.cases for c in checks), detail or "all identities exact"

    return _timed("pointwise map identities", body)


def sign_sweep() -> SweepResult:
    def body():
        bad = []
        for q1, q2 in itertools.product(range(2, 11), repeat=2):
            w = commutativity_sign(SpecialKind.WHITEHEAD, q1, q2)
            t = commutativity_sign(SpecialKind.TORSION, q1, q2)
            if w.sign != (-1) ** (q1 * q2) or t.sign != -w.sign:
                bad.append((q1, q2))
        return not bad, 2 * 81, f"bad: {bad[:5]}" if bad else "162 signs match"

    return _timed("commutativity signs", body)


def run_all(quick: bool = False) -> list[SweepResult]:
    if quick:
        return [
            functor_oracle_sweep(finite_groups(8, 2)),
            kunneth_sweep(40),
            smash_consistency_sweep(40),
            torsion_table_sweep(),
            counting_sweep(),
            uct_sweep(60),
            pointmap_sweep(4, 20),
            sign_sweep(),
        ]
    return [
        functor_oracle_sweep(),
        kunneth_sweep(),
        smash_consistency_sweep(),
        torsion_table_sweep(),
        counting_sweep(),
        uct_sweep(),
        pointmap_sweep(),
        sign_sweep(),
    ]

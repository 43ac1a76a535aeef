"""Exact coordinate evaluation of the maps comparing joins, suspensions and smashes.

Points of the abstract spaces A and B are opaque tokens; only the interval
coordinates are computed on, in exact rational arithmetic.  Conventions:

* join ``A * B``: triples ``(a, b, t)`` with ``(a, b, 0) ~ (a, b', 0)``,
  ``(a, b, 1) ~ (a', b, 1)`` and the line ``(*, *, t)`` as basepoint;
* reduced suspension ``SX``: pairs ``(x, u)`` with ``u in {0, 1}`` or
  ``x = *`` collapsed to the basepoint;
* ``SA ^ SB``: pairs of suspension points, collapsed when either is the
  basepoint.

The maps evaluated here::

    Lambda((a,b,t), u) = ((a, u), (b, 1 - 2t(1-u)))          t <= 1/2
                         ((a, 1 - 2(1-t)(1-u)), (b, u))       t >= 1/2
    Phi_s((a,b,t), u)  = ((a, (1-s)u + st), (b, (1-s)(1-2t(1-u)) + su))     t <= 1/2
                         ((a, (1-s)(1-2(1-t)(1-u)) + st), (b, u))            t >= 1/2
    sigma((a,b), t, u) = ((a, t), (b, u))
    mu'(a, b, t)       = (a ^ b, t)

``check_identities`` runs the pointwise identities over a rational grid and
reports each one separately.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

__all__ = [
    "AbstractPoint",
    "BASE",
    "JoinPoint",
    "SuspensionPoint",
    "ProductPoint",
    "SigmaSmashPoint",
    "eval_lambda",
    "eval_lambda_bar",
    "lambda_branches",
    "eval_phi",
    "phi_branches",
    "eval_sigma",
    "sigma_inverse",
    "eval_mu_prime",
    "suspend",
    "sigma_mu_prime",
    "IdentityCheck",
    "farey",
    "check_identities",
]

HALF = Fraction(1, 2)


def _unit(x) -> Fraction:
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"coordinate {x} outside [0, 1]")
    return x


@dataclass(frozen=True, eq=False)
class AbstractPoint:
    token: str
    is_basepoint: bool = False

    def __eq__(self, other):
        if not isinstance(other, AbstractPoint):
            return NotImplemented
        if self.is_basepoint or other.is_basepoint:
            return self.is_basepoint and other.is_basepoint
        return self.token == other.token

    def __hash__(self):
        return hash("*") if self.is_basepoint else hash(self.token)

    def __repr__(self):
        return "*" if self.is_basepoint else self.token


BASE = AbstractPoint("*", True)


@dataclass(frozen=True, eq=False)
class JoinPoint:
    a: AbstractPoint
    b: AbstractPoint
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", _unit(self.t))

    def key(self):
        a, b, t = self.a, self.b, self.t
        if a.is_basepoint and (b.is_basepoint or t == 0):
            return BASE
        if b.is_basepoint and t == 1:
            return BASE
        if t == 0:
            return ("t=0", a)
        if t == 1:
            return ("t=1", b)
        return (a, b, t)

    def __eq__(self, other):
        return isinstance(other, JoinPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True, eq=False)
class SuspensionPoint:
    x: AbstractPoint
    u: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", _unit(self.u))

    @property
    def is_basepoint(self) -> bool:
        return self.x.is_basepoint or self.u in (0, 1)

    def key(self):
        return BASE if self.is_basepoint else (self.x, self.u)

    def __eq__(self, other):
        return isinstance(other, SuspensionPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "*" if self.is_basepoint else f"({self.x!r},{self.u})"


@dataclass(frozen=True, eq=False)
class ProductPoint:
    """Point of SA x SB; ``==`` is equality there, ``smash_eq`` in SA ^ SB."""

    first: SuspensionPoint
    second: SuspensionPoint

    def __eq__(self, other):
        return isinstance(other, ProductPoint) and (self.first, self.second) == (other.first, other.second)

    def __hash__(self):
        return hash((self.first, self.second))

    @property
    def is_smash_basepoint(self) -> bool:
        return self.first.is_basepoint or self.second.is_basepoint

    def smash_key(self):
        return BASE if self.is_smash_basepoint else (self.first.key(), self.second.key())

    def smash_eq(self, other: "ProductPoint") -> bool:
        return self.smash_key() == other.smash_key()

    def __repr__(self):
        return f"({self.first!r},{self.second!r})"


@dataclass(frozen=True, eq=False)
class SigmaSmashPoint:
    """Point of S^k(A ^ B): ``(a ^ b, c_1, ..., c_k)``."""

    a: AbstractPoint
    b: AbstractPoint
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_unit(c) for c in self.coords))

    @property
    def is_basepoint(self) -> bool:
        return self.a.is_basepoint or self.b.is_basepoint or any(c in (0, 1) for c in self.coords)

    def key(self):
        return BASE if self.is_basepoint else (self.a, self.b, self.coords)

    def __eq__(self, other):
        return isinstance(other, SigmaSmashPoint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _lambda_lower(p: JoinPoint, u: Fraction) -> ProductPoint:
    return ProductPoint(SuspensionPoint(p.a, u), SuspensionPoint(p.b, 1 - 2 * p.t * (1 - u)))


def _lambda_upper(p: JoinPoint, u: Fraction) -> ProductPoint:
    return ProductPoint(SuspensionPoint(p.a, 1 - 2 * (1 - p.t) * (1 - u)), SuspensionPoint(p.b, u))


def lambda_branches(p: JoinPoint, u) -> tuple[ProductPoint | None, ProductPoint | None]:
    """Values of the lower and upper formulas (``None`` where a branch does not apply)."""
    u = _unit(u)
    lower = _lambda_lower(p, u) if p.t <= HALF else None
    upper = _lambda_upper(p, u) if p.t >= HALF else None
    return lower, upper


def _pick(lower, upper, what):
    if lower is not None and upper is not None and lower != upper:
        raise ArithmeticError(f"{what}: branches disagree at t = 1/2: {lower!r} vs {upper!r}")
    return lower if lower is not None else upper


def eval_lambda(p: JoinPoint, u) -> ProductPoint:
    """Lambda on the cone C(A * B), landing in SA x SB; u is the cone coordinate."""
    return _pick(*lambda_branches(p, u), "Lambda")


def eval_lambda_bar(p: JoinPoint, u) -> ProductPoint:
    """The induced map S(A * B) -> SA ^ SB; same formula, compare with ``smash_eq``."""
    return eval_lambda(p, u)


def phi_branches(p: JoinPoint, u, s) -> tuple[ProductPoint | None, ProductPoint | None]:
    u, s = _unit(u), _unit(s)
    t = p.t
    lower = upper = None
    if t <= HALF:
        lower = ProductPoint(
            SuspensionPoint(p.a, (1 - s) * u + s * t),
            SuspensionPoint(p.b, (1 - s) * (1 - 2 * t * (1 - u)) + s * u),
        )
    if t >= HALF:
        upper = ProductPoint(
            SuspensionPoint(p.a, (1 - s) * (1 - 2 * (1 - t) * (1 - u)) + s * t),
            SuspensionPoint(p.b, u),
        )
    return lower, upper


def eval_phi(p: JoinPoint, u, s) -> ProductPoint:
    """The straight-line homotopy Phi_s on S(A * B) at time s."""
    return _pick(*phi_branches(p, u, s), "Phi")


def eval_mu_prime(p: JoinPoint) -> SigmaSmashPoint:
    """A * B -> S(A ^ B), collapsing (A x * x I) u (* x B x I)."""
    return SigmaSmashPoint(p.a, p.b, (p.t,))


def suspend(p: SigmaSmashPoint, u) -> SigmaSmashPoint:
    return SigmaSmashPoint(p.a, p.b, p.coords + (_unit(u),))


def eval_sigma(p: SigmaSmashPoint) -> ProductPoint:
    """S^2(A ^ B) -> SA ^ SB, ((a,b),t,u) -> ((a,t),(b,u))."""
    if len(p.coords) != 2:
        raise ValueError("sigma takes a point of the double suspension")
    if p.is_basepoint:
        return ProductPoint(SuspensionPoint(BASE, 0), SuspensionPoint(BASE, 0))
    t, u = p.coords
    return ProductPoint(SuspensionPoint(p.a, t), SuspensionPoint(p.b, u))


def sigma_inverse(p: ProductPoint) -> SigmaSmashPoint:
    if p.is_smash_basepoint:
        return SigmaSmashPoint(BASE, BASE, (Fraction(0), Fraction(0)))
    return SigmaSmashPoint(p.first.x, p.second.x, (p.first.u, p.second.u))


def sigma_mu_prime(p: JoinPoint, u) -> ProductPoint:
    """sigma o S(mu') on S(A * B)."""
    return eval_sigma(suspend(eval_mu_prime(p), u))


# --- identity checks -------------------------------------------------------


@dataclass
class IdentityCheck:
    name: str
    cases: int = 0
    failures: int = 0
    example: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.example is None:
                self.example = describe()

    def to_dict(self) -> dict:
        return {"identity": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, "first_failure": self.example}


def farey(n: int) -> list[Fraction]:
    """All rationals in [0, 1] with denominator at most ``n``."""
    return sorted({Fraction(p, q) for q in range(1, n + 1) for p in range(q + 1)})


A1, A2 = AbstractPoint("a"), AbstractPoint("a'")
B1, B2 = AbstractPoint("b"), AbstractPoint("b'")


def _identified_pairs(t: Fraction, u: Fraction) -> Iterable[tuple[tuple[JoinPoint, Fraction], tuple[JoinPoint, Fraction]]]:
    """Pairs of inputs ((x, u), (x', u')) that name the same point of S(A * B)."""
    # join relations
    yield (JoinPoint(A1, B1, 0), u), (JoinPoint(A1, B2, 0), u)
    yield (JoinPoint(A1, B1, 1), u), (JoinPoint(A2, B1, 1), u)
    # basepoint line of the join
    yield (JoinPoint(BASE, BASE, t), u), (JoinPoint(BASE, BASE, 1 - t), 1 - u)
    # suspension collapse at both ends
    for end in (Fraction(0), Fraction(1)):
        yield (JoinPoint(A1, B1, t), end), (JoinPoint(A2, B2, 1 - t), end)
        yield (JoinPoint(A1, B1, t), end), (JoinPoint(BASE, BASE, t), u)


def _cone_pairs(t: Fraction, u: Fraction):
    """Pairs identified in the cone C(A * B) (cone point at u = 1)."""
    yield (JoinPoint(A1, B1, t), Fraction(1)), (JoinPoint(A2, B2, 1 - t), Fraction(1))
    yield (JoinPoint(BASE, BASE, t), u), (JoinPoint(A1, B1, t), Fraction(1))
    yield (JoinPoint(A1, B1, 0), u), (JoinPoint(A1, B2, 0), u)
    yield (JoinPoint(A1, B1, 1), u), (JoinPoint(A2, B1, 1), u)


def _samples(denominator: int, random_samples: int, seed: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    grid = farey(denominator)
    pts = list(itertools.product(grid, grid, grid))
    rng = random.Random(seed)
    for _ in range(random_samples):
        pts.append(tuple(Fraction(rng.randint(0, 10**6), 10**6) for _ in range(3)))
    return pts


def check_identities(denominator: int = 8, random_samples: int = 100, seed: int = 0) -> list[IdentityCheck]:
    """Run every pointwise identity over the Farey grid plus random rationals.

    Each sample is a triple ``(t, u, s)``; identities without ``s`` reuse it
    harmlessly.
    """
    checks = {name: IdentityCheck(name) for name in (
        "lambda branch agreement at t=1/2",
        "phi branch agreement at t=1/2",
        "Lambda respects cone identifications",
        "lambda-bar respects quotient",
        "phi respects quotient",
        "phi_0 = lambda-bar",
        "phi_1 = sigma o S(mu')",
        "sigma inverse round trip",
    )}
    samples = _samples(denominator, random_samples, seed)
    halves = sorted({(u, s) for _, u, s in samples})
    for u, s in halves:
        p = JoinPoint(A1, B1, HALF)
        lo, up = lambda_branches(p, u)
        checks["lambda branch agreement at t=1/2"].record(lo == up, lambda: f"u={u}: {lo!r} vs {up!r}")
        lo, up = phi_branches(p, u, s)
        checks["phi branch agreement at t=1/2"].record(lo == up, lambda: f"u={u}, s={s}: {lo!r} vs {up!r}")

    for t, u, s in samples:
        p = JoinPoint(A1, B1, t)
        for (x, ux), (y, uy) in _cone_pairs(t, u):
            fx, fy = eval_lambda(x, ux), eval_lambda(y, uy)
            checks["Lambda respects cone identifications"].record(
                fx == fy, lambda: f"{x.key()},u={ux} -> {fx!r} but {y.key()},u={uy} -> {fy!r}")
        for (x, ux), (y, uy) in _identified_pairs(t, u):
            fx, fy = eval_lambda_bar(x, ux), eval_lambda_bar(y, uy)
            checks["lambda-bar respects quotient"].record(
                fx.smash_eq(fy), lambda: f"{x.key()},u={ux} -> {fx!r} but {y.key()},u={uy} -> {fy!r}")
            fx, fy = eval_phi(x, ux, s), eval_phi(y, uy, s)
            checks["phi respects quotient"].record(
                fx.smash_eq(fy),
                lambda: f"s={s}: ({x.a!r},{x.b!r},t={x.t}),u={ux} -> {fx!r} but "
                        f"({y.a!r},{y.b!r},t={y.t}),u={uy} -> {fy!r}")
        f0, lb = eval_phi(p, u, 0), eval_lambda_bar(p, u)
        checks["phi_0 = lambda-bar"].record(f0 == lb, lambda: f"t={t}, u={u}: {f0!r} vs {lb!r}")
        f1, sm = eval_phi(p, u, 1), sigma_mu_prime(p, u)
        checks["phi_1 = sigma o S(mu')"].record(f1.smash_eq(sm), lambda: f"t={t}, u={u}: {f1!r} vs {sm!r}")
        q = SigmaSmashPoint(A1, B1, (t, u))
        back = sigma_inverse(eval_sigma(q))
        checks["sigma inverse round trip"].record(back == q, lambda: f"{q.key()} -> {back.key()}")
    return list(checks.values())

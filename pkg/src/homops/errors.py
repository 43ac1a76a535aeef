"""Domain errors and the ``Unknown`` marker shared across modules."""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(Exception):
    """Base for mathematically meaningful refusals (reported with exit code 1)."""

    name = "DomainError"


class DegreeTooSmall(DomainError, ValueError):
    name = "DegreeTooSmall"


class Unsupported2Torsion(DomainError):
    """Both smash factors have 2-torsion; no splitting is known in that case."""

    name = "Unsupported2Torsion"


class OutOfRange(DomainError):
    """A degree lies outside the range where a result is claimed."""

    name = "OutOfRange"


@dataclass(frozen=True)
class Unknown:
    """A value the available data cannot determine, with the reason why."""

    reason: str

    name = "Unknown"

    def __str__(self) -> str:
        return f"Unknown ({self.reason})"


def require_degree(n: int, floor: int, what: str = "degree"):
    if n < floor:
        raise DegreeTooSmall(f"{what} must be >= {floor}, got {n}")

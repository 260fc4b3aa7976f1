"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class ResichainError(Exception):
    """Base class for domain errors."""

    code = "Error"

    def payload(self) -> dict:
        """JSON-friendly rendering used by the CLI."""
        out = {"error": self.code}
        if str(self):
            out["witness"] = str(self)
        return out


@dataclass(frozen=True)
class Violation:
    """One violated table invariant plus a witness tuple."""

    code: str
    witness: tuple

    def as_dict(self) -> dict:
        return {"error": self.code, "witness": list(self.witness)}


class InvalidChainError(ResichainError):
    """Raised by validate() with the full list of violated invariants."""

    code = "InvalidChain"

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(f"{v.code} at {v.witness}" for v in self.violations))

    @property
    def codes(self):
        return tuple(v.code for v in self.violations)

    def payload(self) -> dict:
        return {"error": self.code, "violations": [v.as_dict() for v in self.violations]}


class SizeTooLarge(ResichainError):
    code = "SizeTooLarge"


class NotAdmissible(ResichainError):
    """A summand that must be admissible is not. Carries the summand index."""

    code = "NotAdmissible"

    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or f"summand {index} is not admissible")

    def payload(self) -> dict:
        return {"error": self.code, "witness": self.index}


class TopNotPreserved(ResichainError):
    code = "TopNotPreserved"


class ComponentNotEmbedding(ResichainError):
    """An index-wise component map fails to embed. Carries the component index."""

    code = "ComponentNotEmbedding"

    def __init__(self, index, message=""):
        self.index = index
        super().__init__(message or f"component {index} is not an embedding")

    def payload(self) -> dict:
        return {"error": self.code, "witness": self.index}


class NoSubcover(ResichainError):
    code = "NoSubcover"


class NotCommutative(ResichainError):
    code = "NotCommutative"


class NotIdempotent(ResichainError):
    code = "NotIdempotent"


class InvalidSpan(ResichainError):
    code = "InvalidSpan"


class ShapeMismatch(ResichainError):
    code = "ShapeMismatch"


class SharedOrderConflict(ResichainError):
    code = "SharedOrderConflict"


class NotHSClosed(ResichainError):
    code = "NotHSClosed"


class StartIsUnit(ResichainError):
    code = "StartIsUnit"


class ConditionIsOneA(ResichainError):
    code = "ConditionIsOneA"

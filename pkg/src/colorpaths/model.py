"""Shared value types: path families, colorings and emitted sequences."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Family(enum.Enum):
    CATALAN = "catalan"
    SCHRODER_LARGE = "schroder-large"
    SCHRODER_SMALL = "schroder-small"
    MOTZKIN = "motzkin"

    @classmethod
    def parse(cls, name: str) -> Family:
        try:
            return cls(name.strip().lower().replace("_", "-"))
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {name!r}; expected one of {names}") from None

    @property
    def has_level_step(self) -> bool:
        return self is not Family.CATALAN

    @property
    def level_span(self) -> int:
        """Horizontal width of the level step: (1,0) for Motzkin, (2,0) otherwise."""
        return 1 if self is Family.MOTZKIN else 2

    def __str__(self) -> str:
        return self.value


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    RECURRENCE = "recurrence"
    ORACLE = "oracle"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilySpec:
    """A path family with ``m`` colors on down steps and ``n`` on level steps."""

    family: Family
    m: int = 1
    n: int = 1

    def __post_init__(self):
        for name in ("m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    @property
    def ignored(self) -> tuple[str, ...]:
        # Catalan paths have no level step, so n never enters a count.
        return ("n",) if self.family is Family.CATALAN else ()

    @property
    def conjectural(self) -> bool:
        """Small Schroder with n != 1 colors its above-axis level steps.

        That weighting is our reading; there is no published formula to
        check it against.
        """
        return self.family is Family.SCHRODER_SMALL and self.n != 1

    def metadata(self) -> dict:
        meta: dict = {}
        if self.ignored:
            meta["ignored"] = list(self.ignored)
        if self.conjectural:
            meta["conjectural_semantics"] = True
        return meta


@dataclass(frozen=True)
class SequenceResult:
    spec: FamilySpec
    method: Method
    coefficients: tuple[int, ...]
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

"""Three-way agreement check: closed form vs recurrence vs enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .enumeration import check_size_cap, colored_count
from .families import (
    ClosedFormDomainError,
    NoClosedFormError,
    closed_form_series,
    recurrence_series,
)
from .model import Family, FamilySpec

FAMILY_ORDER = list(Family)


@dataclass(frozen=True)
class Cell:
    spec: FamilySpec
    size: int
    closed_form: Optional[int]
    recurrence: int
    oracle: int

    @property
    def agree(self) -> bool:
        if self.recurrence != self.oracle:
            return False
        return self.closed_form is None or self.closed_form == self.recurrence

    def describe(self) -> str:
        s = self.spec
        cf = "absent" if self.closed_form is None else str(self.closed_form)
        return (f"{s.family} m={s.m} n={s.n} size={self.size}: "
                f"closed_form={cf} recurrence={self.recurrence} oracle={self.oracle}")


@dataclass
class VerificationReport:
    cells: list[Cell] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.agree for c in self.cells)

    def first_failure(self) -> Optional[Cell]:
        return next((c for c in self.cells if not c.agree), None)


def _closed_or_none(spec: FamilySpec, order: int) -> Optional[tuple[int, ...]]:
    try:
        return closed_form_series(spec, order).coefficients
    except (ClosedFormDomainError, NoClosedFormError):
        return None


def verify(
    families: Iterable[Family],
    m_values: Iterable[int],
    n_values: Iterable[int],
    max_size: int,
    force: bool = False,
    fault: Optional[tuple[Family, int, int, int]] = None,
) -> VerificationReport:
    """Compare all available methods for every (family, m, n, size) cell.

    ``fault`` adds 1 to one recurrence coefficient; it exists only so the
    harness can be shown to catch a disagreement.
    """
    families = sorted(set(families), key=FAMILY_ORDER.index)
    m_values, n_values = sorted(set(m_values)), sorted(set(n_values))
    for fam in families:
        check_size_cap(fam, max_size, force)

    report = VerificationReport()
    for fam in families:
        for m in m_values:
            for n in n_values:
                spec = FamilySpec(fam, m, n)
                rec = list(recurrence_series(spec, max_size).coefficients)
                if fault is not None and fault[:3] == (fam, m, n) and fault[3] <= max_size:
                    rec[fault[3]] += 1
                closed = _closed_or_none(spec, max_size)
                for size in range(max_size + 1):
                    report.cells.append(Cell(
                        spec=spec,
                        size=size,
                        closed_form=None if closed is None else closed[size],
                        recurrence=rec[size],
                        oracle=colored_count(fam, size, m, n, force=True),
                    ))
    return report

"""Brute-force enumeration of lattice paths and their colored counts.

Nothing here touches generating functions; it is the ground truth the series
code is checked against.

Paths are written one character per step: ``U`` = (1,1), ``D`` = (1,-1),
``L`` = the level step, which is (2,0) for the Schroder families and (1,0)
for Motzkin. The family decides the width of ``L``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .model import Family, FamilySpec, Method, SequenceResult

SIZE_CAPS = {
    Family.CATALAN: 12,
    Family.SCHRODER_LARGE: 8,
    Family.SCHRODER_SMALL: 8,
    Family.MOTZKIN: 10,
}


class PathError(ValueError):
    pass


class SizeCapError(ValueError):
    pass


class Step(enum.Enum):
    UP = "U"
    LEVEL = "L"
    DOWN = "D"

    @property
    def rise(self) -> int:
        return {"U": 1, "L": 0, "D": -1}[self.value]

    def span(self, family: Family) -> int:
        return family.level_span if self is Step.LEVEL else 1


# Yield order: U < L < D.
_STEP_ORDER = (Step.UP, Step.LEVEL, Step.DOWN)


@dataclass(frozen=True)
class LatticePath:
    family: Family
    steps: tuple[Step, ...]

    @property
    def size(self) -> int:
        span = sum(s.span(self.family) for s in self.steps)
        return span if self.family is Family.MOTZKIN else span // 2

    @property
    def downs(self) -> int:
        return sum(1 for s in self.steps if s is Step.DOWN)

    @property
    def levels(self) -> int:
        return sum(1 for s in self.steps if s is Step.LEVEL)

    def __str__(self) -> str:
        return path_to_string(self)


def check_size_cap(family: Family, size: int, force: bool = False) -> None:
    if size < 0:
        raise ValueError(f"size must be nonnegative, got {size}")
    cap = SIZE_CAPS[family]
    if size > cap and not force:
        raise SizeCapError(
            f"size {size} exceeds the enumeration cap {cap} for {family}; pass --force to override")


def _level_allowed(family: Family, height: int) -> bool:
    if family is Family.CATALAN:
        return False
    if family is Family.SCHRODER_SMALL:
        return height > 0
    return True


def _walk(family: Family, size: int) -> Iterator[str]:
    """Depth-first over (remaining span, height), pruning unreachable states."""
    span = size if family is Family.MOTZKIN else 2 * size
    lvl = family.level_span
    prefix: list[str] = []

    def rec(height: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(prefix)
            return
        # a path must still be able to come back down
        if remaining - 1 >= height + 1:
            prefix.append("U")
            yield from rec(height + 1, remaining - 1)
            prefix.pop()
        if _level_allowed(family, height) and remaining - lvl >= height:
            prefix.append("L")
            yield from rec(height, remaining - lvl)
            prefix.pop()
        if height > 0:
            prefix.append("D")
            yield from rec(height - 1, remaining - 1)
            prefix.pop()

    # parity: Schroder/Catalan spans are even, so height and remaining share parity
    yield from rec(0, span)


def enumerate_paths(family: Family, size: int, force: bool = False) -> Iterator[LatticePath]:
    """Yield every valid path of ``size`` exactly once, in U < L < D lexicographic order."""
    check_size_cap(family, size, force)
    for word in _walk(family, size):
        yield LatticePath(family, tuple(Step(ch) for ch in word))


def path_words(family: Family, size: int, force: bool = False) -> Iterator[str]:
    check_size_cap(family, size, force)
    return _walk(family, size)


def path_to_string(path: LatticePath) -> str:
    return "".join(s.value for s in path.steps)


def parse_path(text: str, family: Family) -> LatticePath:
    """Parse a step string and validate it against the family's rules."""
    steps = []
    height = 0
    for pos, ch in enumerate(text, start=1):
        try:
            step = Step(ch)
        except ValueError:
            raise PathError(f"position {pos}: unknown step {ch!r} (expected U, D or L)") from None
        if step is Step.LEVEL:
            if family is Family.CATALAN:
                raise PathError(f"position {pos}: Catalan paths have no level step")
            if family is Family.SCHRODER_SMALL and height == 0:
                raise PathError(f"position {pos}: level step at height 0 is not allowed "
                                "in a small Schroder path")
        height += step.rise
        if height < 0:
            raise PathError(f"position {pos}: path drops below the x-axis (height {height})")
        steps.append(step)
    if height != 0:
        raise PathError(f"final height {height} != 0")
    return LatticePath(family, tuple(steps))


def colored_count(family: Family, size: int, m: int, n: int, force: bool = False) -> int:
    """Sum of ``m**downs * n**levels`` over all uncolored paths of ``size``.

    For Catalan, ``n`` is ignored.
    """
    if m < 0 or n < 0:
        raise ValueError(f"color counts must be nonnegative, got m={m}, n={n}")
    total = 0
    for word in path_words(family, size, force):
        total += m ** word.count("D") * n ** word.count("L")
    return total


def step_histogram(family: Family, size: int, force: bool = False) -> Counter:
    """Number of paths with each (downs, levels) pair."""
    return Counter((w.count("D"), w.count("L")) for w in path_words(family, size, force))


def grouped_count(histogram: Counter, m: int, n: int) -> int:
    return sum(N * m ** d * n ** l for (d, l), N in histogram.items())


def oracle_series(spec: FamilySpec, order: int, force: bool = False) -> SequenceResult:
    for size in range(order + 1):
        check_size_cap(spec.family, size, force)
    coeffs = tuple(colored_count(spec.family, size, spec.m, spec.n, force=True)
                   for size in range(order + 1))
    return SequenceResult(spec, Method.ORACLE, coeffs, spec.metadata())

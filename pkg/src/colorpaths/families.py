"""Generating functions of colored Catalan, Schroder and Motzkin paths.

Every family except small Schroder satisfies a first-return equation of the
shape ``F = 1 + alpha*x*F + beta*x**k*F**2``:

* the level step contributes ``alpha = n`` (absent for Catalan),
* an up step, an arbitrary path, then one of ``m`` colored down steps
  contributes ``beta = m``; ``k`` counts the x's this excursion wrapper
  picks up (1 for Catalan and Schroder, 2 for Motzkin).

Small Schroder paths have no level step on the axis, so their first return is
linear once the large series is known: ``s = 1 + m*x*S*s``.

Coefficients are produced two ways, by the coefficient recurrence and by
expanding the radical closed form, so the two can be checked against each
other and against brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import Family, FamilySpec, Method, SequenceResult
from .series import (
    PowerSeries,
    ps_div_exact,
    ps_reciprocal,
    ps_scale_shift,
    ps_sqrt,
)


class FamilyError(ValueError):
    pass


class UnsupportedShapeError(FamilyError):
    pass


class ClosedFormDomainError(FamilyError):
    pass


class NoClosedFormError(FamilyError):
    pass


class IntegralityError(ArithmeticError):
    """A generating-function expansion produced a non-integral count."""


@dataclass(frozen=True)
class FunctionalEquation:
    alpha: Fraction
    beta: Fraction
    k: int

    def __str__(self) -> str:
        return f"F = 1 + {self.alpha}*x*F + {self.beta}*x^{self.k}*F^2"


def functional_equation_of(spec: FamilySpec) -> FunctionalEquation:
    fam = spec.family
    if fam is Family.CATALAN:
        return FunctionalEquation(Fraction(0), Fraction(spec.m), 1)
    if fam is Family.SCHRODER_LARGE:
        return FunctionalEquation(Fraction(spec.n), Fraction(spec.m), 1)
    if fam is Family.MOTZKIN:
        return FunctionalEquation(Fraction(spec.n), Fraction(spec.m), 2)
    raise UnsupportedShapeError(
        "small Schroder paths are not of the form F = 1 + a*x*F + b*x^k*F^2; "
        "use small_schroder_series")


def _check_order(order: int) -> None:
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a nonnegative int, got {order!r}")


def _to_integers(coeffs, where: str) -> tuple[int, ...]:
    out = []
    for j, c in enumerate(coeffs):
        c = Fraction(c)
        if c.denominator != 1:
            raise IntegralityError(f"{where}: coefficient of x^{j} is {c}, not an integer")
        out.append(c.numerator)
    return tuple(out)


def _quadratic_recurrence(eq: FunctionalEquation, order: int) -> list[int]:
    alpha, beta, k = int(eq.alpha), int(eq.beta), eq.k
    c = [1]
    for j in range(1, order + 1):
        conv = sum(c[i] * c[j - k - i] for i in range(j - k + 1))
        c.append(alpha * c[j - 1] + beta * conv)
    return c


def recurrence_series(spec: FamilySpec, order: int) -> SequenceResult:
    """Coefficients 0..order from the first-return recurrence."""
    _check_order(order)
    if spec.family is Family.SCHRODER_SMALL:
        large = _quadratic_recurrence(
            functional_equation_of(FamilySpec(Family.SCHRODER_LARGE, spec.m, spec.n)), order)
        s = [1]
        for j in range(1, order + 1):
            s.append(spec.m * sum(large[i] * s[j - 1 - i] for i in range(j)))
        coeffs = s
    else:
        coeffs = _quadratic_recurrence(functional_equation_of(spec), order)
    return SequenceResult(spec, Method.RECURRENCE, tuple(coeffs), spec.metadata())


def _radicand(spec: FamilySpec, order: int) -> PowerSeries:
    m, n = spec.m, spec.n
    if spec.family is Family.CATALAN:
        poly = [1, -4 * m]
    elif spec.family is Family.SCHRODER_LARGE:
        poly = [1, -2 * (n + 2 * m), n * n]
    elif spec.family is Family.MOTZKIN:
        poly = [1, -2 * n, n * n - 4 * m]
    else:
        poly = [1, -2 * (1 + 2 * m), 1]
    return PowerSeries.polynomial(poly, order)


def closed_form_series(spec: FamilySpec, order: int) -> SequenceResult:
    """Coefficients 0..order by expanding the radical closed form.

    Raises :class:`ClosedFormDomainError` for ``m == 0`` (every closed form
    has a removable singularity there) and :class:`NoClosedFormError` for
    small Schroder paths with colored level steps.
    """
    _check_order(order)
    fam, m, n = spec.family, spec.m, spec.n
    if m == 0:
        raise ClosedFormDomainError(
            f"closed form for {fam} is singular at m=0; use the recurrence or oracle method")
    if fam is Family.SCHRODER_SMALL and n != 1:
        raise NoClosedFormError(
            f"no known closed form for small Schroder paths with n={n} level colors "
            "(only n=1 is known); use the recurrence or oracle method")

    shift = 2 if fam is Family.MOTZKIN else 1
    work = order + shift
    root = ps_sqrt(_radicand(spec, work))
    if fam is Family.CATALAN:
        numer = PowerSeries.constant(1, work) - root
        denom = 2 * m
    elif fam is Family.SCHRODER_SMALL:
        numer = PowerSeries.polynomial([1, 1], work) - root
        denom = 2 * (1 + m)
    else:
        numer = PowerSeries.polynomial([1, -n], work) - root
        denom = 2 * m
    series = ps_div_exact(numer, denom, shift)
    coeffs = _to_integers(series.coeffs, f"closed form of {fam} (m={m}, n={n})")
    return SequenceResult(spec, Method.CLOSED_FORM, coeffs, spec.metadata())


def large_schroder_series(m: int, n: int, order: int) -> PowerSeries:
    return PowerSeries(tuple(recurrence_series(FamilySpec(Family.SCHRODER_LARGE, m, n), order).coefficients))


def small_schroder_series(m: int, order: int, n: int = 1) -> SequenceResult:
    """Solve ``s = 1 + m*x*S*s`` as ``s = 1 / (1 - m*x*S)``.

    ``S`` is the large Schroder series with the same coloring.
    """
    _check_order(order)
    spec = FamilySpec(Family.SCHRODER_SMALL, m, n)
    large = large_schroder_series(m, n, order)
    denom = PowerSeries.constant(1, order) - ps_scale_shift(large, m, 1)
    coeffs = _to_integers(ps_reciprocal(denom).coeffs, f"small Schroder (m={m}, n={n})")
    return SequenceResult(spec, Method.RECURRENCE, coeffs, spec.metadata())


def sequence(spec: FamilySpec, order: int, method: Method, force: bool = False) -> SequenceResult:
    """Dispatch on ``method``. ``force`` lifts the oracle's size cap."""
    if method is Method.CLOSED_FORM:
        return closed_form_series(spec, order)
    if method is Method.RECURRENCE:
        return recurrence_series(spec, order)
    from .enumeration import oracle_series

    return oracle_series(spec, order, force=force)

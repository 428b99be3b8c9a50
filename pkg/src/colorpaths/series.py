"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` carries its truncation order explicitly. Coefficients
past the order are unknown, not zero, so every binary operation truncates to
the smaller of its operands' orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Coefficient = Fraction
Number = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for power-series precondition failures."""


class PreconditionError(SeriesError):
    pass


class AlgebraSanityError(SeriesError):
    """A division by x^k found a nonzero coefficient below x^k.

    Seeing this means a closed form was assembled incorrectly.
    """


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def polynomial(cls, coeffs: Iterable[Number], order: int) -> PowerSeries:
        """Embed a polynomial as a series truncated at ``order``.

        Terms above ``order`` are dropped; missing ones are zero.
        """
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, value: Number, order: int) -> PowerSeries:
        return cls.polynomial([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        if j < 0 or j > self.order:
            raise IndexError(f"x^{j} is outside truncation order {self.order}")
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, other)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, -other)

    def __neg__(self) -> PowerSeries:
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return ps_mul(self, other)

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*x^{j}")
        body = " + ".join(terms) or "0"
        return f"PowerSeries({body} + O(x^{self.order + 1}))"


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    return PowerSeries(tuple(a.coeffs[j] + b.coeffs[j] for j in range(order + 1)))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for j in range(order + 1):
        out.append(sum((ac[i] * bc[j - i] for i in range(j + 1)), Fraction(0)))
    return PowerSeries(tuple(out))


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with constant term 1.

    Uses the coefficient recurrence obtained from (s*s)_k = a_k:
    ``s_k = (a_k - sum_{i=1}^{k-1} s_i s_{k-i}) / 2``.
    """
    if a.coeffs[0] != 1:
        raise PreconditionError(
            f"ps_sqrt needs constant term 1, got {a.coeffs[0]}")
    s = [Fraction(1)]
    for k in range(1, a.order + 1):
        acc = a.coeffs[k] - sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
        s.append(acc / 2)
    return PowerSeries(tuple(s))


def ps_reciprocal(a: PowerSeries) -> PowerSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise PreconditionError("ps_reciprocal needs a nonzero constant term")
    r = [1 / a0]
    for k in range(1, a.order + 1):
        acc = sum((a.coeffs[i] * r[k - i] for i in range(1, k + 1)), Fraction(0))
        r.append(-acc / a0)
    return PowerSeries(tuple(r))


def ps_div_exact(a: PowerSeries, scalar: Number, k: int) -> PowerSeries:
    """Divide by ``scalar * x**k``; the result loses ``k`` orders.

    The low ``k`` coefficients must vanish exactly.
    """
    scalar = Fraction(scalar)
    if scalar == 0:
        raise PreconditionError("ps_div_exact: scalar must be nonzero")
    if k < 0:
        raise PreconditionError(f"ps_div_exact: k must be nonnegative, got {k}")
    if k > a.order:
        raise PreconditionError(
            f"ps_div_exact: cannot divide order-{a.order} series by x^{k}")
    for j in range(k):
        if a.coeffs[j] != 0:
            raise AlgebraSanityError(
                f"ps_div_exact: coefficient of x^{j} is {a.coeffs[j]}, "
                f"expected 0 before dividing by x^{k}")
    return PowerSeries(tuple(c / scalar for c in a.coeffs[k:]))


def ps_scale_shift(a: PowerSeries, scalar: Number, k: int) -> PowerSeries:
    """Return ``scalar * x**k * a`` at the order of ``a``."""
    if k < 0:
        raise PreconditionError(f"ps_scale_shift: k must be nonnegative, got {k}")
    scalar = Fraction(scalar)
    shifted = [Fraction(0)] * k + [scalar * c for c in a.coeffs]
    return PowerSeries(tuple(shifted[: a.order + 1]))

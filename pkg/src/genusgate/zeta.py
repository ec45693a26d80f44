"""Exact zeta special values and the analytic sanity bounds.

Zagier's divisor-sum formula gives zeta_K(-1)/2 for real quadratic K as
an exact rational; those values are reproduced here with pure integer
arithmetic.  Degree >= 3 values are ingested data, never computed: the
only check applied to them is the functional-equation interval

    2 Delta^(3/2) / (pi^(2d) 4^d)  <=  |zeta_K(-1)| / 2^(d-1)
                                   <=  Delta^(3/2) / (2^(d-1) 12^d).

Bound endpoints are evaluated in interval arithmetic with outward
(directed) rounding.  Comparisons that land inside the rounding slack
escalate precision (64 then 128 fractional bits); a comparison still
undecided at the highest precision raises PrecisionExhausted rather
than guessing.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .algebra import sigma1
from .numberfield import NumberField

PRECISIONS = (64, 128)

_iv_lock = threading.Lock()


class PrecisionExhausted(ArithmeticError):
    """A bound comparison stayed inside the rounding slack at max precision."""


class InvalidDiscriminant(ValueError):
    """Not a valid real quadratic field discriminant."""


@dataclass(frozen=True)
class ZetaRatio:
    """The genus factor |zeta_K(-1)| / 2^(degree-1), exact and positive."""

    value: Fraction

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("zeta ratio must be positive")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


def zagier_e1(disc: int) -> int:
    """Zagier's divisor sum: sum of sigma1((disc - x^2)/4) over x^2 <= disc
    with x^2 = disc (mod 4); the terms x and -x both count, and x^2 = disc
    contributes nothing."""
    if disc <= 0 or disc % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{disc} is not 0 or 1 mod 4 and positive")
    total = 0
    x = 0 if disc % 4 == 0 else 1
    while x * x < disc:
        term = sigma1((disc - x * x) // 4)
        total += term if x == 0 else 2 * term
        x += 2
    return total


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    i = 2
    while i * i <= n:
        if n % (i * i) == 0:
            return False
        i += 1
    return True


def quadratic_discriminant(d: int) -> int:
    """Field discriminant of Q(sqrt(d)) for squarefree d >= 2."""
    if d < 2 or not is_squarefree(d):
        raise InvalidDiscriminant(f"{d} is not squarefree >= 2")
    return d if d % 4 == 1 else 4 * d


def zagier_quadratic(d: int) -> Fraction:
    """zeta_K(-1)/2 for K = Q(sqrt(d)), exact."""
    return Fraction(zagier_e1(quadratic_discriminant(d)), 120)


def genus_factor(degree: int, zeta_minus1_abs: Fraction) -> ZetaRatio:
    """|zeta_K(-1)| / 2^(degree-1) in lowest terms."""
    if degree < 1:
        raise ValueError("degree must be positive")
    if zeta_minus1_abs <= 0:
        raise ValueError("need a positive |zeta_K(-1)|")
    return ZetaRatio(Fraction(zeta_minus1_abs) / 2 ** (degree - 1))


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0 and exp != 0:
        raise ArithmeticError("non-finite interval endpoint")
    value = Fraction(man, 1) * (Fraction(2) ** exp)
    return -value if sign else value


def _interval_endpoints(fn, prec: int) -> tuple[Fraction, Fraction]:
    """Evaluate fn() under interval precision `prec`, return outward endpoints.

    Endpoints are read from the raw interval representation: the mpf
    accessors would re-round to the ambient real precision and lose the
    directedness this module depends on.
    """
    with _iv_lock:
        saved = iv.prec
        try:
            iv.prec = prec
            result = fn()
        finally:
            iv.prec = saved
    raw_a, raw_b = result._mpi_
    return _raw_mpf_to_fraction(raw_a), _raw_mpf_to_fraction(raw_b)


def _nth_root(x, n: int):
    return iv.exp(iv.log(x) / n)


def _lower_bound_interval(delta: int, degree: int):
    num = 2 * iv.sqrt(iv.mpf(delta)) ** 3
    den = iv.pi ** (2 * degree) * iv.mpf(4) ** degree
    return num / den


def _upper_bound_interval(delta: int, degree: int):
    num = iv.sqrt(iv.mpf(delta)) ** 3
    return num / (2 ** (degree - 1) * iv.mpf(12) ** degree)


def zeta_bounds(delta: int, degree: int, prec: int = PRECISIONS[0]) -> tuple[Fraction, Fraction]:
    """Outward-rounded functional-equation bounds on the genus factor.

    Returns (lower rounded down, upper rounded up) as exact binary
    rationals taken from interval endpoints at `prec` fractional bits.
    """
    if delta < 1 or degree < 1:
        raise ValueError("delta and degree must be positive")
    lo, _ = _interval_endpoints(lambda: _lower_bound_interval(delta, degree), prec)
    _, hi = _interval_endpoints(lambda: _upper_bound_interval(delta, degree), prec)
    return lo, hi


def decide_le(lhs_fn, rhs_fn, precisions=PRECISIONS) -> bool:
    """Decide lhs <= rhs where both sides are interval-valued closures.

    Escalates through `precisions`; raises PrecisionExhausted if the
    intervals still overlap at the highest precision.
    """
    for prec in precisions:
        la, lb = _interval_endpoints(lhs_fn, prec)
        ra, rb = _interval_endpoints(rhs_fn, prec)
        if lb <= ra:
            return True
        if la > rb:
            return False
    raise PrecisionExhausted("comparison undecided inside rounding slack")


def validate_zeta(K: NumberField, ratio: ZetaRatio) -> bool:
    """Sanity-check an ingested genus factor against the field.

    The ratio must lie in the outward-rounded functional-equation window;
    for quadratic fields it must additionally equal Zagier's exact value.
    A False result signals a corrupted database row, never a rounding
    artifact: containment uses outward endpoints and escalates precision
    when the ratio lands inside the slack.
    """
    value = ratio.value
    for prec in PRECISIONS:
        lo_a, lo_b = _interval_endpoints(
            lambda: _lower_bound_interval(K.disc, K.degree), prec)
        hi_a, hi_b = _interval_endpoints(
            lambda: _upper_bound_interval(K.disc, K.degree), prec)
        if lo_b <= value <= hi_a:
            break  # inside even the inward window: surely within bounds
        if value < lo_a or value > hi_b:
            return False  # outside the outward window: surely out
        # inside the slack: escalate, accepting outward at the last level
    else:
        if not (lo_a <= value <= hi_b):
            return False
    if K.degree == 2:
        return value == Fraction(zagier_e1(K.disc), 120)
    return True

"""Root-discriminant bounds and the trace-field degree cap.

C(d) = a * exp(-b/d) with a = 29.099, b = 8.3185 is a lower bound on the
root discriminant of any totally real field of degree d (Odlyzko, in
Takeuchi's form).  D(d) = (4 pi^2 ((g-1)/2)^(1/d))^(2/3) is the largest
root discriminant compatible with a genus-g surface.  A degree d is
feasible only when C(d) <= D(d); the scan requires three consecutive
failures before it stops, so a rounding wobble near the crossover cannot
truncate it early.  Comparisons use the interval machinery from the zeta
module and refuse to guess inside the rounding slack.

The refined cap consumes per-degree non-existence assertions carried by
the field database ("the enumeration contains no totally real field of
degree d with root discriminant <= B"): a degree is struck from the cap
only when its assertion covers the genus bound D(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .zeta import PRECISIONS, PrecisionExhausted, _interval_endpoints, _nth_root, decide_le

ODLYZKO_A = Fraction(29099, 1000)
ODLYZKO_B = Fraction(83185, 10000)
_SCAN_LIMIT = 200


@dataclass(frozen=True)
class DegreeCap:
    """Degrees a trace field can have for the target genus.

    ``inequality_cap`` comes from the C(d) <= D(d) scan alone;
    ``refined_cap`` additionally applies the database's per-degree
    non-existence assertions and is absent when none apply.
    """

    genus: int
    inequality_cap: int
    refined_cap: int | None = None

    def __post_init__(self) -> None:
        if self.refined_cap is not None and self.refined_cap > self.inequality_cap:
            raise ValueError("refined cap cannot exceed the inequality cap")

    @property
    def effective(self) -> int:
        return self.refined_cap if self.refined_cap is not None else self.inequality_cap


def _c_interval(d: int):
    a = iv.mpf(ODLYZKO_A.numerator) / ODLYZKO_A.denominator
    b = iv.mpf(ODLYZKO_B.numerator) / ODLYZKO_B.denominator
    return a * iv.exp(-b / d)


def _d_interval(d: int, g: int):
    base = 4 * iv.pi ** 2 * _nth_root(iv.mpf(g - 1) / 2, d)
    return iv.exp(2 * iv.log(base) / 3)


def odlyzko_C(d: int, prec: int = PRECISIONS[0]) -> float:
    """Lower bound on the root discriminant in degree d, rounded down."""
    if d < 1:
        raise ValueError("degree must be positive")
    lo, _ = _interval_endpoints(lambda: _c_interval(d), prec)
    return float(lo)


def rootdisc_D(d: int, g: int, prec: int = PRECISIONS[0]) -> float:
    """Largest root discriminant compatible with genus g, rounded up."""
    if d < 1 or g < 2:
        raise ValueError("need degree >= 1 and genus >= 2")
    _, hi = _interval_endpoints(lambda: _d_interval(d, g), prec)
    return float(hi)


def degree_feasible(d: int, g: int) -> bool:
    """True iff C(d) <= D(d, g), decided with escalation, never guessed."""
    return decide_le(lambda: _c_interval(d), lambda: _d_interval(d, g))


def _assertion_covers(bound: Fraction, d: int, g: int) -> bool:
    """True iff an asserted-empty region [0, bound] contains D(d, g).

    Decided conservatively: if the comparison stays inside the rounding
    slack at maximal precision the assertion is treated as not covering,
    which can only weaken (enlarge) the refined cap.
    """
    try:
        return decide_le(lambda: _d_interval(d, g),
                         lambda: iv.mpf(bound.numerator) / bound.denominator)
    except PrecisionExhausted:
        return False


def max_degree(g: int, db=None) -> DegreeCap:
    """Scan the degree cap for genus g; refine it with database assertions.

    The scan walks d upward, recording the largest feasible degree, and
    terminates only after three consecutive infeasible degrees.  When a
    database carrying ``no_field_assertions`` (degree -> asserted root
    discriminant bound below which no totally real field exists) is
    supplied, degrees at the top of the cap whose assertions cover
    D(d, g) are struck; the refined cap is the largest surviving degree.
    """
    if g < 2:
        raise ValueError("genus must be >= 2")
    best = 0
    misses = 0
    d = 1
    while d <= _SCAN_LIMIT:
        if degree_feasible(d, g):
            best = d
            misses = 0
        else:
            misses += 1
            if misses >= 3:
                break
        d += 1
    if best == 0:
        raise ArithmeticError(f"no feasible degree found for genus {g}")
    refined = None
    assertions = getattr(db, "no_field_assertions", None)
    if assertions:
        d = best
        while d >= 1:
            bound = assertions.get(d)
            if bound is None or not _assertion_covers(Fraction(bound), d, g):
                break
            d -= 1
        if d < best:
            refined = d
    return DegreeCap(genus=g, inequality_cap=best, refined_cap=refined)

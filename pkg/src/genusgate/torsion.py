"""Necessary congruence conditions for eliminating 2- and 3-torsion.

A ramified prime can kill n-torsion in the norm-one unit group only if
it splits in K(i)/K (n = 2) or K(sqrt(-3))/K (n = 3).  Splitting there
forces, for a prime of shape (p, e, f):

  n = 2:  norm = p^f = 1 (mod 4) when p != 2, or 2 | e when p = 2,
  n = 3:  norm = p^f = 1 (mod 3) when p != 3, or 2 | e when p = 3.

These are necessary conditions only, so a failed sieve is a proof that
torsion survives, while a passing sieve merely fails to rule the set
out.  Only n in {2, 3} is checked: additional torsion orders can only
add obstructions, so ignoring them keeps every RuledOut verdict sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .numberfield import PrimeShape


class SieveOutcome(Enum):
    FAILS_TWO = "FailsTwo"
    FAILS_THREE = "FailsThree"
    PASSES = "Passes"


@dataclass(frozen=True)
class SieveVerdict:
    """Outcome of the torsion sieve on one candidate ramification set.

    On PASSES both witnesses are present: the first shape in input order
    that can eliminate 2-torsion, and likewise for 3-torsion.
    """

    outcome: SieveOutcome
    witness2: PrimeShape | None = None
    witness3: PrimeShape | None = None

    def __post_init__(self) -> None:
        has_both = self.witness2 is not None and self.witness3 is not None
        if (self.outcome is SieveOutcome.PASSES) != has_both:
            raise ValueError("witnesses present exactly when the sieve passes")


def elim2_candidate(shape: PrimeShape) -> bool:
    """Can this prime possibly split in K(i)/K (and so eliminate 2-torsion)?"""
    if shape.p == 2:
        return shape.e % 2 == 0
    return shape.norm % 4 == 1


def elim3_candidate(shape: PrimeShape) -> bool:
    """Can this prime possibly split in K(sqrt(-3))/K (eliminate 3-torsion)?"""
    if shape.p == 3:
        return shape.e % 2 == 0
    return shape.norm % 3 == 1


def sieve(shapes: list[PrimeShape]) -> SieveVerdict:
    """Apply the 2-/3-torsion sieve to a nonempty candidate set.

    FAILS_TWO is a proof the unit group keeps 2-torsion (no member meets
    the necessary splitting condition), similarly FAILS_THREE; PASSES
    means only "not excluded here".
    """
    if not shapes:
        raise ValueError("sieve requires a nonempty candidate set")
    w2 = next((s for s in shapes if elim2_candidate(s)), None)
    if w2 is None:
        return SieveVerdict(SieveOutcome.FAILS_TWO)
    w3 = next((s for s in shapes if elim3_candidate(s)), None)
    if w3 is None:
        return SieveVerdict(SieveOutcome.FAILS_THREE)
    return SieveVerdict(SieveOutcome.PASSES, witness2=w2, witness3=w3)

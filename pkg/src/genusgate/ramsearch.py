"""Enumerate candidate ramification sets and render per-field verdicts.

The genus relation  g - 1 = ratio * prod (norm - 1)  fixes a target
product T for each field.  Candidates are multisets of prime ideals:
a factorization multiset of norms q >= 3 with prod (q - 1) = T, realized
by concrete prime shapes the field actually has, padded with any subset
of its norm-2 primes (each contributes a factor of 1), and filtered by
the parity constraint |set| = degree - 1 (mod 2).  Surviving candidates
are fed to the torsion sieve; a field is RuledOut only when every
candidate provably retains torsion or no candidate exists at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .algebra import divisors, prime_power
from .numberfield import (
    FLAG_IRREDUCIBILITY_UNVERIFIED,
    NeedsOverride,
    NumberField,
    PrimeShape,
    splitting_type,
)
from .torsion import SieveOutcome, sieve
from .zeta import ZetaRatio

DEFAULT_ENUMERATION_CAP = 10 ** 6


class EnumerationCap(ValueError):
    """Target product exceeded the configured enumeration cap."""

    def __init__(self, target: int, cap: int):
        super().__init__(f"target product {target} exceeds cap {cap}")
        self.target = target
        self.cap = cap


class VerdictStatus(Enum):
    RULED_OUT = "RuledOut"
    INCONCLUSIVE = "Inconclusive"
    UNPROCESSABLE = "Unprocessable"


class ReasonKind(Enum):
    NO_FACTORIZATION = "NoFactorization"
    PARITY_EXCLUDED = "ParityExcluded"
    SIEVE_FAILS_TWO = "SieveFailsTwo"
    SIEVE_FAILS_THREE = "SieveFailsThree"
    NORM_UNAVAILABLE = "NormUnavailable"
    NEEDS_OVERRIDE = "NeedsOverride"
    ENUMERATION_CAP = "EnumerationCap"
    IRREDUCIBILITY_UNVERIFIED = "IrreducibilityUnverified"


@dataclass(frozen=True)
class Reason:
    kind: ReasonKind
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind.value}({self.detail})" if self.detail else self.kind.value


@dataclass(frozen=True)
class RamCandidate:
    """A concrete candidate finite ramification set (distinct prime places;
    equal shapes stand for distinct ideals of the same type)."""

    shapes: tuple[PrimeShape, ...]

    @property
    def product(self) -> int:
        out = 1
        for s in self.shapes:
            out *= s.norm - 1
        return out

    def sort_key(self):
        return (len(self.shapes), tuple(sorted((s.p, s.f, s.e) for s in self.shapes)))

    def render(self) -> str:
        if not self.shapes:
            return "(empty)"
        return ",".join(f"{s.p}^{s.f}:{s.e}"
                        for s in sorted(self.shapes, key=lambda t: (t.p, t.f, t.e)))


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    reasons: tuple[Reason, ...] = ()
    survivors: tuple[RamCandidate, ...] = ()

    def __post_init__(self) -> None:
        if (self.status is VerdictStatus.INCONCLUSIVE) != bool(self.survivors):
            raise ValueError("survivors nonempty exactly when inconclusive")


class GenusResult(NamedTuple):
    genus: Fraction
    volume_pi_coeff: Fraction  # covolume is this multiple of pi


def target_product(g: int, ratio: ZetaRatio) -> int | None:
    """T with ratio * T = g - 1, or None when the numerator cannot divide."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    s, n = ratio.numerator, ratio.denominator
    if (g - 1) % s != 0:
        return None
    return (g - 1) // s * n


def candidate_factorizations(
    target: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[tuple[int, ...]]:
    """All multisets of prime-power norms q >= 3 with prod (q - 1) = target.

    Norm-2 entries contribute a factor of 1 and are handled separately as
    padding.  Multisets are returned as sorted tuples in a canonical order.
    """
    if target < 1:
        raise ValueError("target must be positive")
    if target > cap:
        raise EnumerationCap(target, cap)
    results: set[tuple[int, ...]] = set()

    def descend(remaining: int, min_factor: int, acc: list[int]) -> None:
        if remaining == 1:
            results.add(tuple(acc))
            return
        for d in divisors(remaining):
            if d < min_factor:
                continue
            q = d + 1
            if prime_power(q) is None:
                continue
            acc.append(q)
            descend(remaining // d, d, acc)
            acc.pop()

    descend(target, 2, [])
    return sorted(results)


def _shapes_with_norm(K: NumberField, q: int) -> list[PrimeShape]:
    pp = prime_power(q)
    if pp is None:
        return []
    return [s for s in splitting_type(K, pp.base) if s.f == pp.exponent]


def _pad_subsets(pads: list[PrimeShape]):
    for k in range(len(pads) + 1):
        for combo in itertools.combinations(range(len(pads)), k):
            yield [pads[i] for i in combo]


def _enumerate_with_drops(
    K: NumberField, target: int, cap: int
) -> tuple[list[RamCandidate], list[Reason]]:
    """Realizable candidates plus a log of why factorizations were dropped."""
    drops: list[Reason] = []
    parity = (K.degree - 1) % 2
    pad_shapes = _shapes_with_norm(K, 2)
    seen: set[tuple] = set()
    candidates: list[RamCandidate] = []
    for multiset in candidate_factorizations(target, cap):
        need: dict[int, int] = {}
        for q in multiset:
            need[q] = need.get(q, 0) + 1
        per_norm_choices = []
        unavailable = None
        for q, mult in sorted(need.items()):
            available = _shapes_with_norm(K, q)
            if len(available) < mult:
                unavailable = q
                break
            per_norm_choices.append(
                list(itertools.combinations(available, mult)))
        if unavailable is not None:
            drops.append(Reason(
                ReasonKind.NORM_UNAVAILABLE,
                f"norm {unavailable} for {{{','.join(map(str, multiset))}}}"))
            continue
        produced = False
        for picks in itertools.product(*per_norm_choices):
            base = [s for group in picks for s in group]
            for pads in _pad_subsets(pad_shapes):
                cand = RamCandidate(tuple(base + pads))
                if len(cand.shapes) % 2 != parity:
                    continue
                key = cand.sort_key()
                if key in seen:
                    continue
                seen.add(key)
                candidates.append(cand)
                produced = True
        if not produced:
            drops.append(Reason(
                ReasonKind.PARITY_EXCLUDED,
                f"{{{','.join(map(str, multiset))}}} with {len(pad_shapes)} norm-2 pads"))
    candidates.sort(key=RamCandidate.sort_key)
    return candidates, drops


def enumerate_ram_sets(
    K: NumberField, target: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[RamCandidate]:
    """All realizable candidate ramification sets with product `target`.

    Every candidate meets norm availability (a norm used m times needs at
    least m distinct primes of that norm) and the cardinality parity
    constraint; the order is deterministic.
    """
    return _enumerate_with_drops(K, target, cap)[0]


def genus_from_set(ratio: ZetaRatio, candidate: RamCandidate) -> GenusResult:
    """Genus from the forward direction of the volume formula, plus the
    covolume 4 pi (g - 1) reported as its coefficient of pi."""
    g = 1 + ratio.value * candidate.product
    return GenusResult(genus=g, volume_pi_coeff=4 * (g - 1))


def field_verdict(
    K: NumberField,
    ratio: ZetaRatio,
    g: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Verdict:
    """Decide one field: RuledOut, Inconclusive (with survivors), or
    Unprocessable when an override/cap/irreducibility gap blocks the proof."""
    if FLAG_IRREDUCIBILITY_UNVERIFIED in K.flags:
        return Verdict(VerdictStatus.UNPROCESSABLE, reasons=(
            Reason(ReasonKind.IRREDUCIBILITY_UNVERIFIED,
                   "generator not certified irreducible"),))
    target = target_product(g, ratio)
    if target is None:
        return Verdict(VerdictStatus.RULED_OUT, reasons=(
            Reason(ReasonKind.NO_FACTORIZATION,
                   f"{ratio} cannot divide genus - 1 = {g - 1}"),))
    try:
        candidates, drops = _enumerate_with_drops(K, target, cap)
    except NeedsOverride as exc:
        return Verdict(VerdictStatus.UNPROCESSABLE, reasons=(
            Reason(ReasonKind.NEEDS_OVERRIDE, f"prime {exc.p}"),))
    except EnumerationCap as exc:
        return Verdict(VerdictStatus.UNPROCESSABLE, reasons=(
            Reason(ReasonKind.ENUMERATION_CAP, str(exc)),))
    if not candidates:
        reasons = [Reason(ReasonKind.NO_FACTORIZATION, f"target product {target}")]
        reasons.extend(drops)
        return Verdict(VerdictStatus.RULED_OUT, reasons=tuple(reasons))
    reasons = list(drops)
    survivors = []
    for cand in candidates:
        if not cand.shapes:
            # empty finite ramification set: nothing can eliminate 2-torsion
            reasons.append(Reason(ReasonKind.SIEVE_FAILS_TWO, "(empty)"))
            continue
        verdict = sieve(list(cand.shapes))
        if verdict.outcome is SieveOutcome.PASSES:
            survivors.append(cand)
        elif verdict.outcome is SieveOutcome.FAILS_TWO:
            reasons.append(Reason(ReasonKind.SIEVE_FAILS_TWO, cand.render()))
        else:
            reasons.append(Reason(ReasonKind.SIEVE_FAILS_THREE, cand.render()))
    if survivors:
        return Verdict(VerdictStatus.INCONCLUSIVE,
                       reasons=tuple(reasons), survivors=tuple(survivors))
    return Verdict(VerdictStatus.RULED_OUT, reasons=tuple(reasons))

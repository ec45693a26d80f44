"""Independent oracles the tests check the library against.

These deliberately avoid the algorithms used by the package: root
counting is adaptive interval bisection with exact rational endpoints
(no Sturm chains), prime-power detection rests on a smallest-prime-
factor sieve, and ramification-set enumeration is a subset-product
search over the actual prime-ideal list.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def _interval_eval(coeffs, lo: Fraction, hi: Fraction):
    """Range enclosure of the polynomial on [lo, hi] by interval Horner."""
    acc_lo = acc_hi = Fraction(0)
    for c in reversed(coeffs):
        products = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(products) + c, max(products) + c
    return acc_lo, acc_hi


def _eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def real_root_count_bisection(int_coeffs) -> int:
    """Exact count of distinct real roots of a squarefree integer polynomial.

    Adaptive bisection with exact rational endpoints: an interval is
    discarded when interval arithmetic excludes a zero of f, counted when
    the endpoint signs differ and the derivative cannot vanish inside
    (hence exactly one root), and split otherwise.  Exact roots hit at
    endpoints are counted once and excised.  Terminates because f is
    squarefree, so f and f' never vanish together.
    """
    coeffs = [Fraction(c) for c in int_coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        if not coeffs or coeffs[0] != 0:
            return 0
        raise ValueError("zero polynomial")
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    bound = 1 + max(abs(c) for c in coeffs[:-1]) / abs(coeffs[-1])
    count = 0
    stack = [(-bound - 1, bound + 1)]
    exact_roots: set[Fraction] = set()
    while stack:
        lo, hi = stack.pop()
        flo, fhi = _interval_eval(coeffs, Fraction(lo), Fraction(hi))
        if flo > 0 or fhi < 0:
            continue
        va, vb = _eval(coeffs, Fraction(lo)), _eval(coeffs, Fraction(hi))
        if va != 0 and vb != 0 and va * vb < 0:
            dlo, dhi = _interval_eval(deriv, Fraction(lo), Fraction(hi))
            if dlo > 0 or dhi < 0:
                count += 1
                continue
        mid = (Fraction(lo) + Fraction(hi)) / 2
        if _eval(coeffs, mid) == 0:
            if mid not in exact_roots:
                exact_roots.add(mid)
                count += 1
            # excise a derivative-sign-definite neighbourhood of the root
            delta = (Fraction(hi) - Fraction(lo)) / 4
            while True:
                dlo, dhi = _interval_eval(deriv, mid - delta, mid + delta)
                if dlo > 0 or dhi < 0:
                    break
                delta /= 2
            stack.append((lo, mid - delta))
            stack.append((mid + delta, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    return count


def smallest_prime_factors(limit: int) -> list[int]:
    """spf[n] = smallest prime factor of n, for 0 <= n <= limit."""
    spf = list(range(limit + 1))
    for i in range(2, int(limit ** 0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def prime_power_by_sieve(n: int, spf: list[int]):
    """(p, k) if n = p^k by repeated smallest-factor division, else None."""
    p = spf[n]
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def subset_product_candidates(ideals, target: int, degree: int):
    """All sub-multisets of the ideal list with prod(norm - 1) = target and
    cardinality = degree - 1 (mod 2), deduplicated to shape multisets.

    `ideals` lists one entry per distinct prime ideal as (p, e, f, norm).
    """
    relevant = [i for i in ideals if i[3] == 2 or (i[3] - 1) > 0 and target % (i[3] - 1) == 0]
    results = set()
    parity = (degree - 1) % 2

    def dfs(idx: int, remaining: int, chosen: list) -> None:
        if remaining == 1:
            if len(chosen) % 2 == parity:
                results.add(tuple(sorted((p, e, f) for (p, e, f, _n) in chosen)))
            # norm-2 ideals still extend a finished product
        if idx == len(relevant):
            return
        dfs(idx + 1, remaining, chosen)
        p, e, f, norm = relevant[idx]
        factor = norm - 1
        if factor == 1 or remaining % factor == 0:
            chosen.append(relevant[idx])
            dfs(idx + 1, remaining if factor == 1 else remaining // factor, chosen)
            chosen.pop()

    dfs(0, target, [])
    return sorted(results, key=lambda t: (len(t), t))

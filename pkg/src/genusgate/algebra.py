"""Exact integer, divisor, and polynomial arithmetic.

Polynomials with integer coefficients are represented as tuples in
ascending degree order with a nonzero leading coefficient; the empty
tuple is the zero polynomial.  All arithmetic in this module is exact:
integers are arbitrary precision and root counting runs over exact
rationals.  No floating point is used anywhere.

Factorization over GF(p) follows the classical squarefree /
distinct-degree / equal-degree (Cantor-Zassenhaus) chain.  The
equal-degree stage is randomized internally but seeded, so results are
reproducible run to run; `DEFAULT_SEED` can be overridden per call.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

DEFAULT_SEED = 0

# Miller-Rabin with this witness set is deterministic below this bound
# (Sorenson-Webster).  Inputs here are far smaller, but we refuse to
# answer probabilistically above it rather than silently degrade.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


class NonSquarefree(ValueError):
    """Polynomial has a repeated root (gcd with derivative nonconstant)."""


class BeyondDeterministicRange(ValueError):
    """Primality was requested beyond the proven deterministic range."""


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the integers.

    ``coeffs[i]`` is the coefficient of x^i; the last entry is nonzero
    unless the tuple is empty (the zero polynomial).
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("integer coefficients required")

    @classmethod
    def from_coeffs(cls, coeffs) -> "Polynomial":
        """Build a polynomial from any coefficient iterable, trimming zeros."""
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Polynomial.from_coeffs(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Polynomial.from_coeffs(x - y for x, y in zip(a, b))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial.from_coeffs(out)

    def derivative(self) -> "Polynomial":
        return Polynomial.from_coeffs(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c not in (1, -1) else ("-x" if c == -1 else "x"))
            else:
                terms.append(f"{c}*x^{i}" if c not in (1, -1) else (f"-x^{i}" if c == -1 else f"x^{i}"))
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class PrimePower:
    """A rational prime power p^k, k >= 1."""

    base: int
    exponent: int

    def __post_init__(self) -> None:
        if not is_prime(self.base):
            raise ValueError(f"{self.base} is not prime")
        if self.exponent < 1:
            raise ValueError("exponent must be positive")

    @property
    def value(self) -> int:
        return self.base ** self.exponent


@dataclass(frozen=True)
class ModFactorization:
    """Complete factorization of a monic polynomial over GF(prime).

    ``factors`` lists (monic irreducible with coefficients in [0, prime),
    multiplicity), sorted by degree then coefficient tuple.
    """

    prime: int
    factors: tuple[tuple[Polynomial, int], ...]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n below ~3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_BOUND:
        raise BeyondDeterministicRange(
            f"{n} exceeds the deterministic Miller-Rabin range")
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sigma1(n: int) -> int:
    """Sum of the positive divisors of n."""
    if n < 1:
        raise ValueError("sigma1 requires n >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
    return total


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 1."""
    if k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def prime_power(n: int) -> PrimePower | None:
    """Decompose n as p^k with p prime, or None if n is not a prime power."""
    if n < 2:
        raise ValueError("prime_power requires n >= 2")
    if is_prime(n):
        return PrimePower(n, 1)
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r ** k == n and is_prime(r):
            return PrimePower(r, k)
    return None


# ---------------------------------------------------------------------------
# Arithmetic over GF(p): polynomials as tuples of ints in [0, p), ascending.


def _ptrim(a: list[int]) -> tuple[int, ...]:
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] * binv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    return _ptrim(q), _ptrim(a)


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def _pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return tuple(c * inv % p for c in a)


def _ppowmod(a, e, mod, p):
    result = (1,)
    a = _pmod(a, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, a, p), mod, p)
        a = _pmod(_pmul(a, a, p), mod, p)
        e >>= 1
    return result


def _pderiv(a, p):
    return _ptrim([i * c % p for i, c in enumerate(a)][1:])


def _squarefree_parts(f, p):
    """Squarefree decomposition over GF(p): yields (squarefree factor, multiplicity)."""
    out: dict[tuple[int, ...], int] = {}

    def accumulate(g, mult):
        if len(g) <= 1:
            return
        out[g] = out.get(g, 0) + mult

    def decompose(f, outer_mult):
        df = _pderiv(f, p)
        if not df:
            # f = g(x^p) = g(x)^p over GF(p) since a^p = a on coefficients
            g = _ptrim([f[i] for i in range(0, len(f), p)])
            decompose(g, outer_mult * p)
            return
        c = _pgcd(f, df, p)
        w = _pdivmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _pgcd(w, c, p)
            fac = _pdivmod(w, y, p)[0]
            accumulate(_pmonic(fac, p), outer_mult * i)
            w = y
            c = _pdivmod(c, y, p)[0]
            i += 1
        if len(c) > 1:
            decompose(c, outer_mult)

    decompose(_pmonic(f, p), 1)
    return out


def _distinct_degree(f, p):
    """Split squarefree monic f into products of irreducibles of equal degree."""
    parts = []
    h = (0, 1)  # x
    d = 0
    rest = f
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, rest, p)
        g = _pgcd(_psub(h, (0, 1), p), rest, p)
        if len(g) > 1:
            parts.append((g, d))
            rest = _pdivmod(rest, g, p)[0]
            h = _pmod(h, rest, p)
    # whatever survives has no factor of degree <= d, hence is irreducible
    if len(rest) > 1:
        parts.append((rest, len(rest) - 1))
    return parts


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _padd(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x + y) % p for x, y in zip(a, b)])


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus: split monic squarefree f, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = tuple(rng.randrange(p) for _ in range(n))
        a = _ptrim(list(a))
        if len(a) <= 1 and not a:
            continue
        if p == 2:
            # trace map over GF(2^d)
            t = a
            acc = a
            for _ in range(d - 1):
                acc = _pmod(_pmul(acc, acc, p), f, p)
                t = _padd(t, acc, p)
            g = _pgcd(t, f, p)
        else:
            g = _pgcd(a, f, p)
            if len(g) <= 1:
                e = (p ** d - 1) // 2
                b = _ppowmod(a, e, f, p)
                g = _pgcd(_psub(b, (1,), p), f, p)
        if 1 < len(g) < len(f):
            left = _equal_degree_split(g, d, p, rng)
            right = _equal_degree_split(_pdivmod(f, g, p)[0], d, p, rng)
            return left + right


def factor_mod_p(f: Polynomial, p: int, seed: int = DEFAULT_SEED) -> ModFactorization:
    """Factor f (made monic) into monic irreducibles over GF(p).

    Output order is deterministic: factors sorted by degree, then by
    coefficient tuple.  Randomized equal-degree splitting is driven by
    ``seed`` so runs are reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fp = _ptrim([c % p for c in f.coeffs])
    if not fp:
        raise ValueError("polynomial is zero mod p")
    rng = random.Random(seed)
    factors: dict[tuple[int, ...], int] = {}
    for sqfree, mult in _squarefree_parts(fp, p).items():
        for part, d in _distinct_degree(sqfree, p):
            for irr in _equal_degree_split(part, d, p, rng):
                factors[irr] = factors.get(irr, 0) + mult
    ordered = sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return ModFactorization(
        prime=p,
        factors=tuple((Polynomial(g), m) for g, m in ordered),
    )


# ---------------------------------------------------------------------------
# Exact discriminant and real root counting.


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(f: Polynomial, g: Polynomial) -> int:
    """Resultant of f and g via the Sylvester matrix (exact)."""
    if f.is_zero or g.is_zero:
        return 0
    n, m = f.degree, g.degree
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    rows = []
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return _bareiss_det(rows)


def poly_discriminant(f: Polynomial) -> int:
    """Discriminant of f: (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res // f.leading


def _frac_poly(f: Polynomial) -> list[Fraction]:
    return [Fraction(c) for c in f.coeffs]


def _frac_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        a.pop()
        _frac_trim(a)
    return a


def _frac_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    a, b = a[:], b[:]
    while b:
        a, b = b, _frac_rem(a, b)
    return len(a) - 1


def _sign_at_inf(coeffs: list[Fraction], positive: bool) -> int:
    if not coeffs:
        return 0
    lead = coeffs[-1]
    deg = len(coeffs) - 1
    s = 1 if lead > 0 else -1
    if not positive and deg % 2 == 1:
        s = -s
    return s


def sturm_real_roots(f: Polynomial) -> int:
    """Exact number of distinct real roots of a squarefree polynomial.

    Builds the Sturm chain over exact rationals and takes the difference
    of sign variations at -inf and +inf.  Raises NonSquarefree when
    gcd(f, f') is nonconstant.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return 0
    fc = _frac_poly(f)
    dc = _frac_poly(f.derivative())
    if _frac_gcd_degree(fc, dc) > 0:
        raise NonSquarefree(str(f))
    chain = [fc, dc]
    while len(chain[-1]) > 1:
        rem = _frac_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    def variations(positive: bool) -> int:
        signs = [s for s in (_sign_at_inf(c, positive) for c in chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return variations(False) - variations(True)

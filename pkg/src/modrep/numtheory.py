"""Exact modular combinatorics.

Everything in here is integer arithmetic with no tolerance anywhere: digit
strings, binomial coefficients modulo a prime via the digitwise product rule,
an additive Pascal-row oracle that serves as ground truth, and Chinese
remaindering to stitch prime residues into squarefree composite moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

PASCAL_LIMIT = 10_000  # row-by-row oracle is O(n*k); refuse beyond this


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a modulus, primes strictly increasing."""

    m: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=None)
def factorize(m: int) -> Factorization:
    """Trial division up to sqrt(m); the moduli used here are small."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > 10**9:
        raise ValueError(f"modulus {m} out of supported range (<= 10^9)")
    rest = m
    factors = []
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            factors.append((f, e))
        f += 1 if f == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(m, tuple(factors))


@dataclass(frozen=True)
class DigitString:
    """Little-endian digit string: digits[i] is the coefficient of base**i.

    Canonical form never carries zeros above the most significant nonzero
    digit; zero itself is the single digit [0].
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if not self.digits:
            raise ValueError("digit string may not be empty")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("non-canonical digit string (trailing zero)")

    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def digit(self, i: int) -> int:
        """Digit at position i (0-based from the least significant); 0 beyond the top."""
        if i < 0:
            raise ValueError("digit position must be non-negative")
        return self.digits[i] if i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


def digits(n: int, base: int) -> DigitString:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n == 0:
        return DigitString(base, (0,))
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    return DigitString(base, tuple(out))


def first_nonzero_digit_index(n: int, p: int) -> int:
    """Position of the first (least significant) nonzero digit of n in base p.

    Equals max{i : p**i divides n}, i.e. the p-adic valuation of n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    i = 0
    while n % p == 0:
        n //= p
        i += 1
    return i


def binom_mod_prime(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by the digitwise product over base-p digits.

    Any digit pair with k-digit > n-digit kills the product (C(0, x) = 0 for
    x > 0 extends to C(a, b) = 0 for b > a).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return 0
    r = 1
    while k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        r = r * math.comb(nd, kd) % p
        n //= p
        k //= p
    return r


def pascal_rows(m: int, n_max: int):
    """Yield row n = [C(n, 0..n) mod m] for n = 0, 1, ..., n_max.

    Pure additive recurrence; independent of every multiplicative route in
    this module, which is what makes it usable as a ground-truth oracle.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n_max > PASCAL_LIMIT:
        raise ValueError(f"n_max {n_max} exceeds Pascal oracle limit {PASCAL_LIMIT}")
    row = [1]
    yield row
    for _ in range(n_max):
        row = [1] + [(row[i] + row[i + 1]) % m for i in range(len(row) - 1)] + [1]
        yield row


def binom_mod_pascal(n: int, k: int, m: int) -> int:
    """C(n, k) mod m via a single rolling row of the additive recurrence.

    Works for every modulus m >= 2; O(n * k) time, O(k) memory, no
    arbitrary-precision intermediates.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if n > PASCAL_LIMIT:
        raise ValueError(f"n {n} exceeds Pascal oracle limit {PASCAL_LIMIT}")
    if k > n:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = (row[j] + row[j - 1]) % m
    return row[k] % m


def crt_combine(residue_pairs) -> int:
    """Unique x mod prod(m_i) with x = r_i mod m_i, moduli pairwise coprime."""
    pairs = list(residue_pairs)
    if not pairs:
        raise ValueError("need at least one (residue, modulus) pair")
    x, big = 0, 1
    for r, mod in pairs:
        if mod < 2:
            raise ValueError(f"modulus must be >= 2, got {mod}")
        if math.gcd(big, mod) != 1:
            raise ValueError("moduli are not pairwise coprime")
        t = ((r - x) * pow(big, -1, mod)) % mod
        x += big * t
        big *= mod
    return x % big


def binom_mod_squarefree(n: int, k: int, m: int) -> int:
    """C(n, k) mod m for squarefree m: one Lucas product per prime, then CRT."""
    fac = factorize(m)
    if not fac.squarefree:
        raise ValueError(f"{m} is not squarefree")
    if len(fac.factors) == 1:
        return binom_mod_prime(n, k, m)
    return crt_combine((binom_mod_prime(n, k, p), p) for p in fac.primes)


def binom_mod(n: int, k: int, m: int) -> int:
    """C(n, k) mod m by the cheapest exact route available.

    Squarefree moduli (including primes) go through Lucas + CRT so huge n
    stays O(log n); anything else falls back to the exact integer binomial.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return 0
    if factorize(m).squarefree:
        return binom_mod_squarefree(n, k, m)
    return math.comb(n, k) % m

"""Low-degree representing polynomials over squarefree composite moduli.

For squarefree composite m the promise function admits representing
polynomials of degree far below the prime-power lower bound. The recipe is a
shifted symmetric sum: on weight-w inputs the full degree-d level evaluates to
C(w, d) mod m, so whenever C(n/4, d) and C(3n/4, d) differ mod m the
polynomial

    C(3n/4, d) - sum of all degree-d monomials

vanishes on reject inputs and not on accept inputs. The case analysis picks d:

  Case A (m divides n/4, n/4 = a m^b with maximal b, m does not divide a):
    take the least prime factor p of m not dividing a; d = p^b for p > 2 and
    d = 2^(b+1) for p = 2.
  Case B (n/4 = a m + c with 0 < c < m):
    d = 1 unless c = m/2, where d = 2.

Every build verifies its two promise residues before returning; a failure
would be a counterexample to the construction and raises instead of
returning a wrong polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .boolpoly import SymmetricLevelPoly
from .numtheory import binom_mod_squarefree, digits, factorize


class ConstructionError(Exception):
    """Internal verification failed; carries the offending residues."""

    def __init__(self, n: int, m: int, degree: int, accept_residue: int, reject_residue: int):
        self.n, self.m, self.degree = n, m, degree
        self.accept_residue, self.reject_residue = accept_residue, reject_residue
        super().__init__(
            f"construction failed at n={n}, m={m}, d={degree}: "
            f"accept residue {accept_residue}, reject residue {reject_residue}"
        )


@dataclass(frozen=True)
class CaseDescriptor:
    """Which branch of the case analysis applies at (n, m), and its parameters.

    Case A: n/4 = a * m^b, b maximal (so m does not divide a); `prime` is the
    chosen prime factor of m once the degree is selected.
    Case B: n/4 = a * m + c with 0 < c < m.
    """

    n: int
    m: int
    tag: str
    a: int
    b: Optional[int] = None
    c: Optional[int] = None
    prime: Optional[int] = None
    degree: Optional[int] = None
    shift: Optional[int] = None


def _require_squarefree_composite(m: int):
    fac = factorize(m)
    if len(fac.factors) < 2:
        raise ValueError(f"m={m} is a prime power; need a squarefree composite")
    if not fac.squarefree:
        raise ValueError(f"m={m} is not squarefree")
    return fac


def decompose(n: int, m: int) -> CaseDescriptor:
    """Split n/4 against m: Case A with maximal b if m | n/4, else Case B."""
    if n < 4 or n % 4:
        raise ValueError(f"n must be a positive multiple of 4, got {n}")
    _require_squarefree_composite(m)
    q = n // 4
    if q % m == 0:
        b = 0
        while q % m == 0:
            q //= m
            b += 1
        return CaseDescriptor(n=n, m=m, tag="A", a=q, b=b)
    return CaseDescriptor(n=n, m=m, tag="B", a=q // m, c=q % m)


def select_degree(case: CaseDescriptor) -> CaseDescriptor:
    """Fill in the degree (and, in Case A, the chosen prime)."""
    m = case.m
    if case.tag == "A":
        # m squarefree and m not dividing a guarantee such a prime exists
        prime = next(p for p in factorize(m).primes if case.a % p)
        d = 2 ** (case.b + 1) if prime == 2 else prime**case.b
        return replace(case, prime=prime, degree=d)
    d = 1 if 2 * case.c != m else 2
    return replace(case, degree=d)


def build_described(n: int, m: int) -> tuple[CaseDescriptor, SymmetricLevelPoly]:
    """Construct and verify the representing polynomial, returning the case too."""
    case = select_degree(decompose(n, m))
    d = case.degree
    shift = binom_mod_squarefree(3 * n // 4, d, m)
    poly = SymmetricLevelPoly(n, m, {0: shift, d: m - 1})
    accept_residue = poly.evaluate_weight(n // 4)
    reject_residue = poly.evaluate_weight(3 * n // 4)
    if accept_residue == 0 or reject_residue != 0:
        raise ConstructionError(n, m, d, accept_residue, reject_residue)
    return replace(case, shift=shift), poly


def build(n: int, m: int) -> SymmetricLevelPoly:
    """Verified representing polynomial for the promise function at (n, m)."""
    return build_described(n, m)[1]


def digit_difference_check(a: int, b: int, p_i: int, level: int, m: int) -> bool:
    """Whether C(a m^b, p_i^level) and C(3 a m^b, p_i^level) differ mod m.

    The binomial comparison is the contract; `digits_differ_at` computes the
    digit-side phrasing of the same fact for cross-checking.
    """
    fac = _require_squarefree_composite(m)
    if p_i not in fac.primes:
        raise ValueError(f"{p_i} is not a prime factor of {m}")
    if a < 1 or b < 0 or level < 0:
        raise ValueError("need a >= 1, b >= 0, level >= 0")
    v, k = a * m**b, p_i**level
    return binom_mod_squarefree(v, k, m) != binom_mod_squarefree(3 * v, k, m)


def digits_differ_at(a: int, b: int, p_i: int, level: int, m: int) -> bool:
    """Digit at position `level` (0-based from the least significant) of the
    p_i-ary representations of a m^b and 3 a m^b: do they differ?"""
    v = a * m**b
    return digits(v, p_i).digit(level) != digits(3 * v, p_i).digit(level)


def asymptotic_witness(case: CaseDescriptor) -> bool:
    """Exact integer form of the sublinear degree claim.

    Case A: m^b <= n/4 and d <= prime^(b+1); Case B: d <= 2. Together these
    pin the degree to O(n^(1 / log_p m)) with p the largest prime factor.
    """
    if case.degree is None:
        raise ValueError("degree not selected; call select_degree first")
    if case.tag == "A":
        return case.m**case.b <= case.n // 4 and case.degree <= case.prime ** (case.b + 1)
    return case.degree <= 2


def sweep(m: int, n_max: int, n_min: int = 4, step: int = 4):
    """Build and verify every n = n_min, n_min+step, ..., <= n_max; yield cases.

    Each build verifies its residues, so a completed sweep is itself the
    verification; callers wanting the degree claim check asymptotic_witness
    per yielded case.
    """
    if step % 4 or n_min % 4:
        raise ValueError("n values must stay multiples of 4")
    for n in range(n_min, n_max + 1, step):
        case, _ = build_described(n, m)
        yield case

"""Zero-set preserving polynomial transforms over prime and prime power moduli.

Two constructions live here. The first raises a polynomial over Z_p to the
(p-1)st power, which by Fermat's little theorem squashes every nonzero value
to 1 while leaving the zero set untouched. The second takes a polynomial g
over Z_{p^k} and produces one over Z_p whose zero set on 0/1 inputs matches
g's: writing g as a multiset of coefficient-1 monomials, the jth elementary
symmetric function of that multiset evaluates to C(count, j), and the
divisibility test

    v = 0 mod p^k  <=>  C(v, p^i) = 0 mod p for all i < k

turns those binomials into the required indicator. The i-th summand is gated
by a product that vanishes as soon as an earlier binomial is nonzero mod p,
which is what keeps exactly one term alive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolpoly import MultilinearPoly, expand_to_unit_monomials
from .numtheory import binom_mod_prime, is_prime


@dataclass(frozen=True)
class UnitMonomialList:
    """Multiset of coefficient-1 monomials (masks; repeats allowed).

    On a 0/1 input the number of satisfied entries is an honest integer,
    which is what the symmetric-function machinery below counts.
    """

    n: int
    monomials: tuple[int, ...]

    @classmethod
    def from_poly(cls, poly: MultilinearPoly) -> "UnitMonomialList":
        return cls(poly.n, tuple(expand_to_unit_monomials(poly)))

    def count_satisfied(self, x) -> int:
        from .boolpoly import input_mask

        xm = input_mask(x, self.n)
        return sum(1 for mask in self.monomials if mask & xm == mask)

    def __len__(self) -> int:
        return len(self.monomials)


def fermat_normalize(g: MultilinearPoly, p: int) -> MultilinearPoly:
    """h = g^(p-1), multilinear-reduced: 0/1-valued on 0/1 inputs, same zero set.

    deg h <= min((p-1) deg g, n).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if g.m != p:
        raise ValueError(f"polynomial modulus {g.m} != p = {p}")
    return g ** (p - 1)


def binom_of_poly(units: UnitMonomialList, j: int, p: int) -> MultilinearPoly:
    """The jth elementary symmetric function of the unit monomials, over Z_p.

    On every 0/1 input it evaluates to C(s, j) mod p where s is the number of
    satisfied monomials. Computed by the incremental product
    prod_t (1 + z * mon_t), keeping only the z^0..z^j layers; each layer stays
    multilinear-reduced, so no intermediate blowup beyond 2^n terms.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if j < 0:
        raise ValueError(f"level must be non-negative, got {j}")
    if j == 0:
        return MultilinearPoly.constant(units.n, p, 1)
    if j > len(units):
        return MultilinearPoly.zero(units.n, p)
    layers = [MultilinearPoly.constant(units.n, p, 1)] + [
        MultilinearPoly.zero(units.n, p) for _ in range(j)
    ]
    for t, mask in enumerate(units.monomials):
        mono = MultilinearPoly.monomial(units.n, p, mask)
        for i in range(min(t + 1, j), 0, -1):
            layers[i] = layers[i] + layers[i - 1] * mono
    return layers[j]


def reduction_terms(g: MultilinearPoly, p: int, k: int) -> list[MultilinearPoly]:
    """The k gated summands whose sum is prime_power_reduce(g, p, k).

    Term i is C(g, p^i) * prod_{j<i} (1 - C(g, p^j)^(p-1)); if r is the least
    index whose binomial is nonzero mod p, every later term carries the factor
    (1 - C(g, p^r)^(p-1)) and dies pointwise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.m != p**k:
        raise ValueError(f"polynomial modulus {g.m} != p^k = {p**k}")
    units = UnitMonomialList.from_poly(g)
    one = MultilinearPoly.constant(g.n, p, 1)
    terms = []
    gate = one
    for i in range(k):
        b = binom_of_poly(units, p**i, p)
        terms.append(b * gate)
        if i + 1 < k:
            gate = gate * (one - b ** (p - 1))
    return terms


def prime_power_reduce(g: MultilinearPoly, p: int, k: int) -> MultilinearPoly:
    """Polynomial h over Z_p with h(x) = 0 mod p iff g(x) = 0 mod p^k on 0/1 inputs.

    deg h <= deg(g) * (2 p^(k-1) - 1) before the multilinear cap at n.
    """
    if k == 1:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if g.m != p:
            raise ValueError(f"polynomial modulus {g.m} != p = {p}")
        # the sum collapses to C(g, 1) = g itself, reduced mod p
        return MultilinearPoly(g.n, p, dict(g.coeffs))
    out = MultilinearPoly.zero(g.n, p)
    for term in reduction_terms(g, p, k):
        out = out + term
    return out


def degree_bound(d: int, p: int, k: int) -> int:
    """The transform's degree guarantee d (2 p^(k-1) - 1)."""
    return d * (2 * p ** (k - 1) - 1)


def modzero_predicate(v: int, p: int, k: int) -> bool:
    """The binomial side of the divisibility test: all C(v, p^i) = 0 mod p, i < k.

    Equivalent to p^k | v; the equivalence itself is asserted by the test
    suite, not assumed here.
    """
    if v < 0:
        raise ValueError(f"v must be non-negative, got {v}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return all(binom_mod_prime(v, p**i, p) == 0 for i in range(k))

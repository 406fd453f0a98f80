"""Desk-scale refutation of low-degree representability, plus the counting
identities behind the linear lower bound for prime power moduli.

The bound itself: over Z_{p^k} every polynomial representing the promise
function has degree at least n / (4 (2 p^(k-1) - 1) (p - 1)). The search here
certifies finite instances of that statement the hard way, by enumerating
every multilinear polynomial up to a degree cap and refuting each one against
the promise inputs. Soundness of a "none" answer is the whole point, so the
enumeration never truncates: if the candidate space exceeds the budget the
search refuses up front.

Two engines share the contract. The general one walks coefficient vectors in
lexicographic order as a DFS, checking each promise-input constraint at the
first depth where all of its monomials are assigned (reject rows are
equalities and prune hardest, so they are checked first within a depth). The
weight-multiset engine handles degree <= 1, where a polynomial's behaviour
depends only on its constant and the multiset of its variable coefficients;
it enumerates count vectors instead of raw assignments, which turns the
3^13-candidate instance into a few thousand table checks.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .boolpoly import MultilinearPoly, PromiseFn, lex_weight_masks
from .numtheory import binom_mod_prime, factorize, is_prime, pascal_rows

DEFAULT_BUDGET = 10**8


class BudgetExceededError(Exception):
    """Candidate space too large to enumerate soundly; carries the estimate."""

    def __init__(self, estimate: int, budget: int):
        self.estimate, self.budget = estimate, budget
        super().__init__(
            f"candidate space ~{estimate:.3e} exceeds budget {budget:.1e}; "
            "refusing to truncate"
        )


@dataclass
class SearchReport:
    n: int
    m: int
    d_max: int
    outcome: str  # "found" | "none_below"
    degree: Optional[int]
    witness: Optional[MultilinearPoly]
    candidates_examined: int
    elapsed: float
    method: str


def theorem3_bound(n: int, p: int, k: int) -> Fraction:
    """Exact rational degree lower bound n / (4 (2 p^(k-1) - 1) (p - 1))."""
    if n < 4 or n % 4:
        raise ValueError(f"n must be a positive multiple of 4, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return Fraction(n, 4 * (2 * p ** (k - 1) - 1) * (p - 1))


def default_d_max(n: int, m: int) -> int:
    """ceil(bound) - 1: exactly the degrees the lower bound forbids."""
    fac = factorize(m)
    if not fac.is_prime_power:
        raise ValueError(f"m={m} is not a prime power; pass d_max explicitly")
    p, k = fac.factors[0]
    bound = theorem3_bound(n, p, k)
    return -(-bound.numerator // bound.denominator) - 1


def monomials_up_to(n: int, d_max: int) -> list[int]:
    """Monomial masks of degree <= d_max, sorted by (degree, index tuple)."""
    out = []
    for d in range(d_max + 1):
        out.extend(
            sum(1 << i for i in combo) for combo in itertools.combinations(range(n), d)
        )
    return out


def coefficient_space(n: int, m: int, d_max: int) -> int:
    return m ** len(monomials_up_to(n, d_max))


def constraint_row(support, monomials: list[int], n: int) -> list[int]:
    """0/1 incidence of each monomial inside the given input support.

    A promise input x constrains exactly the monomials contained in its
    support: the resulting linear form is congruent to 0 on reject inputs and
    nonzero on accept inputs. These rows drive both the DFS pruning and the
    didactic constraint dump in the CLI.
    """
    from .boolpoly import input_mask

    sm = input_mask(support, n)
    return [1 if mask & sm == mask else 0 for mask in monomials]


def _dfs_stage(n, m, fn, monos, reverse, counter):
    """Lex-ordered DFS over coefficient vectors for a fixed monomial set.

    Returns the first (hence lexicographically least) satisfying vector, or
    None. Each constraint is checked at the depth where its last monomial
    gets a value; a violated constraint prunes the whole subtree below it.
    """
    idx_of = {mask: i for i, mask in enumerate(monos)}
    checks_at: list[list[tuple[list[int], bool]]] = [[] for _ in monos]
    for weight, is_reject in ((fn.reject_weight, True), (fn.accept_weight, False)):
        for xm in lex_weight_masks(n, weight):
            members = [idx_of[mask] for mask in monos if mask & xm == mask]
            checks_at[max(members)].append((members, is_reject))
    for depth_checks in checks_at:
        depth_checks.sort(key=lambda c: not c[1])  # rejects (equalities) first

    values = [0] * len(monos)
    domain = range(m - 1, -1, -1) if reverse else range(m)
    total = len(monos)

    def rec(depth: int):
        if depth == total:
            counter[0] += 1
            return list(values)
        for v in domain:
            values[depth] = v
            ok = True
            for members, is_reject in checks_at[depth]:
                s = sum(values[i] for i in members) % m
                if (s != 0) if is_reject else (s == 0):
                    ok = False
                    break
            if not ok:
                counter[0] += 1  # a pruned prefix stands for its whole subtree
                continue
            hit = rec(depth + 1)
            if hit is not None:
                return hit
        return None

    return rec(0)


def _search_by_enumeration(n, m, fn, d_max, reverse, counter):
    for d in range(d_max + 1):
        monos = monomials_up_to(n, d)
        vec = _dfs_stage(n, m, fn, monos, reverse, counter)
        if vec is not None:
            poly = MultilinearPoly(n, m, dict(zip(monos, vec)))
            return poly.degree, poly
    return None, None


def _weight_sums(counts: tuple[int, ...], w: int, m: int) -> set[int]:
    """All residues realizable as a sum over a w-element sub-multiset, where
    counts[r] copies of residue r are available."""
    states = {(0, 0)}
    for r, avail in enumerate(counts):
        if not avail:
            continue
        nxt = set()
        for taken, s in states:
            for j in range(min(avail, w - taken) + 1):
                nxt.add((taken + j, (s + j * r) % m))
        states = nxt
    return {s for taken, s in states if taken == w}


def _count_vectors(n: int, m: int):
    """All (k_0, ..., k_{m-1}) with sum n: multiplicities per residue value."""
    for dividers in itertools.combinations(range(n + m - 1), m - 1):
        prev, counts = -1, []
        for d in dividers:
            counts.append(d - prev - 1)
            prev = d
        counts.append(n + m - 2 - prev)
        yield tuple(counts)


def _search_by_weight_multisets(n, m, fn, d_max, reverse, counter):
    """Degree <= 1 engine. Values of c0 + sum_{i in x} c_i on a fixed-weight
    input class depend only on the multiset of the c_i, so candidates are
    (c0, count vector) pairs; the reported witness is reconstructed as the
    lexicographically least coefficient vector, which is the ascending
    arrangement of the best passing multiset."""
    if d_max > 1:
        raise ValueError("weight-multiset engine only covers degree <= 1")
    best: Optional[tuple[int, int, tuple[int, ...]]] = None
    count_space = [tuple([n] + [0] * (m - 1))] if d_max == 0 else list(_count_vectors(n, m))
    c0_domain = range(m - 1, -1, -1) if reverse else range(m)
    for counts in count_space:
        reject_sums = _weight_sums(counts, fn.reject_weight, m)
        accept_sums = _weight_sums(counts, fn.accept_weight, m)
        for c0 in c0_domain:
            counter[0] += 1
            if all((c0 + s) % m == 0 for s in reject_sums) and all(
                (c0 + s) % m for s in accept_sums
            ):
                coeffs = tuple(
                    itertools.chain.from_iterable([r] * k for r, k in enumerate(counts))
                )
                # minimal degree first, then lexicographically least vector
                cand = (1 if any(coeffs) else 0, c0, coeffs)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None, None
    _, c0, coeffs = best
    poly = MultilinearPoly(
        n, m, {0: c0, **{1 << i: c for i, c in enumerate(coeffs)}}
    )
    return poly.degree, poly


def exhaustive_min_degree(
    n: int,
    m: int,
    fn: Optional[PromiseFn] = None,
    d_max: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
    reverse_order: bool = False,
) -> SearchReport:
    """Minimal-degree representing polynomial up to d_max, or proof of absence.

    Exhausts the full coefficient space (through one of the two engines), so
    outcome "none_below" means no multilinear polynomial of degree <= d_max
    over Z_m represents the promise function. A found witness is the one with
    minimal degree and, within that, lexicographically least coefficients.
    """
    fn = fn or PromiseFn(n)
    if fn.n != n:
        raise ValueError(f"promise n={fn.n} does not match n={n}")
    if d_max is None:
        d_max = default_d_max(n, m)
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    space = coefficient_space(n, m, d_max)
    if space > budget:
        raise BudgetExceededError(space, budget)
    if method == "auto":
        method = "weights" if d_max <= 1 else "enumerate"
    counter = [0]
    start = time.perf_counter()
    if method == "weights":
        degree, witness = _search_by_weight_multisets(n, m, fn, d_max, reverse_order, counter)
    elif method == "enumerate":
        degree, witness = _search_by_enumeration(n, m, fn, d_max, reverse_order, counter)
    else:
        raise ValueError(f"unknown method {method!r}")
    elapsed = time.perf_counter() - start
    if witness is None:
        return SearchReport(n, m, d_max, "none_below", None, None, counter[0], elapsed, method)
    return SearchReport(n, m, d_max, "found", degree, witness, counter[0], elapsed, method)


def verify_counting_identities(p: int, r: int, cross_check: bool = True) -> bool:
    """The two Lucas counts from the lower-bound argument at block size 3 p^r.

    Checks C(3 p^r, p^r) = 3 mod p and C(3 p^r - l, p^r - l) = 1 mod p for
    every 0 < l < p^r, each via the digitwise product; with cross_check the
    same values are read back off one pass of the additive Pascal oracle.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    n0, k0 = 3 * p**r, p**r
    if binom_mod_prime(n0, k0, p) != 3 % p:
        return False
    for l in range(1, k0):
        if binom_mod_prime(n0 - l, k0 - l, p) != 1 % p:
            return False
    if cross_check:
        # entries live on the diagonal k = n - 2 p^r; one additive pass covers all
        for nn, row in enumerate(pascal_rows(p, n0)):
            if nn == n0:
                if row[k0] != 3 % p:
                    return False
            elif nn > 2 * k0:
                if row[nn - 2 * k0] != 1 % p:
                    return False
    return True


def contradiction_check(p: int) -> bool:
    """Does summing the accept constraints contradict the reject constraint?

    The combined identity forces 3 - 2 c = 0 mod p for the free coefficient
    c in {0, 1}; the argument closes iff neither value satisfies it. Fails
    exactly at p = 3, where 3 = 0 kills the count.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return all((3 - 2 * c) % p for c in (0, 1))

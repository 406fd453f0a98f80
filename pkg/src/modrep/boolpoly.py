"""Multilinear polynomials over Z_m and the quarter/three-quarter promise function.

Monomials are squarefree in the variables, stored as bitmasks: bit j of a mask
stands for the variable x_{j+1}. Inputs are 0/1 assignments carried the same
way, so evaluating a monomial is a submask test. Bitstrings at the API
boundary read left to right, i.e. the first character is x_1; "00000011" sets
x_7 and x_8. Lexicographic order on inputs always means lexicographic order
of those strings.

Alongside the explicit representation there is a compact symmetric form that
stores one coefficient per degree level; on an input of Hamming weight w a
full degree-d level contributes coefficient * C(w, d), which is what makes
weight-class evaluation possible for n far beyond anything enumerable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .numtheory import binom_mod

MAX_EXPLICIT_VARS = 64  # explicit polynomials are mask-based

InputLike = Union[int, str]


def _reverse_bits(v: int, n: int) -> int:
    r = 0
    for _ in range(n):
        r = (r << 1) | (v & 1)
        v >>= 1
    return r


def input_mask(x: InputLike, n: int) -> int:
    """Normalize an input (mask int or bitstring) to a variable mask."""
    if isinstance(x, int):
        if x < 0 or x >> n:
            raise ValueError(f"input mask {x} out of range for n={n}")
        return x
    s = "".join(str(b) for b in x)
    if len(s) != n:
        raise ValueError(f"input length {len(s)} != n={n}")
    mask = 0
    for j, ch in enumerate(s):
        if ch == "1":
            mask |= 1 << j
        elif ch != "0":
            raise ValueError(f"invalid bit {ch!r} in input")
    return mask


def mask_to_bitstring(mask: int, n: int) -> str:
    return "".join("1" if mask >> j & 1 else "0" for j in range(n))


def lex_weight_masks(n: int, w: int) -> Iterator[int]:
    """Variable masks of all weight-w inputs, in lexicographic bitstring order.

    Gosper's hack walks the weight-w integers in increasing value, which is
    exactly string order once the integer is read as the bitstring; each one
    is bit-reversed into the variable-mask convention.
    """
    if w < 0 or w > n:
        raise ValueError(f"weight {w} out of range for n={n}")
    if w == 0:
        yield 0
        return
    v = (1 << w) - 1
    top = 1 << n
    while v < top:
        yield _reverse_bits(v, n)
        lo = v & -v
        lz = v + lo
        v = lz | (((v ^ lz) // lo) >> 2)


@dataclass(frozen=True)
class PromiseFn:
    """g(x) = 1 if |x| = n/4 and g(x) = 0 if |x| = 3n/4; undefined elsewhere."""

    n: int

    def __post_init__(self):
        if self.n < 4 or self.n % 4:
            raise ValueError(f"n must be a positive multiple of 4, got {self.n}")

    @property
    def accept_weight(self) -> int:
        return self.n // 4

    @property
    def reject_weight(self) -> int:
        return 3 * self.n // 4

    def truth(self, x: InputLike) -> bool:
        w = input_mask(x, self.n).bit_count()
        if w == self.accept_weight:
            return True
        if w == self.reject_weight:
            return False
        raise ValueError(f"input weight {w} violates the promise for n={self.n}")


@dataclass
class MultilinearPoly:
    """Explicit multilinear polynomial over Z_m: monomial mask -> coefficient.

    Coefficients are kept reduced in [1, m); zero coefficients are dropped, so
    dict equality is polynomial equality.
    """

    n: int
    m: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if self.n < 0 or self.n > MAX_EXPLICIT_VARS:
            raise ValueError(f"n must be in [0, {MAX_EXPLICIT_VARS}], got {self.n}")
        clean = {}
        for mask, c in self.coeffs.items():
            if mask < 0 or mask >> self.n:
                raise ValueError(f"monomial mask {mask} out of range for n={self.n}")
            c %= self.m
            if c:
                clean[mask] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, m: int) -> "MultilinearPoly":
        return cls(n, m, {})

    @classmethod
    def constant(cls, n: int, m: int, c: int) -> "MultilinearPoly":
        return cls(n, m, {0: c})

    @classmethod
    def variable(cls, n: int, m: int, i: int) -> "MultilinearPoly":
        """The polynomial x_i, i given 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(n, m, {1 << (i - 1): 1})

    @classmethod
    def monomial(cls, n: int, m: int, mask: int, c: int = 1) -> "MultilinearPoly":
        return cls(n, m, {mask: c})

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other: "MultilinearPoly"):
        if self.n != other.n or self.m != other.m:
            raise ValueError(
                f"incompatible polynomials: (n={self.n}, m={self.m}) vs "
                f"(n={other.n}, m={other.m})"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = MultilinearPoly.constant(self.n, self.m, other)
        self._check_compatible(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            v = (out.get(mask, 0) + c) % self.m
            if v:
                out[mask] = v
            else:
                out.pop(mask, None)
        return MultilinearPoly(self.n, self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return MultilinearPoly(self.n, self.m, {k: self.m - c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultilinearPoly.constant(self.n, self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.m
            return MultilinearPoly(self.n, self.m, {k: v * c for k, v in self.coeffs.items()})
        self._check_compatible(other)
        # multilinear reduction happens here: x^2 = x means masks combine by union
        out: dict[int, int] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                mk = ma | mb
                v = (out.get(mk, 0) + ca * cb) % self.m
                if v:
                    out[mk] = v
                else:
                    out.pop(mk, None)
        return MultilinearPoly(self.n, self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = MultilinearPoly.constant(self.n, self.m, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, MultilinearPoly)
            and (self.n, self.m) == (other.n, other.m)
            and self.coeffs == other.coeffs
        )

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Size of the largest monomial; 0 for the zero polynomial."""
        return max((mask.bit_count() for mask in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, x: InputLike) -> int:
        xm = input_mask(x, self.n)
        return sum(c for mask, c in self.coeffs.items() if mask & xm == mask) % self.m

    def evaluate_all(self) -> list[int]:
        """Values on all 2^n inputs, indexed by variable mask.

        Subset-sum (zeta) transform: O(n * 2^n) instead of summing per input.
        """
        size = 1 << self.n
        vals = [0] * size
        for mask, c in self.coeffs.items():
            vals[mask] = (vals[mask] + c) % self.m
        for j in range(self.n):
            bit = 1 << j
            for x in range(size):
                if x & bit:
                    vals[x] = (vals[x] + vals[x ^ bit]) % self.m
        return vals

    # -- textual form ------------------------------------------------------

    def to_text(self) -> str:
        """Render as `m=<m> n=<n>; <coeff>*1; <coeff>*x{i,j,...}; ...`.

        Terms sorted by (degree, index tuple); the constant term prints as
        `<coeff>*1`. The zero polynomial is just the header.
        """
        parts = [f"m={self.m} n={self.n}"]
        for mask in sorted(self.coeffs, key=lambda s: (s.bit_count(), _mask_indices(s))):
            c = self.coeffs[mask]
            if mask == 0:
                parts.append(f"{c}*1")
            else:
                idx = ",".join(str(i) for i in _mask_indices(mask))
                parts.append(f"{c}*x{{{idx}}}")
        return "; ".join(parts) + ("" if len(parts) > 1 else ";")

    @classmethod
    def from_text(cls, text: str) -> "MultilinearPoly":
        chunks = [c.strip() for c in text.split(";")]
        header = chunks[0].split()
        try:
            fields = dict(kv.split("=") for kv in header)
            m, n = int(fields["m"]), int(fields["n"])
        except (ValueError, KeyError):
            raise ValueError(f"bad polynomial header {chunks[0]!r}") from None
        coeffs: dict[int, int] = {}
        for term in chunks[1:]:
            if not term:
                continue
            coeff_s, _, mono_s = term.partition("*")
            c = int(coeff_s)
            if mono_s == "1":
                mask = 0
            elif mono_s.startswith("x{") and mono_s.endswith("}"):
                mask = 0
                for i_s in mono_s[2:-1].split(","):
                    i = int(i_s)
                    if not 1 <= i <= n:
                        raise ValueError(f"variable index {i} out of range 1..{n}")
                    mask |= 1 << (i - 1)
            else:
                raise ValueError(f"bad term {term!r}")
            coeffs[mask] = (coeffs.get(mask, 0) + c) % m
        return cls(n, m, coeffs)


def _mask_indices(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


@dataclass
class SymmetricLevelPoly:
    """One coefficient per degree level: level d stands for the full sum of
    all degree-d monomials, so the value on any weight-w input is
    sum_d c_d * C(w, d) mod m."""

    n: int
    m: int
    level_coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        clean = {}
        for d, c in self.level_coeffs.items():
            if d < 0 or d > self.n:
                raise ValueError(f"level {d} out of range 0..{self.n}")
            c %= self.m
            if c:
                clean[d] = c
        self.level_coeffs = clean

    @property
    def degree(self) -> int:
        return max(self.level_coeffs, default=0)

    def evaluate_weight(self, w: int) -> int:
        if w < 0 or w > self.n:
            raise ValueError(f"weight {w} out of range 0..{self.n}")
        return sum(c * binom_mod(w, d, self.m) for d, c in self.level_coeffs.items()) % self.m

    def evaluate(self, x: InputLike) -> int:
        return self.evaluate_weight(input_mask(x, self.n).bit_count())

    def expand(self) -> MultilinearPoly:
        """Explicit form; only sensible at enumerable n."""
        if self.n > 20:
            raise ValueError(f"refusing to expand at n={self.n}")
        coeffs: dict[int, int] = {}
        for d, c in self.level_coeffs.items():
            for mask in lex_weight_masks(self.n, d):
                coeffs[mask] = c
        return MultilinearPoly(self.n, self.m, coeffs)


Poly = Union[MultilinearPoly, SymmetricLevelPoly]


def representation_violation(poly: Poly, fn: PromiseFn) -> Optional[tuple[str, int]]:
    """Lexicographically least promise input on which poly fails to one-sidedly
    represent fn, together with the offending value; None if it represents.

    A violation is either a zero value on an accept-weight input or a nonzero
    value on a reject-weight input.
    """
    if poly.n != fn.n:
        raise ValueError(f"polynomial n={poly.n} does not match promise n={fn.n}")
    if isinstance(poly, SymmetricLevelPoly):
        va = poly.evaluate_weight(fn.accept_weight)
        vr = poly.evaluate_weight(fn.reject_weight)
        if va == 0:
            return mask_to_bitstring(_reverse_bits((1 << fn.accept_weight) - 1, fn.n), fn.n), va
        if vr != 0:
            return mask_to_bitstring(_reverse_bits((1 << fn.reject_weight) - 1, fn.n), fn.n), vr
        return None
    first: Optional[tuple[str, int]] = None
    for weight, want_nonzero in ((fn.accept_weight, True), (fn.reject_weight, False)):
        for mask in lex_weight_masks(fn.n, weight):
            v = poly.evaluate(mask)
            if (v != 0) != want_nonzero:
                s = mask_to_bitstring(mask, fn.n)
                if first is None or s < first[0]:
                    first = (s, v)
                break
    return first


def represents(poly: Poly, fn: PromiseFn) -> bool:
    """True iff poly is nonzero on every weight-n/4 input and zero on every
    weight-3n/4 input."""
    return representation_violation(poly, fn) is None


def expand_to_unit_monomials(poly: MultilinearPoly) -> list[int]:
    """Rewrite as a multiset of coefficient-1 monomials (masks, repeats allowed).

    Each coefficient is lifted to its canonical representative in [0, m) and
    the monomial repeated that many times, so on every 0/1 input the integer
    count of satisfied list entries is congruent to the polynomial's value.
    """
    out = []
    for mask in sorted(poly.coeffs, key=lambda s: (s.bit_count(), s)):
        out.extend([mask] * poly.coeffs[mask])
    return out

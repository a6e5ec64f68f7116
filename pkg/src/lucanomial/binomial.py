"""Generalized binomial coefficients over Lucas sequences, exact and mod p^k.

A Lucanomial binom(m, n)_U is the product of U_m, U_{m-1}, ..., U_{m-n+1}
divided by U_n, ..., U_1 (1 when n = 0, and 0 when m < n).  When U has zero
terms, a zero above and a zero below cancel pairwise as 1; leftover zeros
above make the value 0, and leftover zeros below cannot occur for Lucas
sequences.  The value is always a rational integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .lucas import LucasParams, uv_sequence
from .ranks import NoRankError, is_prime, rank_ladder

__all__ = [
    "NonIntegralError",
    "ConventionViolation",
    "LucanomialValue",
    "ValuedResidue",
    "generalized_binomial",
    "lucanomial_exact",
    "lucanomial_residue",
    "zero_cancellations",
    "integrality_sweep",
]


class NonIntegralError(ArithmeticError):
    """A generalized binomial quotient failed to be an integer; signals a bug."""


class ConventionViolation(ArithmeticError):
    """More zero factors below than above the bar; excluded for Lucas sequences."""


@dataclass(frozen=True)
class LucanomialValue:
    """Exact generalized binomial coefficient binom(m, n) over U."""

    m: int
    n: int
    value: int


@dataclass(frozen=True)
class ValuedResidue:
    """A nonzero p-adic approximation unit * p^valuation, unit known mod p^k.

    The exact zero produced by the cancellation convention is distinguished
    from any nonzero value of high valuation.
    """

    p: int
    k: int
    valuation: int
    unit: int
    zero: bool = False

    def __post_init__(self) -> None:
        if self.zero:
            if self.unit or self.valuation:
                raise ValueError("exact zero carries unit 0 and valuation 0")
            return
        if self.valuation < 0:
            raise ValueError("valuation must be nonnegative")
        if not 0 <= self.unit < self.modulus:
            raise ValueError("unit out of range")
        if self.unit % self.p == 0:
            raise ValueError("unit must be coprime to p")

    @classmethod
    def exact_zero(cls, p: int, k: int) -> "ValuedResidue":
        return cls(p, k, 0, 0, zero=True)

    @classmethod
    def from_integer(cls, x: int, p: int, k: int) -> "ValuedResidue":
        """Strip all powers of p from x; x = 0 becomes the exact zero."""
        if x == 0:
            return cls.exact_zero(p, k)
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return cls(p, k, v, x % p**k)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def residue(self) -> int:
        """The represented value reduced mod p^k."""
        if self.zero or self.valuation >= self.k:
            return 0
        return self.unit * self.p**self.valuation % self.modulus

    def _check_compatible(self, other: "ValuedResidue") -> None:
        if self.p != other.p or self.k != other.k:
            raise ValueError("operands must share p and precision k")

    def __mul__(self, other: "ValuedResidue") -> "ValuedResidue":
        self._check_compatible(other)
        if self.zero or other.zero:
            return ValuedResidue.exact_zero(self.p, self.k)
        return ValuedResidue(
            self.p, self.k, self.valuation + other.valuation, self.unit * other.unit % self.modulus
        )

    def __truediv__(self, other: "ValuedResidue") -> "ValuedResidue":
        self._check_compatible(other)
        if other.zero:
            raise ZeroDivisionError("division by the exact zero")
        if self.zero:
            return ValuedResidue.exact_zero(self.p, self.k)
        v = self.valuation - other.valuation
        if v < 0:
            raise ValueError("quotient would have negative valuation")
        return ValuedResidue(
            self.p, self.k, v, self.unit * pow(other.unit, -1, self.modulus) % self.modulus
        )


def _convention_quotient(num: Sequence[int], den: Sequence[int]) -> int:
    """Quotient of factor products with pairwise zero cancellation.

    Surviving numerator zeros give 0; surviving denominator zeros raise
    ConventionViolation; a non-exact final division raises NonIntegralError.
    """
    top = [x for x in num if x != 0]
    bottom = [x for x in den if x != 0]
    zeros_above = len(num) - len(top)
    zeros_below = len(den) - len(bottom)
    if zeros_below > zeros_above:
        raise ConventionViolation(
            f"{zeros_below} zero factors below vs {zeros_above} above"
        )
    if zeros_above > zeros_below:
        return 0
    q, r = divmod(math.prod(top), math.prod(bottom))
    if r:
        raise NonIntegralError("generalized binomial is not an integer")
    return q


def generalized_binomial(values: Sequence[int], m: int, n: int) -> int:
    """binom(m, n) over an arbitrary integer sequence (values[0] must be 0),
    applying the pairwise zero-cancellation convention."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1
    if m < n:
        return 0
    return _convention_quotient(
        [values[m - i] for i in range(n)], [values[i] for i in range(1, n + 1)]
    )


def lucanomial_exact(params: LucasParams, m: int, n: int) -> LucanomialValue:
    """Exact Lucanomial binom(m, n)_U as an arbitrary-precision integer."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return LucanomialValue(m, n, 1)
    if m < n:
        return LucanomialValue(m, n, 0)
    us, _ = uv_sequence(params, m)
    return LucanomialValue(m, n, _convention_quotient(us[m - n + 1 : m + 1], us[1 : n + 1]))


def zero_cancellations(params: LucasParams, m: int, n: int) -> int:
    """Number of zero pairs that cancel as 1 inside binom(m, n)_U."""
    zp = params.zero_period
    if zp is None or n == 0 or m < n:
        return 0
    above = m // zp - (m - n) // zp
    below = n // zp
    return min(above, below)


def _u_window_mod(params: LucasParams, n_max: int, modulus: int) -> list[int]:
    us = [0, 1 % modulus]
    P, Q = params.P % modulus, params.Q % modulus
    while len(us) <= n_max:
        us.append((P * us[-1] - Q * us[-2]) % modulus)
    return us


def lucanomial_residue(
    params: LucasParams, m: int, n: int, p: int, k: int, method: str = "auto"
) -> ValuedResidue:
    """Residue of binom(m, n)_U mod p^k as (valuation, unit mod p^k).

    The "rank" path needs p coprime to 2QD: each factor's valuation is read
    off the ranks of p, p^2, ... and its unit from one recurrence pass mod
    p^(k + v_max).  The "exact" path builds the integer value and strips
    powers of p; it works for any odd prime p not dividing Q.  "auto" picks
    the rank path whenever it is allowed.  Both paths agree exactly.
    """
    if k < 1:
        raise ValueError("precision k must be positive")
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if params.Q % p == 0:
        raise NoRankError(f"{p} divides Q = {params.Q}")
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if method not in ("auto", "rank", "exact"):
        raise ValueError(f"unknown method {method!r}")
    pk = p**k
    if n == 0:
        return ValuedResidue(p, k, 0, 1 % pk)
    if m < n:
        return ValuedResidue.exact_zero(p, k)
    if method == "auto":
        method = "exact" if (2 * params.Q * params.D) % p == 0 else "rank"
    if method == "exact":
        return ValuedResidue.from_integer(lucanomial_exact(params, m, n).value, p, k)
    if (2 * params.Q * params.D) % p == 0:
        raise ValueError("rank path requires p coprime to 2QD")

    zp = params.zero_period
    num = [t for t in range(m - n + 1, m + 1) if zp is None or t % zp]
    den = [t for t in range(1, n + 1) if zp is None or t % zp]
    if len(den) < len(num):  # more zeros below than above
        raise ConventionViolation("zero factors left in the denominator")
    if len(num) < len(den):
        return ValuedResidue.exact_zero(p, k)

    ladder = rank_ladder(params, p, m)

    def valuation(t: int) -> int:
        v = 0
        for r in ladder:
            if t % r:
                break
            v += 1
        return v

    vals_num = [valuation(t) for t in num]
    vals_den = [valuation(t) for t in den]
    v = sum(vals_num) - sum(vals_den)
    if v < 0:
        raise NonIntegralError("negative p-adic valuation in a Lucanomial")
    # Dividing a factor by p^vt costs vt digits; compute the window with the
    # worst case of extra headroom so every stripped unit is exact mod p^k.
    extra = max(vals_num + vals_den)
    us = _u_window_mod(params, m, p ** (k + extra))
    top = 1
    for t, vt in zip(num, vals_num):
        top = top * ((us[t] // p**vt) % pk) % pk
    bottom = 1
    for t, vt in zip(den, vals_den):
        bottom = bottom * ((us[t] // p**vt) % pk) % pk
    return ValuedResidue(p, k, v, top * pow(bottom, -1, pk) % pk)


def integrality_sweep(params: LucasParams, m_max: int) -> bool:
    """True iff binom(m, n)_U is a well-defined integer for all 0 <= n <= m <= m_max."""
    for m in range(m_max + 1):
        for n in range(m + 1):
            try:
                lucanomial_exact(params, m, n)
            except (NonIntegralError, ConventionViolation):
                return False
    return True

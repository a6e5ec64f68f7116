"""Primality, Legendre symbols and rank-of-appearance machinery mod prime powers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lucas import LucasParams, lucas_uv_mod

__all__ = [
    "NoRankError",
    "NonMaximalRankError",
    "RankInfo",
    "is_prime",
    "primes_in_range",
    "legendre",
    "rank_of_appearance",
    "rank_ladder",
    "euler_criterion_check",
    "find_maximal_rank_primes",
]


class NoRankError(ValueError):
    """p divides Q, so U_t = P^(t-1) mod p and no positive-index term vanishes."""


class NonMaximalRankError(ValueError):
    """The operation needs a prime whose rank equals p - epsilon_p."""


# Deterministic witness set for Miller-Rabin below 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, ascending."""
    if hi < 2 or hi < lo:
        return []
    if hi <= 2_000_000:
        sieve = bytearray([1]) * (hi + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, int(hi**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        return [p for p in range(max(lo, 2), hi + 1) if sieve[p]]
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a | p) in {-1, 0, 1} by Euler's power criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@dataclass(frozen=True)
class RankInfo:
    """Rank of appearance of an odd prime p in U, with prime-power ranks.

    rho is the least t > 0 with p | U_t; epsilon the Legendre symbol (D | p);
    maximal means rho = p - epsilon.  rho_prime_power maps an exponent a to
    the least t > 0 with p^a | U_t, for every exponent computed so far.
    """

    p: int
    rho: int
    epsilon: int
    maximal: bool
    rho_prime_power: dict[int, int] = field(default_factory=dict)


def _prime_power_rank(params: LucasParams, p: int, a: int, rho_prev: int) -> int:
    # p^a | U_t iff rank(p^a) | t, so only multiples of rank(p^(a-1)) can work;
    # the law of repetition keeps the answer within p * rho_prev.
    mod = p**a
    for j in range(1, p + 1):
        u, _ = lucas_uv_mod(params, j * rho_prev, mod)
        if u == 0:
            return j * rho_prev
    raise ArithmeticError(f"no rank of {p}^{a} among the first {p} multiples of {rho_prev}")


def rank_of_appearance(params: LucasParams, p: int, exponents: int = 1) -> RankInfo:
    """Rank of p in U by direct scan of U_t mod p for t = 1, 2, ..., p+1.

    Prime-power ranks are filled in for 1 <= a <= exponents.  Raises
    NoRankError when p divides Q and ValueError when p is not an odd prime.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if params.Q % p == 0:
        raise NoRankError(f"{p} divides Q = {params.Q}")
    if p == 2:
        raise ValueError("p must be odd")
    pp, qq = params.P % p, params.Q % p
    u_prev, u = 0, 1
    rho = 0
    for t in range(1, p + 2):
        if u == 0:
            rho = t
            break
        u_prev, u = u, (pp * u - qq * u_prev) % p
    else:
        raise ArithmeticError(f"no rank of {p} found below {p + 2}")
    epsilon = legendre(params.D, p)
    powers = {1: rho}
    for a in range(2, exponents + 1):
        powers[a] = _prime_power_rank(params, p, a, powers[a - 1])
    return RankInfo(p, rho, epsilon, rho == p - epsilon, powers)


def rank_ladder(params: LucasParams, p: int, index_limit: int) -> list[int]:
    """Ranks of p, p^2, p^3, ... for valuation lookups of terms U_t, t <= index_limit.

    Stops after the first entry that exceeds index_limit or lands on a zero
    term of U: every later entry is a multiple of it, so it cannot divide the
    index of any nonzero term within range.  Requires p odd, p not dividing Q.
    """
    ladder = [rank_of_appearance(params, p).rho]
    zp = params.zero_period
    a = 2
    while ladder[-1] <= index_limit and not (zp is not None and ladder[-1] % zp == 0):
        ladder.append(_prime_power_rank(params, p, a, ladder[-1]))
        a += 1
    return ladder


def euler_criterion_check(params: LucasParams, p: int) -> bool:
    """Self-test of the rank machinery: p | U_{(p-eps)/2} iff Q is a square mod p.

    Requires p coprime to 2*D*Q.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if (2 * params.D * params.Q) % p == 0:
        raise ValueError("requires p coprime to 2DQ")
    epsilon = legendre(params.D, p)
    u, _ = lucas_uv_mod(params, (p - epsilon) // 2, p)
    return (u == 0) == (legendre(params.Q, p) == 1)


def find_maximal_rank_primes(params: LucasParams, p_min: int, p_max: int) -> list[RankInfo]:
    """All primes in [p_min, p_max] not dividing Q whose rank is p - epsilon, ascending."""
    if not 5 <= p_min <= p_max:
        raise ValueError("need 5 <= p_min <= p_max")
    found = []
    for p in primes_in_range(p_min, p_max):
        if params.Q % p == 0:
            continue
        info = rank_of_appearance(params, p)
        if info.maximal:
            found.append(info)
    return found

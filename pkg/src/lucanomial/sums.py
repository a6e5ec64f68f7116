"""Sums of products of V_t/U_t over 0 < t < rank, mod p^k, and their laws.

With x_t = V_t/U_t (every U_t is invertible mod p^k for 0 < t < rho), the
table holds the power sums x_1^v + ... + x_{rho-1}^v for v <= 5, the monomial
symmetric sums over distinct indices for every exponent multiset used by the
fifth- and sixth-power congruences, and the weighted sums
4 Q^t V_t^v / U_t^(v+2) for v <= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .lucas import LucasParams, lucas_uv_mod
from .ranks import NonMaximalRankError, RankInfo
from .reports import CongruenceReport

__all__ = [
    "SumsTable",
    "MONOMIAL_KEYS",
    "compute_sums",
    "monomial_sum_direct",
    "verify_power_sums",
    "verify_sum_lemmas",
]

POWER_MAX = 5
WEIGHTED_MAX = 3
MONOMIAL_KEYS = (
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 2),
    (2, 3),
    (1, 1, 1),
    (1, 1, 2),
    (1, 2, 2),
    (1, 1, 3),
    (1, 1, 1, 1),
    (1, 1, 1, 2),
    (1, 1, 1, 1, 1),
)


@dataclass(frozen=True)
class SumsTable:
    """Residues mod p^k of the tabulated sums for one (params, p)."""

    params: LucasParams
    p: int
    rho: int
    k: int
    power: tuple[int, ...]
    monomial: dict[tuple[int, ...], int]
    weighted: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def sigma(self, *expo: int) -> int:
        """Sum over distinct indices of the monomial with these exponents.

        sigma(v) is the power sum; sigma(1, 2) the sum of x_s * x_t^2 over
        distinct pairs, and so on.  Order of exponents does not matter.
        """
        if len(expo) == 1:
            return self.power[expo[0]]
        return self.monomial[tuple(sorted(expo))]


def monomial_sum_direct(xs: Sequence[int], expo: Sequence[int], modulus: int) -> int:
    """Brute-force monomial symmetric sum over distinct indices; test oracle,
    O(len(xs)^len(expo))."""
    total = 0
    r = len(expo)
    assignments = sorted(set(permutations(expo)))
    for combo in combinations(range(len(xs)), r):
        for perm in assignments:
            term = 1
            for i, e in zip(combo, perm):
                term = term * pow(xs[i], e, modulus) % modulus
            total = (total + term) % modulus
    return total


def _monomials_from_powers(s: Sequence[int], modulus: int) -> dict[tuple[int, ...], int]:
    # Newton's identities and products of monomial sums; exact identities in
    # the x_t, so they hold verbatim mod p^k.  Divisions are by 2, 3, 4, 5
    # only, hence p >= 7 at the call site.
    inv2 = pow(2, -1, modulus)
    inv3 = pow(3, -1, modulus)
    inv5 = pow(5, -1, modulus)
    e1 = s[1]
    e2 = (e1 * s[1] - s[2]) * inv2 % modulus
    e3 = (e2 * s[1] - e1 * s[2] + s[3]) * inv3 % modulus
    e4 = (e3 * s[1] - e2 * s[2] + e1 * s[3] - s[4]) * inv2 * inv2 % modulus
    e5 = (e4 * s[1] - e3 * s[2] + e2 * s[3] - e1 * s[4] + s[5]) * inv5 % modulus
    m21 = (s[1] * s[2] - s[3]) % modulus
    m31 = (s[1] * s[3] - s[4]) % modulus
    m41 = (s[1] * s[4] - s[5]) % modulus
    m22 = (s[2] * s[2] - s[4]) * inv2 % modulus
    m32 = (s[2] * s[3] - s[5]) % modulus
    m211 = (e2 * s[2] - m31) % modulus
    m221 = (e1 * m22 - m32) % modulus
    m311 = (e2 * s[3] - m41) % modulus
    m2111 = (e3 * s[2] - m311) % modulus
    return {
        (1, 1): e2,
        (1, 2): m21,
        (1, 3): m31,
        (1, 4): m41,
        (2, 2): m22,
        (2, 3): m32,
        (1, 1, 1): e3,
        (1, 1, 2): m211,
        (1, 2, 2): m221,
        (1, 1, 3): m311,
        (1, 1, 1, 1): e4,
        (1, 1, 1, 2): m2111,
        (1, 1, 1, 1, 1): e5,
    }


def ratios_mod(params: LucasParams, rho: int, modulus: int) -> list[int]:
    """x_t = V_t / U_t mod modulus for t = 1 .. rho-1."""
    out = []
    u_prev, u = 0, 1 % modulus
    v_prev, v = 2 % modulus, params.P % modulus
    for _ in range(1, rho):
        out.append(v * pow(u, -1, modulus) % modulus)
        u_prev, u = u, (params.P * u - params.Q * u_prev) % modulus
        v_prev, v = v, (params.P * v - params.Q * v_prev) % modulus
    return out


def compute_sums(params: LucasParams, rank: RankInfo, k: int) -> SumsTable:
    """Build the whole table mod p^k.

    Multi-index sums come from the power sums through exact symmetric-function
    relations; for p in {3, 5} the divisions those need are not all invertible
    and the table (rank <= p+1 <= 6 there) is enumerated directly instead.
    """
    p, rho = rank.p, rank.rho
    if p == 2:
        raise ValueError("p must be odd")
    if params.Q % p == 0:
        raise ValueError("p must not divide Q")
    if k < 1:
        raise ValueError("precision k must be positive")
    modulus = p**k
    xs = []
    weighted = [0] * (WEIGHTED_MAX + 1)
    u_prev, u = 0, 1 % modulus
    v_prev, v = 2 % modulus, params.P % modulus
    qt = 1
    for _ in range(1, rho):
        qt = qt * params.Q % modulus
        inv_u = pow(u, -1, modulus)
        x = v * inv_u % modulus
        xs.append(x)
        w = 4 * qt * inv_u * inv_u % modulus
        for nu in range(WEIGHTED_MAX + 1):
            weighted[nu] = (weighted[nu] + w) % modulus
            w = w * x % modulus
        u_prev, u = u, (params.P * u - params.Q * u_prev) % modulus
        v_prev, v = v, (params.P * v - params.Q * v_prev) % modulus
    power = [0] * (POWER_MAX + 1)
    for x in xs:
        xp = 1
        for nu in range(POWER_MAX + 1):
            power[nu] = (power[nu] + xp) % modulus
            xp = xp * x % modulus
    if p >= 7:
        monomial = _monomials_from_powers(power, modulus)
    else:
        monomial = {key: monomial_sum_direct(xs, key, modulus) for key in MONOMIAL_KEYS}
    return SumsTable(params, p, rho, k, tuple(power), monomial, tuple(weighted))


def verify_power_sums(
    params: LucasParams, rank: RankInfo, nu: int, table: SumsTable | None = None
) -> CongruenceReport:
    """Check the value of the power sum sigma(nu) at its stated modulus.

    At maximal rank (and p >= nu + 3): 0 mod p^2 for odd nu; for even nu,
    0 mod p when epsilon is 0 or -1 and -2 D^(nu/2) mod p when epsilon is 1;
    exception: nu = 0 with epsilon = 0 gives -1 mod p.  At any rank, odd nu
    still gives 0 mod p.
    """
    if not 0 <= nu <= POWER_MAX:
        raise ValueError(f"nu must be in 0..{POWER_MAX}")
    p, eps = rank.p, rank.epsilon
    if table is None:
        table = compute_sums(params, rank, 2)
    if rank.maximal and p >= nu + 3:
        if nu % 2:
            j, rhs = 2, 0
        elif eps == 1:
            j, rhs = 1, (-2 * pow(params.D, nu // 2, p)) % p
        elif nu == 0 and eps == 0:
            j, rhs = 1, p - 1
        else:
            j, rhs = 1, 0
    elif nu % 2:
        j, rhs = 1, 0  # holds at any rank
    else:
        raise ValueError("even nu needs maximal rank and p >= nu + 3")
    lhs = table.power[nu] % p**j
    return CongruenceReport(
        "power_sums", params, rank, {"k": nu}, j, lhs, rhs, lhs == rhs
    )


def _report(tid, params, rank, inputs, j, lhs, rhs, error=None):
    modulus = rank.p**j
    lhs %= modulus
    rhs %= modulus
    return CongruenceReport(
        tid, params, rank, inputs, j, lhs, rhs, lhs == rhs and error is None, error
    )


def verify_sum_lemmas(params: LucasParams, rank: RankInfo) -> list[CongruenceReport]:
    """Verify every tabulated-sum law at its stated modulus for one maximal-rank
    prime p >= 7; one report per instance.

    Covers the power-sum values, the pair/triple/quadruple/quintuple sums, the
    weighted sums (for p >= nu + 5), the companion-term values V at odd
    multiples of an even rank mod p^2 with their doubled indices, and the two
    higher-precision reductions of sigma(1) (mod p^4 and mod p^5).
    """
    p, rho, eps = rank.p, rank.rho, rank.epsilon
    if p < 7:
        raise ValueError("the lemma family needs p >= 7")
    if not rank.maximal:
        raise NonMaximalRankError(f"rank of {p} is {rho}, not {p - eps}")
    table = compute_sums(params, rank, 5)
    M5 = table.modulus
    D, Q = params.D, params.Q
    reports = []

    for nu in range(POWER_MAX + 1):
        if p >= nu + 3:
            reports.append(verify_power_sums(params, rank, nu, table))

    rhs_pair = D % p if eps == 1 else 0
    reports.append(_report("pair_sum", params, rank, {}, 1, table.sigma(1, 1), rhs_pair))
    reports.append(_report("triple_sum", params, rank, {}, 2, table.sigma(1, 1, 1), 0))
    rhs_quad = D * D % p if eps == 1 else 0
    reports.append(_report("quadruple_sum", params, rank, {}, 1, table.sigma(1, 1, 1, 1), rhs_quad))
    # The quintuple sum vanishes mod p^2 once p >= 11; at p = 7 the chain that
    # lifts it from mod p breaks (it needs sigma(5) = 0 mod p^2, which wants
    # p >= 5 + 3), so mod p is all that survives there and all that the
    # sixth-power expansion consumes.
    reports.append(
        _report(
            "quintuple_sum", params, rank, {}, 2 if p >= 11 else 1, table.sigma(1, 1, 1, 1, 1), 0
        )
    )

    if rho % 2 == 0:
        # V at odd multiples of the rank: V_{k rho}/2 = -Q^(k rho / 2) mod p^2,
        # and doubling any such index lands on 2 Q^t mod p^2.
        p2 = p * p
        inv2 = (p2 + 1) // 2
        for mult in (1, 3, 5):
            t = mult * rho
            _, vt = lucas_uv_mod(params, t, p2)
            reports.append(
                _report(
                    "companion_odd_multiple",
                    params,
                    rank,
                    {"k": mult},
                    2,
                    vt * inv2 % p2,
                    -pow(Q, t // 2, p2),
                )
            )
            _, v2t = lucas_uv_mod(params, 2 * t, p2)
            reports.append(
                _report(
                    "companion_double", params, rank, {"k": mult}, 2, v2t, 2 * pow(Q, t, p2)
                )
            )

    for nu in range(WEIGHTED_MAX + 1):
        if p < nu + 5:
            continue
        j = 2 if nu % 2 else 1
        lhs = table.weighted[nu]
        error = None
        if lhs != (table.power[nu + 2] - D * table.power[nu]) % M5:
            error = "weighted sum disagrees with sigma(nu+2) - D sigma(nu)"
        reports.append(_report("weighted_sum", params, rank, {"k": nu}, j, lhs, 0, error))

    u_r, v_r = lucas_uv_mod(params, rho, M5)
    uv = u_r * pow(v_r, -1, M5) % M5
    p4 = p**4
    reports.append(
        _report(
            "sum_reflection",
            params,
            rank,
            {},
            4,
            -2 * table.sigma(1) % p4,
            uv * table.weighted[0] % p4,
        )
    )
    inv2 = pow(2, -1, M5)
    half_term = inv2 * (rho - 1) % M5 * D % M5
    rhs17 = uv * uv % M5 * ((table.sigma(1, 1) + half_term) % M5) % M5
    reports.append(
        _report("pair_reduction", params, rank, {}, 5, uv * table.sigma(1) % M5, rhs17)
    )
    return reports

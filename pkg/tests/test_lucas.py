"""Lucas sequence construction, evaluation, and the classical identities."""

import pytest

from lucanomial import (
    LucasParams,
    check_identities,
    check_identities_upto,
    lucas_range,
    lucas_term,
    lucas_uv_mod,
)


def plain_uv(P, Q, n):
    """Independent oracle: the bare three-term recurrence."""
    u0, u1, v0, v1 = 0, 1, 2, P
    for _ in range(n):
        u0, u1 = u1, P * u1 - Q * u0
        v0, v1 = v1, P * v1 - Q * v0
    return u0, v0


SAMPLE_PARAMS = [
    (1, -1),
    (2, 1),
    (2, 2),
    (3, 5),
    (-3, 2),
    (0, 3),
    (1, 1),
    (3, 3),
    (-5, -5),
    (4, 4),
]


def test_q_zero_rejected():
    with pytest.raises(ValueError):
        LucasParams(3, 0)


def test_discriminant_derived():
    assert LucasParams(3, -2).D == 17
    assert LucasParams(2, 1).D == 0
    assert LucasParams(1, -1).D == 5


@pytest.mark.parametrize(
    "P,Q,degenerate,period",
    [
        (1, -1, False, None),
        (2, 1, False, None),  # D = 0 but no zero terms
        (2, 2, True, 4),
        (0, 3, True, 2),
        (0, -5, True, 2),
        (1, 1, True, 3),
        (2, 4, True, 3),
        (3, 3, True, 6),
        (-2, 2, True, 4),
    ],
)
def test_degenerate_detection(P, Q, degenerate, period):
    params = LucasParams(P, Q)
    assert params.degenerate is degenerate
    assert params.zero_period == period


def test_degenerate_iff_early_zero_product():
    for P, Q in SAMPLE_PARAMS:
        params = LucasParams(P, Q)
        us = [t.U for t in lucas_range(params, 6)]
        assert params.degenerate == (us[2] * us[3] * us[4] * us[6] == 0)


def test_initial_values():
    for P, Q in SAMPLE_PARAMS:
        term = lucas_term(LucasParams(P, Q), 0)
        assert (term.U, term.V) == (0, 2)


def test_fibonacci_term_nine():
    assert plain_uv(1, -1, 9) == (34, 76)
    term = lucas_term(LucasParams(1, -1), 9)
    assert (term.U, term.V) == (34, 76)


def test_u22_opening_run():
    us = [t.U for t in lucas_range(LucasParams(2, 2), 12)]
    assert us == [0, 1, 2, 2, 0, -4, -8, -8, 0, 16, 32, 32, 0]


def test_u21_counts_indices():
    assert lucas_term(LucasParams(2, 1), 7).U == 7
    assert [t.U for t in lucas_range(LucasParams(2, 1), 5)] == [0, 1, 2, 3, 4, 5]


def test_p_zero_pattern():
    assert [t.U for t in lucas_range(LucasParams(0, 3), 4)] == [0, 1, 0, -3, 0]


@pytest.mark.parametrize("P,Q", SAMPLE_PARAMS)
def test_fast_doubling_matches_plain_recurrence(P, Q):
    params = LucasParams(P, Q)
    terms = lucas_range(params, 500)
    for n in range(501):
        term = lucas_term(params, n)
        assert (term.U, term.V) == (terms[n].U, terms[n].V)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        lucas_term(LucasParams(1, -1), -1)


@pytest.mark.parametrize("P,Q", [(1, -1), (3, 5), (2, 2), (-4, 3)])
def test_modular_evaluation_matches_exact(P, Q):
    params = LucasParams(P, Q)
    for modulus in (3, 7**3, 11**5, 3 * 5 * 49):
        for n in (0, 1, 2, 17, 100, 513):
            term = lucas_term(params, n)
            assert lucas_uv_mod(params, n, modulus) == (term.U % modulus, term.V % modulus)


def test_modular_evaluation_needs_odd_modulus():
    with pytest.raises(ValueError):
        lucas_uv_mod(LucasParams(1, -1), 5, 10)


@pytest.mark.parametrize("P,Q", SAMPLE_PARAMS)
def test_companion_norm_identity(P, Q):
    params = LucasParams(P, Q)
    for term in lucas_range(params, 120):
        assert term.V**2 - params.D * term.U**2 == 4 * params.Q**term.n


def test_check_identities_examples():
    assert check_identities(LucasParams(1, -1), 9, 4)
    assert check_identities(LucasParams(2, 2), 7, 3)
    for P, Q in SAMPLE_PARAMS:
        assert check_identities(LucasParams(P, Q), 0, 0)


def test_check_identities_orders_arguments():
    with pytest.raises(ValueError):
        check_identities(LucasParams(1, -1), 3, 7)


@pytest.mark.parametrize("P,Q", [(1, -1), (2, 2), (3, 3), (-3, 2), (0, -5)])
def test_identities_exhaustive_small(P, Q):
    assert check_identities_upto(LucasParams(P, Q), 60)

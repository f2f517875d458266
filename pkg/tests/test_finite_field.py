import random

import pytest
from sympy import legendre_symbol, primerange

from model import (
    BadReductionError,
    FrobeniusTrace,
    HasseBoundError,
    PreconditionError,
    ReducedCurve,
    WeierstrassModel,
    compute_invariants,
    count_points,
    frey_curve,
    hasse_interval,
    quadratic_twist,
    reduce_mod_p,
    trace_of_frobenius,
)
from model.finite_field import count_points_by_character_sum, count_points_by_scan, hasse_radius


ODD_PRIMES = list(primerange(3, 98))


@pytest.fixture
def rng():
    return random.Random(42)


def random_good_pair(rng, short=False):
    while True:
        p = rng.choice(ODD_PRIMES)
        coeffs = [rng.randint(-100, 100) for _ in range(5)]
        if short:
            coeffs[0] = coeffs[2] = 0
        model = WeierstrassModel(*coeffs)
        if compute_invariants(model).disc % p:
            return model, p



@pytest.mark.parametrize('ell, points, trace', [(17, 8, -2), (11, 4, 2)])
def test_frey_curve_mod_5(ell, points, trace):
    curve = reduce_mod_p(frey_curve(ell), 5)
    assert count_points(curve) == points
    assert trace_of_frobenius(curve) == FrobeniusTrace(5, trace)


def test_small_curve_over_f3():
    curve = reduce_mod_p(WeierstrassModel(0, 0, 0, -1, 0), 3)
    assert curve.ainvs == (0, 0, 0, 2, 0)
    assert count_points(curve) == 4
    assert trace_of_frobenius(curve).trace == 0



def test_two_counts_agree_within_hasse_bound(rng):
    for _ in range(1000):
        model, p = random_good_pair(rng)
        curve = reduce_mod_p(model, p)
        scanned = count_points_by_scan(curve)
        assert scanned == count_points_by_character_sum(curve)
        assert (p + 1 - scanned) ** 2 <= 4 * p


def test_quadratic_twist_negates_trace(rng):
    for _ in range(200):
        model, p = random_good_pair(rng, short=True)
        d = next(d for d in range(2, p) if legendre_symbol(d, p) == -1)
        twisted = quadratic_twist(model, d)
        assert trace_of_frobenius(reduce_mod_p(twisted, p)).trace == -trace_of_frobenius(reduce_mod_p(model, p)).trace


def test_twist_by_a_square_keeps_trace():
    model = frey_curve(13)
    assert trace_of_frobenius(reduce_mod_p(quadratic_twist(model, 4), 7)) == trace_of_frobenius(reduce_mod_p(model, 7))


def test_quadratic_twist_needs_short_model():
    with pytest.raises(PreconditionError):
        quadratic_twist(WeierstrassModel(1, 0, 1, -89, 316), 3)



def test_hasse_interval():
    assert hasse_radius(3) == 3
    assert hasse_radius(5) == 4
    assert hasse_interval(2) == frozenset(range(-2, 3))


def test_trace_outside_hasse_bound():
    with pytest.raises(HasseBoundError):
        FrobeniusTrace(5, 5)



def test_reduce_mod_p_preconditions():
    with pytest.raises(BadReductionError):
        reduce_mod_p(frey_curve(11), 3)
    with pytest.raises(PreconditionError):
        reduce_mod_p(frey_curve(11), 2)
    with pytest.raises(PreconditionError):
        reduce_mod_p(frey_curve(11), 9)


def test_reduced_curve_rejects_unreduced_coefficients():
    with pytest.raises(PreconditionError):
        ReducedCurve(5, 0, 0, 0, 5, 0)
    with pytest.raises(BadReductionError):
        ReducedCurve(5, 0, 0, 0, 0, 0)

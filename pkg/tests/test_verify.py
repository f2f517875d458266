import dataclasses
import pickle

import pytest
from sympy import primerange

from model import (
    ClaimError,
    CriterionInapplicableError,
    DivisibilityError,
    PreconditionError,
    WeierstrassModel,
    frey_curve,
    reduce_mod_p,
    trace_of_frobenius,
    valuation,
)
from module.verify import (
    ReducibilityConfig,
    claim,
    good_reduction_obstruction,
    is_irreducible,
    matching_traces,
    prime_to_ell_conductor,
    reducibility_exceptions,
    tate_trace_residues,
    unramified_at,
    verify_theorem,
)


CALEGARI = WeierstrassModel(1, 0, 1, -89, 316)
CURVE_11A = WeierstrassModel(0, -1, 1, -10, -20)
WINDOW = list(primerange(11, 500))



def test_unramified_at_2_for_calegari_curve():
    witness = unramified_at(CALEGARI, 2, 7)
    assert witness.unramified
    assert witness.valuation == 7


def test_unramified_at_3_depends_on_ell():
    model = frey_curve(11)
    assert unramified_at(model, 3, 11).unramified
    assert not unramified_at(model, 3, 7).unramified


def test_unramified_at_unclassified_prime_is_inapplicable():
    with pytest.raises(CriterionInapplicableError):
        unramified_at(frey_curve(11), 2, 11)


def test_unramified_at_preconditions():
    with pytest.raises(PreconditionError):
        unramified_at(CALEGARI, 3, 3)
    with pytest.raises(PreconditionError):
        unramified_at(CALEGARI, 4, 7)



@pytest.mark.parametrize('p, ell, residues', [(3, 11, {4, 7}), (2, 7, {3, 4}), (3, 7, {3, 4})])
def test_tate_trace_residues(p, ell, residues):
    assert tate_trace_residues(p, ell) == frozenset(residues)



def test_reducibility_exceptions_only_at_17():
    for ell in WINDOW:
        expected = frozenset({-1, 1}) if ell == 17 else frozenset()
        assert reducibility_exceptions(ell) == expected, ell


@pytest.mark.parametrize('ell', [5, 7, 15])
def test_reducibility_exceptions_preconditions(ell):
    with pytest.raises(PreconditionError):
        reducibility_exceptions(ell)


def test_irreducible_at_17_because_a5_is_minus_2():
    evidence = is_irreducible(frey_curve(17), 17)
    assert evidence.irreducible
    assert evidence.actual_trace == -2
    assert evidence.exceptions == frozenset({-1, 1})


def test_reducibility_config_checks_order():
    with pytest.raises(PreconditionError):
        ReducibilityConfig(max_character_order=2)
    with pytest.raises(PreconditionError):
        ReducibilityConfig(auxiliary_prime=2)



def test_obstruction_fails_at_ell_7():
    assert matching_traces(7, 3) == frozenset({-3, 3})
    assert not good_reduction_obstruction(7, 3)


def test_obstruction_at_2_for_ell_7():
    assert good_reduction_obstruction(7, 2)


@pytest.mark.parametrize('ell', WINDOW)
def test_obstruction_holds_above_7(ell):
    assert good_reduction_obstruction(ell, 3)



def test_prime_to_ell_conductor():
    assert prime_to_ell_conductor(CALEGARI, 7) == {5: 1, 11: 1}
    assert prime_to_ell_conductor(CURVE_11A, 7) == {11: 1}
    assert prime_to_ell_conductor(CURVE_11A, 5) == {}


def test_prime_to_ell_conductor_rejects_additive_primes():
    with pytest.raises(CriterionInapplicableError):
        prime_to_ell_conductor(WeierstrassModel(0, 0, 0, 0, 5), 7)



def test_claim_wraps_component_errors():
    with pytest.raises(ClaimError) as info:
        with claim('good_at_5', 13):
            raise DivisibilityError('boom')
    assert info.value.claim == 'good_at_5'
    assert info.value.ell == 13
    assert str(info.value) == "claim 'good_at_5' failed for ell=13: boom"


def test_claim_error_survives_pickling():
    error = ClaimError('irreducible', 17, DivisibilityError('boom'))
    restored = pickle.loads(pickle.dumps(error))
    assert str(restored) == str(error)
    assert restored.claim == 'irreducible'



def test_verify_theorem_at_11():
    report = verify_theorem(11)
    assert report.theorem_holds
    assert report.failed_claims == []
    assert report.v3_min_disc == 22
    assert report.reduction_at_3 == 'MultiplicativeNonSplit'
    assert report.tate_residues_at_3 == (4, 7)
    assert report.checked_odd_bad_primes == (3, 67, 661)
    assert report.reducibility_exception_set == ()
    assert report.actual_a5 == 2


@pytest.mark.parametrize('ell', WINDOW)
def test_verify_theorem_holds_for_every_ell(ell):
    report = verify_theorem(ell)
    assert report.theorem_holds, report.failed_claims
    assert report.v3_min_disc == 2 * ell


@pytest.mark.parametrize('ell', [7, 9, 12, 5])
def test_verify_theorem_preconditions(ell):
    with pytest.raises(PreconditionError):
        verify_theorem(ell)


def test_report_enforces_conjunction():
    report = verify_theorem(13)
    with pytest.raises(PreconditionError):
        dataclasses.replace(report, theorem_holds=False)
    with pytest.raises(PreconditionError):
        dataclasses.replace(report, unramified_at_3=None)



@pytest.mark.parametrize('ell', WINDOW)
def test_exceptions_square_to_36_or_minus_16(ell):
    for a in reducibility_exceptions(ell):
        assert (a * a - 36) % ell == 0 or (a * a + 16) % ell == 0


@pytest.mark.parametrize('ell', [11, 13, 17, 19, 499])
def test_unramified_at_3_iff_q_divides_valuation(ell):
    model = frey_curve(ell)
    for q in primerange(2, 60):
        if q == 3:
            continue
        assert unramified_at(model, 3, q).unramified == (2 * ell % q == 0), q


def test_calegari_unramified_at_2_only_for_7():
    for q in primerange(3, 60):
        assert unramified_at(CALEGARI, 2, q).unramified == (q == 7), q


@pytest.mark.parametrize('ell', WINDOW)
def test_minimal_valuation_at_3_matches_closed_form(ell):
    closed_form = 16 * 3 ** (2 * ell) * (3 ** ell + 1) ** 2
    assert verify_theorem(ell).v3_min_disc == valuation(closed_form, 3)



def test_auxiliary_prime_drives_good_reduction_and_trace():
    report = verify_theorem(13, ReducibilityConfig(auxiliary_prime=7))
    assert report.good_at_5 is True
    assert report.actual_a5 == trace_of_frobenius(reduce_mod_p(frey_curve(13), 7)).trace


def test_bad_auxiliary_prime_fails_the_point_count():
    #67 divides 3^11 + 1
    with pytest.raises(ClaimError) as info:
        verify_theorem(11, ReducibilityConfig(auxiliary_prime=67))
    assert info.value.claim == 'irreducible'

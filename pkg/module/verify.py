import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

from sympy import factorint, isprime, mod_inverse, nthroot_mod, reduced_totient

from model import (
    ClaimError,
    CriterionInapplicableError,
    NumberTheoryError,
    PreconditionError,
    ReductionKind,
    compute_invariants,
    frey_curve,
    hasse_interval,
    local_data,
    reduce_mod_p,
    semistable_away_from_2,
    trace_of_frobenius,
)


logger = logging.getLogger(__name__)

MIN_ELL = 11
DEFAULT_TRIAL_BOUND = 1000



@dataclass(frozen=True)
class ReducibilityConfig:
    """Constants of the irreducibility argument.

    A reducible representation would split as eps + eps^-1 * chi with eps
    unramified outside 2 and of conductor dividing 16; its order is then bounded by
    the exponent of (Z/16)^*, and only r = eps(aux) enters the computation.
    """

    max_curve_conductor_2part: int = 256
    max_character_conductor: int = 16
    max_character_order: int = 4
    auxiliary_prime: int = 5

    def __post_init__(self):
        exponent = int(reduced_totient(self.max_character_conductor))
        if self.max_character_order != exponent:
            raise PreconditionError(
                f"max_character_order {self.max_character_order} differs from the exponent "
                f"{exponent} of the units mod {self.max_character_conductor}"
            )
        if not isprime(self.auxiliary_prime) or self.auxiliary_prime == 2:
            raise PreconditionError(f"auxiliary prime must be an odd prime, got {self.auxiliary_prime}")



@dataclass(frozen=True)
class UnramifiedWitness:
    unramified: bool
    valuation: int
    kind: ReductionKind

    def __bool__(self):
        return self.unramified



@dataclass(frozen=True)
class IrreducibilityEvidence:
    irreducible: bool
    exceptions: FrozenSet[int]
    actual_trace: int

    def __bool__(self):
        return self.irreducible



@dataclass(frozen=True)
class VerificationReport:
    """Every claim checked for one ell. Tri-state fields use None for 'criterion inapplicable'.

    good_at_5 and actual_a5 refer to the configured auxiliary prime, 5 by default.
    """

    ell: int
    bad_at_2: Optional[bool]
    bad_at_3: Optional[bool]
    good_at_5: Optional[bool]
    good_at_ell: Optional[bool]
    semistable_outside_2: Optional[bool]
    checked_odd_bad_primes: Tuple[int, ...]
    v3_min_disc: int
    reduction_at_3: str
    unramified_at_3: Optional[bool]
    tate_residues_at_3: Tuple[int, int]
    reducibility_exception_set: Tuple[int, ...]
    actual_a5: int
    irreducible: Optional[bool]
    no_good_reduction_curve_at_3: Optional[bool]
    theorem_holds: bool = field(default=False)

    CLAIMS = (
        'bad_at_2',
        'bad_at_3',
        'good_at_5',
        'good_at_ell',
        'semistable_outside_2',
        'unramified_at_3',
        'irreducible',
        'no_good_reduction_curve_at_3',
    )

    def __post_init__(self):
        if self.theorem_holds != all(getattr(self, name) is True for name in self.CLAIMS):
            raise PreconditionError("theorem_holds must be the conjunction of every claim")
        if self.irreducible is not None and self.irreducible == (self.actual_a5 in self.reducibility_exception_set):
            raise PreconditionError("irreducible must mean actual_a5 is outside the exception set")


    @property
    def failed_claims(self):
        return [name for name in self.CLAIMS if getattr(self, name) is not True]



def _check_pair(p, ell):
    if not (isprime(p) and isprime(ell)):
        raise PreconditionError(f"p={p} and ell={ell} must both be prime")
    if p == ell:
        raise PreconditionError(f"p and ell must differ, both are {p}")



def unramified_at(model, p, ell):
    """Tate-curve criterion: multiplicative at p and ell | v_p(disc_min)."""
    _check_pair(p, ell)
    local = local_data(model, p)

    if local.kind in (ReductionKind.ADDITIVE, ReductionKind.UNCLASSIFIED_AT_2):
        raise CriterionInapplicableError(f"reduction at {p} is {local.kind.value}; the criterion needs multiplicative reduction")

    unramified = local.is_multiplicative and local.min_disc_valuation % ell == 0
    return UnramifiedWitness(unramified, local.min_disc_valuation, local.kind)



def tate_trace_residues(p, ell):
    _check_pair(p, ell)
    return frozenset({(p + 1) % ell, -(p + 1) % ell})



def reducibility_exceptions(ell, cfg=ReducibilityConfig()):
    """The a in the Hasse interval of the auxiliary prime with a = r + aux/r mod ell, r^order = 1."""
    aux = cfg.auxiliary_prime
    if not isprime(ell) or ell < MIN_ELL or ell == aux:
        raise PreconditionError(f"ell must be a prime >= {MIN_ELL} different from {aux}, got {ell}")

    roots = [int(r) for r in nthroot_mod(1, cfg.max_character_order, ell, all_roots=True)]
    values = {(r + aux * int(mod_inverse(r, ell))) % ell for r in roots}
    return frozenset(a for a in hasse_interval(aux) if a % ell in values)



def is_irreducible(model, ell, cfg=ReducibilityConfig()):
    trace = trace_of_frobenius(reduce_mod_p(model, cfg.auxiliary_prime)).trace
    exceptions = reducibility_exceptions(ell, cfg)
    return IrreducibilityEvidence(trace not in exceptions, exceptions, trace)



def matching_traces(ell, p):
    """Traces a good-reduction curve could have at p that are congruent to +-(p+1) mod ell."""
    residues = tate_trace_residues(p, ell)
    return frozenset(t for t in hasse_interval(p) if t % ell in residues)


def good_reduction_obstruction(ell, p):
    return not matching_traces(ell, p)



def prime_to_ell_conductor(model, ell):
    """Prime-to-ell conductor of the mod-ell representation of a small semistable model.

    Factors the discriminant completely, so only meant for models of modest size.
    """
    inv = compute_invariants(model)
    if inv.disc == 0:
        raise PreconditionError(f"{model} has zero discriminant")

    conductor = {}
    for p in sorted(int(q) for q in factorint(abs(inv.disc))):
        if p == ell:
            continue
        local = local_data(model, p)
        if not local.is_multiplicative:
            raise CriterionInapplicableError(f"conductor exponent at {p} ({local.kind.value}) is not modeled")
        if local.min_disc_valuation % ell:
            conductor[p] = 1
    return conductor



@contextmanager
def claim(name, ell):
    try:
        yield
    except NumberTheoryError as e:
        if isinstance(e, ClaimError):
            raise
        raise ClaimError(name, ell, e) from e



def _tri_state(evaluate):
    try:
        return evaluate()
    except CriterionInapplicableError:
        return None



def verify_theorem(ell, cfg=ReducibilityConfig(), trial_bound=DEFAULT_TRIAL_BOUND):
    if isinstance(ell, bool) or not isinstance(ell, int) or ell <= 7 or not isprime(ell):
        raise PreconditionError(f"ell must be a prime > 7, got {ell!r}")

    with claim('frey_curve', ell):
        model = frey_curve(ell)

    with claim('bad_at_2', ell):
        bad_at_2 = local_data(model, 2).is_bad

    with claim('bad_at_3', ell):
        local_3 = local_data(model, 3)
        bad_at_3 = local_3.is_bad

    with claim('good_at_5', ell):
        good_at_5 = local_data(model, cfg.auxiliary_prime).kind is ReductionKind.GOOD

    with claim('good_at_ell', ell):
        good_at_ell = local_data(model, ell).kind is ReductionKind.GOOD

    with claim('semistable_outside_2', ell):
        semistable, checked = semistable_away_from_2(model, trial_bound)

    with claim('unramified_at_3', ell):
        unramified_3 = _tri_state(lambda: unramified_at(model, 3, ell).unramified)

    with claim('tate_residues_at_3', ell):
        residues = tuple(sorted(tate_trace_residues(3, ell)))

    with claim('irreducible', ell):
        evidence = is_irreducible(model, ell, cfg)

    with claim('no_good_reduction_curve_at_3', ell):
        obstruction = good_reduction_obstruction(ell, 3)

    claims = dict(
        bad_at_2=bad_at_2,
        bad_at_3=bad_at_3,
        good_at_5=good_at_5,
        good_at_ell=good_at_ell,
        semistable_outside_2=semistable,
        unramified_at_3=unramified_3,
        irreducible=evidence.irreducible,
        no_good_reduction_curve_at_3=obstruction,
    )

    report = VerificationReport(
        ell=ell,
        checked_odd_bad_primes=checked,
        v3_min_disc=local_3.min_disc_valuation,
        reduction_at_3=local_3.kind.value,
        tate_residues_at_3=residues,
        reducibility_exception_set=tuple(sorted(evidence.exceptions)),
        actual_a5=evidence.actual_trace,
        theorem_holds=all(value is True for value in claims.values()),
        **claims,
    )
    logger.debug("ell=%d theorem_holds=%s", ell, report.theorem_holds)
    return report

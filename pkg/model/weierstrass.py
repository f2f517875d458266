import logging
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional, Tuple

from sympy import Rational, isprime, legendre_symbol, mod_inverse, multiplicity, primerange

from .errors import DegenerateModelError, DivisibilityError, PreconditionError


logger = logging.getLogger(__name__)

COEFFICIENT_NAMES = ('a1', 'a2', 'a3', 'a4', 'a6')
COEFFICIENT_WEIGHTS = (1, 2, 3, 4, 6)



@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 with integer coefficients."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        for name in COEFFICIENT_NAMES:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise PreconditionError(f"{name} must be an integer, got {value!r}")


    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


    @property
    def is_nondegenerate(self):
        return compute_invariants(self).disc != 0


    def __str__(self):
        lhs = 'y^2' + _terms(((self.a1, 'x*y'), (self.a3, 'y')))
        rhs = 'x^3' + _terms(((self.a2, 'x^2'), (self.a4, 'x'), (self.a6, '')))
        return f"{lhs} = {rhs}"



def _terms(pairs):
    """' + 3*x - y ...' for the nonzero coefficients; unit coefficients are dropped."""
    text = ''
    for coeff, monomial in pairs:
        if not coeff:
            continue
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        text += f" {'-' if coeff < 0 else '+'} {body}"
    return text



@dataclass(frozen=True)
class CurveInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Optional[Rational]



class ReductionKind(Enum):
    GOOD = 'Good'
    MULTIPLICATIVE_SPLIT = 'MultiplicativeSplit'
    MULTIPLICATIVE_NONSPLIT = 'MultiplicativeNonSplit'
    ADDITIVE = 'Additive'
    UNCLASSIFIED_AT_2 = 'UnclassifiedAt2'


    @property
    def is_multiplicative(self):
        return self in (ReductionKind.MULTIPLICATIVE_SPLIT, ReductionKind.MULTIPLICATIVE_NONSPLIT)



@dataclass(frozen=True)
class LocalReduction:
    """Reduction data of a model at one prime.

    `c4_valuation` is None when c4 = 0. `certified_minimal` is False only at p = 2,
    when the model might still be non-minimal and `min_disc_valuation` is just the
    valuation of the given model.
    """

    p: int
    min_disc_valuation: int
    kind: ReductionKind
    c4_valuation: Optional[int]
    certified_minimal: bool = True

    def __post_init__(self):
        if (self.kind is ReductionKind.GOOD) != (self.min_disc_valuation == 0):
            raise PreconditionError(
                f"kind {self.kind.value} inconsistent with v_{self.p}(disc_min) = {self.min_disc_valuation}"
            )
        if self.kind.is_multiplicative and (self.c4_valuation != 0 or self.min_disc_valuation <= 0):
            raise PreconditionError("multiplicative reduction needs v(c4) = 0 and v(disc) > 0")
        if self.kind is ReductionKind.UNCLASSIFIED_AT_2 and self.p != 2:
            raise PreconditionError("UnclassifiedAt2 only occurs at p = 2")


    @property
    def is_multiplicative(self):
        return self.kind.is_multiplicative


    @property
    def is_bad(self):
        """True/False, or None when an unclassified model at 2 is not known to be minimal."""
        if self.kind is ReductionKind.GOOD:
            return False
        if self.kind is ReductionKind.UNCLASSIFIED_AT_2 and not self.certified_minimal:
            return None
        return True



def compute_invariants(model):
    a1, a2, a3, a4, a6 = model.ainvs

    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    j = Rational(c4 ** 3, disc) if disc else None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j)



def frey_curve(ell):
    """y^2 = x(x - 3^ell)(x - 3^ell - 1)."""
    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 5 or not isprime(ell):
        raise PreconditionError(f"ell must be a prime >= 5, got {ell!r}")

    power = 3 ** ell
    return WeierstrassModel(0, -(2 * power + 1), 0, power * (power + 1), 0)



def transform(model, u, r, s, t):
    """Apply x = u^2 x' + r, y = u^3 y' + u^2 s x' + t; the result must be integral."""
    if u == 0:
        raise PreconditionError("u must be nonzero")

    a1, a2, a3, a4, a6 = model.ainvs
    numerators = (
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
    )

    coeffs = []
    for name, numerator, weight in zip(COEFFICIENT_NAMES, numerators, COEFFICIENT_WEIGHTS):
        quotient, remainder = divmod(numerator, u ** weight)
        if remainder:
            raise DivisibilityError(f"{name}' = {numerator} / {u}^{weight} is not an integer")
        coeffs.append(int(quotient))

    return WeierstrassModel(*coeffs)



def scale(model, u):
    """The model whose transform by (u, 0, 0, 0) is `model`."""
    if u == 0:
        raise PreconditionError("u must be nonzero")
    return WeierstrassModel(*(a * u ** w for a, w in zip(model.ainvs, COEFFICIENT_WEIGHTS)))



def completed_square(model):
    """(0, b2, 0, 8*b4, 16*b6): the same curve after clearing a1, a3 with u = 1/2."""
    inv = compute_invariants(model)
    return WeierstrassModel(0, inv.b2, 0, 8 * inv.b4, 16 * inv.b6)



def valuation(n, p):
    if n == 0:
        raise PreconditionError("valuation of 0 is infinite")
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    return int(multiplicity(p, abs(n)))


def _valuation_or_none(n, p):
    return None if n == 0 else valuation(n, p)


def _at_least(v, bound):
    return v is None or v >= bound



def _multiplicative_kind(c6, p):
    if p == 2:
        split = (-c6) % 8 == 1
    else:
        split = legendre_symbol((-c6) % p, p) == 1
    return ReductionKind.MULTIPLICATIVE_SPLIT if split else ReductionKind.MULTIPLICATIVE_NONSPLIT



def _may_descend(inv, p):
    return (_at_least(_valuation_or_none(inv.c4, p), 4)
            and _at_least(_valuation_or_none(inv.c6, p), 6)
            and valuation(inv.disc, p) >= 12)



def _descend(model, p):
    """One u = p step on an a1 = a3 = 0 model, or None if no integral result exists.

    Integrality only depends on r mod p^2, and for p >= 5 the x^2 coefficient
    fixes that class.
    """
    modulus = p * p
    if p == 3:
        candidates = range(modulus)
    else:
        candidates = (int(-model.a2 * mod_inverse(3, modulus)) % modulus,)

    for r in candidates:
        try:
            return transform(model, p, r, 0, 0)
        except DivisibilityError:
            continue
    return None



def local_data(model, p):
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")

    inv = compute_invariants(model)
    if inv.disc == 0:
        raise DegenerateModelError(f"{model} has zero discriminant")

    v_disc = valuation(inv.disc, p)
    v_c4 = _valuation_or_none(inv.c4, p)

    if v_disc == 0:
        return LocalReduction(p, 0, ReductionKind.GOOD, v_c4)
    if v_c4 == 0:
        return LocalReduction(p, v_disc, _multiplicative_kind(inv.c6, p), 0)
    if p == 2:
        return LocalReduction(p, v_disc, ReductionKind.UNCLASSIFIED_AT_2, v_c4, v_disc < 12)

    #valuations at odd p are unchanged by completing the square
    current = completed_square(model)
    current_inv = compute_invariants(current)
    steps = 0
    while _may_descend(current_inv, p):
        lower = _descend(current, p)
        if lower is None:
            break
        current, steps = lower, steps + 1
        current_inv = compute_invariants(current)

    if steps:
        logger.debug("minimalized %s at p=%d in %d step(s)", model, p, steps)

    v_min = valuation(current_inv.disc, p)
    v_c4_min = _valuation_or_none(current_inv.c4, p)

    if v_min == 0:
        return LocalReduction(p, 0, ReductionKind.GOOD, v_c4_min)
    if v_c4_min == 0:
        return LocalReduction(p, v_min, _multiplicative_kind(current_inv.c6, p), 0)
    return LocalReduction(p, v_min, ReductionKind.ADDITIVE, v_c4_min)



def semistable_away_from_2(model, trial_bound=1000) -> Tuple[Optional[bool], Tuple[int, ...]]:
    """Decide whether the curve is semistable at every odd prime, without factoring disc.

    An odd prime dividing disc but not c4 is multiplicative, so only the odd part of
    gcd(c4, disc) needs a closer look; on a non-minimal model such a prime may turn out
    good. Returns (verdict, checked primes); the verdict is None when that gcd keeps a
    factor beyond `trial_bound`.
    """
    inv = compute_invariants(model)
    if inv.disc == 0:
        raise DegenerateModelError(f"{model} has zero discriminant")

    shared = gcd(inv.c4, inv.disc)
    shared //= 2 ** int(multiplicity(2, shared))

    checked = []
    for q in primerange(3, trial_bound):
        if inv.disc % q:
            continue
        checked.append(q)
        if local_data(model, q).kind is ReductionKind.ADDITIVE:
            return False, tuple(checked)
        while shared % q == 0:
            shared //= q

    if shared != 1:
        logger.debug("gcd(c4, disc) keeps cofactor %d beyond trial bound %d", shared, trial_bound)
        return None, tuple(checked)
    return True, tuple(checked)

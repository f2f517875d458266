import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from math import ceil, comb, factorial, floor, isqrt, prod, sqrt

from sympy import QQ, Poly, Rational, isprime, primefactors

from model import DegreeCapError, IntegerPolynomial, PreconditionError
from model.polynomial import X, derivative_coefficients, roots_in_interval


logger = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 4
RELAXED_MAX_DEGREE = 3
_ISOLATION_EPS = Rational(1, 10 ** 6)



@dataclass(frozen=True)
class ExclusionBound:
    """Largest prime ell for which some trace candidate of degree <= `degree` is congruent to +-(p+1)."""

    p: int
    degree: int
    bound: int
    witness: IntegerPolynomial
    product: int

    def __post_init__(self):
        if not isprime(self.bound) or self.product % self.bound:
            raise PreconditionError(f"{self.bound} is not a prime divisor of {self.product}")



def coefficient_bound(p, d, k):
    """floor(C(d, k) * (2 sqrt p)^k), the bound on the k-th elementary symmetric function."""
    return isqrt(comb(d, k) ** 2 * (4 * p) ** k)



def search_space_size(p, d):
    return prod(2 * coefficient_bound(p, d, k) + 1 for k in range(1, d + 1))



def _check_request(p, d, max_degree, totally_real):
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if d < 1:
        raise PreconditionError(f"degree must be at least 1, got {d}")
    cap = max_degree if totally_real else min(max_degree, RELAXED_MAX_DEGREE)
    if d > cap:
        raise DegreeCapError(
            f"degree {d} exceeds the cap {cap}: the coefficient box for p={p} holds "
            f"{search_space_size(p, d):,} candidates before pruning"
        )



def _critical_points(coefficients):
    """Float approximations of the real roots of the derivative, each listed once per multiplicity."""
    slope = derivative_coefficients(coefficients, 1)
    if len(slope) < 2:
        return []
    intervals = Poly(slope, X, domain=QQ).intervals(eps=_ISOLATION_EPS)
    return [float(lo + hi) / 2 for (lo, hi), multiplicity in intervals for _ in range(multiplicity)]



def _constant_range(coefficients, p):
    """Approximate interval of constants C making coefficients + C real-rooted inside [-2 sqrt p, 2 sqrt p].

    With positive leading coefficient the polynomial must be >= 0 at the right end
    and alternate in sign at the critical points towards the left. A critical point of
    multiplicity m counts m times: for even m it is no extremum and leaves the parity
    alone, for m > 1 it pins C to a root of the polynomial there.
    """
    edge = sqrt(4 * p)
    points = sorted([-edge, edge] + _critical_points(coefficients), reverse=True)
    lower, upper = float('-inf'), float('inf')
    for i, x in enumerate(points):
        value = 0.0
        for c in coefficients:
            value = value * x + c
        if i % 2 == 0:
            lower = max(lower, -value)
        else:
            upper = min(upper, -value)
    return lower, upper



def _candidates(prefix, p, d, totally_real):
    """Values for the next coefficient after `prefix`, pruned but not yet certified."""
    k = len(prefix)
    bound = coefficient_bound(p, d, k)
    if not totally_real:
        return range(-bound, bound + 1)

    order = d - k
    truncated = derivative_coefficients(prefix + [0] * (order + 1), order)
    lower, upper = _constant_range(truncated, p)
    if lower > upper + 1:
        return range(0)
    scale = factorial(order)
    low = max(-bound, floor(lower / scale) - 1)
    high = min(bound, ceil(upper / scale) + 1)
    return range(low, high + 1)



def _children(prefix, p, d, totally_real):
    order = d - len(prefix)
    children = []
    for c in _candidates(prefix, p, d, totally_real):
        candidate = prefix + [c]
        if totally_real:
            #Rolle: this derivative only depends on the coefficients chosen so far
            derived = derivative_coefficients(candidate + [0] * order, order)
            if not roots_in_interval(derived, 4 * p):
                continue
        children.append(candidate)
    return children



def _extend(prefix, p, d, totally_real):
    if len(prefix) == d + 1:
        poly = IntegerPolynomial(tuple(prefix))
        if not totally_real and (poly(p + 1) == 0 or poly(-(p + 1)) == 0):
            return []
        return [poly]
    return [poly for child in _children(prefix, p, d, totally_real) for poly in _extend(child, p, d, totally_real)]



def enumerate_trace_polys(p, d, max_degree=DEFAULT_MAX_DEGREE, totally_real=True, jobs=1):
    """Monic degree-d integer polynomials whose roots are all real and in [-2 sqrt p, 2 sqrt p].

    With totally_real=False only the coefficient bounds are imposed, which gives a
    larger superset. The search is split by the x^(d-1) coefficient when jobs > 1.
    """
    _check_request(p, d, max_degree, totally_real)

    heads = _children([1], p, d, totally_real)
    work = partial(_extend, p=p, d=d, totally_real=totally_real)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            parts = list(executor.map(work, heads))
    else:
        parts = [work(head) for head in heads]

    polys = [poly for part in parts for poly in part]
    logger.debug("p=%d d=%d: %d candidates (box of %d)", p, d, len(polys), search_space_size(p, d))
    return polys



def _running_bounds(p, d_max, max_degree, totally_real, jobs):
    best = None
    for d in range(1, d_max + 1):
        for poly in enumerate_trace_polys(p, d, max_degree, totally_real, jobs):
            product = poly(p + 1) * poly(-(p + 1))
            largest = max((int(q) for q in primefactors(abs(product))), default=None)
            if largest is not None and (best is None or largest > best[0]):
                best = (largest, poly, product)
        if best is None:
            raise PreconditionError(f"no candidate of degree <= {d} has a prime in its product")
        yield ExclusionBound(p, d, best[0], best[1], best[2])



def excluded_prime_bound(p, d, max_degree=DEFAULT_MAX_DEGREE, totally_real=True, jobs=1):
    """For ell above the bound no candidate of degree <= d satisfies c = +-(p+1) mod ell."""
    _check_request(p, d, max_degree, totally_real)
    *_, last = _running_bounds(p, d, max_degree, totally_real, jobs)
    return last



def dimension_growth_table(p, d_max, max_degree=DEFAULT_MAX_DEGREE, totally_real=True, jobs=1):
    _check_request(p, d_max, max_degree, totally_real)
    return {bound.degree: bound for bound in _running_bounds(p, d_max, max_degree, totally_real, jobs)}

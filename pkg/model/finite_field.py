from dataclasses import dataclass
from math import isqrt

from sympy import isprime, legendre_symbol

from .errors import BadReductionError, CountMismatchError, HasseBoundError, PreconditionError
from .weierstrass import WeierstrassModel, compute_invariants



@dataclass(frozen=True)
class ReducedCurve:
    """A Weierstrass model over F_p, p odd, with nonzero discriminant."""

    p: int
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.p == 2 or not isprime(self.p):
            raise PreconditionError(f"p must be an odd prime, got {self.p}")
        for value in self.ainvs:
            if not 0 <= value < self.p:
                raise PreconditionError(f"coefficient {value} is not reduced mod {self.p}")
        if compute_invariants(WeierstrassModel(*self.ainvs)).disc % self.p == 0:
            raise BadReductionError(f"discriminant vanishes mod {self.p}")


    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)



@dataclass(frozen=True)
class FrobeniusTrace:
    p: int
    trace: int

    def __post_init__(self):
        if abs(self.trace) > hasse_radius(self.p):
            raise HasseBoundError(f"|a_{self.p}| = {abs(self.trace)} exceeds the Hasse bound")



def hasse_radius(p):
    """floor(2*sqrt(p)), the largest t with t^2 <= 4p."""
    return isqrt(4 * p)


def hasse_interval(p):
    radius = hasse_radius(p)
    return frozenset(range(-radius, radius + 1))



def reduce_mod_p(model, p):
    if p == 2:
        raise PreconditionError("point counting in characteristic 2 is not supported")
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if compute_invariants(model).disc % p == 0:
        raise BadReductionError(f"{model} has bad reduction at {p}")
    return ReducedCurve(p, *(a % p for a in model.ainvs))



def count_points_by_scan(curve):
    p = curve.p
    a1, a2, a3, a4, a6 = curve.ainvs
    affine = 0
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                affine += 1
    return affine + 1


def count_points_by_character_sum(curve):
    """1 + sum over x of (1 + chi(g(x))), g = 4x^3 + b2 x^2 + 2 b4 x + b6."""
    p = curve.p
    inv = compute_invariants(WeierstrassModel(*curve.ainvs))
    total = 1
    for x in range(p):
        g = 4 * x ** 3 + inv.b2 * x * x + 2 * inv.b4 * x + inv.b6
        total += 1 + int(legendre_symbol(g % p, p))
    return total



def count_points(curve):
    scanned = count_points_by_scan(curve)
    summed = count_points_by_character_sum(curve)
    if scanned != summed:
        raise CountMismatchError(f"scan gives {scanned}, character sum gives {summed} over F_{curve.p}")
    return scanned



def trace_of_frobenius(curve):
    return FrobeniusTrace(curve.p, curve.p + 1 - count_points(curve))



def quadratic_twist(model, d):
    if model.a1 or model.a3:
        raise PreconditionError("quadratic_twist expects a model with a1 = a3 = 0")
    return WeierstrassModel(0, d * model.a2, 0, d * d * model.a4, d ** 3 * model.a6)

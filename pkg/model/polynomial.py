from dataclasses import dataclass
from typing import Sequence, Tuple

from sympy import QQ, Poly, Symbol

from .errors import PreconditionError


X = Symbol('x')



@dataclass(frozen=True)
class IntegerPolynomial:
    """Monic integer polynomial, coefficients listed from the leading one down."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise PreconditionError("degree must be at least 1")
        if self.coefficients[0] != 1:
            raise PreconditionError(f"polynomial is not monic: {self.coefficients}")
        if any(isinstance(c, bool) or not isinstance(c, int) for c in self.coefficients):
            raise PreconditionError(f"coefficients must be integers: {self.coefficients}")


    @property
    def degree(self):
        return len(self.coefficients) - 1


    def __call__(self, x):
        value = 0
        for c in self.coefficients:
            value = value * x + c
        return value


    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            k = self.degree - i
            monomial = {0: '', 1: 'x'}.get(k, f"x^{k}")
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"

            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return ' '.join(parts)



def derivative_coefficients(coefficients: Sequence[int], order: int):
    """Coefficients (leading first) of the order-th derivative."""
    coeffs = list(coefficients)
    for _ in range(order):
        degree = len(coeffs) - 1
        coeffs = [c * (degree - i) for i, c in enumerate(coeffs[:-1])]
    return coeffs



def _sign(value):
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def sign_at_surd(coefficients, n, direction):
    """Exact sign of the polynomial at x = direction * sqrt(n), n > 0 an integer."""
    degree = len(coefficients) - 1
    rational, irrational = 0, 0
    for i, c in enumerate(coefficients):
        k = degree - i
        term = c * n ** (k // 2)
        if k % 2:
            irrational += direction * term
        else:
            rational += term

    s_rat, s_irr = _sign(rational), _sign(irrational)
    if s_irr == 0:
        return s_rat
    if s_rat == 0 or s_rat == s_irr:
        return s_irr if s_rat == 0 else s_rat
    return s_rat * _sign(rational * rational - irrational * irrational * n)



def _variations(signs):
    nonzero = [s for s in signs if s]
    return sum(1 for left, right in zip(nonzero, nonzero[1:]) if left != right)



def count_roots_in_interval(coefficients, n):
    """Distinct real roots in the closed interval [-sqrt(n), sqrt(n)], by a Sturm chain."""
    square_free = Poly(list(coefficients), X, domain=QQ).sqf_part()
    if square_free.degree() <= 0:
        return 0

    chain = [q.all_coeffs() for q in square_free.sturm()]
    below = _variations([sign_at_surd(q, n, -1) for q in chain])
    above = _variations([sign_at_surd(q, n, 1) for q in chain])
    on_left_end = sign_at_surd(square_free.all_coeffs(), n, -1) == 0
    return below - above + int(on_left_end)



def roots_in_interval(coefficients, n):
    """True iff every complex root is real and satisfies x^2 <= n."""
    square_free = Poly(list(coefficients), X, domain=QQ).sqf_part()
    if square_free.degree() <= 0:
        return True
    return count_roots_in_interval(coefficients, n) == square_free.degree()

"""tan(qx) as a rational function of t = tan x, and its normal form for prime q.

Expanding (cos x + i sin x)^q and dividing the imaginary part by the real
part gives tan(qx) = N_q(t) / D_q(t) with

    N_q(t) = sum_n (-1)^n C(q, 2n+1) t^(2n+1)
    D_q(t) = sum_n (-1)^n C(q, 2n)   t^(2n)

For an odd prime q every binomial strictly between the ends is divisible by
q, which yields N_q(t) = t (q phi(t^2) + sigma t^(q-1)) and
D_q(t) = 1 + q psi(t^2) with sigma = (-1)^((q-1)/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistencyError, InvalidInputError, PoleError
from .exactmath import Poly
from .primes import require_odd_prime


def pascal_row(n: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def _require_odd_positive(q: int, name: str = "q") -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 1 or q % 2 == 0:
        raise InvalidInputError(f"{name} must be an odd positive integer, got {q!r}")


@dataclass(frozen=True)
class TanRational:
    q: int
    num: Poly
    den: Poly

    def evaluate(self, t: float) -> float:
        """N_q(t) / D_q(t) in floating point."""
        n = sum(c * t**k for k, c in enumerate(self.num.coeffs))
        d = sum(c * t**k for k, c in enumerate(self.den.coeffs))
        if d == 0:
            raise PoleError(f"D_{self.q} vanishes at t = {t!r}")
        return n / d


def tan_multiple(q: int) -> TanRational:
    _require_odd_positive(q)
    row = pascal_row(q)
    num = [0] * (q + 1)
    den = [0] * q
    sign = 1
    for n in range((q - 1) // 2 + 1):
        num[2 * n + 1] = sign * row[2 * n + 1]
        den[2 * n] = sign * row[2 * n]
        sign = -sign
    return TanRational(q, Poly(tuple(num)), Poly(tuple(den)))


@dataclass(frozen=True)
class TangentForm:
    """phi and psi are polynomials in u = t^2."""

    q: int
    phi: Poly
    psi: Poly
    sigma: int

    def numerator(self) -> Poly:
        """t (q phi(t^2) + sigma t^(q-1))."""
        inner = self.phi * self.q + Poly.monomial((self.q - 1) // 2, self.sigma)
        return inner.compose_power(2) * Poly.monomial(1)

    def denominator(self) -> Poly:
        return (self.psi * self.q + 1).compose_power(2)

    def ratio_numerator_u(self) -> Poly:
        """q phi(u) + sigma u^((q-1)/2): tan(qx)/tan(x) numerator in u = tan^2 x."""
        return self.phi * self.q + Poly.monomial((self.q - 1) // 2, self.sigma)

    def ratio_denominator_u(self) -> Poly:
        return self.psi * self.q + 1


def eisenstein_form(q: int) -> TangentForm:
    require_odd_prime(q, "q")
    tr = tan_multiple(q)
    half = (q - 1) // 2
    sigma = -1 if half % 2 else 1
    # coefficients in u = t^2
    num_u = [tr.num[2 * n + 1] for n in range(half + 1)]
    den_u = [tr.den[2 * n] for n in range(half + 1)]
    if num_u[-1] != sigma or den_u[0] != 1:
        raise InconsistencyError(f"unexpected end coefficients for q = {q}")
    phi = Poly(tuple(num_u[:-1])).exact_div_scalar(q)
    psi = Poly((0,) + tuple(den_u[1:])).exact_div_scalar(q)
    form = TangentForm(q, phi, psi, sigma)
    if form.numerator() != tr.num or form.denominator() != tr.den:
        raise InconsistencyError(f"normal form does not reconstruct tan({q}x)")
    return form


def _homogenize(f: Poly, a: Poly, b: Poly, degree: int) -> Poly:
    """b^degree * f(a/b), a polynomial whenever degree >= deg f."""
    out = Poly()
    for k, c in enumerate(f.coeffs):
        if c:
            out = out + (a**k) * (b ** (degree - k)) * c
    return out


def compose_check(m: int, n: int) -> bool:
    """True iff tan(m n x) = T_m(T_n(t)) holds as an identity of rational functions.

    Compared as cross products, so no gcd is ever taken.
    """
    _require_odd_positive(m, "m")
    _require_odd_positive(n, "n")
    outer, inner, target = tan_multiple(m), tan_multiple(n), tan_multiple(m * n)
    num = _homogenize(outer.num, inner.num, inner.den, m)
    den = _homogenize(outer.den, inner.num, inner.den, m)
    if den.is_zero():
        return False
    return num * target.den == den * target.num


def float_sanity(q: int, x: float) -> float:
    """|N_q(tan x) / D_q(tan x) - tan(qx)| in double precision."""
    _require_odd_positive(q)
    if math.cos(x) == 0.0 or abs(math.cos(q * x)) < 1e-12:
        raise PoleError(f"tan or tan({q}x) has a pole at x = {x!r}")
    value = tan_multiple(q).evaluate(math.tan(x))
    return abs(value - math.tan(q * x))

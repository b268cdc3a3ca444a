"""Integer polynomials whose roots are tan(2 pi rho / p) and tan^2(2 pi r / p).

F(Z) = N_p(Z) / Z vanishes at tan(2 pi rho / p) for rho = 1..p-1.  Since F is
even, G(u) = F with Z^2 -> u has the (p-1)/2 squared values as roots, one per
half-system element r = 1..(p-1)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InconsistencyError, InvalidInputError
from .exactmath import Poly, product_over_roots
from .primes import require_odd_prime
from .tanmul import tan_multiple

OMEGA = 2 * math.pi


@dataclass(frozen=True)
class RootPolynomial:
    p: int
    F: Poly
    G: Poly

    @property
    def leading_sign(self) -> int:
        return -1 if (self.p - 1) // 2 % 2 else 1


@dataclass(frozen=True)
class HalfSystem:
    p: int
    rs: tuple[int, ...]

    def __iter__(self):
        return iter(self.rs)

    def __len__(self) -> int:
        return len(self.rs)


def root_poly(p: int) -> RootPolynomial:
    require_odd_prime(p, "p")
    F = tan_multiple(p).num.shift_down(1)
    if any(F.coeffs[1::2]):
        raise InconsistencyError(f"F_{p} has an odd-degree term")
    G = Poly(F.coeffs[::2])
    return RootPolynomial(p, F, G)


def product_identity_check(p: int) -> int:
    """prod tan^2(r omega / p) over the half-system, exactly; always equals p."""
    rp = root_poly(p)
    half = product_over_roots(rp.G, Poly.monomial(1))
    if half != p:
        raise InconsistencyError(f"product of squared roots for p = {p} is {half}, expected {p}")
    full = product_over_roots(rp.F, Poly.monomial(1))
    if full != rp.leading_sign * p:
        raise InconsistencyError(
            f"product of all roots for p = {p} is {full}, expected {rp.leading_sign * p}"
        )
    return half


def half_system(p: int) -> HalfSystem:
    require_odd_prime(p, "p")
    return HalfSystem(p, tuple(range(1, (p - 1) // 2 + 1)))


def numeric_root_check(p: int, tolerance: float) -> bool:
    """Floating-point sanity check that F and G have the expected roots.

    The residual |F(theta)| is measured against sum |c_k| |theta|^k, the
    natural scale of a Horner evaluation at theta; a bare coefficient norm
    would be swamped by theta^(p-1) for roots near the poles of tan.
    """
    if p > 31:
        raise InvalidInputError("numeric_root_check is limited to p <= 31")
    rp = root_poly(p)
    coeffs = [float(c) for c in rp.F.coeffs]
    for rho in range(1, p):
        theta = math.tan(OMEGA * rho / p)
        value = sum(c * theta**k for k, c in enumerate(coeffs))
        scale = sum(abs(c) * abs(theta) ** k for k, c in enumerate(coeffs))
        if abs(value) >= tolerance * scale:
            return False
    prod = math.prod(math.tan(OMEGA * r / p) ** 2 for r in half_system(p))
    return abs(prod - p) < tolerance * p

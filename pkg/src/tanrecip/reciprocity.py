"""Legendre symbols through the tangent product formula, with two independent oracles.

For distinct odd primes p, q let u_r = tan^2(2 pi r / p) run over the roots of
G_p.  Then

    (q/p) = prod_r tan(q r w/p) / tan(r w/p)
          = prod_r (q phi(u_r) + sigma_q u_r^((q-1)/2)) / prod_r (1 + q psi(u_r))
          = (q P + sigma p^((q-1)/2)) / (1 + q Q)

with sigma = (-1)^((p-1)/2 * (q-1)/2).  Both products are symmetric in the
u_r and hence integers; they are obtained here as resultants against G_p.
Numerator and denominator agree up to sign exactly, not just modulo p.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .cycloroots import half_system, root_poly
from .errors import InconsistencyError, InvalidInputError
from .exactmath import product_over_roots
from .primes import odd_primes_upto, require_distinct_odd_primes
from .tanmul import eisenstein_form


def reciprocity_sign(p: int, q: int) -> int:
    """(-1)^((p-1)/2 * (q-1)/2), by exponent parity."""
    return -1 if ((p - 1) // 2) * ((q - 1) // 2) % 2 else 1


@dataclass(frozen=True)
class SignedPermutation:
    """q r = eps r' (mod p) for each r in the half-system; ``images[i]`` is (r', eps) for r = i + 1."""

    p: int
    q: int
    images: tuple[tuple[int, int], ...]

    @property
    def flips(self) -> tuple[int, ...]:
        return tuple(r for r, (_, eps) in enumerate(self.images, start=1) if eps < 0)

    @property
    def sign(self) -> int:
        return -1 if len(self.flips) % 2 else 1

    def is_bijection(self) -> bool:
        return sorted(r for r, _ in self.images) == list(range(1, (self.p - 1) // 2 + 1))


@dataclass(frozen=True)
class ReciprocityReport:
    """Everything computed for one ordered pair; the symbols are (q/p)."""

    p: int
    q: int
    P: int
    Q: int
    s: int
    d: int
    sigma: int
    sym_tangent: int
    sym_euler: int
    sym_gauss: int
    reciprocity_ok: bool

    @property
    def symbols_agree(self) -> bool:
        return self.sym_tangent == self.sym_euler == self.sym_gauss

    @property
    def passed(self) -> bool:
        return self.reciprocity_ok and self.symbols_agree


def _raw_products(p: int, q: int) -> tuple[int, int]:
    G = root_poly(p).G
    form = eisenstein_form(q)
    s_raw = product_over_roots(G, form.ratio_numerator_u())
    d_raw = product_over_roots(G, form.ratio_denominator_u())
    return s_raw, d_raw


def compute_PQ(p: int, q: int) -> tuple[int, int]:
    require_distinct_odd_primes(p, q)
    s_raw, d_raw = _raw_products(p, q)
    sigma = reciprocity_sign(p, q)
    P, rem_p = divmod(s_raw - sigma * p ** ((q - 1) // 2), q)
    Q, rem_q = divmod(d_raw - 1, q)
    if rem_p or rem_q:
        raise InconsistencyError(f"P or Q is not an integer for (p, q) = ({p}, {q})")
    return P, Q


def tangent_quotient(p: int, q: int) -> tuple[int, int, int, int]:
    """(P, Q, s, d) with s = qP + sigma p^((q-1)/2) and d = 1 + qQ."""
    P, Q = compute_PQ(p, q)
    s = q * P + reciprocity_sign(p, q) * p ** ((q - 1) // 2)
    d = 1 + q * Q
    return P, Q, s, d


def _symbol_from_quotient(p: int, q: int, s: int, d: int) -> int:
    if d == 0:
        raise InconsistencyError(f"d = 0 for (p, q) = ({p}, {q})")
    if d % p == 0:
        raise InconsistencyError(f"d is divisible by p for (p, q) = ({p}, {q})")
    sym, rem = divmod(s, d)
    if rem or sym not in (1, -1):
        raise InconsistencyError(f"s/d = {s}/{d} is not +-1 for (p, q) = ({p}, {q})")
    return sym


def legendre_tangent(q: int, p: int) -> int:
    """(q/p) as the exact quotient (qP + sigma p^((q-1)/2)) / (1 + qQ)."""
    _, _, s, d = tangent_quotient(p, q)
    return _symbol_from_quotient(p, q, s, d)


def legendre_congruence(q: int, p: int) -> int:
    """(q/p) read as s * d^-1 mod p, the weaker congruence form of the same quotient."""
    _, _, s, d = tangent_quotient(p, q)
    if d % p == 0:
        raise InconsistencyError(f"d is not invertible mod {p}")
    r = s * pow(d, -1, p) % p
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise InconsistencyError(f"s/d = {r} (mod {p}) is not +-1")


def legendre_euler(q: int, p: int) -> int:
    require_distinct_odd_primes(p, q)
    r = pow(q, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise InconsistencyError(f"Euler criterion gave {r} for ({q}/{p})")


def least_absolute_residue(a: int, p: int) -> int:
    r = a % p
    if 2 * r == p:
        raise InconsistencyError("tie in least absolute residue")
    return r - p if 2 * r > p else r


def gauss_lemma_sign(q: int, p: int) -> tuple[SignedPermutation, int]:
    require_distinct_odd_primes(p, q)
    images = []
    for r in half_system(p):
        v = least_absolute_residue(q * r, p)
        images.append((abs(v), 1 if v > 0 else -1))
    perm = SignedPermutation(p, q, tuple(images))
    if not perm.is_bijection():
        raise InconsistencyError(f"multiplication by {q} does not permute the half-system mod {p}")
    return perm, perm.sign


def verify_pair(p: int, q: int) -> ReciprocityReport:
    require_distinct_odd_primes(p, q)
    P, Q, s, d = tangent_quotient(p, q)
    sym = _symbol_from_quotient(p, q, s, d)
    mirror = legendre_tangent(p, q)
    sigma = reciprocity_sign(p, q)
    return ReciprocityReport(
        p=p,
        q=q,
        P=P,
        Q=Q,
        s=s,
        d=d,
        sigma=sigma,
        sym_tangent=sym,
        sym_euler=legendre_euler(q, p),
        sym_gauss=gauss_lemma_sign(q, p)[1],
        reciprocity_ok=sym * mirror == sigma,
    )


def prime_pairs(p_max: int) -> list[tuple[int, int]]:
    return list(combinations(odd_primes_upto(p_max), 2))


def _verify_tuple(pair: tuple[int, int]) -> ReciprocityReport:
    return verify_pair(*pair)


def sweep(p_max: int, workers: int | None = 1) -> list[ReciprocityReport]:
    """Reports for every pair p < q of odd primes <= p_max, in sorted order.

    ``workers`` > 1 spreads pairs over processes; ``None`` uses every CPU.
    Output order never depends on it.
    """
    if not isinstance(p_max, int) or p_max < 5:
        raise InvalidInputError(f"p_max must be an integer >= 5, got {p_max!r}")
    pairs = prime_pairs(p_max)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1:
        return [verify_pair(p, q) for p, q in pairs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_tuple, pairs, chunksize=8))

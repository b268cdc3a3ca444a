"""Exit criteria.  Each test records one PASS/FAIL line, printed in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import math
import random
import time
from itertools import combinations

from tanrecip.cycloroots import numeric_root_check, product_identity_check, root_poly
from tanrecip.errors import NotAPrimeError
from tanrecip.exactmath import Poly, companion_product, product_over_roots
from tanrecip.primes import odd_primes_upto
from tanrecip.reciprocity import (
    gauss_lemma_sign,
    legendre_euler,
    legendre_tangent,
    reciprocity_sign,
    tangent_quotient,
)
from tanrecip.tanmul import compose_check, eisenstein_form, float_sanity, tan_multiple

from oracles import QSqrt5, signed_binomial_table

PRIMES = odd_primes_upto(101)
PAIRS = list(combinations(PRIMES, 2))

RESULTS: list[str] = []


def record(number, title, ok, detail=""):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_1_product_identity():
    start = time.perf_counter()
    bad = []
    for p in PRIMES:
        full = product_over_roots(root_poly(p).F, Poly.monomial(1))
        if product_identity_check(p) != p or full != (-1) ** ((p - 1) // 2) * p:
            bad.append(p)
    elapsed = time.perf_counter() - start
    record(1, "prod tan^2(r w/p) = p for all odd primes p <= 101", not bad and elapsed < 5,
           f"{len(PRIMES)} primes, {elapsed:.2f}s, failures {bad}")


def _brute_force_5_3():
    # roots of u^2 - 10u + 5 are 5 +- 2 sqrt 5; expand the products in Z[sqrt 5]
    u1, u2 = QSqrt5(5, 2), QSqrt5(5, -2)
    s = (3 + (-1) * u1) * (3 + (-1) * u2)          # q phi(u) + sigma u, phi = 1, sigma = -1
    d = (1 + (-3) * u1) * (1 + (-3) * u2)          # 1 + q psi(u), psi = -u
    return s, d


def test_2_worked_pair():
    s_bf, d_bf = _brute_force_5_3()
    assert s_bf == QSqrt5(-16) and d_bf == QSqrt5(16)
    P, Q, s, d = tangent_quotient(5, 3)
    P2, Q2, s2, d2 = tangent_quotient(3, 5)
    ok = (
        (P, Q, s, d) == (-7, 5, -16, 16)
        and (s, d) == (s_bf.a, d_bf.a)
        and legendre_tangent(3, 5) == -1
        and (P2, Q2) == (-5, 3)
        and legendre_tangent(5, 3) == -1
    )
    record(2, "(p,q)=(5,3): P=-7 Q=5 s=-16 d=16 sym=-1; (3,5): P=-5 Q=3 sym=-1", ok,
           f"(5,3)->{(P, Q, s, d)}, (3,5)->{(P2, Q2, s2, d2)}")


def test_3_reciprocity_sweep():
    start = time.perf_counter()
    bad = []
    for p, q in PAIRS:
        t_qp, t_pq = legendre_tangent(q, p), legendre_tangent(p, q)
        agree = (
            t_qp == legendre_euler(q, p) == gauss_lemma_sign(q, p)[1]
            and t_pq == legendre_euler(p, q) == gauss_lemma_sign(p, q)[1]
        )
        if not agree or t_qp * t_pq != reciprocity_sign(p, q):
            bad.append((p, q))
    elapsed = time.perf_counter() - start
    record(3, "three-way symbol agreement and reciprocity on 300 pairs", len(PAIRS) == 300 and not bad and elapsed < 60,
           f"{len(PAIRS)} pairs, {elapsed:.1f}s, failures {bad[:5]}")


def test_4_structural_form():
    bad = []
    for q in PRIMES:
        form = eisenstein_form(q)
        tr = tan_multiple(q)
        if form.phi(0) != 1 or form.numerator() != tr.num or form.denominator() != tr.den:
            bad.append(q)
    rejected = []
    for q in (9, 15, 21, 25):
        try:
            eisenstein_form(q)
        except NotAPrimeError:
            rejected.append(q)
    record(4, "normal form for primes q <= 101, rejection of 9, 15, 21, 25", not bad and rejected == [9, 15, 21, 25],
           f"failures {bad}, rejected {rejected}")


def test_5_binomial_pattern():
    bad = []
    for q in range(1, 100, 2):
        num, den = signed_binomial_table(q)
        tr = tan_multiple(q)
        if list(tr.num.coeffs) != num or list(tr.den.coeffs) != den:
            bad.append(q)
    record(5, "signed binomial coefficients for odd q <= 99", not bad, f"failures {bad}")


def test_6_composition():
    odd = range(1, 10, 2)
    bad = [(m, n) for m in odd for n in odd if not compose_check(m, n)]
    record(6, "tan(mnx) = T_m(T_n(t)) for odd m, n <= 9", not bad, f"failures {bad}")


def test_7_cross_method():
    rng = random.Random(20240)
    mismatches = 0
    for _ in range(100):
        deg_f = rng.randint(1, 8)
        f = Poly(tuple(rng.randint(-9, 9) for _ in range(deg_f)) + (rng.choice((1, -1)),))
        g = Poly(tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 9))))
        mismatches += product_over_roots(f, g) != companion_product(f, g)

    arising = []
    for p in PRIMES:
        rp = root_poly(p)
        arising += [(rp.G, Poly.monomial(1)), (rp.F, Poly.monomial(1))]
    for p, q in PAIRS:
        for a, b in ((p, q), (q, p)):
            G = root_poly(a).G
            form = eisenstein_form(b)
            arising += [(G, form.ratio_numerator_u()), (G, form.ratio_denominator_u())]
    arising_bad = sum(product_over_roots(f, g) != companion_product(f, g) for f, g in arising)
    record(7, "resultant route = companion determinant route", mismatches == 0 and arising_bad == 0,
           f"100 random: {mismatches} mismatches; {len(arising)} arising pairs: {arising_bad} mismatches")


def test_8_numeric_sanity():
    rng = random.Random(7)
    worst = 0.0
    for q in range(1, 14, 2):
        drawn = 0
        while drawn < 100:
            x = rng.uniform(0.05, 1.5)
            # stay clear of the poles of tan(qx)
            if abs(math.cos(q * x)) < 0.01:
                continue
            drawn += 1
            worst = max(worst, float_sanity(q, x))
    roots_ok = all(numeric_root_check(p, 1e-4) for p in odd_primes_upto(31))
    record(8, "float_sanity < 1e-9 for q <= 13; numeric_root_check(p, 1e-4) for p <= 31", worst < 1e-9 and roots_ok,
           f"worst float error {worst:.2e}")


def test_9_exactness_guard():
    problems = []
    for p, q in PAIRS:
        for a, b in ((p, q), (q, p)):
            try:
                P, Q, s, d = tangent_quotient(a, b)
            except ArithmeticError as exc:
                problems.append((a, b, str(exc)))
                continue
            if d == 0 or d % a == 0 or abs(s) != abs(d):
                problems.append((a, b))
    record(9, "exact divisions, d != 0 mod p, |s/d| = 1 across the sweep", not problems, f"problems {problems[:5]}")


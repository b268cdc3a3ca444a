"""Dense integer polynomials and exact symmetric functions of their roots.

Coefficients are Python ints, stored lowest degree first.  Nothing here ever
touches floating point: products over the roots of ``f`` are obtained either
from resultants (subresultant PRS or Bareiss on the Sylvester matrix) or from
the determinant of ``g`` evaluated at the companion matrix of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InconsistencyError, InvalidInputError, UnsupportedLeadingCoefficientError

NEG_INF = float("-inf")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Z; ``coeffs[i]`` is the coefficient of X^i."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> Poly:
        out = cls((1,))
        for a in roots:
            out = out * cls((-a, 1))
        return out

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Poly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Poly | int) -> Poly:
        other = _lift(other)
        n = max(len(self), len(other))
        return Poly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | int) -> Poly:
        return self + (-_lift(other))

    def __rsub__(self, other: Poly | int) -> Poly:
        return _lift(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise InvalidInputError("negative exponent")
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, c: int) -> int:
        return poly_eval(self, c)

    def shift_down(self, k: int = 1) -> Poly:
        """Exact division by X^k."""
        if any(self.coeffs[:k]):
            raise InvalidInputError(f"not divisible by X^{k}")
        return Poly(self.coeffs[k:])

    def exact_div_scalar(self, d: int) -> Poly:
        if d == 0:
            raise ZeroDivisionError("division of polynomial by 0")
        out = []
        for c in self.coeffs:
            qt, r = divmod(c, d)
            if r:
                raise InconsistencyError(f"coefficient {c} not divisible by {d}")
            out.append(qt)
        return Poly(tuple(out))

    def compose_power(self, k: int) -> Poly:
        """f(X^k)."""
        out = [0] * (k * (len(self) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return Poly(tuple(out))

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"


def _lift(x: Poly | int) -> Poly:
    return Poly((x,)) if isinstance(x, int) else x


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j, bj in enumerate(b.coeffs):
                out[i + j] += ai * bj
    return Poly(tuple(out))


def poly_eval(f: Poly, c: int) -> int:
    acc = 0
    for coeff in reversed(f.coeffs):
        acc = acc * c + coeff
    return acc


def pseudo_remainder(a: Poly, b: Poly) -> Poly:
    """lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions."""
    if b.is_zero():
        raise InvalidInputError("pseudo-division by zero polynomial")
    n = len(b) - 1
    r = list(a.coeffs)
    lb = b.lc
    steps = len(a) - len(b) + 1
    if steps <= 0:
        return a
    while len(r) - 1 >= n and r:
        c = r[-1]
        shift = len(r) - 1 - n
        r = [lb * x for x in r]
        for j, bj in enumerate(b.coeffs):
            r[shift + j] -= c * bj
        r = list(_trim(r))
        steps -= 1
    return Poly(tuple(lb**steps * x for x in r))


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) with the Sylvester-determinant sign convention.

    Subresultant pseudo-remainder sequence (Collins/Brown), following the
    layout of Cohen's Algorithm 3.3.7.  Only exact integer divisions occur.
    """
    if f.is_zero():
        raise InvalidInputError("resultant: f must be nonzero")
    if g.is_zero():
        return 0
    m, n = len(f) - 1, len(g) - 1
    if n == 0:
        return g.lc**m
    if m == 0:
        return f.lc**n

    a, b = f, g
    sign = 1
    if m < n:
        a, b = b, a
        if m % 2 and n % 2:
            sign = -1
    ca, cb = a.content(), b.content()
    a, b = a.exact_div_scalar(ca), b.exact_div_scalar(cb)
    scale = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    gg = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b)
        if r.is_zero():
            return 0
        a = b
        b = r.exact_div_scalar(gg * h**delta)
        gg = a.lc
        if delta:
            h = _exact_quotient(gg**delta, h ** (delta - 1))
        if len(b) == 1:
            da = len(a) - 1
            return sign * scale * _exact_quotient(b.lc**da, h ** (da - 1))


def _exact_quotient(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"{num} / {den} is not exact")
    return q


def sylvester_matrix(f: Poly, g: Poly) -> list[list[int]]:
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fh = list(reversed(f.coeffs))
    gh = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise InvalidInputError("square matrix required")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester_resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) as the Bareiss determinant of the Sylvester matrix."""
    if f.is_zero():
        raise InvalidInputError("resultant: f must be nonzero")
    if g.is_zero():
        return 0
    return bareiss_det(sylvester_matrix(f, g))


def _require_unit_lc(f: Poly) -> None:
    if f.is_zero():
        raise InvalidInputError("polynomial must be nonzero")
    if abs(f.lc) != 1:
        raise UnsupportedLeadingCoefficientError(
            f"leading coefficient must be +1 or -1, got {f.lc}"
        )


def product_over_roots(f: Poly, g: Poly) -> int:
    """prod g(theta) over the roots theta of f (with multiplicity)."""
    _require_unit_lc(f)
    if g.is_zero():
        return 0
    res = resultant(f, g)
    # lc(f) is a unit, so dividing by lc^deg g is multiplying by it
    return res * f.lc ** (len(g) - 1)


def companion_matrix(f: Poly) -> list[list[int]]:
    """Companion matrix of f / lc(f): ones on the subdiagonal, last column -c_i."""
    _require_unit_lc(f)
    n = len(f) - 1
    if n < 1:
        raise InvalidInputError("companion matrix needs deg f >= 1")
    monic = [c * f.lc for c in f.coeffs]
    c = [[0] * n for _ in range(n)]
    for i in range(1, n):
        c[i][i - 1] = 1
    for i in range(n):
        c[i][n - 1] = -monic[i]
    return c


def eval_at_companion(f: Poly, g: Poly) -> list[list[int]]:
    """g(C) for the companion matrix C of f, by Horner steps M <- M*C + c*I."""
    _require_unit_lc(f)
    n = len(f) - 1
    if n < 1:
        raise InvalidInputError("companion matrix needs deg f >= 1")
    monic = [c * f.lc for c in f.coeffs]
    m = [[0] * n for _ in range(n)]
    for coeff in reversed(g.coeffs):
        # (M C)[r][j] = M[r][j+1] for j < n-1, and -sum_i M[r][i] c_i for j = n-1
        nxt = []
        for row in m:
            last = -sum(x * ci for x, ci in zip(row, monic))
            nxt.append(row[1:] + [last])
        for i in range(n):
            nxt[i][i] += coeff
        m = nxt
    return m


def companion_product(f: Poly, g: Poly) -> int:
    """det g(C); equals product_over_roots(f, g) by Cayley-Hamilton."""
    return bareiss_det(eval_at_companion(f, g))


@dataclass(frozen=True)
class PowerSums:
    """Power sums p_1..p_K of the roots, alongside the elementary symmetric e_0..e_n."""

    values: tuple[int, ...]
    elementary: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """1-based: ps[k] is p_k."""
        if k < 1:
            raise IndexError(k)
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)

    def newton_residual(self, k: int) -> int:
        """Left side of Newton's identity at order k (zero when consistent)."""
        e = self.elementary
        n = len(e) - 1
        total = self[k]
        for i in range(1, min(k, n + 1)):
            total += (-1) ** i * e[i] * self[k - i]
        if k <= n:
            total += (-1) ** k * k * e[k]
        return total


def elementary_symmetric(f: Poly) -> tuple[int, ...]:
    """e_0..e_n of the roots of f, read off the coefficients (|lc| = 1)."""
    _require_unit_lc(f)
    n = len(f) - 1
    monic = [c * f.lc for c in f.coeffs]
    return tuple((-1) ** k * monic[n - k] for k in range(n + 1))


def newton_power_sums(f: Poly, K: int) -> PowerSums:
    if K < 1:
        raise InvalidInputError("K must be >= 1")
    e = elementary_symmetric(f)
    n = len(e) - 1
    p: list[int] = []
    for k in range(1, K + 1):
        total = 0
        for i in range(1, min(k - 1, n) + 1):
            total += (-1) ** (i - 1) * e[i] * p[k - i - 1]
        if k <= n:
            total += (-1) ** (k - 1) * k * e[k]
        p.append(total)
    return PowerSums(tuple(p), e)

"""Deterministic primality for inputs below 2**64 and odd-prime enumeration."""

from __future__ import annotations

from .errors import InvalidInputError, NotAPrimeError

# Miller-Rabin with these witnesses is exact for n < 3.3e24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes_upto(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(3, n + 1) if sieve[i]]


def require_odd_prime(n: int, name: str = "p") -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidInputError(f"{name} must be an integer, got {n!r}")
    if n == 2:
        raise InvalidInputError(f"{name} must be an odd prime, got 2")
    if not is_prime(n):
        raise NotAPrimeError(f"{name} = {n} is not an odd prime")
    return n


def require_distinct_odd_primes(p: int, q: int) -> None:
    require_odd_prime(p, "p")
    require_odd_prime(q, "q")
    if p == q:
        raise InvalidInputError(f"p and q must be distinct, got p = q = {p}")

"""Elementary integer arithmetic used throughout the package."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, inf


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def prime_power_base(q: int) -> int | None:
    """Return p if q = p^k with k >= 1, else None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    return next(iter(fac))


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def totient(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    """Least positive representatives of (Z/nZ)^x, i.e. 1 <= a <= n with gcd(a, n) = 1."""
    return tuple(a for a in range(1, n + 1) if gcd(a, n) == 1)


def residue(a: int, n: int) -> int:
    """Least positive representative of a mod n (so n itself stands for 0)."""
    r = a % n
    return r if r else n


def valuation(x: int | Fraction, p: int) -> float | int:
    """p-adic valuation; returns math.inf for zero."""
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


@lru_cache(maxsize=None)
def least_primitive_root(q: int) -> int:
    """Least positive generator of (Z/qZ)^x for q an odd prime power (or 2, 4)."""
    phi = totient(q)
    for g in range(1, q + 1):
        if gcd(g, q) == 1 and multiplicative_order(g, q) == phi:
            return g
    raise ValueError(f"(Z/{q})^x is not cyclic")

"""The invariants w_n(L) and k(v)."""

from __future__ import annotations

from math import gcd

from .arith import (
    is_prime,
    lcm,
    multiplicative_order,
    prime_divisors,
    prime_power_base,
    primes_up_to,
    residue,
    units,
    valuation,
)
from .groupring import AbelianField


def _image_mod(field: AbelianField, m: int) -> set[int]:
    """Image in (Z/m)^x of Gal(Q(mu_M)/L), M = lcm(f, m); this is Gal(L(mu_m)/L)."""
    f, H = field.conductor, field.subgroup
    M = lcm(f, m)
    return {x % m for x in units(M) if residue(x, f) in H}


def _exponent_divides(field: AbelianField, m: int, n: int) -> bool:
    return all(pow(h, n, m) == 1 % m for h in _image_mod(field, m))


def w_local(n: int, field: AbelianField, l: int) -> int:
    """Largest a with Gal(L(mu_{l^a})/L) of exponent dividing n."""
    a = 0
    while _exponent_divides(field, l ** (a + 1), n):
        a += 1
    return a


def w_primes(n: int, field: AbelianField) -> list[int]:
    """Primes that can divide w_n(L): 2, primes l with l - 1 | n, and primes dividing f.

    If l does not divide f then Gal(L(mu_l)/L) is all of (Z/l)^x, so l - 1 | n is needed.
    """
    cands = {2} | set(prime_divisors(field.conductor) if field.conductor > 1 else [])
    cands |= {p for p in primes_up_to(n + 1) if n % (p - 1) == 0}
    return sorted(cands)


def w_invariant(n: int, field: AbelianField) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for l in w_primes(n, field):
        out *= l ** w_local(n, field, l)
    return out


def k_of_v(l: int, q_v: int, n: int) -> int:
    """Exponent k with l^k || q_v^n - 1, via the order d of q_v mod l and lifting the exponent."""
    if l == 2 or not is_prime(l):
        raise ValueError(f"{l} is not an odd prime")
    if prime_power_base(q_v) is None:
        raise ValueError(f"{q_v} is not a prime power")
    if gcd(l, q_v) != 1:
        raise ValueError(f"{l} divides {q_v}")
    if n < 1:
        raise ValueError("n must be positive")
    d = multiplicative_order(q_v, l)
    if n % d:
        return 0
    # d | l - 1, so v_l(n / d) = v_l(n)
    k = valuation(q_v**d - 1, l) + valuation(n, l)
    if (q_v - 1) % l == 0:
        assert k == valuation(q_v - 1, l) + valuation(n, l)
    return k

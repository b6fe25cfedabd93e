"""Integer-side helpers: Moebius function, divisor enumeration, counts of
monic irreducible polynomials over finite fields, and base-2 logarithms of
integers far too large for floats.

Everything except log2_of_big is exact integer arithmetic.
"""

from __future__ import annotations

import math

__all__ = [
    "mobius",
    "divisors",
    "is_prime",
    "primes_up_to",
    "is_prime_power",
    "count_irreducibles",
    "count_subfield_elements",
    "log2_of_big",
]

# Deterministic Miller-Rabin witness set; valid for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid for n < 3.3e24)."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray((1,)) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if sieve[i]]


def mobius(m: int) -> int:
    """Moebius mu(m): (-1)^r when m is a product of r distinct primes, else 0."""
    if m < 1:
        raise ValueError(f"mobius is defined for positive integers, got {m}")
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n."""
    if n < 1:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (r, e) with q = r**e and r prime, or None if q is not a prime power."""
    if q < 2:
        return None
    if is_prime(q):
        return (q, 1)
    # composite prime powers have their base within reach of trial division
    if q % 2 == 0:
        r = 2
    else:
        r = 0
        d = 3
        while d * d <= q:
            if q % d == 0:
                r = d
                break
            d += 2
        if r == 0:
            return None
    e = 0
    while q % r == 0:
        q //= r
        e += 1
    return (r, e) if q == 1 else None


def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q.

    Computed exactly from the divisor sum (1/n) * sum_{d | n} mu(d) * q^(n/d).
    The sum is always divisible by n; this is asserted rather than assumed.
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if is_prime_power(q) is None:
        raise ValueError(f"field order must be a prime power, got {q}")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    count, rem = divmod(total, n)
    assert rem == 0, f"divisor sum {total} not divisible by n={n}"
    return count


def count_subfield_elements(q: int, n: int) -> int:
    """Number of elements of F_{q^n} that lie in some proper subfield.

    The elements of exact degree n are precisely the roots of the monic
    irreducibles of degree n, so the count is q^n - n * count_irreducibles(q, n).
    Exact for any size; the result can be thousands of bits long.
    """
    return q ** n - n * count_irreducibles(q, n)


def log2_of_big(x: int) -> float:
    """log2 of a positive integer of arbitrary bit length.

    Floats overflow past 2^1024, so the top 64 bits serve as mantissa and the
    bit length as exponent. Relative error stays near 1 ulp regardless of size.
    """
    if x < 1:
        raise ValueError(f"log2_of_big needs a positive integer, got {x}")
    bits = x.bit_length()
    if bits <= 64:
        return math.log2(x)
    top = x >> (bits - 64)
    return math.log2(top) + float(bits - 64)

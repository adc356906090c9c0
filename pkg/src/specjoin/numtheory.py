"""Exact integer arithmetic: factorization, divisors and Euler's totient.

Everything here is deterministic trial division; intended for desk-scale
inputs (n up to a few million), not cryptographic sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its canonical prime factorization.

    ``factors`` holds (prime, exponent) pairs with strictly increasing primes
    and exponents >= 1; the empty tuple corresponds to value 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"value must be >= 1, got {self.value}")
        prod = 1
        last_prime = 0
        for prime, exp in self.factors:
            if prime <= last_prime:
                raise ValueError("primes must be strictly increasing")
            if exp < 1:
                raise ValueError("exponents must be >= 1")
            prod *= prime**exp
            last_prime = prime
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def is_squarefree_semiprime(self) -> bool:
        return len(self.factors) == 2 and all(e == 1 for _, e in self.factors)


def factorize(n: int) -> FactoredInteger:
    """Canonical prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return FactoredInteger(n, tuple(factors))


def totient(n: int) -> int:
    """Euler's totient, computed multiplicatively from the factorization."""
    if n < 1:
        raise ValueError(f"totient undefined for {n}; need n >= 1")
    result = 1
    for p, e in factorize(n).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1 in ascending order."""
    if n < 1:
        raise ValueError(f"divisors undefined for {n}; need n >= 1")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def proper_divisors(n: int) -> list[int]:
    """Divisors strictly between 1 and n, ascending. Requires n >= 2."""
    if n < 2:
        raise ValueError(f"proper divisors undefined for {n}; need n >= 2")
    return divisors(n)[1:-1]


def totient_sum_check(n: int) -> bool:
    """Self-test of the identity sum of phi(d) over d | n equals n."""
    return sum(totient(d) for d in divisors(n)) == n

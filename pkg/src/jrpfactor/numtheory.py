"""Arbitrary-precision number-theoretic primitives.

Integers are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction`` (always reduced, positive denominator).  Every
function is pure; the randomized ones take an explicit ``random.Random``
so identical seeds give identical results.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import SamplingFailure

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Witness schedules for the Miller-Rabin rounds.  The first twelve primes
# decide primality for every n below 3.3e24 (Sorenson-Webster bound); the
# four-prime schedule is exact below 3215031751.
_MR_BOUND_SMALL = 3_215_031_751
_MR_WITNESSES_SMALL = (2, 3, 5, 7)
_MR_BOUND_PROVEN = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES_PROVEN = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd is defined here for nonnegative integers")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError("lcm requires positive integers")
    return a * b // math.gcd(a, b)


def isqrt(n: int) -> int:
    """floor(sqrt(n)) for n >= 0."""
    if n < 0:
        raise ValueError("isqrt requires a nonnegative integer")
    return math.isqrt(n)


def _mr_witness_says_composite(n: int, a: int, d: int, r: int) -> bool:
    # n - 1 = 2**r * d with d odd
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rounds: int = 40) -> bool:
    """Primality test.

    Deterministic (fixed witness schedule) for n below the proven
    ~3.3e24 bound; above it, `rounds` Miller-Rabin rounds with bases
    derived deterministically from n, giving error probability at most
    4**-rounds while keeping the function pure.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_BOUND_SMALL:
        witnesses = _MR_WITNESSES_SMALL
    elif n < _MR_BOUND_PROVEN:
        witnesses = _MR_WITNESSES_PROVEN
    else:
        gen = random.Random(n)
        witnesses = tuple(gen.randrange(2, n - 1) for _ in range(rounds))
    return not any(_mr_witness_says_composite(n, a, d, r) for a in witnesses)


def sample_prime_in_range(lo: int, hi: int, rng: random.Random,
                          max_tries: int | None = None) -> int:
    """Uniformly sample integers in [lo, hi] until one passes is_prime.

    Deterministic for a given rng state.  Raises SamplingFailure after
    max_tries misses (default 64 * bit-length of hi).
    """
    if lo < 0 or lo > hi:
        raise ValueError(f"invalid sampling interval [{lo}, {hi}]")
    if max_tries is None:
        max_tries = 64 * max(hi.bit_length(), 1)
    if max_tries < 1:
        raise ValueError("max_tries must be positive")
    for _ in range(max_tries):
        candidate = rng.randint(lo, hi)
        if is_prime(candidate):
            return candidate
    raise SamplingFailure(lo, hi, max_tries)


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1.

    Powers of two in k are peeled off with math.isqrt (floor of root
    composes with floor), the odd remainder is handled by Newton's
    method started above the root.
    """
    if n < 0 or k < 1:
        raise ValueError("iroot requires n >= 0, k >= 1")
    while k % 2 == 0:
        n = math.isqrt(n)
        k //= 2
    if k == 1 or n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)  # 2**ceil(bits/k) >= n**(1/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def pow2_bounds(x: Fraction, precision_bits: int) -> tuple[Fraction, Fraction]:
    """Certified dyadic bracket lo <= 2**x <= hi.

    Integer exponents are exact (lo == hi).  Otherwise, writing
    x = n + p/q with 0 < p < q, the fractional power is pinned between
    m/2**t and (m+1)/2**t where m = floor((2**(t*q+p)) ** (1/q)) comes
    from exact integer root extraction.  That gives a bracket of width
    2**(floor(x) - precision_bits), monotone in x, which never widens
    when precision_bits grows.
    """
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    x = Fraction(x)
    n = x.numerator // x.denominator
    frac = x - n
    if frac == 0:
        exact = Fraction(2 ** n) if n >= 0 else Fraction(1, 2 ** -n)
        return exact, exact
    t = precision_bits
    p, q = frac.numerator, frac.denominator
    m = _iroot(1 << (t * q + p), q)
    if n >= t:
        return Fraction(m << (n - t)), Fraction((m + 1) << (n - t))
    den = 1 << (t - n)
    return Fraction(m, den), Fraction(m + 1, den)

"""Shared helpers: a sieve for cross-checking primality, and the seeded
sample generators reused by the unit and acceptance suites (the
determinism criterion re-runs them with identical seeds)."""

from __future__ import annotations

import random

from jrpfactor import InvalidSource, JrpInstance, RangeDivisorInstance, Variant


def primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * len(range(start, n + 1, p))
    return [i for i, flag in enumerate(sieve) if flag]


def random_jrp_instances(seed: int, count: int) -> list[JrpInstance]:
    """Mixed-regime instances with coefficients <= 1000.

    Regimes rotate so both stiff holding rates (tight boxes) and unit
    holding rates (large boxes, joint term dominant) appear; aperiodic
    draws respect K0 <= K1, K2.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        regime = len(out) % 3
        if regime == 0:
            K1, K2 = rng.randint(0, 1000), rng.randint(0, 1000)
            H1, H2 = rng.randint(50, 1000), rng.randint(50, 1000)
            k0_cap = 1000
        elif regime == 1:
            K1, K2 = rng.randint(0, 30), rng.randint(0, 30)
            H1, H2 = rng.randint(1, 30), rng.randint(1, 30)
            k0_cap = 30
        else:
            K1, K2 = rng.randint(0, 100), rng.randint(0, 100)
            H1 = H2 = 1
            k0_cap = 100
        if rng.random() < 0.5:
            out.append(JrpInstance(Variant.PERIODIC, K0=rng.randint(1, k0_cap),
                                   K1=K1, K2=K2, H1=H1, H2=H2))
        else:
            out.append(JrpInstance(Variant.APERIODIC,
                                   K0=rng.randint(0, min(K1, K2)),
                                   K1=K1, K2=K2, H1=H1, H2=H2))
    return out


def random_range_divisor_instances(seed: int, count: int,
                                   m_max: int = 2000) -> list[RangeDivisorInstance]:
    """Seeded valid (M, L, U) triples with M <= m_max."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        M = rng.randint(1, m_max)
        L = rng.randint(1, M)
        U = rng.randint(L, min(M, 5 * L))
        try:
            out.append(RangeDivisorInstance(M=M, L=L, U=U))
        except InvalidSource:
            continue
    return out


def random_partition_items(seed: int, count: int, n_items: int = 4,
                           lo: int = 2, hi: int = 15) -> list[list[int]]:
    """Seeded item lists with an even total (odd totals have no equal
    split and the padded form rejects them)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        items = [rng.randint(lo, hi) for _ in range(n_items)]
        if sum(items) % 2 == 0:
            out.append(items)
    return out

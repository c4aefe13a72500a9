"""Constructions that turn number problems into two-item instances.

Three builders and two drivers:

* ``build_aperiodic_instance`` / ``build_periodic_instance`` embed an
  odd composite M so that every optimal solution has q2 = M and a q1
  sharing a nontrivial factor with M; ``factor`` recurses on the
  extracted divisors to obtain a full prime factorization through
  nothing but exact instance solves.
* ``build_rangedivisor_jrp`` embeds the question "does M have a divisor
  in [L, U]?" as a periodic instance plus a cost threshold.
* ``pad_partition`` and ``partition_to_rangedivisor`` turn an
  equal-split question over integers into a divisor-range question over
  a product of sampled primes, using certified power-of-two brackets so
  the rounded interval endpoints are never wrong.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (InvalidSource, PreconditionViolated, ReductionViolated,
                     SamplingFailure)
from .model import JrpInstance, JrpSolution, Variant, eoq_cost
from .numtheory import is_prime, pow2_bounds, sample_prime_in_range
from .solver import solve_exact

JrpOracle = Callable[[JrpInstance], JrpSolution]


@dataclass(frozen=True)
class ReductionArtifact:
    """A built instance plus the provenance needed to interpret answers."""

    instance: JrpInstance
    lemma: str  # construction tag: "L1" | "L2" | "L3"
    source: dict[str, int]
    threshold: Fraction | None = None

    def __post_init__(self):
        if self.lemma not in ("L1", "L2", "L3"):
            raise ValueError(f"unknown construction tag {self.lemma!r}")
        if (self.threshold is not None) != (self.lemma == "L3"):
            raise ValueError("threshold is present exactly for L3 artifacts")

    def to_document(self) -> dict:
        doc = self.instance.to_document()
        doc["lemma"] = self.lemma
        doc["source"] = {k: str(v) for k, v in self.source.items()}
        if self.threshold is not None:
            doc["threshold"] = f"{self.threshold.numerator}/{self.threshold.denominator}"
        return doc


def _require_odd_composite(M: int) -> None:
    if M < 9 or M % 2 == 0 or is_prime(M):
        raise InvalidSource(f"M = {M} is not an odd composite >= 9")


def build_aperiodic_instance(M: int) -> ReductionArtifact:
    """Aperiodic embedding of an odd composite M.

    K1 = K0 = M(M-1), H1 = 4, K2 = M^3(M^2-1), H2 = M(M^2-1): item 2 is
    heavy enough that q2 = M is forced, and the discount rewards q1
    sharing a factor with M.  Every coefficient fits in about five times
    the bits of M.
    """
    _require_odd_composite(M)
    inst = JrpInstance(Variant.APERIODIC,
                       K0=M * (M - 1), K1=M * (M - 1), H1=4,
                       K2=M ** 3 * (M * M - 1), H2=M * (M * M - 1))
    return ReductionArtifact(inst, "L1", {"M": M})


def build_periodic_instance(M: int) -> ReductionArtifact:
    """Periodic embedding of an odd composite M.

    K0 = M, K1 = 0, H1 = 1, H2 = M(M+1), K2 = M^3(M+1): with q2 pinned
    to M the remaining objective is M/gcd(q1, M) + q1, which is only
    small when gcd(q1, M) is a nontrivial divisor.
    """
    _require_odd_composite(M)
    inst = JrpInstance(Variant.PERIODIC,
                       K0=M, K1=0, H1=1,
                       K2=M ** 3 * (M + 1), H2=M * (M + 1))
    return ReductionArtifact(inst, "L2", {"M": M})


def extract_divisor(M: int, sol: JrpSolution) -> int:
    """gcd(q1, M) from a solution of a built instance; must be nontrivial."""
    if sol.q2 != M:
        raise ReductionViolated(f"expected q2 = {M}, solver returned q2 = {sol.q2}")
    g = math.gcd(sol.q1, M)
    if g in (1, M):
        raise ReductionViolated(
            f"gcd(q1={sol.q1}, M={M}) = {g} is trivial; "
            "solver answer or source integer is invalid")
    return g


def factor(M: int, variant: Variant = Variant.PERIODIC,
           solver: JrpOracle | None = None) -> list[int]:
    """Full prime factorization of M >= 2 obtained through instance solves.

    Powers of two are stripped directly, primes are returned as is, and
    every odd composite goes through build -> solve -> extract_divisor,
    recursing on both halves.
    """
    if M < 2:
        raise ValueError("factor needs M >= 2")
    if solver is None:
        solver = solve_exact
    build = (build_aperiodic_instance if variant is Variant.APERIODIC
             else build_periodic_instance)
    primes: list[int] = []
    while M % 2 == 0:
        primes.append(2)
        M //= 2
    pending = [M] if M > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            primes.append(m)
            continue
        sol = solver(build(m).instance)
        d = extract_divisor(m, sol)
        pending.append(d)
        pending.append(m // d)
    return sorted(primes)


@dataclass(frozen=True)
class RangeDivisorInstance:
    """Ask whether M has a divisor in [L, U].

    Requires M >= U >= L >= 1 and the gap condition (L+U)^2 < 8LU
    (integers make the real precondition L+U < 2*sqrt(2LU) exact).
    """

    M: int
    L: int
    U: int

    def __post_init__(self):
        if not self.M >= self.U >= self.L >= 1:
            raise InvalidSource(
                f"need M >= U >= L >= 1, got M={self.M}, L={self.L}, U={self.U}")
        s = self.L + self.U
        if s * s >= 8 * self.L * self.U:
            raise InvalidSource(
                f"interval too wide: ({self.L}+{self.U})^2 = {s * s} "
                f">= 8*{self.L}*{self.U} = {8 * self.L * self.U}")

    def to_document(self) -> dict[str, str]:
        return {"M": str(self.M), "L": str(self.L), "U": str(self.U)}


def build_rangedivisor_jrp(rd: RangeDivisorInstance) -> ReductionArtifact:
    """Periodic instance whose optimum is at most the threshold exactly
    when M has a divisor in [L, U].

    K1 = 0, H1 = 1, K0 = L*U; the heavy item uses
    H2 = (LU + L + U + 1) * M * (M+1) and K2 = M^2 * H2, so its integer
    optimum is exactly M and any q2 != M pays at least H2/(M+1) =
    (LU+L+U+1)*M extra, more than any swing available on the q1 side
    below the threshold.  With q2 = M the residual objective is
    q1 + LU/gcd(q1, M): divisors q of M hit LU/q + q <= L+U inside
    [L, U], every non-divisor q1 pays at least 2*sqrt(2LU) > L+U.
    The threshold is the item-2 cost at M plus L+U.
    """
    M, L, U = rd.M, rd.L, rd.U
    K0 = L * U
    H2 = (K0 + L + U + 1) * M * (M + 1)
    K2 = M * M * H2
    inst = JrpInstance(Variant.PERIODIC, K0=K0, K1=0, H1=1, K2=K2, H2=H2)
    threshold = eoq_cost(M, K2, H2) + L + U
    return ReductionArtifact(inst, "L3", {"M": M, "L": L, "U": U},
                             threshold=threshold)


def decide_range_divisor(rd: RangeDivisorInstance,
                         solver: JrpOracle | None = None) -> bool:
    """Divisor-range answer obtained only through an instance solve,
    never by inspecting divisors of M directly."""
    if solver is None:
        solver = solve_exact
    artifact = build_rangedivisor_jrp(rd)
    return solver(artifact.instance).cost <= artifact.threshold


@dataclass(frozen=True)
class PartitionInstance:
    """Equal-split question in padded form.

    All items lie in [2**bit_width, 2**(bit_width+1)), the total is even
    (2A = sum), and the count is even by construction, so equal-sum
    splits of the padded items correspond exactly to equal-sum splits of
    the original ones.
    """

    items: tuple[int, ...]
    bit_width: int

    def __post_init__(self):
        if len(self.items) < 2:
            raise ValueError("need at least two items")
        low, high = 1 << self.bit_width, 1 << (self.bit_width + 1)
        for a in self.items:
            if not low <= a < high:
                raise ValueError(
                    f"item {a} outside [2^{self.bit_width}, 2^{self.bit_width + 1})")
        if sum(self.items) % 2 != 0:
            raise ValueError("total must be even (otherwise no equal split exists "
                             "and the construction does not apply)")

    @property
    def half_total(self) -> int:
        return sum(self.items) // 2


def pad_partition(items: list[int]) -> PartitionInstance:
    """Pad n >= 2 positive integers to 2n items of equal bit width.

    Each item gains an offset 2**(B + ceil(log2 n)) for B = bits of the
    largest item, and n bare offsets are appended.  The offsets dominate
    the totals, so equal-sum splits of the padded list use exactly n
    elements each and restrict to equal-sum splits of the input.
    """
    n = len(items)
    if n < 2:
        raise ValueError("need at least two items")
    if any(a < 1 for a in items):
        raise ValueError("items must be >= 1")
    if sum(items) % 2 != 0:
        raise ValueError("total is odd, no equal split exists; "
                         "the padded form requires an even total")
    B = max(items).bit_length()
    offset = 1 << (B + (n - 1).bit_length())
    padded = tuple(offset + a for a in items) + (offset,) * n
    return PartitionInstance(items=padded, bit_width=offset.bit_length() - 1)


def _pinned_pow2(x: Fraction, precision: int) -> tuple[int, int]:
    """(floor, ceil) of 2**x, doubling precision until the bracket pins
    the integer part.  Terminates because 2**x is irrational for
    non-integer rational x."""
    for _ in range(64):
        lo, hi = pow2_bounds(x, precision)
        if lo == hi:
            v = lo.numerator // lo.denominator
            return v, v
        flo = lo.numerator // lo.denominator
        fhi = hi.numerator // hi.denominator
        if flo == fhi:
            return flo, flo + 1
        precision *= 2
    raise ArithmeticError(f"could not pin the integer part of 2**({x})")


def partition_to_rangedivisor(p: PartitionInstance, seed: int,
                              guard_bits: int = 16) -> RangeDivisorInstance:
    """Randomized embedding of a padded equal-split question.

    With B the bit width and n the item count, the scaling factor
    lam = 3B/2**B maps each item a to an exponent b = lam*a in [3B, 6B).
    For each item a prime is sampled strictly inside
    (2**(b - lam/2n), 2**(b + lam/2n)); then M is the product of the
    primes, L = ceil(2**(lam*(A - 1/2))) and U = floor(2**(lam*(A + 1/2)))
    for A = half the total.  Products over sub-multisets stay strictly
    inside (L, U) exactly when their items sum to A, so M has a divisor
    in [L, U] iff an equal split exists (conditional only on every
    sampling step succeeding).

    All interval endpoints come from certified dyadic brackets computed
    to 6*B*n + 1 + guard_bits bits, with outward rounding, so a rounded
    endpoint is never wrong.  Each item draws from its own subseeded
    generator, so identical (instance, seed) give identical (M, L, U)
    even if items were sampled concurrently.
    """
    B = p.bit_width
    n = len(p.items)
    lam = Fraction(3 * B, 1 << B)
    eps = lam / (2 * n)
    precision = 6 * B * n + 1 + guard_bits

    primes = []
    for i, a in enumerate(p.items):
        b = lam * a
        _, low_edge_hi = pow2_bounds(b - eps, precision)
        high_edge_lo, _ = pow2_bounds(b + eps, precision)
        lo_int = low_edge_hi.numerator // low_edge_hi.denominator + 1
        hi_int = -((-high_edge_lo.numerator) // high_edge_lo.denominator) - 1
        if lo_int > hi_int:
            raise SamplingFailure(lo_int, hi_int, 0, index=i)
        rng = random.Random(seed * (1 << 64) + i)
        try:
            primes.append(sample_prime_in_range(lo_int, hi_int, rng))
        except SamplingFailure as exc:
            raise SamplingFailure(exc.lo, exc.hi, exc.tries, index=i) from None

    M = math.prod(primes)
    A = Fraction(sum(p.items), 2)
    _, L = _pinned_pow2(lam * (A - Fraction(1, 2)), precision)   # ceil
    U, _ = _pinned_pow2(lam * (A + Fraction(1, 2)), precision)   # floor
    try:
        return RangeDivisorInstance(M=M, L=L, U=U)
    except InvalidSource as exc:
        raise PreconditionViolated(
            f"rounded interval [{L}, {U}] violates the gap condition; "
            f"bit width {B} is too small for this construction") from exc

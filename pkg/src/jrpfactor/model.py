"""Exact cost model for two-item coordinated replenishment.

Order periods are positive integers and every cost is an exact
``Fraction``, so cost comparisons (hence argmins, ties, and threshold
decisions) are never subject to rounding.  Coefficients are nonnegative
integers; the JSON document form keeps them as decimal strings so
consumers without big integers stay safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .numtheory import lcm


class Variant(str, Enum):
    APERIODIC = "aperiodic"
    PERIODIC = "periodic"


_INSTANCE_KEYS = ("variant", "K0", "K1", "K2", "H1", "H2")


@dataclass(frozen=True)
class JrpInstance:
    """Two-item instance: joint cost K0, per-item fixed costs K1, K2 and
    holding rates H1, H2.

    The aperiodic accounting charges the joint cost only at shared order
    epochs (a discount of K0/lcm(q1,q2), which requires K0 <= K1, K2);
    the periodic accounting charges it every gcd(q1,q2) periods and
    requires K0 >= 1.
    """

    variant: Variant
    K0: int
    K1: int
    K2: int
    H1: int
    H2: int

    def __post_init__(self):
        for name in ("K0", "K1", "K2", "H1", "H2"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.H1 < 1 or self.H2 < 1:
            raise ValueError("holding rates H1, H2 must be >= 1")
        if self.variant is Variant.APERIODIC:
            if self.K0 > min(self.K1, self.K2):
                raise ValueError("aperiodic discount requires K0 <= K1 and K0 <= K2")
        elif self.variant is Variant.PERIODIC:
            if self.K0 < 1:
                raise ValueError("periodic joint cost requires K0 >= 1")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    def to_document(self) -> dict[str, str]:
        """Canonical JSON-ready form with all integers as decimal strings."""
        return {
            "variant": self.variant.value,
            "K0": str(self.K0),
            "K1": str(self.K1),
            "K2": str(self.K2),
            "H1": str(self.H1),
            "H2": str(self.H2),
        }

    @classmethod
    def from_document(cls, doc: dict) -> "JrpInstance":
        if not isinstance(doc, dict) or set(doc) != set(_INSTANCE_KEYS):
            raise ValueError(f"instance document must have exactly the keys {_INSTANCE_KEYS}")
        try:
            variant = Variant(doc["variant"])
        except ValueError:
            raise ValueError(f"unknown variant {doc['variant']!r}") from None
        values = {}
        for name in ("K0", "K1", "K2", "H1", "H2"):
            raw = doc[name]
            if not isinstance(raw, str) or not raw.isdigit():
                raise ValueError(f"{name} must be a decimal string, got {raw!r}")
            values[name] = int(raw)
        return cls(variant=variant, **values)


@dataclass(frozen=True)
class JrpSolution:
    """An argmin (q1, q2) with its exact cost and the search box used."""

    q1: int
    q2: int
    cost: Fraction
    bound1: int
    bound2: int

    def __post_init__(self):
        if self.q1 < 1 or self.q2 < 1:
            raise ValueError("periods must be >= 1")
        if self.q1 > self.bound1 or self.q2 > self.bound2:
            raise ValueError("solution lies outside its own search box")


def eoq_cost(q: int, K: int, H: int) -> Fraction:
    """Single-item average cost K/q + H*q at integer period q >= 1."""
    if q < 1:
        raise ValueError("period q must be >= 1")
    return Fraction(K, q) + H * q


def eoq_best_integer(K: int, H: int) -> int:
    """Integer period minimizing K/q + H*q, ties toward the smaller q.

    The minimizer is the smallest q with K <= H*q*(q+1); it equals
    floor(sqrt(K/H)) or the next integer, decided by one exact
    comparison.
    """
    if H < 1:
        raise ValueError("holding rate H must be >= 1")
    if K == 0:
        return 1
    r = math.isqrt(K // H)  # floor(sqrt(K/H)); floor composes with floor
    if r < 1:
        return 1
    return r if K <= H * r * (r + 1) else r + 1


def aperiodic_cost(inst: JrpInstance, q1: int, q2: int) -> Fraction:
    """Total cost with the shared-epoch discount K0/lcm(q1, q2)."""
    if inst.variant is not Variant.APERIODIC:
        raise ValueError("aperiodic_cost needs an aperiodic instance")
    return (eoq_cost(q1, inst.K1, inst.H1) + eoq_cost(q2, inst.K2, inst.H2)
            - Fraction(inst.K0, lcm(q1, q2)))


def periodic_cost(inst: JrpInstance, q1: int, q2: int) -> Fraction:
    """Total cost with the recurring joint charge K0/gcd(q1, q2)."""
    if inst.variant is not Variant.PERIODIC:
        raise ValueError("periodic_cost needs a periodic instance")
    return (eoq_cost(q1, inst.K1, inst.H1) + eoq_cost(q2, inst.K2, inst.H2)
            + Fraction(inst.K0, math.gcd(q1, q2)))


def instance_cost(inst: JrpInstance, q1: int, q2: int) -> Fraction:
    """Objective value of the instance's own variant at (q1, q2)."""
    if inst.variant is Variant.APERIODIC:
        return aperiodic_cost(inst, q1, q2)
    return periodic_cost(inst, q1, q2)


def reduced_aperiodic(M: int, q1: int) -> Fraction:
    """Single-variable remainder of the aperiodic construction once the
    heavy item is pinned to period M:

        M(M-1) * (1/q1 - 1/lcm(q1, M)) + 4*q1
    """
    if q1 < 1 or M < 1:
        raise ValueError("arguments must be >= 1")
    return M * (M - 1) * (Fraction(1, q1) - Fraction(1, lcm(q1, M))) + 4 * q1


def reduced_periodic(M: int, q1: int) -> Fraction:
    """Single-variable remainder of the periodic construction:
    M/gcd(q1, M) + q1."""
    if q1 < 1 or M < 1:
        raise ValueError("arguments must be >= 1")
    return Fraction(M, math.gcd(q1, M)) + q1

"""Exact two-item joint replenishment, and the number problems it can
answer: integer factorization, divisor-range decisions, and equal-split
(partition) questions, all with exact rational arithmetic and
independent brute-force oracles."""

from .errors import (BudgetExceeded, InvalidSource, PreconditionViolated,
                     ReductionViolated, SamplingFailure)
from .model import (JrpInstance, JrpSolution, Variant, aperiodic_cost,
                    eoq_best_integer, eoq_cost, instance_cost, periodic_cost,
                    reduced_aperiodic, reduced_periodic)
from .numtheory import (gcd, is_prime, isqrt, lcm, pow2_bounds,
                        sample_prime_in_range)
from .reductions import (PartitionInstance, RangeDivisorInstance,
                         ReductionArtifact, build_aperiodic_instance,
                         build_periodic_instance, build_rangedivisor_jrp,
                         decide_range_divisor, extract_divisor, factor,
                         pad_partition, partition_to_rangedivisor)
from .solver import (DEFAULT_CELL_BUDGET, SearchBounds, decide, derive_bounds,
                     solve_exact, solve_fixed_q2)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "InvalidSource", "PreconditionViolated",
    "ReductionViolated", "SamplingFailure",
    "JrpInstance", "JrpSolution", "Variant",
    "aperiodic_cost", "periodic_cost", "instance_cost",
    "eoq_cost", "eoq_best_integer",
    "reduced_aperiodic", "reduced_periodic",
    "gcd", "lcm", "is_prime", "isqrt", "sample_prime_in_range", "pow2_bounds",
    "PartitionInstance", "RangeDivisorInstance", "ReductionArtifact",
    "build_aperiodic_instance", "build_periodic_instance",
    "build_rangedivisor_jrp", "decide_range_divisor", "extract_divisor",
    "factor", "pad_partition", "partition_to_rangedivisor",
    "DEFAULT_CELL_BUDGET", "SearchBounds", "decide", "derive_bounds",
    "solve_exact", "solve_fixed_q2",
    "__version__",
]

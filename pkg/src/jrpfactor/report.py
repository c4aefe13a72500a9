"""Run reports, curve data export, and figure rendering.

The CSV is the contract (exact numerators and denominators); the figure
is a convenience rendering of the same rows, where floats are used for
display only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .model import reduced_aperiodic, reduced_periodic

CURVE_HEADER = ("q", "objective_num", "objective_den",
                "convex_baseline_num", "convex_baseline_den", "gcd")


@dataclass
class RunReport:
    """Machine-readable echo of one CLI invocation.

    Serialized with sorted keys and all big integers as decimal strings,
    so reports with identical inputs and seeds are byte-identical.
    Wall time is reported only on request (it would break that
    guarantee).
    """

    command: str
    inputs: dict
    outputs: dict
    oracle: str | None = None
    wall_ms: int | None = None

    def to_json(self) -> str:
        payload = {"command": self.command, "inputs": self.inputs,
                   "outputs": self.outputs}
        if self.oracle is not None:
            payload["oracle"] = self.oracle
        if self.wall_ms is not None:
            payload["wall_ms"] = self.wall_ms
        return json.dumps(payload, sort_keys=True)


def curve_rows(M: int, variant: str, q_from: int, q_to: int,
               L: int | None = None, U: int | None = None) -> list[tuple]:
    """Rows (q, objective num/den, baseline num/den, gcd(q, M)).

    aperiodic:    reduced objective vs the coprime envelope (M-1)^2/q + 4q
    periodic:     M/gcd(q, M) + q   vs the coprime line M + q
    rangedivisor: LU/gcd(q, M) + q  vs the divisor envelope LU/q + q
    """
    if q_from < 1 or q_from > q_to:
        raise ValueError(f"empty or invalid range [{q_from}, {q_to}]")
    if M < 1:
        raise ValueError("M must be >= 1")
    if variant == "rangedivisor":
        if L is None or U is None:
            raise ValueError("rangedivisor curves need L and U")
        K0 = L * U
    rows = []
    for q in range(q_from, q_to + 1):
        g = math.gcd(q, M)
        if variant == "aperiodic":
            obj = reduced_aperiodic(M, q)
            base = Fraction((M - 1) ** 2, q) + 4 * q
        elif variant == "periodic":
            obj = reduced_periodic(M, q)
            base = Fraction(M + q)
        elif variant == "rangedivisor":
            obj = Fraction(K0, g) + q
            base = Fraction(K0, q) + q
        else:
            raise ValueError(f"unknown curve variant {variant!r}")
        rows.append((q, obj.numerator, obj.denominator,
                     base.numerator, base.denominator, g))
    return rows


def write_curve_csv(path: str | Path, rows: list[tuple]) -> None:
    lines = [",".join(CURVE_HEADER)]
    lines += [",".join(str(v) for v in row) for row in rows]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def render_curve_figure(path: str | Path, rows: list[tuple],
                        title: str) -> None:
    """Scatter of the objective against its convex baseline, marking the
    values pulled down by a shared factor."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    qs = [r[0] for r in rows]
    obj = [r[1] / r[2] for r in rows]
    base = [r[3] / r[4] for r in rows]
    shared = [r[5] > 1 for r in rows]

    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(qs, base, color="0.6", lw=1.0, label="convex baseline")
    ax.scatter([q for q, s in zip(qs, shared) if not s],
               [v for v, s in zip(obj, shared) if not s],
               s=6, color="tab:blue", label="gcd(q, M) = 1")
    ax.scatter([q for q, s in zip(qs, shared) if s],
               [v for v, s in zip(obj, shared) if s],
               s=10, color="tab:red", label="gcd(q, M) > 1")
    ax.set_xlabel("q")
    ax.set_ylabel("objective")
    ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

"""Weight-reduction bookkeeping: chains of weight sequences down to (1,...,1).

Each step decrements one weight p_j >= 2 and hands out the expansion
wiring for the tube at that point.  Any strategy reaches the trivial
weight sequence after exactly the sum of (p_i - 1) steps; the strategy
only fixes the order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .expansion import ExpansionContext
from .gradedmod import WeightedLineData
from .lgroup import WeightError, check_weights
from .tubecat import PointDescriptor

__all__ = [
    "PlanError",
    "ReductionPlan",
    "reduction_steps",
    "reduction_plan",
    "apply_step",
]


class PlanError(ValueError):
    """An explicit step list hits a weight that is already 1."""


@dataclass(frozen=True)
class ReductionPlan:
    start: tuple[int, ...]
    strategy: str
    steps: tuple[int, ...]
    chain: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.chain) != len(self.steps) + 1:
            raise PlanError("chain length must be steps + 1")

    @property
    def length(self) -> int:
        return len(self.steps)

    def to_json_dict(self) -> dict:
        return {
            "start": list(self.start),
            "strategy": self.strategy,
            "steps": list(self.steps),
            "chain": [list(w) for w in self.chain],
        }


def reduction_steps(p) -> int:
    """Number of steps to the trivial weight sequence: sum of (p_i - 1)."""
    return sum(q - 1 for q in check_weights(p))


def _pick(weights: list[int], strategy: str, cursor: int) -> tuple[int, int]:
    if strategy == "largest_first":
        best = max(range(len(weights)), key=lambda i: (weights[i], -i))
        return best + 1, cursor
    if strategy == "round_robin":
        n = len(weights)
        for off in range(n):
            i = (cursor + off) % n
            if weights[i] > 1:
                return i + 1, (i + 1) % n
    raise PlanError(f"unknown strategy {strategy!r}")


def reduction_plan(data, strategy="largest_first") -> ReductionPlan:
    """Plan a full reduction of a weight sequence.

    strategy is "largest_first" (ties break to the lowest index),
    "round_robin", or an explicit list of 1-based indices.
    """
    p = data.p if isinstance(data, WeightedLineData) else check_weights(data)
    weights = list(p)
    chain = [tuple(weights)]
    steps = []

    if isinstance(strategy, (list, tuple)):
        for j in strategy:
            if not 1 <= j <= len(weights):
                raise PlanError(f"step index {j} outside 1..{len(weights)}")
            if weights[j - 1] < 2:
                raise PlanError(f"step at index {j} hits weight 1")
            weights[j - 1] -= 1
            steps.append(j)
            chain.append(tuple(weights))
        if any(w > 1 for w in weights):
            raise PlanError("explicit step list does not reach (1,...,1)")
        return ReductionPlan(p, "explicit", tuple(steps), tuple(chain))

    cursor = 0
    while any(w > 1 for w in weights):
        j, cursor = _pick(weights, strategy, cursor)
        weights[j - 1] -= 1
        steps.append(j)
        chain.append(tuple(weights))
    return ReductionPlan(p, strategy, tuple(steps), tuple(chain))


def apply_step(data: WeightedLineData, j: int):
    """Decrement p_j and wire the expansion for the tube at point j.

    Returns (reduced data, expansion context); the context's big tube is
    the rank-p_j tube at the chosen point.
    """
    if not 1 <= j <= len(data.p):
        raise WeightError(f"index {j} outside 1..{len(data.p)}")
    if data.p[j - 1] < 2:
        raise WeightError(f"invalid reduction index {j}: weight is 1")
    small = list(data.p)
    small[j - 1] -= 1
    reduced = replace(data, p=tuple(small))
    big_point = PointDescriptor.exceptional(j, data.p[j - 1])
    small_point = PointDescriptor(
        label=f"{j}'", kind="exceptional", rank=data.p[j - 1] - 1
    )
    return reduced, ExpansionContext(big_point, small_point)

"""Rank bookkeeping for degenerating families of curves.

A degeneration is described point by point: each declared singularity of
the central fiber either keeps its analytic type (equisingular) or is
smoothed to a milder catalog type on the nearby fiber. The total drop of
the delta-invariant drives everything: the predicted maximal cup-product
rank, the vanishing-cycle count, and the weight-graded dimensions of the
first cohomology of the central fiber.
"""

from __future__ import annotations

from dataclasses import dataclass

from .invariants import SingularityRecord, singularity, total_delta


class DegenerationError(ValueError):
    """The declared family is not a degeneration (delta may not increase)."""


@dataclass(frozen=True)
class SmoothingStep:
    """One singular point: its type on the central fiber and on nearby fibers."""

    initial: SingularityRecord
    target: SingularityRecord

    def __post_init__(self):
        if self.target.delta > self.initial.delta:
            raise DegenerationError(
                f"step {self.initial.kind} -> {self.target.kind} increases delta "
                f"({self.initial.delta} -> {self.target.delta})"
            )

    @property
    def drop(self) -> int:
        return self.initial.delta - self.target.delta


def step(initial_kind: str, target_kind: str) -> SmoothingStep:
    """Build a smoothing step from catalog kind strings ("smooth" allowed as target)."""
    return SmoothingStep(singularity(initial_kind), singularity(target_kind))


@dataclass(frozen=True)
class DegenerationSpec:
    """Central-fiber arithmetic genus plus one smoothing step per singular point."""

    pa: int
    steps: tuple[SmoothingStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        delta = sum(s.initial.delta for s in self.steps)
        if delta > self.pa:
            raise DegenerationError(
                f"total delta {delta} exceeds arithmetic genus {self.pa}"
            )


@dataclass(frozen=True)
class DegenerationReport:
    delta_initial: int
    delta_target: int
    rank_defect: int
    predicted_max_rank: int
    gr_w1_dim: int
    gr_w2_dim: int
    vanishing_cycle_dim: int


def rank_defect(spec: DegenerationSpec) -> DegenerationReport:
    """Rank defect and limiting weight-graded dimensions of a degeneration.

    The defect equals the total delta drop; the predicted maximal rank is
    p_a minus that drop, and the vanishing cycles account for exactly the
    dropped dimensions.
    """
    delta_initial = sum(s.initial.delta for s in spec.steps)
    delta_target = sum(s.target.delta for s in spec.steps)
    drop = delta_initial - delta_target
    return DegenerationReport(
        delta_initial=delta_initial,
        delta_target=delta_target,
        rank_defect=drop,
        predicted_max_rank=spec.pa - drop,
        gr_w1_dim=2 * (spec.pa - delta_initial),
        gr_w2_dim=delta_initial,
        vanishing_cycle_dim=drop,
    )


@dataclass(frozen=True)
class MhsDims:
    gr_w1: int
    gr_w2: int


def mhs_dims(pa: int, singularities: list[SingularityRecord]) -> MhsDims:
    """Weight-graded dimensions of H^1 of a singular fiber.

    gr_w1 is twice the normalization genus, gr_w2 is the total delta;
    the full H^1 dimension is their sum.
    """
    delta = total_delta(singularities)
    if delta > pa:
        raise DegenerationError(f"total delta {delta} exceeds arithmetic genus {pa}")
    return MhsDims(gr_w1=2 * (pa - delta), gr_w2=delta)


@dataclass(frozen=True)
class EquisingularRank:
    total: int
    from_normalization: int
    from_singularities: int


def equisingular_rank(pa: int, singularities: list[SingularityRecord]) -> EquisingularRank:
    """Maximal rank p_a of an equisingular family, split as normalization + delta."""
    delta = total_delta(singularities)
    if delta > pa:
        raise DegenerationError(f"total delta {delta} exceeds arithmetic genus {pa}")
    return EquisingularRank(
        total=pa, from_normalization=pa - delta, from_singularities=delta
    )


def yukawa_defect(node_count: int) -> int:
    """Yukawa-coupling rank drop of a nodal hypersurface: one per node."""
    if node_count < 0:
        raise ValueError("node count must be nonnegative")
    return node_count

"""Five-interval entry-strategy grid over I*.

Intervals are lower-inclusive: ``(-inf, 0)``, ``[0, 1.6)``, ``[1.6, 2)``,
``[2, 5)``, ``[5, inf)``. A value sitting exactly on a cut takes the strategy
of the higher interval; :func:`boundary_hit` reports when that happened.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass

from .errors import DomainError

BOUNDARY_TOL = 1e-12


class StrategyClass(enum.IntEnum):
    """Entry strategies, ordered by ascending I* interval."""

    GREENFIELD_INVESTMENT = 0
    ACQUISITION = 1
    MERGER_ACQUISITION = 2
    COOPERATION = 3
    EXPORT = 4

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "StrategyClass":
        for member, text in _LABELS.items():
            if text == label:
                return member
        raise ValueError(f"unknown strategy {label!r}")


_LABELS = {
    StrategyClass.GREENFIELD_INVESTMENT: "GreenfieldInvestment",
    StrategyClass.ACQUISITION: "Acquisition",
    StrategyClass.MERGER_ACQUISITION: "MergerAcquisition",
    StrategyClass.COOPERATION: "Cooperation",
    StrategyClass.EXPORT: "Export",
}

# (evaluation of the microeconomic environment, optimal entry strategy)
_TABLE = {
    StrategyClass.GREENFIELD_INVESTMENT: (
        "The microeconomic environment likely to be entirely taken over",
        "Direct greenfield investment",
    ),
    StrategyClass.ACQUISITION: (
        "The microeconomic environment likely to be entirely taken over by a buy of "
        "the majority of stocks and joining the management team",
        "Acquisition",
    ),
    StrategyClass.MERGER_ACQUISITION: (
        "The microeconomic environment likely to be taken over at a equal rate to that of the partner",
        "Mergers, acquisitions",
    ),
    StrategyClass.COOPERATION: (
        "The microeconomic environment favourable for economic cooperation",
        "Licensing, franchising, strategic alliances, management contract",
    ),
    StrategyClass.EXPORT: (
        "The microeconomic environment hard to be approached through a partnership "
        "but favourable for trading operations",
        "Export",
    ),
}


@dataclass(frozen=True)
class GridBoundaries:
    cuts: tuple[float, float, float, float] = (0.0, 1.6, 2.0, 5.0)

    def __post_init__(self):
        cuts = tuple(float(c) for c in self.cuts)
        if len(cuts) != 4:
            raise DomainError(f"expected 4 cuts, got {len(cuts)}")
        if not all(math.isfinite(c) for c in cuts):
            raise DomainError("cuts must be finite")
        if any(b <= a for a, b in zip(cuts, cuts[1:])):
            raise DomainError(f"cuts must be strictly ascending: {cuts}")
        object.__setattr__(self, "cuts", cuts)


DEFAULT_BOUNDARIES = GridBoundaries()


def classify(i_star: float, boundaries: GridBoundaries = DEFAULT_BOUNDARIES) -> StrategyClass:
    if not math.isfinite(i_star):
        raise DomainError(f"I* must be finite, got {i_star!r}")
    return StrategyClass(bisect.bisect_right(boundaries.cuts, i_star))


def boundary_hit(i_star: float, boundaries: GridBoundaries = DEFAULT_BOUNDARIES) -> float | None:
    """Return the cut that ``i_star`` sits on (within 1e-12), else None."""
    for cut in boundaries.cuts:
        if abs(i_star - cut) <= BOUNDARY_TOL:
            return cut
    return None


def describe(strategy: StrategyClass) -> tuple[str, str]:
    """Return (environment evaluation, optimal strategy) for a grid row."""
    return _TABLE[StrategyClass(strategy)]

"""Assessor-spread model: does a real difference in device counts survive
assessor variation under a given mark scale?

Each simulated assessor has a generosity bias evenly spaced across the
panel; every device occurrence receives a mark derived from that bias
plus a small seeded jitter, clamped to the scale. Two texts are
"separable" when their per-assessor score ranges do not overlap, which
is how a narrow scale (0-2) preserves a contrast that a wide scale
(0-10) washes out.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations


class ConcordanceError(Exception):
    pass


class EmptyScores(ConcordanceError):
    """A score list was empty."""


class InvalidConfig(ConcordanceError):
    """A simulation configuration violates its preconditions."""


@dataclass(frozen=True)
class SimulationConfig:
    true_ld_counts: tuple[int, ...]
    assessor_count: int
    max_mark: int
    generosity_spread: float
    seed: int

    def validate(self):
        if not self.true_ld_counts or any(c < 1 for c in self.true_ld_counts):
            raise InvalidConfig("true_ld_counts must all be >= 1")
        if self.assessor_count < 2:
            raise InvalidConfig("assessor_count must be >= 2")
        if self.max_mark not in (2, 10):
            raise InvalidConfig("max_mark must be 2 or 10")
        if not 0.0 <= self.generosity_spread <= 1.0:
            raise InvalidConfig("generosity_spread must lie in [0, 1]")


@dataclass(frozen=True)
class SeparabilityReport:
    per_text_ranges: tuple[tuple[float, float, float], ...]  # (min, max, mean)
    overlap_length: float
    overlap_fraction: float
    separable: bool


@dataclass(frozen=True)
class SimulationResult:
    config: SimulationConfig
    generosities: tuple[float, ...]
    scores: tuple[tuple[int, ...], ...]  # [assessor][text]
    pair_reports: tuple[tuple[int, int, SeparabilityReport], ...]

    def text_scores(self, text_index: int) -> list[int]:
        return [row[text_index] for row in self.scores]


def analyze_ranges(scores_text1, scores_text2) -> SeparabilityReport:
    """Interval overlap of two score samples; touching endpoints separate."""
    ranges = []
    for name, scores in (("text1", scores_text1), ("text2", scores_text2)):
        if not scores:
            raise EmptyScores(f"{name} has no scores")
        ranges.append((min(scores), max(scores), sum(scores) / len(scores)))
    (lo1, hi1, _), (lo2, hi2, _) = ranges
    overlap = max(0.0, min(hi1, hi2) - max(lo1, lo2))
    union = (hi1 - lo1) + (hi2 - lo2) - overlap
    fraction = overlap / union if union > 0 else 0.0
    return SeparabilityReport(
        per_text_ranges=tuple(ranges),
        overlap_length=overlap,
        overlap_fraction=fraction,
        separable=overlap == 0,
    )


def _clamp(value: int, lo: int, hi: int) -> int:
    return max(lo, min(hi, value))


def simulate(config: SimulationConfig) -> SimulationResult:
    """Deterministic for a fixed seed: same config, same score matrix."""
    config.validate()
    n = config.assessor_count
    lo = 0.5 - config.generosity_spread / 2
    generosities = tuple(
        lo + config.generosity_spread * i / (n - 1) for i in range(n)
    )

    rng = random.Random(config.seed)
    scores = []
    for g in generosities:
        row = []
        for count in config.true_ld_counts:
            total = 0
            for _ in range(count):
                jitter = rng.choice((-1, 0, 1))
                raw = 1 + g * (config.max_mark - 1) + jitter
                total += _clamp(int(math.floor(raw + 0.5)), 1, config.max_mark)
            row.append(total)
        scores.append(tuple(row))

    pair_reports = []
    for i, j in combinations(range(len(config.true_ld_counts)), 2):
        report = analyze_ranges(
            [row[i] for row in scores], [row[j] for row in scores]
        )
        pair_reports.append((i, j, report))

    return SimulationResult(
        config=config,
        generosities=generosities,
        scores=tuple(scores),
        pair_reports=tuple(pair_reports),
    )

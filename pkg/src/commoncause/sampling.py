"""Seeded generators of random canonical events."""

from __future__ import annotations

import random
from fractions import Fraction

from .common_cause import covariance
from .events import Event, Interval, event_normalize

DENOMINATORS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 24, 30, 60, 64, 97, 360)


def random_event(rng: random.Random, max_intervals: int = 4) -> Event:
    """Union of up to ``max_intervals`` random intervals on a random grid.

    Endpoints may coincide, so the result exercises degenerate, touching
    and overlapping inputs to :func:`event_normalize`.
    """
    den = rng.choice(DENOMINATORS)
    raw = []
    for _ in range(rng.randint(0, max_intervals)):
        lo, hi = sorted((rng.randint(0, den), rng.randint(0, den)))
        raw.append(Interval(Fraction(lo, den), Fraction(hi, den)))
    return event_normalize(raw)


def random_correlated_pair(rng: random.Random, max_intervals: int = 4) -> tuple[Event, Event]:
    """Rejection-sample a pair of distinct events with positive covariance."""
    while True:
        a, b = random_event(rng, max_intervals), random_event(rng, max_intervals)
        if a != b and covariance(a, b) > 0:
            return a, b

"""Exact common-cause constructions on the countable interval Boolean algebra.

Events are finite unions of half-open rational intervals ``(l, r]`` inside
``(0, 1]``; probabilities are Lebesgue measure, kept as exact fractions.
"""

from .common_cause import (
    Certificate,
    Mode,
    RccpReport,
    carve_subevent,
    conditional,
    covariance,
    find_common_cause,
    target_measure,
    verify_rccp,
)
from .errors import *  # noqa: F401,F403
from .events import (
    Event,
    Interval,
    complement,
    event_normalize,
    format_event,
    join,
    leq,
    measure,
    meet,
    parse_event,
    parse_rational,
)

__version__ = "0.1.0"

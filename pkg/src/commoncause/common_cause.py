"""Covariance, screening-off verification and the common-cause construction
on the interval algebra.

Everything is exact: the four screening-off conditions are checked as
equalities and strict inequalities of :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateDistinctness,
    InternalInvariantViolation,
    InvalidTarget,
    NotPositivelyCorrelated,
    ZeroConditioningEvent,
)
from .events import (
    ONE,
    Event,
    Interval,
    complement,
    format_event,
    meet,
    measure,
    parse_event,
)


class Mode(str, enum.Enum):
    STRICT = "strict"
    LENIENT = "lenient"


def covariance(a: Event, b: Event) -> Fraction:
    return measure(meet(a, b)) - measure(a) * measure(b)


def conditional(a: Event, c: Event) -> Fraction:
    """``p(a | c)``; raises :class:`ZeroConditioningEvent` if ``p(c) == 0``."""
    pc = measure(c)
    if pc == 0:
        raise ZeroConditioningEvent(f"cannot condition on {format_event(c)}")
    return measure(meet(a, c)) / pc


def target_measure(a: Event, b: Event) -> Fraction:
    """Measure that any cause carved inside ``a & b`` must have.

    ``(p(ab) - p(a)p(b)) / (1 + p(ab) - p(a) - p(b))``, which lies in
    ``(0, p(ab)]`` whenever the covariance is positive.
    """
    pa, pb, pab = measure(a), measure(b), measure(meet(a, b))
    cov = pab - pa * pb
    if cov <= 0:
        raise NotPositivelyCorrelated(
            f"cov({format_event(a)}, {format_event(b)}) = {cov} is not positive"
        )
    # denominator minus numerator is (1 - pa)(1 - pb) > 0
    return cov / (ONE + pab - pa - pb)


def carve_subevent(e: Event, v: Fraction) -> Event:
    """Sub-event of ``e`` with measure exactly ``v``.

    Intervals of ``e`` are taken whole from the left until the remainder fits
    inside the next one, which is cut to ``(l, l + remainder]``.
    """
    v = Fraction(v)
    total = measure(e)
    if v <= 0 or v > total:
        raise InvalidTarget(f"target {v} not in (0, {total}]")
    out = []
    remaining = v
    for iv in e.intervals:
        length = iv.right - iv.left
        if length >= remaining:
            out.append(Interval(iv.left, iv.left + remaining))
            break
        out.append(iv)
        remaining -= length
    return Event(tuple(out))


@dataclass(frozen=True)
class RccpReport:
    p_a_given_c: Fraction
    p_b_given_c: Fraction
    p_ab_given_c: Fraction
    p_a_given_cprime: Fraction
    p_b_given_cprime: Fraction
    p_ab_given_cprime: Fraction
    rccp1: bool
    rccp2: bool
    rccp3: bool
    rccp4: bool

    @property
    def all_hold(self) -> bool:
        return self.rccp1 and self.rccp2 and self.rccp3 and self.rccp4

    def flags(self) -> dict[str, bool]:
        return {
            "rccp1": self.rccp1,
            "rccp2": self.rccp2,
            "rccp3": self.rccp3,
            "rccp4": self.rccp4,
        }


_CONDITIONALS = (
    "p_a_given_c",
    "p_b_given_c",
    "p_ab_given_c",
    "p_a_given_cprime",
    "p_b_given_cprime",
    "p_ab_given_cprime",
)


def verify_rccp(a: Event, b: Event, c: Event) -> RccpReport:
    """Check whether ``c`` screens off ``a`` and ``b`` and raises both.

    Requires ``0 < p(c) < 1`` so that conditioning on both ``c`` and its
    complement is defined.
    """
    pc = measure(c)
    if pc == 0 or pc == 1:
        raise ZeroConditioningEvent(
            f"p(c) = {pc}; both c and its complement need positive measure"
        )
    cp = complement(c)
    ab = meet(a, b)
    a_c, b_c, ab_c = conditional(a, c), conditional(b, c), conditional(ab, c)
    a_cp, b_cp, ab_cp = conditional(a, cp), conditional(b, cp), conditional(ab, cp)
    return RccpReport(
        a_c, b_c, ab_c, a_cp, b_cp, ab_cp,
        rccp1=ab_c == a_c * b_c,
        rccp2=ab_cp == a_cp * b_cp,
        rccp3=a_c > a_cp,
        rccp4=b_c > b_cp,
    )


@dataclass(frozen=True)
class Certificate:
    a: Event
    b: Event
    c: Event
    covariance: Fraction
    target_measure: Fraction
    report: RccpReport
    distinct: bool
    mode: Mode

    def to_json(self) -> dict:
        out = {
            "a": format_event(self.a),
            "b": format_event(self.b),
            "c": format_event(self.c),
            "cov": str(self.covariance),
            "v": str(self.target_measure),
        }
        for name in _CONDITIONALS:
            out[name] = str(getattr(self.report, name))
        out["rccp"] = self.report.flags()
        out["distinct"] = self.distinct
        out["mode"] = self.mode.value
        return out

    @classmethod
    def from_json(cls, data: dict) -> Certificate:
        report = RccpReport(
            **{name: Fraction(data[name]) for name in _CONDITIONALS},
            **{k: bool(data["rccp"][k]) for k in ("rccp1", "rccp2", "rccp3", "rccp4")},
        )
        return cls(
            a=parse_event(data["a"]),
            b=parse_event(data["b"]),
            c=parse_event(data["c"]),
            covariance=Fraction(data["cov"]),
            target_measure=Fraction(data["v"]),
            report=report,
            distinct=bool(data["distinct"]),
            mode=Mode(data["mode"]),
        )


def find_common_cause(a: Event, b: Event, mode: Mode | str = Mode.LENIENT) -> Certificate:
    """Construct a common cause of a positively correlated pair.

    The cause is carved from ``a & b`` with measure :func:`target_measure`.
    When ``a <= b`` (or ``b <= a``) the only such sub-event is the smaller of
    the two; ``strict`` mode rejects that, ``lenient`` mode returns it with
    ``distinct=False``.
    """
    mode = Mode(mode)
    cov = covariance(a, b)
    v = target_measure(a, b)
    if a == b:
        raise DegenerateDistinctness("a and b must be distinct events")
    c = carve_subevent(meet(a, b), v)
    distinct = c != a and c != b
    if mode is Mode.STRICT and not distinct:
        which = "a" if c == a else "b"
        raise DegenerateDistinctness(
            f"the only cause of measure {v} inside a & b is {which} = {format_event(c)}"
        )
    report = verify_rccp(a, b, c)
    if not report.all_hold:
        raise InternalInvariantViolation(f"carved cause failed verification: {report}")
    if measure(c) != v or meet(c, meet(a, b)) != c:
        raise InternalInvariantViolation("carved cause has wrong measure or location")
    return Certificate(a, b, c, cov, v, report, distinct, mode)


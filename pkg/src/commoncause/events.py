"""Boolean algebra of finite unions of left-open, right-closed rational
subintervals of (0, 1], with Lebesgue measure.

Every public :class:`Event` is canonical: its intervals are non-degenerate,
sorted, pairwise disjoint and non-adjacent.  Canonical form is unique, so
set equality is plain structural equality.

>>> a = parse_event("(0,1/2]")
>>> b = parse_event("(1/4,5/8]")
>>> format_event(a & b), measure(a | b)
('(1/4,1/2]', Fraction(5, 8))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import EndpointOutOfRange, ParseError

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def _rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Interval:
    """The half-open interval ``(left, right]``."""

    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", _rational(self.left))
        object.__setattr__(self, "right", _rational(self.right))

    @property
    def length(self) -> Fraction:
        return max(self.right - self.left, ZERO)

    @property
    def is_degenerate(self) -> bool:
        return self.left >= self.right

    def __contains__(self, x) -> bool:
        return self.left < x <= self.right

    def __str__(self) -> str:
        return f"({self.left},{self.right}]"


@dataclass(frozen=True)
class Event:
    """A canonical element of the interval algebra.

    Build events with :func:`event_normalize`, :func:`parse_event` or the
    helpers :meth:`empty`, :meth:`unit` and :meth:`interval`; the constructor
    only accepts intervals that are already in canonical order.
    """

    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        ivs = tuple(self.intervals)
        object.__setattr__(self, "intervals", ivs)
        prev = None
        for iv in ivs:
            if not isinstance(iv, Interval):
                raise TypeError(f"expected Interval, got {type(iv).__name__}")
            if iv.left < 0 or iv.right > 1:
                raise EndpointOutOfRange(f"{iv} is not inside (0,1]")
            if iv.is_degenerate:
                raise ValueError(f"degenerate interval {iv} in canonical event")
            if prev is not None and not prev.right < iv.left:
                raise ValueError(
                    f"intervals {prev} and {iv} overlap, touch or are unsorted; "
                    "use event_normalize"
                )
            prev = iv

    @classmethod
    def empty(cls) -> Event:
        return _EMPTY

    @classmethod
    def unit(cls) -> Event:
        return _UNIT

    @classmethod
    def interval(cls, left: RationalLike, right: RationalLike) -> Event:
        return event_normalize([Interval(_rational(left), _rational(right))])

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def is_unit(self) -> bool:
        return self == _UNIT

    def __contains__(self, x) -> bool:
        return any(x in iv for iv in self.intervals)

    def __and__(self, other: Event) -> Event:
        return meet(self, other)

    def __or__(self, other: Event) -> Event:
        return join(self, other)

    def __invert__(self) -> Event:
        return complement(self)

    def __le__(self, other: Event) -> bool:
        return leq(self, other)

    def __ge__(self, other: Event) -> bool:
        return leq(other, self)

    def __str__(self) -> str:
        return format_event(self)


_EMPTY = Event(())
_UNIT = Event((Interval(ZERO, ONE),))


def event_normalize(raw: Iterable[Interval]) -> Event:
    """Canonical event equal, as a point set, to the union of ``raw``."""
    ivs = []
    for iv in raw:
        for x in (iv.left, iv.right):
            if x < 0 or x > 1:
                raise EndpointOutOfRange(f"endpoint {x} of {iv} is outside [0,1]")
        if not iv.is_degenerate:
            ivs.append(iv)
    ivs.sort()

    merged: list[Interval] = []
    for iv in ivs:
        # (l, m] and (m, r] share no point but their union is (l, r]
        if merged and iv.left <= merged[-1].right:
            last = merged[-1]
            if iv.right > last.right:
                merged[-1] = Interval(last.left, iv.right)
        else:
            merged.append(iv)
    return Event(tuple(merged))


def meet(a: Event, b: Event) -> Event:
    out = []
    i = j = 0
    xs, ys = a.intervals, b.intervals
    while i < len(xs) and j < len(ys):
        lo = max(xs[i].left, ys[j].left)
        hi = min(xs[i].right, ys[j].right)
        if lo < hi:
            out.append(Interval(lo, hi))
        if xs[i].right < ys[j].right:
            i += 1
        else:
            j += 1
    # pieces of two canonical events never touch each other
    return Event(tuple(out))


def join(a: Event, b: Event) -> Event:
    return event_normalize(a.intervals + b.intervals)


def complement(a: Event) -> Event:
    out = []
    cursor = ZERO
    for iv in a.intervals:
        if cursor < iv.left:
            out.append(Interval(cursor, iv.left))
        cursor = iv.right
    if cursor < ONE:
        out.append(Interval(cursor, ONE))
    return Event(tuple(out))


def leq(a: Event, b: Event) -> bool:
    return meet(a, b) == a


def measure(a: Event) -> Fraction:
    return sum((iv.right - iv.left for iv in a.intervals), ZERO)


def format_rational(x: Fraction) -> str:
    return str(x)


def format_event(a: Event) -> str:
    if a.is_empty:
        return "0"
    return "+".join(str(iv) for iv in a.intervals)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def at_end(self) -> bool:
        return self.peek() == ""

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise self.error("expected digits")
        return self.text[start:self.pos]

    def rational(self) -> Fraction:
        self.skip_ws()
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        num = int(self.digits())
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            den_pos = self.pos
            den = int(self.digits())
            if den == 0:
                raise ParseError("zero denominator", self.text, den_pos)
            return Fraction(sign * num, den)
        return Fraction(sign * num)


def parse_rational(text: str) -> Fraction:
    """Parse ``integer`` or ``integer/posinteger`` exactly."""
    sc = _Scanner(text)
    value = sc.rational()
    if not sc.at_end():
        raise sc.error("trailing input")
    return value


def parse_event(text: str) -> Event:
    """Parse the textual event grammar.

    ``"0"`` is the empty event, ``"1"`` is ``(0,1]``, otherwise one or more
    intervals ``(l,r]`` joined by ``+``.  Degenerate intervals are dropped and
    the result is normalized.
    """
    sc = _Scanner(text)
    head = sc.peek()
    if head in ("0", "1"):
        sc.pos += 1
        if not sc.at_end():
            raise sc.error("trailing input after constant")
        return _EMPTY if head == "0" else _UNIT

    raw = []
    while True:
        sc.expect("(")
        left = sc.rational()
        sc.expect(",")
        right = sc.rational()
        sc.expect("]")
        raw.append(Interval(left, right))
        if sc.at_end():
            break
        sc.expect("+")
    return event_normalize(raw)

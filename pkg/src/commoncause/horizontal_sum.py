"""Horizontal sum of ``k`` copies of the interval algebra.

The copies (blocks) are glued at their bottom and top elements only.  Two
proper elements from different blocks meet at ``0`` and join at ``1``; inside
a block everything is the ordinary interval algebra.  The state is Lebesgue
measure on each block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import events as ev
from .common_cause import Certificate, Mode, find_common_cause
from .errors import BlockOutOfRange, DegenerateDistinctness, NotPositivelyCorrelated, ParseError
from .events import Event, format_event, parse_event


@dataclass(frozen=True)
class HSElement:
    """``block is None`` for the shared zero and one; otherwise a proper
    event of that block."""

    block: Optional[int]
    event: Event

    def __post_init__(self):
        if self.block is None:
            if not (self.event.is_empty or self.event.is_unit):
                raise ValueError("only 0 and 1 are shared between blocks")
        elif self.event.is_empty or self.event.is_unit:
            raise ValueError("block elements must be proper; use HSElement.of")

    @classmethod
    def of(cls, block: int, event: Event) -> HSElement:
        if event.is_empty:
            return HS_ZERO
        if event.is_unit:
            return HS_ONE
        return cls(block, event)

    @property
    def is_zero(self) -> bool:
        return self.block is None and self.event.is_empty

    @property
    def is_one(self) -> bool:
        return self.block is None and self.event.is_unit

    def __str__(self) -> str:
        return format_hs(self)


HS_ZERO = HSElement(None, Event.empty())
HS_ONE = HSElement(None, Event.unit())


def format_hs(x: HSElement) -> str:
    if x.block is None:
        return "0" if x.event.is_empty else "1"
    return f"B{x.block}:{format_event(x.event)}"


_BLOCK = re.compile(r"\s*B(\d+)\s*:")


def parse_hs(text: str) -> HSElement:
    """Parse ``"0"``, ``"1"`` or ``"B<i>:<event>"``."""
    stripped = text.strip()
    if stripped == "0":
        return HS_ZERO
    if stripped == "1":
        return HS_ONE
    m = _BLOCK.match(text)
    if not m:
        raise ParseError("expected '0', '1' or 'B<i>:<event>'", text, 0)
    event_text = text[m.end():]
    try:
        event = parse_event(event_text)
    except ParseError as exc:
        raise ParseError("bad block event", text, m.end() + exc.position) from None
    return HSElement.of(int(m.group(1)), event)


@dataclass(frozen=True)
class HSCertificate:
    block: int
    x: HSElement
    y: HSElement
    c: HSElement
    certificate: Certificate

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "x": format_hs(self.x),
            "y": format_hs(self.y),
            "c": format_hs(self.c),
            "certificate": self.certificate.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> HSCertificate:
        return cls(
            block=int(data["block"]),
            x=parse_hs(data["x"]),
            y=parse_hs(data["y"]),
            c=parse_hs(data["c"]),
            certificate=Certificate.from_json(data["certificate"]),
        )


@dataclass(frozen=True)
class HSLogic:
    block_count: int = 2

    def __post_init__(self):
        if self.block_count < 1:
            raise ValueError(f"need at least one block, got {self.block_count}")

    def check(self, x: HSElement) -> HSElement:
        if x.block is not None and not 0 <= x.block < self.block_count:
            raise BlockOutOfRange(f"block {x.block} not in 0..{self.block_count - 1}")
        return x

    def element(self, block: int, event: Event) -> HSElement:
        return self.check(HSElement.of(block, event))

    def parse(self, text: str) -> HSElement:
        return self.check(parse_hs(text))

    def meet(self, x: HSElement, y: HSElement) -> HSElement:
        self.check(x), self.check(y)
        if x.is_zero or y.is_zero:
            return HS_ZERO
        if x.is_one:
            return y
        if y.is_one:
            return x
        if x.block != y.block:
            return HS_ZERO
        return HSElement.of(x.block, ev.meet(x.event, y.event))

    def join(self, x: HSElement, y: HSElement) -> HSElement:
        self.check(x), self.check(y)
        if x.is_one or y.is_one:
            return HS_ONE
        if x.is_zero:
            return y
        if y.is_zero:
            return x
        if x.block != y.block:
            return HS_ONE
        return HSElement.of(x.block, ev.join(x.event, y.event))

    def orthocomplement(self, x: HSElement) -> HSElement:
        self.check(x)
        if x.block is None:
            return HS_ONE if x.is_zero else HS_ZERO
        return HSElement(x.block, ev.complement(x.event))

    def leq(self, x: HSElement, y: HSElement) -> bool:
        return self.meet(x, y) == x

    def state(self, x: HSElement) -> Fraction:
        self.check(x)
        return ev.measure(x.event)

    def covariance(self, x: HSElement, y: HSElement) -> Fraction:
        return self.state(self.meet(x, y)) - self.state(x) * self.state(y)

    def find_common_cause(
        self, x: HSElement, y: HSElement, mode: Mode | str = Mode.LENIENT
    ) -> HSCertificate:
        """Common cause of two proper elements, built inside their shared block.

        Elements of different blocks are never positively correlated.
        """
        self.check(x), self.check(y)
        if x.block is None or y.block is None:
            raise NotPositivelyCorrelated("0 and 1 are uncorrelated with everything")
        if x == y:
            raise DegenerateDistinctness("x and y must be distinct elements")
        if x.block != y.block:
            raise NotPositivelyCorrelated(
                f"{format_hs(x)} and {format_hs(y)} lie in different blocks; "
                f"covariance {self.covariance(x, y)}"
            )
        cert = find_common_cause(x.event, y.event, mode)
        return HSCertificate(x.block, x, y, HSElement(x.block, cert.c), cert)

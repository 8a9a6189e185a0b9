"""Exhaustive common-cause search on finite Boolean algebras.

A finite algebra is the power set of ``n`` atoms carrying strictly positive
rational weights.  Events are subsets of atom indices; internally they are
handled as bitmasks, with bit ``i`` set when atom ``i`` is a member, and that
integer encoding also fixes the enumeration order.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    AtomCapExceeded,
    IndexOutOfRange,
    InvalidParameters,
    InvalidWeights,
    NotPositivelyCorrelated,
    ParseError,
)
from .events import parse_rational

DEFAULT_ATOM_CAP = 12
DEFAULT_DENOMINATOR = 64


@dataclass(frozen=True)
class FiniteAlgebra:
    atom_weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.atom_weights)
        object.__setattr__(self, "atom_weights", weights)
        if not weights:
            raise InvalidWeights("an algebra needs at least one atom")
        if any(w <= 0 for w in weights):
            raise InvalidWeights(f"atom weights must be positive: {_fmt(weights)}")
        if sum(weights) != 1:
            raise InvalidWeights(f"atom weights sum to {sum(weights)}, not 1")

    @property
    def n(self) -> int:
        return len(self.atom_weights)

    @property
    def full(self) -> FiniteEvent:
        return FiniteEvent(frozenset(range(self.n)))

    def events(self) -> list[FiniteEvent]:
        return [FiniteEvent.from_mask(m) for m in range(1 << self.n)]

    def _table(self) -> list[Fraction]:
        """Measure of every event, indexed by bitmask."""
        table = [Fraction(0)] * (1 << self.n)
        for mask in range(1, 1 << self.n):
            low = mask & -mask
            table[mask] = table[mask ^ low] + self.atom_weights[low.bit_length() - 1]
        return table

    def __str__(self) -> str:
        return _fmt(self.atom_weights)


@dataclass(frozen=True)
class FiniteEvent:
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def from_mask(cls, mask: int) -> FiniteEvent:
        return cls(frozenset(i for i in range(mask.bit_length()) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.members)) + "}"


def _fmt(weights: Iterable[Fraction]) -> str:
    return " ".join(str(w) for w in weights)


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse whitespace-separated atom weights such as ``"3/5 1/5 1/5"``."""
    tokens = text.split()
    if not tokens:
        raise ParseError("no atom weights", text, 0)
    return FiniteAlgebra(tuple(parse_rational(t) for t in tokens))


def _check(alg: FiniteAlgebra, e: FiniteEvent) -> int:
    bad = [i for i in e.members if not 0 <= i < alg.n]
    if bad:
        raise IndexOutOfRange(f"atom indices {sorted(bad)} outside 0..{alg.n - 1}")
    return e.mask


def _check_cap(alg: FiniteAlgebra, cap: int):
    if alg.n > cap:
        raise AtomCapExceeded(f"{alg.n} atoms exceeds the enumeration cap of {cap}")


def finite_measure(alg: FiniteAlgebra, e: FiniteEvent) -> Fraction:
    _check(alg, e)
    return sum((alg.atom_weights[i] for i in e.members), Fraction(0))


def _screens_off(P: list[Fraction], full: int, a: int, b: int, c: int) -> bool:
    # conditionals cross-multiplied by p(c) and p(c'), both positive here
    cc = full ^ c
    pc, pcc = P[c], P[cc]
    return (
        P[a & b & c] * pc == P[a & c] * P[b & c]
        and P[a & b & cc] * pcc == P[a & cc] * P[b & cc]
        and P[a & c] * pcc > P[a & cc] * pc
        and P[b & c] * pcc > P[b & cc] * pc
    )


def _pairs(P: list[Fraction], n: int) -> list[tuple[int, int]]:
    size = 1 << n
    return [
        (a, b)
        for a in range(size)
        for b in range(a + 1, size)
        if P[a & b] - P[a] * P[b] > 0
    ]


def _search(P: list[Fraction], n: int, a: int, b: int) -> Optional[int]:
    full = (1 << n) - 1
    for c in range(1, full):
        if c != a and c != b and _screens_off(P, full, a, b, c):
            return c
    return None


def positively_correlated_pairs(
    alg: FiniteAlgebra, cap: int = DEFAULT_ATOM_CAP
) -> list[tuple[FiniteEvent, FiniteEvent]]:
    """All unordered pairs of distinct events with positive covariance,
    ordered by the bitmasks of ``(a, b)`` with ``a < b``."""
    _check_cap(alg, cap)
    return [
        (FiniteEvent.from_mask(a), FiniteEvent.from_mask(b))
        for a, b in _pairs(alg._table(), alg.n)
    ]


def search_common_cause(
    alg: FiniteAlgebra, a: FiniteEvent, b: FiniteEvent, cap: int = DEFAULT_ATOM_CAP
) -> Optional[FiniteEvent]:
    """First event ``c`` (in bitmask order) that is a common cause of ``a, b``.

    Candidates are all events other than ``a`` and ``b`` with
    ``0 < p(c) < 1``.  Returns ``None`` if none qualifies.
    """
    _check_cap(alg, cap)
    am, bm = _check(alg, a), _check(alg, b)
    P = alg._table()
    cov = P[am & bm] - P[am] * P[bm]
    if cov <= 0:
        raise NotPositivelyCorrelated(f"cov({a}, {b}) = {cov} is not positive")
    found = _search(P, alg.n, am, bm)
    return None if found is None else FiniteEvent.from_mask(found)


class Verdict(str, enum.Enum):
    TRIVIALLY_CCC = "TriviallyCCC"
    NON_TRIVIALLY_CCC = "NonTriviallyCCC"
    NOT_CCC = "NotCCC"


@dataclass(frozen=True)
class Witness:
    a: FiniteEvent
    b: FiniteEvent
    cause: Optional[FiniteEvent]


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witnesses: tuple[Witness, ...]

    def uncaused(self) -> list[Witness]:
        return [w for w in self.witnesses if w.cause is None]

    def format(self) -> str:
        lines = [
            f"verdict: {self.verdict.value}",
            f"positively correlated pairs: {len(self.witnesses)}",
        ]
        for w in self.witnesses:
            cause = "none" if w.cause is None else str(w.cause)
            lines.append(f"  a={w.a} b={w.b} cause={cause}")
        return "\n".join(lines)


def classify(alg: FiniteAlgebra, cap: int = DEFAULT_ATOM_CAP) -> Classification:
    _check_cap(alg, cap)
    P = alg._table()
    witnesses = []
    for a, b in _pairs(P, alg.n):
        c = _search(P, alg.n, a, b)
        witnesses.append(
            Witness(
                FiniteEvent.from_mask(a),
                FiniteEvent.from_mask(b),
                None if c is None else FiniteEvent.from_mask(c),
            )
        )
    if not witnesses:
        verdict = Verdict.TRIVIALLY_CCC
    elif all(w.cause is not None for w in witnesses):
        verdict = Verdict.NON_TRIVIALLY_CCC
    else:
        verdict = Verdict.NOT_CCC
    return Classification(verdict, tuple(witnesses))


def random_composition(rng: random.Random, n: int, denominator: int) -> list[int]:
    """Split ``denominator`` into ``n`` positive parts at random cut points.

    Draws with a zero part are rejected and redrawn.
    """
    while True:
        cuts = sorted(rng.randint(0, denominator) for _ in range(n - 1))
        parts = [hi - lo for lo, hi in zip([0] + cuts, cuts + [denominator])]
        if all(parts):
            return parts


def sample_algebra(n: int, seed: int, index: int, denominator: int = DEFAULT_DENOMINATOR) -> FiniteAlgebra:
    """The ``index``-th algebra of a scan; depends only on its arguments."""
    rng = random.Random(f"{seed}:{n}:{denominator}:{index}")
    parts = random_composition(rng, n, denominator)
    return FiniteAlgebra(tuple(Fraction(p, denominator) for p in parts))


@dataclass(frozen=True)
class ScanReport:
    n: int
    samples: int
    seed: int
    denominator: int
    counts: dict[Verdict, int] = field(default_factory=dict)
    non_trivial: tuple[FiniteAlgebra, ...] = ()

    def format(self) -> str:
        lines = [
            f"seed={self.seed} n={self.n} samples={self.samples} D={self.denominator}",
            f"{'verdict':<16} {'count':>6}",
        ]
        for verdict in Verdict:
            lines.append(f"{verdict.value:<16} {self.counts.get(verdict, 0):>6}")
        for alg in self.non_trivial:
            lines.append(f"non-trivially CCC: {alg}")
        return "\n".join(lines)


def scan(
    n: int,
    samples: int,
    seed: int,
    denominator: int = DEFAULT_DENOMINATOR,
    cap: int = DEFAULT_ATOM_CAP,
) -> ScanReport:
    """Classify ``samples`` random algebras with ``n`` atoms and tally verdicts.

    Weights are compositions of ``denominator`` into ``n`` positive parts,
    divided by ``denominator``.  Non-trivially CCC algebras, if any turn up,
    are kept in the report.
    """
    if n < 1 or n > cap:
        raise InvalidParameters(f"atom count must be in 1..{cap}, got {n}")
    if samples < 1:
        raise InvalidParameters(f"samples must be positive, got {samples}")
    if denominator < n:
        raise InvalidParameters(f"denominator {denominator} cannot split into {n} positive parts")
    counts: Counter = Counter()
    hits = []
    for i in range(samples):
        alg = sample_algebra(n, seed, i, denominator)
        verdict = classify(alg, cap).verdict
        counts[verdict] += 1
        if verdict is Verdict.NON_TRIVIALLY_CCC:
            hits.append(alg)
    return ScanReport(n, samples, seed, denominator, dict(counts), tuple(hits))

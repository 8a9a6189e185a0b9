"""Exit criteria.  Every check is an exact comparison of fractions; there is
no tolerance anywhere.  Each test records one PASS/FAIL line, shown in the
"acceptance criteria" section of the pytest summary."""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F

from commoncause import (
    Certificate,
    Event,
    Mode,
    carve_subevent,
    covariance,
    event_normalize,
    find_common_cause,
    format_event,
    join,
    leq,
    measure,
    meet,
    parse_event,
    target_measure,
    verify_rccp,
)
from commoncause.errors import DegenerateDistinctness
from commoncause.finite import FiniteAlgebra, Verdict, classify, scan
from commoncause.horizontal_sum import HSCertificate, HSElement, HSLogic
from commoncause.sampling import random_correlated_pair, random_event

from oracles import finite_common_causes, grid_for, rccp

SEED = 20240101
EMPTY, UNIT = Event.empty(), Event.unit()


def test_algebra_laws(acceptance_line):
    rng = random.Random(SEED)
    start = time.perf_counter()
    pool = [random_event(rng) for _ in range(1200)]
    failures = []
    for i, a in enumerate(pool):
        b, c = pool[(i * 7 + 1) % len(pool)], pool[(i * 13 + 5) % len(pool)]
        checks = {
            "comm": a & b == b & a and a | b == b | a,
            "assoc": (a & b) & c == a & (b & c) and (a | b) | c == a | (b | c),
            "idem": a & a == a and a | a == a,
            "absorb": a & (a | b) == a and a | (a & b) == a,
            "distrib": a & (b | c) == (a & b) | (a & c),
            "demorgan": ~(a & b) == ~a | ~b and ~(a | b) == ~a & ~b,
            "compl": a & ~a == EMPTY and a | ~a == UNIT,
            "modular": measure(a | b) + measure(a & b) == measure(a) + measure(b),
            "monotone": not leq(a, b) or measure(a) <= measure(b),
            "faithful": (measure(a) == 0) == (a == EMPTY),
            "canonical": event_normalize(a.intervals) == a,
        }
        failures += [(i, k) for k, ok in checks.items() if not ok]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    acceptance_line("algebra laws on 1200 events", ok, f"{elapsed:.2f}s, {len(failures)} failures")
    assert not failures
    assert elapsed < 10


def test_target_measure_bounds(acceptance_line):
    rng = random.Random(SEED + 1)
    positive = 0
    pairs = 0
    bad = []
    while positive < 1000:
        a, b = random_event(rng), random_event(rng)
        pairs += 1
        if measure(a) * measure(b) < measure(join(a, b)) * measure(meet(a, b)):
            bad.append(("product", a, b))
        if covariance(a, b) > 0:
            positive += 1
            v = target_measure(a, b)
            if not 0 < v <= measure(meet(a, b)):
                bad.append(("bounds", a, b))
    acceptance_line(
        "target measure in (0, p(a&b)] and p(a)p(b) >= p(a|b)p(a&b)",
        not bad,
        f"{positive} correlated of {pairs} pairs",
    )
    assert not bad


def test_subevents_of_meet(acceptance_line):
    rng = random.Random(SEED + 2)
    bad = []
    for _ in range(600):
        a, b = random_correlated_pair(rng)
        m = meet(a, b)
        v = measure(m) * rng.randint(1, 97) / 97
        c = carve_subevent(m, v)
        r = verify_rccp(a, b, c)
        if not (r.rccp1 and r.rccp3 and r.rccp4):
            bad.append((a, b, c))
    acceptance_line("any c <= a&b with p(c) > 0 gives conditions 1, 3, 4 (600 triples)", not bad)
    assert not bad


def test_end_to_end(acceptance_line):
    rng = random.Random(SEED + 3)
    pairs = [random_correlated_pair(rng) for _ in range(1000)]
    # nested pairs exercise the distinctness boundary
    while len(pairs) < 1200:
        a, x = random_event(rng), random_event(rng)
        b = a | x
        if a != b and covariance(a, b) > 0:
            pairs.append((a, b))
    bad = []
    certs = []
    strict_failures = 0
    start = time.perf_counter()
    for a, b in pairs:
        cert = find_common_cause(a, b, Mode.LENIENT)
        certs.append(cert)
        report = verify_rccp(a, b, cert.c)
        if not (report.all_hold and cert.report == report):
            bad.append(("rccp", a, b))
        if measure(cert.c) != cert.target_measure or not leq(cert.c, meet(a, b)):
            bad.append(("carve", a, b))
        nested = meet(a, b) in (a, b)
        try:
            find_common_cause(a, b, Mode.STRICT)
            strict_ok = True
        except DegenerateDistinctness:
            strict_ok = False
            strict_failures += 1
        if strict_ok == nested:
            bad.append(("strict", a, b))
    elapsed = time.perf_counter() - start

    oracle_checked = 0
    for cert in certs:
        n = grid_for(cert.a, cert.b, cert.c)
        if n <= 3000:
            o = rccp(cert.a, cert.b, cert.c, n)
            oracle_checked += 1
            if not (o["rccp1"] and o["rccp2"] and o["rccp3"] and o["rccp4"]):
                bad.append(("oracle", cert.a, cert.b))
    ok = not bad and elapsed < 10
    acceptance_line(
        f"common cause found and certified for {len(pairs)} pairs",
        ok,
        f"{elapsed:.2f}s, strict rejected {strict_failures} nested pairs, "
        f"{oracle_checked} cross-checked on grid",
    )
    assert not bad
    assert elapsed < 10


def test_finite_remark(acceptance_line):
    start = time.perf_counter()
    reports = {n: scan(n, 200, SEED, 64) for n in (2, 3, 4)}
    elapsed = time.perf_counter() - start
    non_trivial = {n: r.counts.get(Verdict.NON_TRIVIALLY_CCC, 0) for n, r in reports.items()}

    alg = FiniteAlgebra((F(3, 5), F(1, 5), F(1, 5)))
    cl = classify(alg)
    witness = [w for w in cl.witnesses if w.a.members == {0} and w.b.members == {0, 1}]
    oracle_none = finite_common_causes(alg.atom_weights, {0}, {0, 1}) == []
    ok = (
        all(v == 0 for v in non_trivial.values())
        and cl.verdict is Verdict.NOT_CCC
        and len(witness) == 1
        and witness[0].cause is None
        and oracle_none
        and elapsed < 60
    )
    acceptance_line(
        "finite algebras never non-trivially CCC; (3/5,1/5,1/5) is NotCCC",
        ok,
        f"non-trivial counts {non_trivial}, {elapsed:.2f}s",
    )
    assert all(v == 0 for v in non_trivial.values()), non_trivial
    assert cl.verdict is Verdict.NOT_CCC
    assert witness and witness[0].cause is None and oracle_none
    assert elapsed < 60


def test_horizontal_sum(acceptance_line):
    rng = random.Random(SEED + 4)
    bad = []
    counts = {}
    for k in (2, 3, 5):
        L = HSLogic(k)

        def proper():
            while True:
                x = HSElement.of(rng.randrange(k), random_event(rng))
                if x.block is not None:
                    return x

        cross = 0
        while cross < 500:
            x, y = proper(), proper()
            if x.block == y.block:
                continue
            cross += 1
            if not L.covariance(x, y) < 0:
                bad.append(("cross", k, x, y))

        same = 0
        while same < 200:
            i = rng.randrange(k)
            a, b = random_correlated_pair(rng)
            x, y = HSElement.of(i, a), HSElement.of(i, b)
            if x.block is None or y.block is None:
                continue
            if L.covariance(x, y) != covariance(a, b):
                bad.append(("cov", k, x, y))
            hc = L.find_common_cause(x, y)
            same += 1
            if hc.c.block != i or not verify_rccp(a, b, hc.c.event).all_hold:
                bad.append(("cert", k, x, y))

        spots = 0
        for _ in range(300):
            x, y = proper(), proper()
            if L.leq(x, y) and y != L.join(x, L.meet(y, L.orthocomplement(x))):
                bad.append(("orthomodular", k, x, y))
            # same-block orthogonal pair
            sub = HSElement.of(y.block, x.event & ~y.event)
            if not L.leq(sub, L.orthocomplement(y)):
                bad.append(("orth", k, sub, y))
            if L.state(L.join(sub, y)) != L.state(sub) + L.state(y):
                bad.append(("additive", k, sub, y))
            small = HSElement.of(y.block, y.event & x.event)
            if y != L.join(small, L.meet(y, L.orthocomplement(small))):
                bad.append(("orthomodular-nested", k, small, y))
            spots += 1
        counts[k] = (cross, same, spots)
    acceptance_line("horizontal sums k in {2,3,5}", not bad, f"(cross, same, spot) per k: {counts}")
    assert not bad


def test_round_trips(acceptance_line):
    rng = random.Random(SEED + 5)
    bad = []
    for _ in range(1200):
        s = format_event(random_event(rng, max_intervals=6))
        if format_event(parse_event(s)) != s:
            bad.append(s)
    for _ in range(100):
        a, b = random_correlated_pair(rng)
        cert = find_common_cause(a, b)
        if Certificate.from_json(json.loads(json.dumps(cert.to_json()))) != cert:
            bad.append(("cert", a, b))
    L = HSLogic(3)
    hc = L.find_common_cause(L.parse("B2:(0,1/2]"), L.parse("B2:(1/4,5/8]"))
    if HSCertificate.from_json(json.loads(json.dumps(hc.to_json()))) != hc:
        bad.append("hs-cert")

    invocations = [
        ["cause", "-a", "(0,1/2]", "-b", "(1/4,5/8]", "--json"],
        ["cause", "-a", "(0,1/4]+(1/2,3/4]", "-b", "(1/8,1/4]+(1/2,7/8]"],
        ["finite-scan", "-n", "3", "--samples", "25", "--seed", "9"],
        ["hsum-cause", "-k", "3", "-x", "B1:(0,1/2]", "-y", "B1:(1/4,5/8]", "--json"],
    ]
    for argv in invocations:
        cmd = [sys.executable, "-m", "commoncause", *argv]
        runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != 0 or not runs[0].stdout:
            bad.append(("cli", argv))
    acceptance_line("parse/format, certificate JSON and CLI output round-trips", not bad)
    assert not bad

"""Seeded sweep: every signal-built operation against its closed-form oracle.

Instances are drawn so that the predicates come out true roughly half the
time (collinear triples, parallel pairs, simultaneous events and so on are
built on purpose); a uniformly random instance would almost never hit them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..minkowski import Event, poincare_to_frame, rest_offset
from ..scalar import APPROX, Backend
from ..sigmodel import PYTHAGOREAN_DIRECTIONS, Particle, mk_particle, random_event, random_particle, random_velocity
from . import oracles as O
from .clocks import Calibration, causal_leq, plus, simultaneous, ted, times
from .coords import cord_values, frame_from_velocity, iso, med, mu
from .desargues import desargues_experiment
from .space import Location, at_rest, col, dd, ort, pa

OPERATIONS = ("motionless", "simultaneous", "causal", "ted", "plus", "times", "col", "pa", "dd", "ort",
              "cord", "mu", "med", "iso")


@dataclass
class SweepReport:
    samples: int
    seed: int
    backend: str
    counts: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    def record(self, op: str, got, want, witness: Callable[[], dict]) -> None:
        c = self.counts.setdefault(op, {"checked": 0, "mismatches": 0, "true": 0})
        c["checked"] += 1
        if want is True:
            c["true"] += 1
        if got != want:
            c["mismatches"] += 1
            if len(self.mismatches) < 20:
                self.mismatches.append({"operation": op, **witness()})

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"samples": self.samples, "seed": self.seed, "backend": self.backend,
                "counts": {k: self.counts[k] for k in OPERATIONS if k in self.counts},
                "mismatches": self.mismatches, "ok": self.ok}


def _frac(rng: random.Random, lo: int, hi: int, dens=(1, 2, 3, 4)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(lo * d, hi * d), d)


def _calibration(rng: random.Random, a: Particle) -> Calibration:
    o = a.at(_frac(rng, -3, 3))
    return Calibration(a, o, a.at(o.t + _frac(rng, 1, 4) + Fraction(1, 4)))


def _timelike_step(rng: random.Random, backend: Backend) -> Event:
    space = [_frac(rng, -2, 2) for _ in range(3)]
    t = sum(abs(c) for c in space) + _frac(rng, 1, 4)
    return Event.of(t, *space, backend=backend)


def _locations(rng: random.Random, a: Particle, n: int) -> list[Location]:
    seen, out = set(), []
    while len(out) < n:
        off = tuple(_frac(rng, -4, 4, (1, 2)) for _ in range(3))
        if off not in seen:
            seen.add(off)
            out.append(at_rest(a, off))
    return out


def _lab_offset(loc: Location) -> tuple:
    # at_rest places are translations at t = 0, so the base is the lab offset plus the anchor's base
    d = loc.place.base - loc.anchor.base
    return d.x.value, d.y.value, d.z.value


def _instance(rng: random.Random, backend: Backend, i: int, rep: SweepReport) -> None:
    hit = rng.random() < 0.5
    a = random_particle(rng, backend)
    V = a.direction

    b = mk_particle(random_event(rng, backend), a.velocity) if hit else random_particle(rng, backend)
    rep.record("motionless", desargues_experiment(a, b, seed=i), O.motionless(a, b),
               lambda: {"a": a.to_json(), "b": b.to_json()})

    e1 = random_event(rng, backend)
    e2 = e1 + rest_offset(V, Event.of(0, *(_frac(rng, -3, 3) for _ in range(3)), backend=backend)) if hit \
        else random_event(rng, backend)
    rep.record("simultaneous", simultaneous(a, e1, e2), O.simultaneous_oracle(a, e1, e2),
               lambda: {"a": a.to_json(), "e1": e1.to_json(), "e2": e2.to_json()})

    kind = rng.randrange(3)
    if kind == 0:
        n = rng.choice(PYTHAGOREAN_DIRECTIONS)
        f2 = e1 + Event.of(1, *n, backend=backend).scale(_frac(rng, -3, 3))
    elif kind == 1:
        f2 = e1 + _timelike_step(rng, backend).scale(rng.choice((1, -1)))
    else:
        f2 = random_event(rng, backend)
    rep.record("causal", causal_leq(e1, f2), O.causal_oracle(e1, f2),
               lambda: {"e1": e1.to_json(), "e2": f2.to_json()})

    t1, t2, t3 = (_frac(rng, -4, 4) for _ in range(3))
    t4 = t3 + t2 - t1 if hit else _frac(rng, -4, 4)
    ts = [a.at(t) for t in (t1, t2, t3, t4)]
    rep.record("ted", ted(a, *ts), O.ted_oracle(a, *ts), lambda: {"a": a.to_json(), "times": [str(t1), str(t2), str(t3), str(t4)]})

    cal = _calibration(rng, a)
    x, y = cal.at_value(_frac(rng, -6, 6)), cal.at_value(_frac(rng, -6, 6))
    rep.record("plus", plus(cal, x, y), O.plus_oracle(cal, x, y), lambda: {"cal": cal.to_json()})
    rep.record("times", times(cal, x, y), O.times_oracle(cal, x, y), lambda: {"cal": cal.to_json()})

    l1, l2, l3, l4 = _locations(rng, a, 4)
    if hit:
        k = _frac(rng, -2, 2)
        p, q = _lab_offset(l1), _lab_offset(l2)
        off = tuple(pi + k * (qi - pi) for pi, qi in zip(p, q))
        if off not in (p, q):
            l3 = at_rest(a, off)
    rep.record("col", col(l1, l2, l3), O.col_oracle(l1, l2, l3), lambda: {"a": a.to_json()})

    m4 = l4
    if hit:
        k = _frac(rng, 1, 2)
        p, q, r = _lab_offset(l1), _lab_offset(l2), _lab_offset(l3)
        m4 = at_rest(a, tuple(ri + k * (qi - pi) for pi, qi, ri in zip(p, q, r)))
    rep.record("pa", pa(l1, l2, l3, m4), O.pa_oracle(l1, l2, l3, m4), lambda: {"a": a.to_json()})

    rep.record("dd", dd(cal, l1, l2), O.dd_oracle(cal, l1, l2), lambda: {"a": a.to_json()})

    c = l3
    if hit:
        u = l2.offset() - l1.offset()
        w = rest_offset(V, Event.of(0, *(_frac(rng, -3, 3) for _ in range(3)), backend=backend))
        w = w - u.scale(w.mdot(u) / u.mdot(u))
        if not w.is_zero():
            c = Location(l1.place.translated(w), a)
    rep.record("ort", ort(l1, l2, c), O.ort_oracle(l1, l2, c), lambda: {"a": a.to_json()})

    fr = frame_from_velocity(random_velocity(rng), o=random_event(rng, backend, span=3.0),
                             unit=_frac(rng, 1, 3) + Fraction(1, 2), backend=backend)
    e = random_event(rng, backend)
    got, want = cord_values(fr, e), poincare_to_frame(fr, e)
    rep.record("cord", all(g == w for g, w in zip(got, want)), True,
               lambda: {"frame": fr.to_json(), "event": e.to_json()})

    p1 = random_event(rng, backend)
    p2 = p1 + _timelike_step(rng, backend)
    if rng.random() < 0.5:
        p1, p2 = p2, p1
    o = cal.o
    rep.record("mu", mu(a, o, p1, p2), O.mu_oracle(a, o, p1, p2), lambda: {"e1": p1.to_json(), "e2": p2.to_json()})

    q1 = random_event(rng, backend)
    d = p2 - p1
    if hit:
        order = [0, 1, 2]
        rng.shuffle(order)
        sp = d.space
        q2 = q1 + Event(d.t, *(sp[j] * rng.choice((1, -1)) for j in order))
    else:
        q2 = q1 + _timelike_step(rng, backend).scale(rng.choice((1, -1)))
    rep.record("med", med(p1, p2, q1, q2), O.med_oracle(p1, p2, q1, q2),
               lambda: {"pairs": [p1.to_json(), p2.to_json(), q1.to_json(), q2.to_json()]})

    dst = _calibration(rng, random_particle(rng, backend))
    rep.record("iso", iso(cal, dst, x), O.iso_oracle(cal, dst, x),
               lambda: {"src": cal.to_json(), "dst": dst.to_json()})


def oracle_sweep(samples: int = 200, seed: int = 0, backend: Backend = APPROX) -> SweepReport:
    """Each operation on ``samples`` seeded instances, compared with its oracle."""
    rng = random.Random(f"oracle-sweep:{seed}")
    rep = SweepReport(samples, seed, backend.name)
    for i in range(samples):
        _instance(rng, backend, i, rep)
    return rep


@dataclass
class IndependenceReport:
    quadruples: int
    choices: int
    seed: int
    equal_pairs: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {"quadruples": self.quadruples, "choices": self.choices, "seed": self.seed,
                "equal_pairs": self.equal_pairs, "disagreements": self.disagreements[:20], "ok": self.ok}


def med_independence(quadruples: int = 1000, choices: int = 20, seed: int = 0,
                     backend: Backend = APPROX) -> IndependenceReport:
    """Med gives one truth value, equal to the oracle's, for every internal (a, o)."""
    rng = random.Random(f"med-independence:{seed}")
    rep = IndependenceReport(quadruples, choices, seed)
    for _ in range(quadruples):
        p1 = random_event(rng, backend)
        p2 = p1 + _timelike_step(rng, backend)
        q1 = random_event(rng, backend)
        if rng.random() < 0.5:
            d = p2 - p1
            sp = list(d.space)
            rng.shuffle(sp)
            q2 = q1 + Event(d.t, *sp)
        else:
            q2 = q1 + _timelike_step(rng, backend)
        want = O.med_oracle(p1, p2, q1, q2)
        rep.equal_pairs += want
        seen = set()
        for _ in range(choices):
            a = random_particle(rng, backend)
            seen.add(med(p1, p2, q1, q2, a, a.at(_frac(rng, -3, 3))))
        if seen != {want}:
            rep.disagreements.append({"pairs": [e.to_json() for e in (p1, p2, q1, q2)],
                                      "oracle": want, "seen": sorted(seen)})
    return rep

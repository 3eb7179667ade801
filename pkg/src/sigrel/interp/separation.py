"""Why the time unit matters: dilations versus unit-calibrated Poincaré maps.

A dilation e ↦ 2e maps lightlike segments to lightlike segments and straight
timelike lines to straight timelike lines, so it is an automorphism of the
signalling model.  It doubles Minkowski distances, so it cannot preserve Tu.
Poincaré maps (boosts, rotations, translations) preserve Tu as well.  On the
reference-frame side the same phenomenon shows up as AxSym: it holds once all
clocks tick in the Minkowski unit and fails otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..minkowski import Event
from ..scalar import APPROX, EXACT, Backend, Scalar
from ..sigmodel import (
    PYTHAGOREAN_DIRECTIONS, PYTHAGOREAN_SPEEDS, Particle, Signal, mk_particle, particle_through, random_event, random_particle,
    random_signal, random_unit_velocity, random_velocity, receives, transmits, tu_holds,
)
from ..specrel import (
    Body, SpecRelModel, axsym_report, random_frame, simultaneous_pair, sym_distances,
)

SCHEMA = "sigrel.separation/1"


@dataclass(frozen=True)
class Affine4:
    """The map e ↦ L e + c on spacetime, with L a 4×4 rational matrix (row-major, t first)."""

    name: str
    matrix: tuple[tuple[Fraction, ...], ...]
    shift: tuple[Fraction, ...] = (Fraction(0),) * 4

    def event(self, e: Event) -> Event:
        b = e.backend
        comps = list(e)
        out = []
        for row, c in zip(self.matrix, self.shift):
            acc = Scalar.of(c, b)
            for k, x in zip(row, comps):
                if k:
                    acc = acc + x * Scalar.of(k, b)
            out.append(acc)
        return Event(*out)

    def particle(self, p: Particle) -> Particle:
        return particle_through(self.event(p.at(0)), self.event(p.at(1)))

    def signal(self, s: Signal) -> Signal:
        return Signal(self.event(s.beg), self.event(s.end))

    def then(self, other: "Affine4") -> "Affine4":
        """``other`` applied after ``self``."""
        L = [[sum(other.matrix[i][k] * self.matrix[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
        c = [sum(other.matrix[i][k] * self.shift[k] for k in range(4)) + other.shift[i] for i in range(4)]
        return Affine4(f"{other.name}∘{self.name}", tuple(map(tuple, L)), tuple(c))


def _diag(values: Sequence) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(4)) for i in range(4))


IDENTITY = Affine4("identity", _diag([1, 1, 1, 1]))


def dilation(k) -> Affine4:
    return Affine4(f"dilation×{k}", _diag([k, k, k, k]))


def translation(c: Sequence) -> Affine4:
    return Affine4("translation", IDENTITY.matrix, tuple(Fraction(x) for x in c))


def boost(n: Sequence, speed: Fraction) -> Affine4:
    """Lorentz boost with rational speed along the rational unit direction ``n``.

    Speeds of the form 2k/(1 + k²) keep the Lorentz factor rational.
    """
    n = [Fraction(x) for x in n]
    v = Fraction(speed)
    g = lorentz_factor(v)
    rows = [[g] + [-g * v * x for x in n]]
    for i in range(3):
        rows.append([-g * v * n[i]] + [(1 if i == j else 0) + (g - 1) * n[i] * n[j] for j in range(3)])
    return Affine4(f"boost({v})", tuple(tuple(Fraction(x) for x in r) for r in rows))


def signed_permutation(order: Sequence[int], signs: Sequence[int]) -> Affine4:
    rows = [[Fraction(1), 0, 0, 0]]
    for i in range(3):
        r = [Fraction(0)] * 4
        r[1 + order[i]] = Fraction(signs[i])
        rows.append(r)
    return Affine4("spatial signed permutation", tuple(tuple(Fraction(x) for x in r) for r in rows))


def lorentz_factor(v: Fraction) -> Fraction:
    g2 = 1 / (1 - v * v)
    num, den = math.isqrt(g2.numerator), math.isqrt(g2.denominator)
    if num * num != g2.numerator or den * den != g2.denominator:
        raise ValueError(f"speed {v} has an irrational Lorentz factor")
    return Fraction(num, den)


def random_unit_poincare(rng: random.Random) -> Affine4:
    """A time-orientation preserving Poincaré map built from exact pieces."""
    order = [0, 1, 2]
    rng.shuffle(order)
    p = signed_permutation(order, [rng.choice((1, -1)) for _ in range(3)])
    b = boost(rng.choice(PYTHAGOREAN_DIRECTIONS), rng.choice(PYTHAGOREAN_SPEEDS) * rng.choice((1, -1)))
    t = translation([Fraction(rng.randint(-8, 8), rng.choice((1, 2, 4))) for _ in range(4)])
    return p.then(b).then(t)


def random_unit_pair(rng: random.Random, backend: Backend = EXACT) -> tuple[Event, Event]:
    """Two events at Minkowski distance 1: a unit proper-time step along a rational velocity."""
    e = random_event(rng, backend)
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    v = rng.choice((Fraction(0),) + PYTHAGOREAN_SPEEDS[:3])
    g = lorentz_factor(v)
    step = Event.of(g, *(g * v * x for x in n), backend=backend)
    return e, e + step


@dataclass
class CheckTally:
    """Per-property counts plus the first few witnesses of unexpected outcomes."""

    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def tally(self, kind: str, ok: bool, witness: Callable[[], dict]) -> None:
        c = self.counts.setdefault(kind, {"checked": 0, "failures": 0})
        c["checked"] += 1
        if not ok:
            c["failures"] += 1
            if len(self.failures) < 20:
                self.failures.append({"kind": kind, **witness()})

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class SeparationReport(CheckTally):
    seed: int = 0
    samples: int = 0
    unit_pair: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "anchor": "time unit: dilation is a T/R automorphism that breaks Tu",
                "seed": self.seed, "samples": self.samples, "unit_pair": self.unit_pair,
                "counts": {k: self.counts[k] for k in sorted(self.counts)},
                "failures": self.failures, "ok": self.ok}


def _incident_sample(rng: random.Random, backend: Backend) -> tuple[Particle, Signal]:
    """A signal and a particle that, most of the time, touches one of its ends."""
    s = random_signal(rng, backend, zero_length=rng.random() < 0.2)
    if rng.random() < 0.7:
        a = mk_particle(s.beg if rng.random() < 0.5 else s.end, random_velocity(rng))
    else:
        a = random_particle(rng, backend)
    return a, s


def _preserves_tr(f: Affine4, a: Particle, s: Signal) -> bool:
    fa, fs = f.particle(a), f.signal(s)
    return transmits(a, s) == transmits(fa, fs) and receives(a, s) == receives(fa, fs)


def tu_separation(seed: int = 0, samples: int = 500, backend: Backend = EXACT) -> SeparationReport:
    """Dilation ×2 preserves T and R but not Tu; unit Poincaré maps preserve Tu; identity preserves all."""
    rng = random.Random(f"tu-separation:{seed}")
    rep = SeparationReport(seed=seed, samples=samples)
    d2 = dilation(2)
    o, u = Event.of(0, backend=backend), Event.of(1, backend=backend)
    before, after = tu_holds(o, u), tu_holds(d2.event(o), d2.event(u))
    rep.unit_pair = {"pair": [o.to_json(), u.to_json()], "tu_before": before, "tu_after_dilation": after}
    rep.tally("dilation breaks Tu on the unit pair", before and not after, lambda: dict(rep.unit_pair))

    for _ in range(samples):
        a, s = _incident_sample(rng, backend)
        rep.tally("dilation preserves T and R", _preserves_tr(d2, a, s),
                  lambda: {"particle": a.to_json(), "signal": s.to_json()})

        e1, e2 = random_unit_pair(rng, backend)
        rep.tally("dilation breaks Tu on unit pairs", tu_holds(e1, e2) and not tu_holds(d2.event(e1), d2.event(e2)),
                  lambda: {"pair": [e1.to_json(), e2.to_json()]})

        f = random_unit_poincare(rng)
        g1, g2 = (e1, e2) if rng.random() < 0.5 else (random_event(rng, backend), random_event(rng, backend))
        rep.tally("unit Poincaré maps preserve Tu", tu_holds(g1, g2) == tu_holds(f.event(g1), f.event(g2)),
                  lambda: {"map": f.name, "pair": [g1.to_json(), g2.to_json()]})
        rep.tally("unit Poincaré maps preserve T and R", _preserves_tr(f, a, s),
                  lambda: {"map": f.name, "particle": a.to_json(), "signal": s.to_json()})

        same = _preserves_tr(IDENTITY, a, s) and tu_holds(e1, e2) == tu_holds(IDENTITY.event(e1), IDENTITY.event(e2))
        rep.tally("identity preserves everything", same, lambda: {"particle": a.to_json(), "signal": s.to_json()})
    return rep


# AxSym versus Tu on the reference-frame side


@dataclass
class AxSymBridgeReport(CheckTally):
    seed: int = 0
    samples: int = 0
    cases: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "anchor": "AxSym fixes the time unit, matching the Tu expansion",
                "seed": self.seed, "samples": self.samples, "cases": self.cases,
                "counts": {k: self.counts[k] for k in sorted(self.counts)},
                "failures": self.failures, "ok": self.ok}


def axsym_over(observers: Sequence[Body], rng: random.Random, backend: Backend, samples: int) -> dict:
    """AxSym checked on event pairs simultaneous for sampled pairs of the given observers."""
    passes, witness = 0, None
    for _ in range(samples):
        m, k = rng.choice(observers), rng.choice(observers)
        e1, e2 = simultaneous_pair(m, k, rng, backend)
        d_m, d_k = sym_distances(m, k, e1, e2)
        if d_m == d_k:
            passes += 1
        elif witness is None:
            witness = {"m": m.to_json(), "k": k.to_json(), "e1": e1.to_json(), "e2": e2.to_json(),
                       "dist2_m": d_m.to_json(), "dist2_k": d_k.to_json()}
    return {"checked": samples, "passes": passes, "ok": witness is None, "witness": witness}


def axsym_bridge_check(samples: int = 100, seed: int = 0, backend: Backend = APPROX) -> AxSymBridgeReport:
    """AxSym passes on unit-calibrated observers and fails on uncalibrated ones."""
    rng = random.Random(f"axsym-bridge:{seed}")
    rep = AxSymBridgeReport(seed=seed, samples=samples)

    # every observer of the expanded model has its clock unit at Minkowski distance 1
    calibrated = SpecRelModel(backend, tu=True)
    for _ in range(samples):
        f = calibrated.observer(rng).frame
        rep.tally("calibrated observers satisfy Tu(o, u)", tu_holds(f.o, f.u), lambda: {"frame": f.to_json()})
    cal = axsym_report(calibrated, samples, seed)
    rep.cases["calibrated"] = cal.to_json()
    rep.tally("AxSym holds for unit-calibrated observers", cal.ok, lambda: {"failure": cal.failures[0]})

    free = axsym_report(SpecRelModel(backend), samples, seed)
    rep.cases["uncalibrated"] = {**free.to_json(), "failures": free.failures[:1]}
    rep.tally("AxSym fails for uncalibrated observers", not free.ok, lambda: {"passes": free.passes})

    one = Body.observer(random_frame(rng, backend, unit=1, velocity=random_unit_velocity(rng)))
    two = Body.observer(random_frame(rng, backend, unit=2, velocity=random_unit_velocity(rng)))
    e1, e2 = simultaneous_pair(one, two, rng, backend)
    d1, d2 = sym_distances(one, two, e1, e2)
    rep.cases["unit 1 versus unit 2"] = {"e1": e1.to_json(), "e2": e2.to_json(),
                                         "dist2_unit1": d1.to_json(), "dist2_unit2": d2.to_json()}
    rep.tally("clock units 1 and 2 give an AxSym witness", d1 == d2 * 4, lambda: rep.cases["unit 1 versus unit 2"])

    single = axsym_over([Body.observer(random_frame(rng, backend))], rng, backend, samples)
    rep.cases["single observer"] = single
    rep.tally("a single observer passes vacuously", single["ok"], lambda: {"witness": single["witness"]})
    return rep

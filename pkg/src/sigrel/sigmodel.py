"""The standard signalling model M(F): particles, signals, and T / R / Tu."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FeatureDisabled, SuperluminalError
from .minkowski import Event, interval2, is_null
from .scalar import APPROX, EXACT, Backend, Scalar, backend_named


@dataclass(frozen=True)
class Particle:
    """A timelike straight line, stored as (point at t = 0, 3-velocity)."""

    base: Event
    velocity: tuple[Scalar, Scalar, Scalar]

    @property
    def backend(self) -> Backend:
        return self.base.backend

    @property
    def direction(self) -> Event:
        one = Scalar.of(1, self.backend)
        return Event(one, *self.velocity)

    def at(self, t) -> Event:
        """The event of this worldline at coordinate time ``t``."""
        t = Scalar.of(t, self.backend)
        vx, vy, vz = self.velocity
        b = self.base
        return Event(t, b.x + vx * t, b.y + vy * t, b.z + vz * t)

    def contains(self, e: Event) -> bool:
        vx, vy, vz = self.velocity
        b = self.base
        t = e.t
        return e.x == b.x + vx * t and e.y == b.y + vy * t and e.z == b.z + vz * t

    def translated(self, d: Event) -> "Particle":
        return mk_particle(self.base + d, self.velocity)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "velocity": [v.to_json() for v in self.velocity]}

    @classmethod
    def from_json(cls, data: dict, backend: Backend) -> "Particle":
        return mk_particle(Event.from_json(data["base"], backend), [Scalar.of(v, backend) for v in data["velocity"]])


def mk_particle(p: Event, v: Sequence) -> Particle:
    """Canonical particle through ``p`` with 3-velocity ``v``."""
    b = p.backend
    vx, vy, vz = (Scalar.of(c, b) for c in v)
    if vx * vx + vy * vy + vz * vz >= 1:
        raise SuperluminalError(f"speed^2 = {vx * vx + vy * vy + vz * vz} is not below 1")
    t = p.t
    base = Event(t * 0, p.x - vx * t, p.y - vy * t, p.z - vz * t)
    return Particle(base, (vx, vy, vz))


def particle_through(e1: Event, e2: Event) -> Particle:
    """The particle participating in two distinct timelike-separated events."""
    d = e2 - e1
    if d.t.is_zero():
        raise SuperluminalError("events are simultaneous in the base frame")
    return mk_particle(e1, (d.x / d.t, d.y / d.t, d.z / d.t))


def time_axis(backend: Backend = EXACT) -> Particle:
    return mk_particle(Event.of(0, backend=backend), (0, 0, 0))


@dataclass(frozen=True)
class Signal:
    """A future-directed lightlike segment from ``beg`` to ``end`` (possibly of length zero)."""

    beg: Event
    end: Event

    def __post_init__(self):
        if not is_null(self.end - self.beg):
            raise ValueError("signal endpoints are not lightlike separated")
        if (self.end.t - self.beg.t).sign() < 0:
            raise ValueError("signal is past-directed")

    @property
    def backend(self) -> Backend:
        return self.beg.backend

    def is_event(self) -> bool:
        return self.beg == self.end

    def to_json(self) -> dict:
        return {"beg": self.beg.to_json(), "end": self.end.to_json()}

    @classmethod
    def from_json(cls, data: dict, backend: Backend) -> "Signal":
        return cls(Event.from_json(data["beg"], backend), Event.from_json(data["end"], backend))


def event_signal(e: Event) -> Signal:
    return Signal(e, e)


def transmits(a: Particle, s: Signal) -> bool:
    return a.contains(s.beg)


def receives(a: Particle, s: Signal) -> bool:
    return a.contains(s.end)


def ev(s: Signal) -> bool:
    """Semantic test for events: zero-length signals."""
    return s.beg == s.end


def ev_quantified(s: Signal, particles: Iterable[Particle]) -> bool:
    """The first-order definition: every particle transmitting ``s`` also receives it."""
    return all(receives(a, s) for a in particles if transmits(a, s))


@dataclass
class Scenario:
    """A finite sub-model of M(F) (or of M(F)+ when ``tu`` is set)."""

    particles: list[Particle] = field(default_factory=list)
    signals: list[Signal] = field(default_factory=list)
    backend: Backend = EXACT
    tu: bool = False

    def to_json(self) -> dict:
        return {
            "field": self.backend.name,
            "tu": self.tu,
            "particles": [p.to_json() for p in self.particles],
            "signals": [s.to_json() for s in self.signals],
        }

    @classmethod
    def from_json(cls, data: dict, eps: float | None = None) -> "Scenario":
        backend = backend_named(data["field"], eps) if eps else backend_named(data["field"])
        return cls(
            particles=[Particle.from_json(p, backend) for p in data["particles"]],
            signals=[Signal.from_json(s, backend) for s in data["signals"]],
            backend=backend,
            tu=bool(data.get("tu", False)),
        )

    def events(self) -> list[Signal]:
        return [s for s in self.signals if s.is_event()]

    def tu_holds(self, e1: Event, e2: Event) -> bool:
        if not self.tu:
            raise FeatureDisabled("Tu is only interpreted in the expanded model M(F)+")
        return tu_holds(e1, e2)


def tu_holds(e1: Event, e2: Event) -> bool:
    """Time-unit relation of M(F)+: Minkowski distance exactly 1."""
    return interval2(e1, e2) == 1


# deterministic generators

_DENOMS = (1, 2, 3, 4, 5, 6, 8, 10)
# rational unit vectors keep light-cone intersections rational on the exact backend
PYTHAGOREAN_DIRECTIONS = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (Fraction(3, 5), Fraction(4, 5), 0), (Fraction(4, 5), 0, Fraction(3, 5)),
    (0, Fraction(3, 5), Fraction(4, 5)), (Fraction(1, 3), Fraction(2, 3), Fraction(2, 3)),
    (Fraction(2, 7), Fraction(3, 7), Fraction(6, 7)),
]

# speeds with rational Lorentz factor 1/sqrt(1 - v^2)
PYTHAGOREAN_SPEEDS = (Fraction(3, 5), Fraction(5, 13), Fraction(8, 17), Fraction(4, 5), Fraction(12, 13))


def random_rational(rng: random.Random, lo: float, hi: float) -> Fraction:
    d = rng.choice(_DENOMS)
    n_lo, n_hi = int(lo * d), int(hi * d)
    return Fraction(rng.randint(n_lo, n_hi), d)


def random_velocity(rng: random.Random, max_speed: Fraction = Fraction(4, 5)) -> tuple[Fraction, Fraction, Fraction]:
    while True:
        v = tuple(random_rational(rng, -0.8, 0.8) for _ in range(3))
        if sum(c * c for c in v) < max_speed * max_speed:
            return v  # type: ignore[return-value]


def random_unit_velocity(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    """A velocity whose Lorentz factor is rational, so unit clocks stay exact."""
    v = rng.choice((Fraction(0),) + PYTHAGOREAN_SPEEDS[:3]) * rng.choice((1, -1))
    return tuple(v * c for c in rng.choice(PYTHAGOREAN_DIRECTIONS))  # type: ignore[return-value]


def random_event(rng: random.Random, backend: Backend, span: float = 5.0) -> Event:
    return Event.of(*(random_rational(rng, -span, span) for _ in range(4)), backend=backend)


def random_particle(rng: random.Random, backend: Backend) -> Particle:
    return mk_particle(random_event(rng, backend), random_velocity(rng))


def random_signal(rng: random.Random, backend: Backend, zero_length: bool = False) -> Signal:
    beg = random_event(rng, backend)
    if zero_length:
        return Signal(beg, beg)
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    sx = rng.choice((1, -1))
    length = random_rational(rng, 0.25, 4.0) or Fraction(1)
    d = Event.of(length, *(sx * c * length for c in n), backend=backend)
    return Signal(beg, beg + d)


def scenario_restrict(seed: int, counts: tuple[int, int], backend: Backend = EXACT, tu: bool = False,
                      with_witnesses: bool = False) -> Scenario:
    """Deterministic pseudo-random finite sub-model with ``counts = (particles, signals)``.

    With ``with_witnesses`` every particle's event at t = 0 is added as a
    zero-length signal, and for each pair of particles a signal from the first
    one's t = 0 event to the second particle.
    """
    rng = random.Random(seed)
    n_par, n_sig = counts
    particles = [random_particle(rng, backend) for _ in range(n_par)]
    signals = []
    for i in range(n_sig):
        signals.append(random_signal(rng, backend, zero_length=(i % 3 == 2)))
    if with_witnesses:
        from .signalling.radar import light_hit

        for p in particles:
            signals.append(event_signal(p.at(0)))
        for p in particles:
            for q in particles:
                if p is q:
                    continue
                e = p.at(0)
                try:
                    signals.append(Signal(e, light_hit(e, q)))
                except ArithmeticError:
                    continue
    return Scenario(particles=particles, signals=signals, backend=backend, tu=tu)


def coordinate_fixture(backend: Backend = EXACT) -> Scenario:
    """Events whose spatial parts have rational length, so rest-frame radar stays exact."""
    pts = [(0, 0, 0, 0), (1, 3, 4, 0), (2, 1, 2, 2), (-1, 2, 3, 6), (5, 3, 0, 0),
           (Fraction(3, 2), 0, Fraction(1, 2), 0), (0, -2, -1, 2), (4, 0, -3, -4),
           (Fraction(1, 3), Fraction(2, 3), Fraction(-2, 3), Fraction(1, 3))]
    return Scenario(signals=[event_signal(Event.of(*p, backend=backend)) for p in pts], backend=backend)


def default_backend(exact: bool) -> Backend:
    return EXACT if exact else APPROX

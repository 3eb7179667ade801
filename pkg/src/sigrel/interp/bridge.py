"""Signalling structure read off a reference-frame model, and the round trips.

Particles are observers (equal when their worldlines coincide), signals are
triples (begin observer, photon, end observer).  Meeting is decided through
``W``: a candidate common event is found geometrically, then each body is
checked to be present at that event's coordinate point of the witnessing
observer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..minkowski import Event, Frame
from ..scalar import APPROX, Backend, Scalar
from ..sigmodel import (
    PYTHAGOREAN_DIRECTIONS, Particle, Signal, mk_particle, particle_through, random_event, random_particle,
    random_velocity, receives, transmits,
)
from ..specrel import (
    Body, Quantity, SpecRelModel, body_eq, body_eq_sampled, coords_of, quantities, quantity_eq, random_calibration,
    on_worldline, random_frame, w_holds,
)
from ..signalling import Calibration

SCHEMA = "sigrel.roundtrip/1"


# worldlines as lab-time lines: base at t = 0 plus t * (1, v), |v| <= 1


def _lab_line(b: Body) -> tuple[Event, Event]:
    if b.is_observer():
        a = b.frame.a  # type: ignore[union-attr]
        return a.base, a.direction
    s = b.signal
    d = s.end - s.beg  # type: ignore[union-attr]
    d = d.scale(Scalar.of(1, d.backend) / d.t)
    base = s.beg - d.scale(s.beg.t)  # type: ignore[union-attr]
    return base, d


def _lines_meet(l1: tuple[Event, Event], l2: tuple[Event, Event]) -> Event | str | None:
    """Common event of two lab-time lines; "same" if they coincide."""
    (b1, d1), (b2, d2) = l1, l2
    if d1 == d2:
        return "same" if b1 == b2 else None
    dv = [p - q for p, q in zip(d1.space, d2.space)]
    db = [q - p for p, q in zip(b1.space, b2.space)]
    k = max(range(3), key=lambda i: abs(float(dv[i].value)))
    t = db[k] / dv[k]
    e = b1 + d1.scale(t)
    return e if e == b2 + d2.scale(t) else None


def common_event(bodies: Sequence[Body]) -> Event | None:
    """An event on every worldline, if there is one."""
    lines = [_lab_line(b) for b in bodies]
    point: Event | None = None
    base = lines[0]
    for ln in lines[1:]:
        m = _lines_meet(base, ln)
        if m is None:
            return None
        if m == "same":
            continue
        if point is None:
            point = m  # type: ignore[assignment]
        elif not point == m:
            return None
    if point is None:
        b, d = base
        point = b
    return point


@dataclass
class ParticleView:
    body: Body


@dataclass
class SignalView:
    begin: Body
    photon: Body
    end: Body


@dataclass
class SignallingView:
    """Tr(m): the signalling structure defined inside a reference-frame model."""

    model: SpecRelModel
    witness: Body | None = None

    def Meet(self, b: Body, p: Body, a: Body) -> Quantity | None:
        """The time t of b's coordinates at which p and a meet (Meet(b, p, a, t) for some x, y, z)."""
        c = common_event([p, a])
        if c is None or not b.is_observer():
            return None
        coords = coords_of(b, c)
        # cord is injective, so the coordinate point names exactly the event c
        return coords[0] if on_worldline(p, c) and on_worldline(a, c) else None

    def meet(self, a: Body, p: Body, e: Body) -> bool:
        """a, p and e meet in one event: Meet(b, a, p, t) and Meet(b, a, e, t) for a witnessing b."""
        c = common_event([a, p, e])
        if c is None:
            return False
        b = self._observer(a, p, e)
        coords_of(b, c)
        return all(on_worldline(x, c) for x in (a, p, e))

    def _observer(self, *bodies: Body) -> Body:
        for x in (self.witness, *bodies):
            if x is not None and x.is_observer():
                return x
        raise ValueError("no observer available to witness a meeting")

    def is_particle(self, a: ParticleView) -> bool:
        return a.body.is_observer()

    def is_signal(self, s: SignalView) -> bool:
        if not (s.photon.is_photon() and s.begin.is_observer() and s.end.is_observer()):
            return False
        t1 = self.Meet(s.begin, s.photon, s.begin)
        t2 = self.Meet(s.begin, s.photon, s.end)
        return t1 is not None and t2 is not None and t1.canonical <= t2.canonical

    def particle_eq(self, a: ParticleView, a2: ParticleView) -> bool:
        """W(a, a', t, x, y, z) iff x = y = z = 0, sampled at two axis points and one off-axis point."""
        m, k = a.body, a2.body
        on_axis = all(w_holds(m, k, quantities(m, [t, 0, 0, 0])) for t in (0, 1))
        off_axis = w_holds(m, k, quantities(m, [0, 1, 0, 0]))
        return on_axis and not off_axis

    def signal_eq(self, s: SignalView, s2: SignalView) -> bool:
        if not (self.meet(s.begin, s2.begin, s.photon) and self.meet(s.end, s2.end, s.photon)):
            return False
        return self.meet(s.begin, s.photon, s.end) or body_eq(s.photon, s2.photon)

    def transmits(self, a: ParticleView, s: SignalView) -> bool:
        return self.meet(a.body, s.begin, s.photon)

    def receives(self, a: ParticleView, s: SignalView) -> bool:
        return self.meet(a.body, s.end, s.photon)

    # the canonical isomorphism back to the signalling model

    def worldline(self, a: ParticleView) -> Particle:
        from ..specrel import locate

        m = a.body
        e0 = locate(m, quantities(m, [0, 0, 0, 0]))
        e1 = locate(m, quantities(m, [1, 0, 0, 0]))
        return particle_through(e0, e1)

    def endpoints(self, s: SignalView) -> tuple[Event, Event]:
        c1 = common_event([s.begin, s.photon])
        c2 = common_event([s.end, s.photon])
        assert c1 is not None and c2 is not None
        return c1, c2


def semantic_Tr(m: SpecRelModel, witness: Body | None = None) -> SignallingView:
    return SignallingView(m, witness)


# tr side: the reference-frame objects that represent signalling objects


def observer_on(p: Particle, rng: random.Random, backend: Backend) -> Body:
    """A random observer (clock zero, unit and axes) whose worldline is ``p``."""
    o = p.at(Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))))
    return Body.observer(random_frame(rng, backend, velocity=p.velocity, origin=o))


def observer_through(e: Event, rng: random.Random, backend: Backend) -> Body:
    return observer_on(mk_particle(e, random_velocity(rng)), rng, backend)


def photon_through(e: Event, rng: random.Random, backend: Backend) -> Body:
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    d = Event.of(1, *n, backend=backend).scale(Fraction(rng.randint(1, 4), 2))
    return Body.photon(Signal(e - d.scale(Fraction(rng.randint(0, 2), 2)), e + d))


def represent_signal(s: Signal, rng: random.Random, backend: Backend) -> SignalView:
    """Observers through the two ends, and some photon on the signal's line."""
    if s.is_event():
        photon = photon_through(s.beg, rng, backend)
    else:
        d = s.end - s.beg
        lo = Fraction(rng.randint(0, 3), 2)
        hi = Fraction(rng.randint(0, 3), 2)
        photon = Body.photon(Signal(s.beg - d.scale(lo), s.end + d.scale(hi)))
    return SignalView(observer_through(s.beg, rng, backend), photon, observer_through(s.end, rng, backend))


def random_lab_signal(rng: random.Random, backend: Backend, zero_length: bool) -> Signal:
    e = random_event(rng, backend, span=4.0)
    if zero_length:
        return Signal(e, e)
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    return Signal(e, e + Event.of(1, *n, backend=backend).scale(Fraction(rng.randint(1, 8), 2)))


# round trips


@dataclass
class RoundTripReport:
    seed: int
    samples: int
    frame_samples: int
    backend: str
    counts: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def tally(self, kind: str, ok: bool, witness) -> None:
        c = self.counts.setdefault(kind, {"checked": 0, "mismatches": 0})
        c["checked"] += 1
        if not ok:
            c["mismatches"] += 1
            if len(self.mismatches) < 20:
                self.mismatches.append({"kind": kind, "witness": witness()})

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "anchor": "definitional equivalence: round trips through both interpretations",
                "seed": self.seed, "samples": self.samples, "frame_samples": self.frame_samples, "backend": self.backend,
                "counts": {k: self.counts[k] for k in sorted(self.counts)},
                "mismatches": self.mismatches, "ok": self.ok}


def _same_line(p: Particle, q: Particle) -> bool:
    return p.velocity == q.velocity and p.base == q.base


def _signalling_side(view: SignallingView, rng: random.Random, backend: Backend, rep: RoundTripReport) -> None:
    # particle -> observer class -> particle
    p = random_particle(rng, backend)
    obs = ParticleView(observer_on(p, rng, backend))
    back = view.worldline(obs)
    rep.tally("particle", view.is_particle(obs) and _same_line(p, back),
              lambda: {"particle": p.to_json(), "back": back.to_json()})

    # another representative of the same particle is equal to it; a different particle is not
    other = ParticleView(observer_on(p, rng, backend))
    rep.tally("particle-equality", view.particle_eq(obs, other) and view.particle_eq(other, obs),
              lambda: {"particle": p.to_json()})

    # signal -> (observer, photon, observer) -> endpoints
    s = random_lab_signal(rng, backend, zero_length=rng.random() < 0.25)
    sv = represent_signal(s, rng, backend)
    beg, end = view.endpoints(sv)
    rep.tally("signal", view.is_signal(sv) and beg == s.beg and end == s.end,
              lambda: {"signal": s.to_json(), "back": [beg.to_json(), end.to_json()]})
    sv2 = represent_signal(s, rng, backend)
    rep.tally("signal-equality", view.signal_eq(sv, sv2), lambda: {"signal": s.to_json()})

    # T and R agree with the signalling model
    a = mk_particle(s.beg if rng.random() < 0.5 else s.end, random_velocity(rng)) if rng.random() < 0.7 \
        else random_particle(rng, backend)
    av = ParticleView(observer_on(a, rng, backend))
    t_ok = view.transmits(av, sv) == transmits(a, s)
    r_ok = view.receives(av, sv) == receives(a, s)
    rep.tally("transmit-receive", t_ok and r_ok, lambda: {"particle": a.to_json(), "signal": s.to_json()})


def _frame_side(model: SpecRelModel, view: SignallingView, rng: random.Random, backend: Backend,
                rep: RoundTripReport) -> None:
    # observer -> its parameters as signalling objects -> rebuilt observer
    m = model.observer(rng)
    f = m.frame
    assert f is not None

    def particle_back(p: Particle) -> Particle:
        return view.worldline(ParticleView(observer_on(p, rng, backend)))

    def event_back(e: Event) -> Event:
        return view.endpoints(represent_signal(Signal(e, e), rng, backend))[0]

    rebuilt = Body.observer(Frame(particle_back(f.a), event_back(f.o), event_back(f.u),
                                  *(particle_back(x) for x in f.axes)))
    probes = [random_event(rng, backend, span=3.0) for _ in range(2)]
    rep.tally("observer", rebuilt.is_observer() and body_eq(m, rebuilt) and body_eq_sampled(m, rebuilt, probes),
              lambda: {"observer": m.to_json(), "rebuilt": rebuilt.to_json()})

    # photon -> signal triple -> photon on the same line
    s = random_lab_signal(rng, backend, zero_length=False)
    ph = Body.photon(s)
    beg, end = view.endpoints(SignalView(observer_through(s.beg, rng, backend), ph,
                                         observer_through(s.end, rng, backend)))
    rep.tally("photon", body_eq(ph, Body.photon(Signal(beg, end))), lambda: {"photon": s.to_json()})

    # quantity -> its clock as signalling objects -> the same abstract quantity
    cal = random_calibration(rng, backend)
    q = model.quantity(rng, cal=cal)
    cal2 = Calibration(particle_back(cal.a), event_back(cal.o), event_back(cal.u))
    q2 = Quantity.of(event_back(q.x), cal2)
    rep.tally("quantity", quantity_eq(q, q2) and q.canonical == q2.canonical,
              lambda: {"quantity": q.to_json(), "back": q2.to_json()})


def roundtrip_check(samples: int = 100, seed: int = 0, backend: Backend = APPROX,
                    frame_samples: int | None = None) -> RoundTripReport:
    """Both composites of the two interpretations act as the identity on sampled elements.

    ``samples`` particles and signals go through the signalling-side composite;
    ``frame_samples`` (default: ``samples``) observers, photons and quantities
    go through the frame-side one.
    """
    frame_samples = samples if frame_samples is None else frame_samples
    rng = random.Random(f"roundtrip:{seed}")
    model = SpecRelModel(backend)
    view = semantic_Tr(model)
    rep = RoundTripReport(seed, samples, frame_samples, backend.name)
    for i in range(max(samples, frame_samples)):
        if i < samples:
            _signalling_side(view, rng, backend, rep)
        if i < frame_samples:
            _frame_side(model, view, rng, backend, rep)
    return rep

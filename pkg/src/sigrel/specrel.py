"""The reference-frame model built inside a signalling model.

Quantities are events on some experimenter's clock, identified across clocks
by the field isomorphism.  Bodies are photons (non-event signals, identified
by their lightlike line) and observers (six coordinate-system parameters,
identified by their coordinate map).  ``W`` says which body the coordinate
point (t, x, y, z) of an observer lies on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NonConstructibleExact, UnknownAxiom
from .linalg import nullspace
from .minkowski import Event, Frame, frame_to_event, frame_validate, on_line, rest_offset
from .scalar import EXACT, Backend, Scalar, sqrt
from .sigmodel import (
    PYTHAGOREAN_DIRECTIONS, Signal, mk_particle, particle_through, random_event, random_unit_velocity, random_velocity,
)
from .signalling import Calibration, FieldPoint, cord, iso, plus, times
from .signalling.radar import signal_between

AXIOMS = ("AxPh", "AxEv", "AxSelf", "AxFd", "AxSym",
          "AxThEx", "AxCoord", "AxClock", "AxExtOb", "AxExtPh", "AxNobody", "AxUp")
SPECREL0 = AXIOMS[:4]
SPECREL = AXIOMS[:5]
COMPL = AXIOMS[5:]


# quantities


@dataclass(frozen=True)
class Quantity:
    """An element of the quantity sort: an event x on the clock of (a, o, u)."""

    x: Event
    cal: Calibration
    canonical: Scalar

    @classmethod
    def of(cls, x: Event, cal: Calibration) -> "Quantity":
        return cls(x, cal, FieldPoint(x, cal).value())

    @classmethod
    def from_value(cls, value, cal: Calibration) -> "Quantity":
        fp = cal.at_value(value)
        return cls(fp.carrier, cal, fp.value())

    def q_holds(self) -> bool:
        """Q(q): x on a, and (a, o, u) are field parameters."""
        from .signalling import fp

        return self.cal.a.contains(self.x) and fp(self.cal.a, self.cal.o, self.cal.u)

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "cal": self.cal.to_json(), "value": self.canonical.to_json()}


def _iso(src: Calibration, dst: Calibration, x: Event) -> Event:
    if src == dst:
        return x
    return iso(src, dst, x).carrier


def quantity_eq(q1: Quantity, q2: Quantity, via: str = "iso") -> bool:
    """q1 = q2 iff the isomorphism between their fields carries one onto the other."""
    if via == "canonical":
        return q1.canonical == q2.canonical
    return _iso(q1.cal, q2.cal, q1.x) == q2.x


def rep(q: Quantity, cal: Calibration) -> Event:
    """The carrier of ``q`` in the field of ``cal``."""
    return _iso(q.cal, cal, q.x)


def q_plus(q1: Quantity, q2: Quantity) -> Quantity:
    cal = q1.cal
    return Quantity.of(plus(cal, q1.x, rep(q2, cal)).carrier, cal)


def q_times(q1: Quantity, q2: Quantity) -> Quantity:
    cal = q1.cal
    return Quantity.of(times(cal, q1.x, rep(q2, cal)).carrier, cal)


def q_leq(q1: Quantity, q2: Quantity) -> bool:
    """Order of the quantity field: q1 <= q2 iff q2 - q1 is a later-or-equal event than zero."""
    from .signalling import causal_leq

    return causal_leq(q1.x, rep(q2, q1.cal))


# bodies


@dataclass(frozen=True)
class Body:
    """A photon (payload: a non-event signal) or an observer (payload: a frame)."""

    tag: str
    signal: Signal | None = None
    frame: Frame | None = None

    @classmethod
    def photon(cls, s: Signal) -> "Body":
        return cls("photon", signal=s)

    @classmethod
    def observer(cls, f: Frame) -> "Body":
        return cls("observer", frame=f)

    def is_photon(self) -> bool:
        return self.tag == "photon" and self.signal is not None and not self.signal.is_event()

    def is_observer(self) -> bool:
        return self.tag == "observer" and self.frame is not None and frame_validate(self.frame)

    @property
    def calibration(self) -> Calibration:
        assert self.frame is not None
        return Calibration(self.frame.a, self.frame.o, self.frame.u)

    def to_json(self) -> dict:
        payload = self.signal.to_json() if self.tag == "photon" else self.frame.to_json()  # type: ignore[union-attr]
        return {"tag": self.tag, "payload": payload}


def wl(e: Event, s: Signal) -> bool:
    """Is ``e`` on the lightlike line of the (non-event) signal ``s``?"""
    return on_line(s.beg, s.end - s.beg, e)


def on_worldline(b: Body, e: Event) -> bool:
    if b.is_photon():
        return wl(e, b.signal)  # type: ignore[arg-type]
    if b.is_observer():
        return b.frame.a.contains(e)  # type: ignore[union-attr]
    return False


def locate(m: Body, coords: Sequence[Quantity], verify: bool = True) -> Event:
    """The event at coordinate point ``coords`` of observer ``m``."""
    cal = m.calibration
    carriers = [rep(q, cal) for q in coords]
    values = [FieldPoint(c, cal).value() for c in carriers]
    e = frame_to_event(m.frame, values)  # type: ignore[arg-type]
    if verify:
        got = cord(m.frame, e)  # type: ignore[arg-type]
        if any(g.carrier != c for g, c in zip(got, carriers)):
            raise ArithmeticError("coordinate point did not verify against the coordinate experiment")
    return e


def w_holds(m: Body, b: Body, coords: Sequence[Quantity], verify: bool = True) -> bool:
    """W(m, b, t, x, y, z)."""
    if not m.is_observer():
        return False
    return on_worldline(b, locate(m, coords, verify))


def _same_ray(w1: Event, w2: Event) -> bool:
    # spacelike rest vectors on one ray: proportional with positive factor
    k = w1.mdot(w2) / w2.mdot(w2)
    return k.sign() > 0 and w1 == w2.scale(k)


def body_eq(b1: Body, b2: Body) -> bool:
    """Photons: same lightlike line.  Observers: same coordinate map."""
    if b1.is_photon() and b2.is_photon():
        s1, s2 = b1.signal, b2.signal
        return wl(s2.beg, s1) and wl(s2.end, s1)  # type: ignore[union-attr,arg-type]
    if b1.is_observer() and b2.is_observer():
        f1, f2 = b1.frame, b2.frame
        if not (f1.a == f2.a and f1.o == f2.o and f1.u == f2.u):  # type: ignore[union-attr]
            return False
        V = f1.a.direction  # type: ignore[union-attr]
        return all(
            _same_ray(rest_offset(V, p.base - f1.a.base), rest_offset(V, q.base - f2.a.base))  # type: ignore[union-attr]
            for p, q in zip(f1.axes, f2.axes)  # type: ignore[union-attr]
        )
    return False


def body_eq_sampled(b1: Body, b2: Body, events: Sequence[Event]) -> bool:
    """Observer equality by the definition: equal coordinates at every sampled event."""
    if not (b1.is_observer() and b2.is_observer()):
        return body_eq(b1, b2)
    for e in events:
        c1 = [p.value() for p in cord(b1.frame, e)]  # type: ignore[arg-type]
        c2 = [p.value() for p in cord(b2.frame, e)]  # type: ignore[arg-type]
        if any(x != y for x, y in zip(c1, c2)):
            return False
    return True


# the model and its generators


@dataclass
class SpecRelModel:
    """tr(M(F)) over the standard signalling model with the given backend."""

    backend: Backend = EXACT
    tu: bool = False

    def observer(self, rng: random.Random, unit=None) -> Body:
        # in the expanded model every clock can be set to the Minkowski unit
        if unit is None and self.tu:
            unit = 1
        v = random_unit_velocity(rng) if unit is not None and self.backend.exact else None
        return Body.observer(random_frame(rng, self.backend, unit=unit, velocity=v))

    def quantity(self, rng: random.Random, value=None, cal: Calibration | None = None) -> Quantity:
        if cal is None:
            cal = random_calibration(rng, self.backend)
        if value is None:
            value = _rat(rng, -6, 6)
        return Quantity.from_value(value, cal)


def _rat(rng: random.Random, lo: int, hi: int, dens=(1, 2, 3, 4, 5)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_calibration(rng: random.Random, backend: Backend) -> Calibration:
    a = mk_particle(random_event(rng, backend, span=3.0), random_velocity(rng))
    o = a.at(_rat(rng, -3, 3))
    u = a.at(o.t + _rat(rng, 1, 3) + Fraction(1, 4))
    return Calibration(a, o, u)


def random_frame(rng: random.Random, backend: Backend, unit=None, velocity=None, origin: Event | None = None) -> Frame:
    """Observer parameters with random origin, velocity, clock unit and axis orientation."""
    from .signalling import frame_from_velocity

    v = random_velocity(rng) if velocity is None else velocity
    o = random_event(rng, backend, span=3.0) if origin is None else origin
    if unit is None:
        unit = _rat(rng, 1, 3, dens=(1, 2, 4))
    f = frame_from_velocity(v, o=o, unit=unit, backend=backend)
    order = list(range(3))
    rng.shuffle(order)
    V = f.a.direction
    axes = []
    for i in order:
        w = rest_offset(V, f.axes[i].base - f.a.base)
        axes.append(f.a.translated(w.scale(rng.choice((1, -1)) * _rat(rng, 1, 3, dens=(1, 2)))))
    return Frame(f.a, f.o, f.u, *axes)


def coords_of(m: Body, e: Event) -> list[Quantity]:
    cal = m.calibration
    return [Quantity.of(p.carrier, cal) for p in cord(m.frame, e)]  # type: ignore[arg-type]


def quantities(m: Body, values: Sequence) -> list[Quantity]:
    cal = m.calibration
    return [Quantity.from_value(v, cal) for v in values]


def _values(qs: Sequence[Quantity]) -> list[Scalar]:
    return [q.canonical for q in qs]


def _event_coords(rng: random.Random) -> list[Fraction]:
    return [_rat(rng, -4, 4) for _ in range(4)]


# axiom checks


@dataclass
class AxiomReport:
    axiom: str
    samples: int
    seed: int
    passes: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: Callable[[], dict]) -> None:
        if ok:
            self.passes += 1
        else:
            self.failures.append(witness())

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "samples": self.samples, "passes": self.passes,
                "failures": self.failures, "seed": self.seed}


def _jsonify(xs) -> list:
    return [x.to_json() if hasattr(x, "to_json") else str(x) for x in xs]


def _ax_ph(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Photons are exactly the lines of slope 1 in every observer's coordinates."""
    m = model.observer(rng)
    x = _event_coords(rng)
    if rng.random() < 0.5:
        n = rng.choice(PYTHAGOREAN_DIRECTIONS)
        dt = _rat(rng, -3, 3) or Fraction(1)
        y = [x[0] + dt] + [x[i + 1] + dt * n[i] * rng.choice((1, -1)) for i in range(3)]
    else:
        y = _event_coords(rng)
    qx, qy = quantities(m, x), quantities(m, y)
    vx, vy = _values(qx), _values(qy)
    lhs_coord = (vx[0] - vy[0]) * (vx[0] - vy[0]) == sum(((vx[i] - vy[i]) * (vx[i] - vy[i]) for i in (1, 2, 3)),
                                                          vx[0] * 0)
    e1, e2 = locate(m, qx), locate(m, qy)
    if e1 == e2:
        photon_exists = True
    else:
        s = signal_between(e1, e2) or signal_between(e2, e1)
        photon_exists = s is not None and w_holds(m, Body.photon(s), qx) and w_holds(m, Body.photon(s), qy)
    rep_.record(photon_exists == lhs_coord,
                lambda: {"observer": m.to_json(), "x": [str(v) for v in x], "y": [str(v) for v in y]})


def _bodies_through(model: SpecRelModel, rng: random.Random, e: Event) -> list[Body]:
    b = model.backend
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    photon = Body.photon(Signal(e, e + Event.of(1, *n, backend=b)))
    f = random_frame(rng, b)
    moved = Frame(f.a.translated(e - f.o), e, f.u + (e - f.o), *(p.translated(e - f.o) for p in f.axes))
    stranger = model.observer(rng)
    return [photon, Body.observer(moved), stranger]


def _ax_ev(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Every event one observer sees is seen by every other observer."""
    m, k = model.observer(rng), model.observer(rng)
    x = _event_coords(rng)
    qx = quantities(m, x)
    e = locate(m, qx)
    qy = coords_of(k, e)
    ok = all(w_holds(m, b, qx) == w_holds(k, b, qy) for b in _bodies_through(model, rng, e))
    rep_.record(ok, lambda: {"m": m.to_json(), "k": k.to_json(), "x": [str(v) for v in x]})


def _ax_self(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """An observer sits at the spatial origin of its own coordinates."""
    m = model.observer(rng)
    t = _rat(rng, -4, 4)
    if rng.random() < 0.5:
        x = [t, 0, 0, 0]
    else:
        x = [t] + [_rat(rng, -3, 3) for _ in range(3)]
    expect = all(c == 0 for c in x[1:])
    got = w_holds(m, m, quantities(m, x))
    rep_.record(got == expect, lambda: {"observer": m.to_json(), "x": [str(v) for v in x]})


def _ax_fd(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Field laws, order compatibility and square roots on sampled quantities."""
    cal = random_calibration(rng, model.backend)
    other = random_calibration(rng, model.backend)
    a, b, c = (model.quantity(rng, cal=rng.choice((cal, other))) for _ in range(3))
    zero, one = Quantity.from_value(0, cal), Quantity.from_value(1, cal)
    eq = quantity_eq
    checks = {
        "plus-assoc": eq(q_plus(q_plus(a, b), c), q_plus(a, q_plus(b, c))),
        "plus-comm": eq(q_plus(a, b), q_plus(b, a)),
        "times-comm": eq(q_times(a, b), q_times(b, a)),
        "distrib": eq(q_times(a, q_plus(b, c)), q_plus(q_times(a, b), q_times(a, c))),
        "zero": eq(q_plus(a, zero), a),
        "one": eq(q_times(a, one), a),
        "order": (not q_leq(a, b)) or q_leq(q_plus(a, c), q_plus(b, c)),
    }
    # a positive quantity has a square root
    target = q_times(a, a) if model.backend.exact else model.quantity(rng, value=_rat(rng, 1, 9), cal=cal)
    try:
        r = Quantity.from_value(sqrt(target.canonical), target.cal)
        checks["sqrt"] = eq(q_times(r, r), target)
    except NonConstructibleExact:
        checks["sqrt"] = False
    bad = [k for k, v in checks.items() if not v]
    rep_.record(not bad, lambda: {"laws": bad, "quantities": _jsonify((a, b, c))})


def _common_simultaneous(m: Body, k: Body) -> Event:
    va, vb = m.frame.a.direction, k.frame.a.direction  # type: ignore[union-attr]
    rows = [[va.t, -va.x, -va.y, -va.z], [vb.t, -vb.x, -vb.y, -vb.z]]
    return Event(*nullspace(rows)[0])


def sym_distances(m: Body, k: Body, e1: Event, e2: Event) -> tuple[Scalar, Scalar]:
    """Squared spatial distance of e1, e2 as measured by m and by k."""

    def dist2(obs: Body) -> Scalar:
        c1 = _values(coords_of(obs, e1))
        c2 = _values(coords_of(obs, e2))
        return sum(((c1[i] - c2[i]) * (c1[i] - c2[i]) for i in (1, 2, 3)), c1[0] * 0)

    return dist2(m), dist2(k)


def simultaneous_pair(m: Body, k: Body, rng: random.Random, backend: Backend) -> tuple[Event, Event]:
    """Two distinct events simultaneous for both m and k."""
    e1 = random_event(rng, backend, span=3.0)
    return e1, e1 + _common_simultaneous(m, k).scale(_rat(rng, 1, 3))


def _ax_sym(model: SpecRelModel, rng: random.Random, rep_: AxiomReport, unit=None) -> None:
    """Observers agree on spatial distances of events simultaneous for both."""
    m, k = model.observer(rng, unit=unit), model.observer(rng, unit=unit)
    e1, e2 = simultaneous_pair(m, k, rng, model.backend)
    d_m, d_k = sym_distances(m, k, e1, e2)
    rep_.record(d_m == d_k, lambda: {"m": m.to_json(), "k": k.to_json(), "e1": e1.to_json(), "e2": e2.to_json(),
                                     "dist2_m": d_m.to_json(), "dist2_k": d_k.to_json()})


def _ax_thex(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """From each point, in each direction, with each sub-light velocity there is an observer."""
    m = model.observer(rng)
    x = _event_coords(rng)
    v = random_velocity(rng)
    y = [x[0] + 1] + [x[i + 1] + v[i] for i in range(3)]
    qx, qy = quantities(m, x), quantities(m, y)
    e1, e2 = locate(m, qx), locate(m, qy)
    a = particle_through(e1, e2)
    from .signalling import frame_from_velocity

    k = Body.observer(frame_from_velocity(a.velocity, o=e1, backend=model.backend))
    rep_.record(k.is_observer() and w_holds(m, k, qx) and w_holds(m, k, qy),
                lambda: {"m": m.to_json(), "x": [str(c) for c in x], "v": [str(c) for c in v]})


def _rotate(rng: random.Random) -> tuple[list[int], list[int]]:
    order = [0, 1, 2]
    rng.shuffle(order)
    return order, [rng.choice((1, -1)) for _ in range(3)]


def _ax_coord(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Each observer can re-coordinatize by any space isometry (sampled: signed axis permutations
    composed with translations)."""
    m = model.observer(rng)
    f = m.frame
    order, signs = _rotate(rng)
    shift = [_rat(rng, -2, 2) for _ in range(3)]
    o2 = frame_to_event(f, [0] + shift)  # type: ignore[arg-type]
    d = o2 - f.o  # type: ignore[union-attr]
    axes = [f.axes[i] for i in order]  # type: ignore[union-attr]
    V = f.a.direction  # type: ignore[union-attr]
    new_axes = [f.a.translated(d + rest_offset(V, p.base - f.a.base).scale(s)) for p, s in zip(axes, signs)]  # type: ignore[union-attr]
    k = Body.observer(Frame(f.a.translated(d), o2, f.u + d, *new_axes))  # type: ignore[union-attr]
    e = random_event(rng, model.backend, span=3.0)
    cm, ck = _values(coords_of(m, e)), _values(coords_of(k, e))
    expect = [cm[0]] + [(cm[1 + order[i]] - shift[order[i]]) * signs[i] for i in range(3)]
    ok = k.is_observer() and all(p == q for p, q in zip(ck, expect))
    rep_.record(ok, lambda: {"m": m.to_json(), "order": order, "signs": signs, "shift": [str(s) for s in shift]})


def _ax_clock(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Each observer can set the unit of its clock arbitrarily."""
    m = model.observer(rng)
    f = m.frame
    lam = _rat(rng, 1, 4, dens=(1, 2, 3))
    k = Body.observer(Frame(f.a, f.o, f.o + (f.u - f.o).scale(lam), *f.axes))  # type: ignore[union-attr]
    e = random_event(rng, model.backend, span=3.0)
    cm, ck = _values(coords_of(m, e)), _values(coords_of(k, e))
    rep_.record(all(p == q * lam for p, q in zip(cm, ck)), lambda: {"m": m.to_json(), "unit": str(lam)})


def _ax_extob(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Observers with the same coordinate map are equal."""
    m = model.observer(rng)
    f = m.frame
    if rng.random() < 0.5:
        # same rays, axis places at other distances: same coordinate map
        V = f.a.direction  # type: ignore[union-attr]
        axes = [f.a.translated(rest_offset(V, p.base - f.a.base).scale(_rat(rng, 1, 3, dens=(1, 2))))  # type: ignore[union-attr]
                for p in f.axes]  # type: ignore[union-attr]
        k = Body.observer(Frame(f.a, f.o, f.u, *axes))  # type: ignore[union-attr]
    else:
        k = model.observer(rng)
    events = [random_event(rng, model.backend, span=3.0) for _ in range(5)]
    same_map = body_eq_sampled(m, k, events)
    rep_.record((not same_map) or body_eq(m, k), lambda: {"m": m.to_json(), "k": k.to_json()})


def _ax_extph(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """At most one photon through two distinct events."""
    b = model.backend
    e1 = random_event(rng, b, span=3.0)
    n = rng.choice(PYTHAGOREAN_DIRECTIONS)
    step = Event.of(1, *n, backend=b)
    e2 = e1 + step.scale(_rat(rng, 1, 3))
    p1 = Body.photon(Signal(e1 - step.scale(_rat(rng, 0, 2)), e2))
    p2 = Body.photon(Signal(e1, e2 + step.scale(_rat(rng, 0, 2))))
    ok = wl(e1, p1.signal) and wl(e2, p2.signal) and body_eq(p1, p2)  # type: ignore[arg-type]
    rep_.record(ok, lambda: {"e1": e1.to_json(), "e2": e2.to_json()})


def _ax_nobody(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Every body is a photon or an observer."""
    b = model.backend
    if rng.random() < 0.5:
        e = random_event(rng, b)
        n = rng.choice(PYTHAGOREAN_DIRECTIONS)
        body = Body.photon(Signal(e, e + Event.of(1, *n, backend=b)))
    else:
        body = model.observer(rng)
    rep_.record(body.is_photon() or body.is_observer(), lambda: {"body": body.to_json()})


def _ax_up(model: SpecRelModel, rng: random.Random, rep_: AxiomReport) -> None:
    """Each observer's own time coordinate increases towards the future along its worldline."""
    m = model.observer(rng)
    a = m.frame.a  # type: ignore[union-attr]
    s1 = _rat(rng, -4, 4)
    s2 = s1 + _rat(rng, 1, 4)
    t1 = coords_of(m, a.at(s1))[0].canonical
    t2 = coords_of(m, a.at(s2))[0].canonical
    rep_.record(t1 < t2, lambda: {"m": m.to_json(), "s1": str(s1), "s2": str(s2)})


_CHECKS = {
    "AxPh": _ax_ph, "AxEv": _ax_ev, "AxSelf": _ax_self, "AxFd": _ax_fd, "AxSym": _ax_sym,
    "AxThEx": _ax_thex, "AxCoord": _ax_coord, "AxClock": _ax_clock, "AxExtOb": _ax_extob,
    "AxExtPh": _ax_extph, "AxNobody": _ax_nobody, "AxUp": _ax_up,
}


def check_axiom(model: SpecRelModel, axiom: str, samples: int = 50, seed: int = 0,
                max_failures: int = 5) -> AxiomReport:
    """Sampled semantic check of one axiom over the interpreted model."""
    if axiom not in _CHECKS:
        raise UnknownAxiom(axiom)
    rng = random.Random(f"{axiom}:{seed}")
    report = AxiomReport(axiom, samples, seed)
    for _ in range(samples):
        _CHECKS[axiom](model, rng, report)
        if len(report.failures) >= max_failures:
            report.failures = report.failures[:max_failures]
    return report


def axsym_report(model: SpecRelModel, samples: int, seed: int, unit=None) -> AxiomReport:
    """AxSym restricted to observers with a fixed clock unit (``unit``) or free units (None)."""
    rng = random.Random(f"AxSym-unit:{seed}")
    report = AxiomReport("AxSym", samples, seed)
    for _ in range(samples):
        _ax_sym(model, rng, report, unit=unit)
    return report


def worldline_spot_check(m: Body, k: Body, samples: Sequence) -> bool:
    """k's worldline, read in m's coordinates, is a straight line of slope below 1."""
    a = k.frame.a  # type: ignore[union-attr]
    pts = [_values(coords_of(m, a.at(s))) for s in samples]
    p0, p1 = pts[0], pts[1]
    d = [y - x for x, y in zip(p0, p1)]
    if not (d[1] * d[1] + d[2] * d[2] + d[3] * d[3] < d[0] * d[0]):
        return False
    for p in pts[2:]:
        r = (p[0] - p0[0]) / d[0]
        if any(p[i] - p0[i] != d[i] * r for i in range(4)):
            return False
    return True

"""Time along one experimenter's worldline, built from signals only.

Simultaneity, the earlier-than order, time-equidistance and the field
operations on ``Time_a``.  Candidates for the auxiliary events are computed
from the model's geometry; every candidate is then checked through the
defining signal configuration, so a wrong candidate can only make an
operation fail loudly, never silently succeed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CalibrationFailure, NotOnWorldline
from ..minkowski import Event, midpoint
from ..scalar import Scalar
from ..sigmodel import Particle, mk_particle, particle_through
from .radar import Trace, _add, connected, light_hit, line_meet, signal_between

_AXES = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))


def motionless(a: Particle, b: Particle) -> bool:
    """Oracle for a ∥ b: parallel worldlines."""
    return a.velocity == b.velocity


@dataclass(frozen=True)
class Calibration:
    """Parameters (a, o, u) of the field F(a, o, u); ``u`` may be omitted when only + is needed."""

    a: Particle
    o: Event
    u: Event | None = None

    def point(self, e: Event) -> "FieldPoint":
        return FieldPoint(e, self)

    def at_value(self, value) -> "FieldPoint":
        """The carrier whose field value is ``value`` (closed form, used to build fixtures)."""
        assert self.u is not None
        v = Scalar.of(value, self.o.backend)
        return FieldPoint(self.o + (self.u - self.o).scale(v), self)

    @property
    def zero(self) -> "FieldPoint":
        return FieldPoint(self.o, self)

    @property
    def one(self) -> "FieldPoint":
        assert self.u is not None
        return FieldPoint(self.u, self)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "o": self.o.to_json(), "u": None if self.u is None else self.u.to_json()}


@dataclass(frozen=True)
class FieldPoint:
    """An element of Time_a: an event on the calibrating worldline."""

    carrier: Event
    cal: Calibration

    def value(self) -> Scalar:
        """Scalar rendering of this element in the calibration (o, u)."""
        o, u = self.cal.o, self.cal.u
        if u is None:
            raise ValueError("calibration has no unit")
        return (self.carrier.t - o.t) / (u.t - o.t)

    def __eq__(self, other):
        if not isinstance(other, FieldPoint):
            return NotImplemented
        return self.carrier == other.carrier

    __hash__ = None  # type: ignore[assignment]

    def to_json(self) -> dict:
        return {"carrier": self.carrier.to_json()}


def fp(a: Particle, o: Event, u: Event) -> bool:
    """Field-parameter condition: o, u events of a with o strictly earlier than u."""
    return a.contains(o) and a.contains(u) and o != u and strictly_earlier(o, u)


def _require_on(a: Particle, *events: Event) -> None:
    for e in events:
        if not a.contains(e):
            raise NotOnWorldline(f"{e} is not on the worldline of {a}")


# order


def causal_witness(e1: Event, e2: Event) -> Event | None:
    """A bounce event e'' with signals e1 -> e'' -> e2, or None if there is none.

    The bounce is sought along an axis null direction n: e'' = e1 + s(1, n)
    with s = (T^2 - |D|^2) / (2 (T - n.D)), which stays rational.
    """
    d = e2 - e1
    if d.is_zero():
        return e1
    if connected(e1, e2):
        # a direct signal already links them; bounce at e2 itself
        return e2
    T = d.t
    D = d.space
    b = e1.backend
    for n in _AXES:
        nd = D[0] * n[0] + D[1] * n[1] + D[2] * n[2]
        denom = T - nd
        if denom.sign() <= 0:
            continue
        s = d.mdot(d) / (denom * 2)
        w = e1 + Event.of(1, *n, backend=b).scale(s)
        if connected(e1, w) and connected(w, e2):
            return w
        return None
    return None


def causal_leq(e1: Event, e2: Event, trace: Trace | None = None) -> bool:
    w = causal_witness(e1, e2)
    if w is not None:
        _add(trace, "e''", w)
    return w is not None


def strictly_earlier(e1: Event, e2: Event) -> bool:
    return e1 != e2 and causal_witness(e1, e2) is not None


# simultaneity


def simultaneous(a: Particle, e1: Event, e2: Event, trace: Trace | None = None) -> bool:
    """Radar simultaneity w.r.t. ``a`` via the midpoint location a'."""
    mid = mk_particle(midpoint(e1, e2), a.velocity)
    out1 = light_hit(e1, mid, future=False)
    out2 = light_hit(e2, mid, future=False)
    if out1 != out2:
        return False
    back1 = light_hit(e1, mid)
    back2 = light_hit(e2, mid)
    if back1 != back2:
        return False
    sigs = [signal_between(out1, e1), signal_between(out1, e2), signal_between(e1, back1), signal_between(e2, back1)]
    if any(s is None for s in sigs):
        return False
    if trace is not None:
        trace.add("a'", mid)
        trace.add("e1", out1)
        trace.add("e2", back1)
        for i, s in enumerate(sigs, 1):
            trace.add(f"sigma{i}", s)
    return True


def time_event(a: Particle, e: Event, trace: Trace | None = None) -> Event:
    """Einstein synchronisation: the event of ``a`` simultaneous with ``e``."""
    sent = light_hit(e, a, future=False)
    back = light_hit(e, a)
    c = midpoint(sent, back)
    if not simultaneous(a, c, e):
        raise CalibrationFailure("radar midpoint failed the simultaneity experiment")
    _add(trace, "sent", sent)
    _add(trace, "echo", back)
    _add(trace, "tau", c)
    return c


# time-equidistance and the field operations


def _bounce_particle(a: Particle, e1: Event, e3: Event) -> tuple[Particle, Event]:
    w = causal_witness(e1, e3)
    if w is None:
        raise CalibrationFailure("no bounce event between worldline events")
    return mk_particle(w, a.velocity), w


def ted_complete(a: Particle, e1: Event, e2: Event, e3: Event, trace: Trace | None = None) -> Event:
    """The event e4 on ``a`` with Ted_a(e1, e2, e3, e4)."""
    _require_on(a, e1, e2, e3)
    if strictly_earlier(e3, e1):
        # the case e3 < e1 is Ted(e3, e4, e1, e2)
        a2, w = _bounce_particle(a, e3, e1)
        mid = light_hit(e2, a2, future=False)
        e4 = light_hit(mid, a, future=False)
        ok = connected(e3, w) and connected(w, e1) and connected(e4, mid) and connected(mid, e2)
    else:
        a2, w = _bounce_particle(a, e1, e3)
        mid = light_hit(e2, a2)
        e4 = light_hit(mid, a)
        ok = connected(e1, w) and connected(w, e3) and connected(e2, mid) and connected(mid, e4)
    if not ok:
        raise CalibrationFailure("time-equidistance bounce did not close")
    if trace is not None:
        trace.add("a'", a2)
        trace.add("e", w)
        trace.add("e'", mid)
    return e4


def ted(a: Particle, e1: Event, e2: Event, e3: Event, e4: Event, trace: Trace | None = None) -> bool:
    _require_on(a, e1, e2, e3, e4)
    return ted_complete(a, e1, e2, e3, trace) == e4


def _carrier(x) -> Event:
    return x.carrier if isinstance(x, FieldPoint) else x


def plus(cal: Calibration, t1, t2, trace: Trace | None = None) -> FieldPoint:
    """t = t1 + t2  iff  Ted_a(o, t1, t2, t)."""
    c1, c2 = _carrier(t1), _carrier(t2)
    return FieldPoint(ted_complete(cal.a, cal.o, c1, c2, trace), cal)


def neg(cal: Calibration, t, trace: Trace | None = None) -> FieldPoint:
    """Additive inverse: reflection of t through o, i.e. Ted_a(t, o, o, -t)."""
    return FieldPoint(ted_complete(cal.a, _carrier(t), cal.o, cal.o, trace), cal)


def _later_or_equal(e1: Event, e2: Event) -> bool:
    return e1 == e2 or strictly_earlier(e2, e1)


def _calibrated_pair(cal: Calibration, target: Event, n=(1, 0, 0)) -> Event:
    """The event on the far side of the signal that reaches ``target`` from a place
    simultaneous with o, along the lab null direction (1, n)."""
    a, o = cal.a, cal.o
    v = a.velocity
    b = o.backend
    lam = target.t - o.t
    vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    nv = v[0] * n[0] + v[1] * n[1] + v[2] * n[2]
    s = lam * (1 - vv) / (1 - nv)
    return target - Event.of(1, *n, backend=b).scale(s)


def times(cal: Calibration, t1, t2, trace: Trace | None = None) -> FieldPoint:
    """t1 * t2 via the two-place, two-particle experiment (Hilbert-style).

    Directly defined when t1 is later than u and t2 is not earlier than o;
    other sign cases reduce to that one through negation and distributivity
    and are flagged ``extended case`` in the trace.
    """
    from .space import Location, col

    a, o, u = cal.a, cal.o, cal.u
    assert u is not None
    c1, c2 = _carrier(t1), _carrier(t2)
    _require_on(a, c1, c2)
    if c1 == u:
        return FieldPoint(c2, cal)
    if c2 == u:
        return FieldPoint(c1, cal)
    if c1 == o or c2 == o:
        return FieldPoint(o, cal)
    if strictly_earlier(c2, o):
        if trace is not None:
            trace.note("extended case: t2 earlier than o")
        return neg(cal, times(cal, c1, neg(cal, c2).carrier, trace))
    if strictly_earlier(c1, o):
        if trace is not None:
            trace.note("extended case: t1 earlier than o")
        return neg(cal, times(cal, neg(cal, c1).carrier, c2, trace))
    if strictly_earlier(c1, u):
        if trace is not None:
            trace.note("extended case: t1 between o and u, via (t1 + 1) t2 - t2")
        shifted = plus(cal, c1, u).carrier
        return plus(cal, times(cal, shifted, c2, trace), neg(cal, c2))

    u_p = _calibrated_pair(cal, u)
    t2_p = _calibrated_pair(cal, c2)
    b1 = mk_particle(u_p, a.velocity)
    b2 = mk_particle(t2_p, a.velocity)
    ok = (
        simultaneous(a, o, u_p)
        and simultaneous(a, o, t2_p)
        and connected(u_p, u)
        and connected(t2_p, c2)
        and col(Location(a, a), Location(b1, a), Location(b2, a))
    )
    if not ok:
        raise CalibrationFailure("multiplication witnesses failed their checks")
    p = particle_through(u_p, c1)
    q = mk_particle(t2_p, p.velocity)
    tau = line_meet(q, a)
    if tau is None:
        raise CalibrationFailure("q does not reach a")
    if trace is not None:
        for label, obj in (("b1", b1), ("b2", b2), ("u'", u_p), ("t2'", t2_p), ("p", p), ("q", q), ("t1*t2", tau)):
            trace.add(label, obj)
    return FieldPoint(tau, cal)


def divide(cal: Calibration, x, y, trace: Trace | None = None) -> FieldPoint:
    """x / y: run the multiplication experiment backwards (q through x, back to time zero)."""
    from .space import Location, col

    a, o, u = cal.a, cal.o, cal.u
    assert u is not None
    cx, cy = _carrier(x), _carrier(y)
    _require_on(a, cx, cy)
    if cy == o:
        raise ZeroDivisionError("division by the zero of F(a, o, u)")
    if cy == u:
        return FieldPoint(cx, cal)
    if cx == o:
        return FieldPoint(o, cal)
    if strictly_earlier(cy, o):
        return neg(cal, divide(cal, cx, neg(cal, cy).carrier, trace))
    if strictly_earlier(cx, o):
        return neg(cal, divide(cal, neg(cal, cx).carrier, cy, trace))
    if strictly_earlier(cy, u):
        # x / y = 2x / 2y; doubling terminates because y is positive
        return divide(cal, plus(cal, cx, cx).carrier, plus(cal, cy, cy).carrier, trace)

    u_p = _calibrated_pair(cal, u)
    p = particle_through(u_p, cy)
    q = mk_particle(cx, p.velocity)
    V = a.direction
    s = -(q.base - o).mdot(V) / q.direction.mdot(V)
    t2_p = q.at(s)
    z = light_hit(t2_p, a)
    b1 = mk_particle(u_p, a.velocity)
    b2 = mk_particle(t2_p, a.velocity)
    ok = (
        simultaneous(a, o, u_p)
        and simultaneous(a, o, t2_p)
        and connected(u_p, u)
        and connected(t2_p, z)
        and col(Location(a, a), Location(b1, a), Location(b2, a))
    )
    if not ok:
        raise CalibrationFailure("division witnesses failed their checks")
    if trace is not None:
        for label, obj in (("b1", b1), ("b2", b2), ("u'", u_p), ("t2'", t2_p), ("p", p), ("q", q), ("x/y", z)):
            trace.add(label, obj)
    return FieldPoint(z, cal)

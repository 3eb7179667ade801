"""Coordinates of events, relativistic distance between events, and the field isomorphism."""

from __future__ import annotations

from itertools import product

from ..errors import CalibrationFailure, NonConstructibleExact, NotOnWorldline, NotTimelike
from ..linalg import nullspace, solve
from ..minkowski import Event, Frame, interval2, msign, rest_offset
from ..scalar import Scalar, sqrt
from ..sigmodel import Particle, mk_particle, particle_through, time_axis
from .clocks import Calibration, FieldPoint, divide, neg, simultaneous, strictly_earlier, ted_complete, time_event
from .radar import Trace, _add, connected, light_hit
from .space import Location, col, dd, location_of, pa


def time_coord(cal: Calibration, e: Event, trace: Trace | None = None) -> FieldPoint:
    """The event of the calibrating worldline simultaneous with ``e``."""
    return FieldPoint(time_event(cal.a, e, trace), cal)


def _strictly_between_by_light(p: Location, m: Location, q: Location) -> bool:
    """Does a flash from p, relayed at m, reach q as if sent straight from p?"""
    if m.place == p.place or m.place == q.place:
        return False
    e1 = p.place.at(0)
    e2 = light_hit(e1, m.place)
    e3 = light_hit(e2, q.place)
    # m must also be reached before q along the way, not after
    return connected(e1, e3) and strictly_earlier(e2, e3)


def _signed(cal: Calibration, origin: Location, foot: Location, axis: Location, trace: Trace | None) -> FieldPoint:
    d = dd(cal, origin, foot, trace)
    if _strictly_between_by_light(foot, origin, axis):
        return neg(cal, d)
    return d


def cord(f: Frame, e: Event, trace: Trace | None = None) -> tuple[FieldPoint, FieldPoint, FieldPoint, FieldPoint]:
    """Coordinates (tau, gx, gy, gz) of ``e`` in the coordinate system given by ``f``.

    The place b of e is projected to the three axes along lines parallel to
    the other axes; each coordinate is a signed light-year distance read off
    the experimenter's clock.
    """
    a = f.a
    cal = Calibration(a, f.o, f.u)
    tau = time_coord(cal, e, trace)
    V = a.direction
    b = location_of(a, e)
    here = Location(a, a)
    axes = [Location(p, a) for p in f.axes]
    ws = [loc.offset() for loc in axes]
    target = b.offset()
    cols = [list(w) for w in ws]
    matrix = [[c[i] for c in cols] for i in range(4)]
    coeffs = solve(matrix, list(target))
    if coeffs is None:
        raise CalibrationFailure("axis locations do not span the experimenter's space")
    al, be, ga = coeffs

    def place(vec: Event) -> Location:
        return Location(a.translated(vec), a)

    zero = Event(*(c * 0 for c in V))
    px = place(ws[0].scale(al) if not al.is_zero() else zero)
    py = place(ws[1].scale(be) if not be.is_zero() else zero)
    pz = place(ws[0].scale(al) + ws[1].scale(be))
    qz = place(ws[2].scale(ga) if not ga.is_zero() else zero)

    checks = [col(here, px, axes[0]), col(here, py, axes[1])]
    if b.place != pz.place:
        checks.append(pa(b, pz, here, axes[2]))
    if pz.place != px.place:
        checks.append(pa(pz, px, here, axes[1]))
    if pz.place != py.place:
        checks.append(pa(pz, py, here, axes[0]))
    if not all(checks):
        raise CalibrationFailure("projection witnesses failed their checks")
    if trace is not None:
        for label, loc in (("b", b), ("p_x", px), ("p_y", py), ("p_z", pz)):
            trace.add(label, loc.place)

    gx = _signed(cal, here, px, axes[0], trace)
    gy = _signed(cal, here, py, axes[1], trace)
    gz = dd(cal, pz, b, trace)
    if _strictly_between_by_light(qz, here, axes[2]):
        gz = neg(cal, gz)
    return tau, gx, gy, gz


def cord_values(f: Frame, e: Event) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    return tuple(p.value() for p in cord(f, e))  # type: ignore[return-value]


def _unit_normal(va: Event, vb: Event, length: Scalar) -> Event:
    """A spacelike vector of Minkowski length ``length`` orthogonal to both directions."""
    # Minkowski orthogonality is Euclidean orthogonality to (t, -x, -y, -z)
    rows = [[va.t, -va.x, -va.y, -va.z], [vb.t, -vb.x, -vb.y, -vb.z]]
    basis = [Event(*v) for v in nullspace(rows)]
    if not basis:
        raise CalibrationFailure("no common simultaneous direction")
    exact = va.backend.exact
    candidates = [basis[0]]
    if exact:
        rng = range(-2, 3)
        for coeffs in product(rng, repeat=len(basis)):
            if any(coeffs):
                v = basis[0].scale(coeffs[0])
                for c, w in zip(coeffs[1:], basis[1:]):
                    v = v + w.scale(c)
                candidates.append(v)
    for n in candidates:
        norm2 = -n.mdot(n)
        if norm2.sign() <= 0:
            continue
        try:
            norm = sqrt(norm2)
        except NonConstructibleExact:
            continue
        return n.scale(length / norm)
    raise NonConstructibleExact("no rational unit direction simultaneous for both worldlines")


def _mu_from_origin(a: Particle, o: Event, e: Event, trace: Trace | None) -> Event:
    """For e strictly later than o and timelike to it: the event on a after o by the same proper time."""
    b = particle_through(o, e)
    T = sqrt(interval2(o, e))
    w = _unit_normal(a.direction, b.direction, T)
    e_prime = o + w
    xi = light_hit(e_prime, a)
    ok = (
        simultaneous(a, o, e_prime)
        and simultaneous(b, o, e_prime)
        and connected(e_prime, e)
        and connected(e_prime, xi)
    )
    if not ok:
        raise CalibrationFailure("relativistic-distance witnesses failed their checks")
    if trace is not None:
        trace.add("b", b)
        trace.add("e'", e_prime)
        trace.add("xi", xi)
    return xi


def mu(a: Particle, o: Event, e1: Event, e2: Event, trace: Trace | None = None) -> Event:
    """Signed relativistic distance of (e1, e2), laid off on ``a`` from ``o``."""
    if not a.contains(o):
        raise NotOnWorldline("o is not on the calibrating worldline")
    if e1 == e2:
        return o
    if msign(e2 - e1, e2 - e1) <= 0:
        raise NotTimelike("events are not timelike separated")
    if strictly_earlier(e2, e1):
        if trace is not None:
            trace.note("reversed pair: mu(e1, e2) = -mu(e2, e1)")
        return neg(Calibration(a, o), mu(a, o, e2, e1, trace)).carrier
    b = particle_through(e1, e2)
    if e1 == o:
        e = e2
    else:
        # carry the pair along parallel light paths to a copy of b through o
        b2 = mk_particle(o, b.velocity)
        h1 = light_hit(e1, b2)
        h2 = light_hit(e2, b2)
        e = ted_complete(b2, h1, h2, o)
        if trace is not None:
            trace.add("b''", b2)
            trace.add("h1", h1)
            trace.add("h2", h2)
            trace.add("e''", e)
    if a.contains(e):
        _add(trace, "xi", e)
        return e
    return _mu_from_origin(a, o, e, trace)


def mu_oracle(a: Particle, o: Event, e1: Event, e2: Event) -> Event:
    if e1 == e2:
        return o
    s2 = interval2(e1, e2)
    if msign(e2 - e1, e2 - e1) <= 0:
        raise NotTimelike("events are not timelike separated")
    tau = sqrt(s2)
    if (e2.t - e1.t).sign() < 0:
        tau = -tau
    V = a.direction
    return o + V.scale(tau / sqrt(V.mdot(V)))


def med(e1: Event, e2: Event, e3: Event, e4: Event, a: Particle | None = None, o: Event | None = None,
        trace: Trace | None = None) -> bool:
    """Equal signed relativistic distances; any (a, o) gives the same answer."""
    if a is None:
        a = time_axis(e1.backend)
    if o is None:
        o = a.at(0)
    return mu(a, o, e1, e2, trace) == mu(a, o, e3, e4, trace)


def iso(src: Calibration, dst: Calibration, x, trace: Trace | None = None) -> FieldPoint:
    """Image of ``x`` under the isomorphism F(a, o, u) -> F(a', o', u')."""
    carrier = x.carrier if isinstance(x, FieldPoint) else x
    if not src.a.contains(carrier):
        raise NotOnWorldline("x is not on the source worldline")
    xi2 = mu(dst.a, dst.o, src.o, carrier)
    iota2 = mu(dst.a, dst.o, src.o, src.u)
    if trace is not None:
        trace.add("xi''", xi2)
        trace.add("iota''", iota2)
    return divide(dst, xi2, iota2, trace)


def frame_from_velocity(velocity, o: Event | None = None, unit=1, backend=None) -> Frame:
    """Convenience frame: worldline with ``velocity`` through o, proper-time unit ``unit``,
    axes from the boosted lab axes (Gram-Schmidt in the rest space)."""
    from ..scalar import EXACT

    backend = backend or (o.backend if o is not None else EXACT)
    if o is None:
        o = Event.of(0, backend=backend)
    a = mk_particle(o, velocity)
    V = a.direction
    k = sqrt(V.mdot(V))
    u = o + V.scale(Scalar.of(unit, backend) / k)
    ws: list[Event] = []
    for i in range(3):
        d = Event.of(0, *[1 if j == i else 0 for j in range(3)], backend=backend)
        w = rest_offset(V, d)
        for prev in ws:
            w = w - prev.scale(w.mdot(prev) / prev.mdot(prev))
        ws.append(w)
    axes = [a.translated(w) for w in ws]
    return Frame(a, o, u, *axes)

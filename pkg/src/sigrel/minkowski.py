"""Minkowski geometry of F^4 (signature + - - -, units with c = 1).

Everything here is closed-form: these functions are the oracle side that the
signal-only constructions in :mod:`sigrel.signalling` are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterator, Sequence

from .errors import DomainError
from .scalar import EXACT, Backend, Scalar, sqrt

if TYPE_CHECKING:  # pragma: no cover
    from .sigmodel import Particle


@dataclass(frozen=True, slots=True)
class Event:
    """A point (t, x, y, z) of F^4.  Also used as a 4-vector."""

    t: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    @classmethod
    def of(cls, t, x=0, y=0, z=0, backend: Backend = EXACT) -> "Event":
        return cls(Scalar.of(t, backend), Scalar.of(x, backend), Scalar.of(y, backend), Scalar.of(z, backend))

    @property
    def backend(self) -> Backend:
        return self.t.backend

    def __iter__(self) -> Iterator[Scalar]:
        yield self.t
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, o: "Event") -> "Event":
        return Event(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: "Event") -> "Event":
        return Event(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self) -> "Event":
        return Event(-self.t, -self.x, -self.y, -self.z)

    def scale(self, k) -> "Event":
        return Event(self.t * k, self.x * k, self.y * k, self.z * k)

    def mdot(self, o: "Event") -> Scalar:
        """Minkowski inner product."""
        return self.t * o.t - self.x * o.x - self.y * o.y - self.z * o.z

    @property
    def space(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self)

    def to_json(self) -> list[str]:
        return [c.to_json() for c in self]

    @classmethod
    def from_json(cls, data: Sequence, backend: Backend) -> "Event":
        t, x, y, z = data
        return cls.of(t, x, y, z, backend=backend)

    def __repr__(self):
        return "Event(" + ", ".join(str(c) for c in self) + ")"


def midpoint(e1: Event, e2: Event) -> Event:
    return (e1 + e2).scale(Scalar.of("1/2", e1.backend) if e1.backend.exact else 0.5)


def dot3(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross3(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, Scalar, Scalar]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def msign(u: Event, v: Event) -> int:
    """Sign of the Minkowski product, comparing the time and space parts with
    the backend tolerance rather than testing their difference against zero."""
    return (u.t * v.t).cmp(u.x * v.x + u.y * v.y + u.z * v.z)


def is_null(d: Event) -> bool:
    return msign(d, d) == 0


def interval2(e1: Event, e2: Event) -> Scalar:
    """Squared Minkowski interval (dt)^2 - (dx)^2 - (dy)^2 - (dz)^2."""
    d = e2 - e1
    return d.mdot(d)


class Separation(str, Enum):
    EQUAL = "equal"
    LIGHTLIKE_FUTURE = "lightlike-future"
    LIGHTLIKE_PAST = "lightlike-past"
    TIMELIKE_FUTURE = "timelike-future"
    TIMELIKE_PAST = "timelike-past"
    SPACELIKE = "spacelike"


def separation(e1: Event, e2: Event) -> Separation:
    if e1 == e2:
        return Separation.EQUAL
    s = msign(e2 - e1, e2 - e1)
    if s < 0:
        return Separation.SPACELIKE
    future = (e2.t - e1.t).sign() > 0
    if s == 0:
        return Separation.LIGHTLIKE_FUTURE if future else Separation.LIGHTLIKE_PAST
    return Separation.TIMELIKE_FUTURE if future else Separation.TIMELIKE_PAST


def causal_future(e1: Event, e2: Event) -> bool:
    """Oracle: e2 lies in the closed future causal cone of e1."""
    return separation(e1, e2) in (Separation.EQUAL, Separation.LIGHTLIKE_FUTURE, Separation.TIMELIKE_FUTURE)


def on_line(base: Event, direction: Event, e: Event) -> bool:
    """Is ``e`` on the line ``base + s * direction`` (direction has nonzero t)?"""
    s = (e.t - base.t) / direction.t
    p = base + direction.scale(s)
    return p == e


# frames


@dataclass(frozen=True)
class Frame:
    """The six observer parameters: worldline, zero, unit, three axis locations."""

    a: "Particle"
    o: Event
    u: Event
    ax: "Particle"
    ay: "Particle"
    az: "Particle"

    @property
    def backend(self) -> Backend:
        return self.o.backend

    @property
    def axes(self) -> tuple["Particle", "Particle", "Particle"]:
        return (self.ax, self.ay, self.az)

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(),
            "o": self.o.to_json(),
            "u": self.u.to_json(),
            "axes": [p.to_json() for p in self.axes],
        }


def rest_offset(frame_dir: Event, d: Event) -> Event:
    """Component of ``d`` Minkowski-orthogonal to the timelike ``frame_dir``."""
    return d - frame_dir.scale(d.mdot(frame_dir) / frame_dir.mdot(frame_dir))


def _axis_vectors(f: Frame) -> list[Event]:
    V = f.a.direction
    return [rest_offset(V, p.base - f.a.base) for p in f.axes]


def frame_validate(f: Frame) -> bool:
    """Oracle check of the observer-parameter conditions."""
    a = f.a
    if not (a.contains(f.o) and a.contains(f.u)):
        return False
    if f.o == f.u or not (f.u.t > f.o.t):
        return False
    if any(p.velocity != a.velocity for p in f.axes):
        return False
    ws = _axis_vectors(f)
    if any(w.is_zero() for w in ws):
        return False
    return all(msign(ws[i], ws[j]) == 0 for i, j in ((0, 1), (0, 2), (1, 2)))


def poincare_to_frame(f: Frame, e: Event) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """Coordinates of ``e`` in frame ``f``: a Poincare map followed by the (o, u) dilation."""
    V = f.a.direction
    d = e - f.o
    unit = f.u - f.o
    # time: ratio of projections on the worldline direction; no sqrt needed
    t = d.mdot(V) / unit.mdot(V)
    k = sqrt(unit.mdot(unit))
    coords = [t]
    for w in _axis_vectors(f):
        norm = sqrt(-w.mdot(w))
        coords.append(-d.mdot(w) / (norm * k))
    return tuple(coords)  # type: ignore[return-value]


def frame_to_event(f: Frame, coords: Sequence) -> Event:
    """Inverse of :func:`poincare_to_frame` (closed form)."""
    b = f.backend
    t, x, y, z = (Scalar.of(c, b) for c in coords)
    V = f.a.direction
    unit = f.u - f.o
    k = sqrt(unit.mdot(unit))
    e = f.o + unit.scale(t)
    for c, w in zip((x, y, z), _axis_vectors(f)):
        norm = sqrt(-w.mdot(w))
        e = e + w.scale(c * k / norm)
    return e


def proper_time(e1: Event, e2: Event) -> Scalar:
    """Signed proper time between timelike (or equal) events."""
    s2 = interval2(e1, e2)
    if s2.sign() < 0:
        raise DomainError("events are spacelike separated")
    tau = sqrt(s2)
    return tau if (e2.t - e1.t).sign() >= 0 else -tau

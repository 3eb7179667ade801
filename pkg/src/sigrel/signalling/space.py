"""Space of an experimenter: places motionless with respect to it, and their geometry."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..errors import AnchorMismatch, CalibrationFailure, DegenerateLine
from ..minkowski import Event, midpoint, msign, rest_offset
from ..sigmodel import Particle, mk_particle
from .clocks import Calibration, FieldPoint, motionless, simultaneous
from .radar import Trace, _add, connected, light_hit


@dataclass(frozen=True)
class Location:
    """A member of Space_a: a place (particle) at rest relative to the anchor."""

    place: Particle
    anchor: Particle

    def __post_init__(self):
        if not motionless(self.place, self.anchor):
            raise ValueError("a location must be motionless relative to its anchor")

    def offset(self) -> Event:
        """Rest-frame displacement from the anchor (oracle side)."""
        return rest_offset(self.anchor.direction, self.place.base - self.anchor.base)

    def to_json(self) -> dict:
        return {"place": self.place.to_json()}


def location_of(anchor: Particle, e: Event) -> Location:
    """The place of ``anchor``'s space that participates in ``e``."""
    return Location(mk_particle(e, anchor.velocity), anchor)


def at_rest(anchor: Particle, offset) -> Location:
    """Location displaced from the anchor by a lab-frame spatial vector at t = 0."""
    b = anchor.backend
    d = Event.of(0, *offset, backend=b)
    return Location(anchor.translated(d), anchor)


def _same_anchor(*locs: Location) -> Particle:
    a = locs[0].anchor
    for loc in locs[1:]:
        if loc.anchor != a:
            raise AnchorMismatch("locations belong to different experimenters")
    return a


def col(l1: Location, l2: Location, l3: Location, trace: Trace | None = None) -> bool:
    """Collinearity: for some ordering, light bounced i -> j -> k runs straight i -> k."""
    _same_anchor(l1, l2, l3)
    ls = (l1, l2, l3)
    if l1.place == l2.place or l1.place == l3.place or l2.place == l3.place:
        return True
    for i, j, k in permutations(range(3)):
        ei = ls[i].place.at(0)
        ej = light_hit(ei, ls[j].place)
        ek = light_hit(ej, ls[k].place)
        if connected(ei, ek):
            if trace is not None:
                trace.add("e_i", ei)
                trace.add("e_j", ej)
                trace.add("e_k", ek)
            return True
    return False


def col_oracle(l1: Location, l2: Location, l3: Location) -> bool:
    _same_anchor(l1, l2, l3)
    p, q, r = (loc.offset() for loc in (l1, l2, l3))
    u, w = q - p, r - p
    # Gram determinant of the two rest-space vectors
    return (u.mdot(u) * w.mdot(w)) == (u.mdot(w) * u.mdot(w))


def bw(l1: Location, l2: Location, l3: Location) -> bool:
    """Betweenness of l2 on the segment l1 l3 (oracle)."""
    if not col_oracle(l1, l2, l3):
        return False
    d1 = l2.offset() - l1.offset()
    d2 = l3.offset() - l2.offset()
    # spacelike vectors: the Minkowski product is minus the Euclidean one
    return msign(d1, d2) <= 0


def ed(l1: Location, l2: Location, l3: Location, l4: Location) -> bool:
    """Equidistance |l1 l2| = |l3 l4| (oracle)."""
    _same_anchor(l1, l2, l3, l4)
    d1 = l2.offset() - l1.offset()
    d2 = l4.offset() - l3.offset()
    return d1.mdot(d1) == d2.mdot(d2)


def pa(l1: Location, l2: Location, l3: Location, l4: Location, trace: Trace | None = None) -> bool:
    """Parallelism of the lines l1 l2 and l3 l4.

    Witness: shift l2 by the displacement l1 -> l3; the lines are parallel
    exactly when the shifted place is collinear with l3 and l4.
    """
    a = _same_anchor(l1, l2, l3, l4)
    if l1.place == l2.place or l3.place == l4.place:
        raise DegenerateLine("parallelism needs two distinct places on each line")
    shifted = Location(l2.place.translated(l3.place.base - l1.place.base), a)
    _add(trace, "l2'", shifted.place)
    return col(l3, l4, shifted, trace)


def pa_oracle(l1: Location, l2: Location, l3: Location, l4: Location) -> bool:
    _same_anchor(l1, l2, l3, l4)
    if l1.place == l2.place or l3.place == l4.place:
        raise DegenerateLine("parallelism needs two distinct places on each line")
    u = l2.offset() - l1.offset()
    w = l4.offset() - l3.offset()
    return (u.mdot(u) * w.mdot(w)) == (u.mdot(w) * u.mdot(w))


def dd_anchor(cal: Calibration, b: Location, trace: Trace | None = None) -> FieldPoint:
    """Distance of place ``b`` from the anchor, as an event on the anchor's worldline.

    b emits at its time-zero event (the one simultaneous with o); the flash
    reaches the anchor after exactly that many light-years.
    """
    a, o = cal.a, cal.o
    if b.anchor != a:
        raise AnchorMismatch("location is not in the calibrating experimenter's space")
    if b.place == a:
        return FieldPoint(o, cal)
    e_prime = midpoint(light_hit(o, b.place, future=False), light_hit(o, b.place))
    if not simultaneous(a, e_prime, o):
        raise CalibrationFailure("time-zero event of the place failed the simultaneity experiment")
    e = light_hit(e_prime, a)
    if trace is not None:
        trace.add("e'", e_prime)
        trace.add("sigma", (e_prime.to_json(), e.to_json()))
    return FieldPoint(e, cal)


def dd(cal: Calibration, b1: Location, b2: Location, trace: Trace | None = None) -> FieldPoint:
    """Distance between two places: translate the pair so that b1 lands on the anchor."""
    a = cal.a
    _same_anchor(b1, b2)
    if b1.anchor != a:
        raise AnchorMismatch("locations are not in the calibrating experimenter's space")
    if b1.place == b2.place:
        return FieldPoint(cal.o, cal)
    if b1.place == a:
        return dd_anchor(cal, b2, trace)
    b = Location(a.translated(b2.place.base - b1.place.base), a)
    anchor = Location(a, a)
    # b1 b2 a b is a parallelogram (possibly flat)
    if not (pa(b1, b2, anchor, b) and (b2.place == a or pa(b1, anchor, b2, b))):
        raise CalibrationFailure("translated place failed the parallelogram check")
    _add(trace, "b", b.place)
    return dd_anchor(cal, b, trace)


def dd_oracle(cal: Calibration, b1: Location, b2: Location) -> FieldPoint:
    from ..scalar import sqrt

    d = b2.offset() - b1.offset()
    V = cal.a.direction
    k = sqrt(V.mdot(V))
    # proper length, then the anchor's event that many proper units after o
    length = sqrt(-d.mdot(d))
    return FieldPoint(cal.o + V.scale(length / k), cal)


def ort(a: Location, b: Location, c: Location, trace: Trace | None = None) -> bool:
    """Right angle at ``a`` between the lines a b and a c (reflection witness b')."""
    anchor = _same_anchor(a, b, c)
    if a.place == b.place or a.place == c.place:
        raise DegenerateLine("orthogonality needs a != b and a != c")
    b_ref = Location(a.place.translated(a.place.base - b.place.base), anchor)
    cal = Calibration(anchor, anchor.at(0))
    ok = (
        b_ref.place != b.place
        and col(b_ref, a, b)
        and dd(cal, a, b_ref) == dd(cal, a, b)
        and dd(cal, c, b_ref) == dd(cal, c, b)
    )
    if ok:
        _add(trace, "b'", b_ref.place)
    return ok


def ort_oracle(a: Location, b: Location, c: Location) -> bool:
    _same_anchor(a, b, c)
    u = b.offset() - a.offset()
    w = c.offset() - a.offset()
    return msign(u, w) == 0

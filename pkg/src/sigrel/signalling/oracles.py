"""Closed-form Minkowski answers for every signal-built predicate.

The constructive side never calls into this module; tests compare the two.
"""

from __future__ import annotations

from ..minkowski import Event, Frame, causal_future, interval2, msign, poincare_to_frame
from ..scalar import Scalar
from ..sigmodel import Particle
from .clocks import Calibration, FieldPoint, motionless
from .coords import mu_oracle
from .space import bw, col_oracle, dd_oracle, ed, ort_oracle, pa_oracle

__all__ = [
    "motionless", "simultaneous_oracle", "causal_oracle", "ted_oracle", "plus_oracle", "times_oracle",
    "col_oracle", "bw", "ed", "pa_oracle", "dd_oracle", "ort_oracle", "cord_oracle", "mu_oracle",
    "med_oracle", "iso_oracle", "time_coord_oracle",
]


def simultaneous_oracle(a: Particle, e1: Event, e2: Event) -> bool:
    return msign(e2 - e1, a.direction) == 0


def causal_oracle(e1: Event, e2: Event) -> bool:
    return causal_future(e1, e2)


def _param(a: Particle, e: Event) -> Scalar:
    # events on a are a.base + t * direction, so lab time is an affine parameter
    return e.t


def ted_oracle(a: Particle, e1: Event, e2: Event, e3: Event, e4: Event) -> bool:
    return _param(a, e2) - _param(a, e1) == _param(a, e4) - _param(a, e3)


def plus_oracle(cal: Calibration, t1: FieldPoint, t2: FieldPoint) -> FieldPoint:
    o = cal.o
    return FieldPoint(t1.carrier + t2.carrier - o, cal)


def times_oracle(cal: Calibration, t1: FieldPoint, t2: FieldPoint) -> FieldPoint:
    return cal.at_value(t1.value() * t2.value())


def time_coord_oracle(cal: Calibration, e: Event) -> FieldPoint:
    V = cal.a.direction
    s = (e - cal.o).mdot(V) / V.mdot(V)
    return FieldPoint(cal.o + V.scale(s), cal)


def cord_oracle(f: Frame, e: Event) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    return poincare_to_frame(f, e)


def med_oracle(e1: Event, e2: Event, e3: Event, e4: Event) -> bool:
    def signed(p: Event, q: Event) -> tuple[int, Scalar]:
        return (0 if p == q else (q.t - p.t).sign(), interval2(p, q))

    s1, q1 = signed(e1, e2)
    s2, q2 = signed(e3, e4)
    return s1 == s2 and q1 == q2


def iso_oracle(src: Calibration, dst: Calibration, x: FieldPoint) -> FieldPoint:
    return dst.at_value(FieldPoint(x.carrier, src).value())

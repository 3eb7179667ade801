"""Deciding whether one particle is motionless relative to another with test balls.

The experimenter ``a`` throws three balls from a common event so that a light
signal reflected between them closes up exactly on ``a``.  Replaying the same
reflection against ``b`` closes up on ``b`` precisely when ``b`` is parallel to
``a``: the whole picture is then a central dilation of the one seen by ``a``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import CalibrationFailure, SuperluminalError
from ..minkowski import Event, rest_offset
from ..scalar import Scalar
from ..sigmodel import Particle, mk_particle, particle_through
from .clocks import strictly_earlier
from .radar import Trace, light_hit, line_meet

MAX_ATTEMPTS = 64


def _rational(rng: random.Random, lo: float, hi: float, den: int = 16) -> Fraction:
    return Fraction(rng.randint(int(lo * den) + 1, int(hi * den) - 1), den)


def _ball(start: Event, V: Event, W: Event, c: Scalar) -> Particle:
    d = V + W.scale(c)
    return mk_particle(start, (d.x / d.t, d.y / d.t, d.z / d.t))


def _plane_direction(a: Particle, b: Particle, rng: random.Random) -> Event | None:
    V = a.direction
    if a == b:
        axis = rng.choice(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        return rest_offset(V, Event.of(0, *axis, backend=a.backend))
    lam = _rational(rng, -2, 2, 4)
    w = rest_offset(V, b.at(lam) - a.base)
    return None if w.is_zero() else w


def desargues_experiment(a: Particle, b: Particle, seed: int = 0, trace: Trace | None = None) -> bool:
    """Run the three-ball reflection experiment of ``a`` against ``b``."""
    rng = random.Random(seed)
    backend = a.backend
    V = a.direction
    for _ in range(MAX_ATTEMPTS):
        W = _plane_direction(a, b, rng)
        if W is None:
            continue
        R = V.mdot(V) / (-W.mdot(W))
        shrink = R / (R + 1)
        k1 = Scalar.of(_rational(rng, 1.2, 1.9), backend)
        k2 = Scalar.of(_rational(rng, 0.2, 0.8), backend)
        start = a.base + V.scale(Scalar.of(_rational(rng, -1, 1, 4), backend)) + W.scale(
            Scalar.of(_rational(rng, 1.5, 3.0, 4), backend))
        if b.contains(start):
            continue
        try:
            b1 = _ball(start, V, W, -(k1 * shrink))
            b2 = _ball(start, V, W, -(k2 * shrink))
            a1 = line_meet(b1, a)
            if a1 is None:
                continue
            p = light_hit(a1, b2)
            a3 = light_hit(p, a)
            b3 = particle_through(start, a3)
        except SuperluminalError:
            continue
        if not (strictly_earlier(start, a1) and strictly_earlier(a1, p) and strictly_earlier(a1, a3)):
            continue
        if trace is not None:
            for label, obj in (("b1", b1), ("b2", b2), ("b3", b3), ("A1", a1), ("P", p), ("A3", a3)):
                trace.add(label, obj)
        meet1 = line_meet(b1, b)
        meet3 = line_meet(b3, b)
        if meet1 is None or meet3 is None:
            return False
        p2 = light_hit(meet1, b2)
        back = light_hit(p2, b)
        if trace is not None:
            trace.add("B1", meet1)
            trace.add("P'", p2)
            trace.add("B3", meet3)
            trace.add("B3'", back)
        return back == meet3
    raise CalibrationFailure(f"could not place the test balls after {MAX_ATTEMPTS} attempts")

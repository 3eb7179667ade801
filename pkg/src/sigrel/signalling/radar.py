"""Experimental primitives: sending light signals and watching particles meet.

These are the only places where the signal-only constructions touch the
coordinates of F^4.  Each one answers a question an experimenter can settle by
sending or waiting for a signal: where does a flash emitted at ``e`` reach
particle ``p``?  Where do two particles meet?
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..minkowski import Event, is_null
from ..scalar import Scalar, sqrt
from ..sigmodel import Particle, Signal


def signal_between(e1: Event, e2: Event) -> Signal | None:
    """The signal sent at ``e1`` and received at ``e2``, if one exists."""
    d = e2 - e1
    if not is_null(d) or d.t.sign() < 0:
        return None
    return Signal(e1, e2)


def connected(e1: Event, e2: Event) -> bool:
    return signal_between(e1, e2) is not None


def light_hit(e: Event, p: Particle, future: bool = True) -> Event:
    """Where a flash from ``e`` reaches ``p`` (or, with ``future=False``, where ``p``
    must emit a flash so that it arrives at ``e``).

    Solves ``|p(e.t + s) - e|^2 = 0`` for the lab-time offset ``s``; the quadratic
    always has one root on each cone because ``p`` is timelike.
    """
    V = p.direction
    # solve relative to p's event at the emission time: D is then purely spatial
    # and small, which keeps the two roots well separated in floating point
    here = p.at(e.t)
    D = here - e
    vv = V.mdot(V)
    dv = D.mdot(V)
    dd = D.mdot(D)
    disc = dv * dv - vv * dd
    if disc.sign() < 0:  # only rounding can get here
        disc = disc * 0
    r = sqrt(disc)
    if r.is_zero() or vv.backend.exact:
        s = (-dv + r) / vv if future else (-dv - r) / vv
        return p.at(e.t + s)
    # the root where -dv and ±r share a sign is computed directly; the other
    # one from the product of the roots, avoiding cancellation
    q = -(dv + r) if dv.sign() >= 0 else -(dv - r)
    big, small = q / vv, dd / q
    s = max(big, small) if future else min(big, small)
    return p.at(e.t + s)


def line_meet(p: Particle, q: Particle) -> Event | None:
    """The event in which two particles meet, if any."""
    if p.velocity == q.velocity:
        return p.base if p.base == q.base else None
    # p.base + s Vp = q.base + s Vq  (same lab-time parameter because both have t-component 1)
    dv = [a - b for a, b in zip(p.velocity, q.velocity)]
    db = [b - a for a, b in zip(p.base.space, q.base.space)]
    s = None
    for i in range(3):
        if not dv[i].is_zero():
            s = db[i] / dv[i]
            break
    assert s is not None
    e = p.at(s)
    return e if q.contains(e) else None


@dataclass
class Trace:
    """Witness trace: the auxiliary objects an operation constructed."""

    op: str
    steps: list[tuple[str, str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label: str, obj) -> None:
        kind = type(obj).__name__
        self.steps.append((label, kind, obj))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def to_json(self) -> dict:
        out = []
        for label, kind, obj in self.steps:
            if hasattr(obj, "to_json"):
                val = obj.to_json()
            elif isinstance(obj, Scalar):
                val = obj.to_json()
            else:
                val = obj
            out.append({"label": label, "kind": kind, "value": val})
        return {"op": self.op, "witnesses": out, "notes": list(self.notes)}


def _add(trace: Trace | None, label: str, obj) -> None:
    if trace is not None:
        trace.add(label, obj)

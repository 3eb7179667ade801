from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigrel.errors import FeatureDisabled
from sigrel.minkowski import Event
from sigrel.scalar import EXACT
from sigrel.sigmodel import (
    PYTHAGOREAN_SPEEDS, Scenario, Signal, coordinate_fixture, ev_quantified, event_signal, mk_particle,
    particle_through, random_unit_velocity, receives, scenario_restrict, time_axis, transmits, tu_holds,
)


def test_transmit_and_receive():
    a = time_axis()
    b = mk_particle(Event.of(0, 2), (0, 0, 0))
    s = Signal(Event.of(1), Event.of(3, 2))
    assert transmits(a, s) and receives(b, s)
    assert not transmits(b, s) and not receives(a, s)


def test_signals_must_be_lightlike_and_future_pointing():
    with pytest.raises(ValueError):
        Signal(Event.of(0), Event.of(2, 1))
    with pytest.raises(ValueError):
        Signal(Event.of(1, 1), Event.of(0))
    assert event_signal(Event.of(1)).is_event()


def test_event_signals_satisfy_ev():
    a, b = time_axis(), mk_particle(Event.of(0, 1), (0, 0, 0))
    e = event_signal(Event.of(0))
    assert ev_quantified(e, [a, b])
    assert not ev_quantified(Signal(Event.of(0), Event.of(1, 1)), [a, b])


def test_particle_through_two_events():
    p = particle_through(Event.of(1, 1), Event.of(3, 2))
    assert p.velocity == (Fraction(1, 2), 0, 0)
    assert p.contains(Event.of(5, 3))


def test_tu_needs_the_expanded_model():
    sc = Scenario()
    with pytest.raises(FeatureDisabled):
        sc.tu_holds(Event.of(0), Event.of(1))
    assert Scenario(tu=True).tu_holds(Event.of(0), Event.of(5, 3, 4)) is False
    assert tu_holds(Event.of(0), Event.of(Fraction(5, 4), Fraction(3, 4)))


@given(st.integers(0, 10_000))
def test_unit_velocities_have_rational_lorentz_factor(seed):
    v = random_unit_velocity(random.Random(seed))
    speed2 = sum(c * c for c in v)
    assert speed2 in {s * s for s in PYTHAGOREAN_SPEEDS} | {0}


def test_scenarios_are_seeded_and_serialise():
    s1 = scenario_restrict(3, (3, 5), with_witnesses=True)
    s2 = scenario_restrict(3, (3, 5), with_witnesses=True)
    text = json.dumps(s1.to_json(), sort_keys=True)
    assert text == json.dumps(s2.to_json(), sort_keys=True)
    back = Scenario.from_json(json.loads(text))
    assert back.particles == s1.particles and back.signals == s1.signals


def test_coordinate_fixture_is_exact():
    sc = coordinate_fixture()
    assert sc.backend == EXACT and len(sc.events()) == 9

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigrel.errors import DomainError
from sigrel.minkowski import (
    Event, Separation, causal_future, frame_to_event, frame_validate, interval2, is_null, poincare_to_frame,
    proper_time, separation,
)
from sigrel.scalar import APPROX, EXACT
from sigrel.signalling import frame_from_velocity

small = st.fractions(min_value=-6, max_value=6, max_denominator=8)
events = st.builds(lambda *c: Event.of(*c), small, small, small, small)


def test_interval_and_separation_on_hand_cases():
    o = Event.of(0)
    assert interval2(o, Event.of(5, 3)) == 16
    assert separation(o, Event.of(1, 1)) is Separation.LIGHTLIKE_FUTURE
    assert separation(o, Event.of(-1, 0, 1)) is Separation.LIGHTLIKE_PAST
    assert separation(o, Event.of(2, 1)) is Separation.TIMELIKE_FUTURE
    assert separation(o, Event.of(0, 1)) is Separation.SPACELIKE
    assert separation(o, o) is Separation.EQUAL
    assert proper_time(Event.of(5, 3), o) == -4
    with pytest.raises(DomainError):
        proper_time(o, Event.of(0, 1))


@given(events, events)
def test_interval_is_symmetric_and_translation_invariant(e1, e2):
    shift = Event.of(1, -2, 3, Fraction(1, 2))
    assert interval2(e1, e2) == interval2(e2, e1)
    assert interval2(e1 + shift, e2 + shift) == interval2(e1, e2)


@given(events, events)
def test_causal_future_is_antisymmetric(e1, e2):
    if causal_future(e1, e2) and causal_future(e2, e1):
        assert e1 == e2
    assert is_null(e2 - e1) == (separation(e1, e2) in (Separation.LIGHTLIKE_FUTURE, Separation.LIGHTLIKE_PAST,
                                                       Separation.EQUAL))


def test_boosted_frame_coordinates():
    f = frame_from_velocity((Fraction(3, 5), 0, 0), o=Event.of(0), unit=1, backend=EXACT)
    assert frame_validate(f)
    assert poincare_to_frame(f, Event.of(5, 3)) == tuple(Event.of(4))
    assert poincare_to_frame(f, Event.of(Fraction(3, 4), Fraction(5, 4))) == tuple(Event.of(0, 1))


@given(events)
def test_frame_to_event_inverts_coordinates(e):
    o = Event.of(1, 2, backend=APPROX)
    f = frame_from_velocity((Fraction(5, 13), Fraction(-6, 13), 0), o=o, unit=2, backend=APPROX)
    ea = Event.of(*(float(c) for c in e), backend=APPROX)
    assert frame_to_event(f, poincare_to_frame(f, ea)) == ea


def test_json_round_trip():
    e = Event.of(Fraction(1, 3), 2, -1, Fraction(7, 2))
    assert Event.from_json(e.to_json(), EXACT) == e

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exact_fixtures import exact_cases
from sigrel.errors import DegenerateLine, NotOnWorldline, NotTimelike
from sigrel.minkowski import Event
from sigrel.scalar import APPROX, EXACT
from sigrel.sigmodel import mk_particle, random_particle, time_axis
from sigrel.signalling import (
    Calibration, Trace, at_rest, divide, light_hit, line_meet, mu, ort, pa, plus, signal_between, simultaneous,
    times,
)
from sigrel.signalling.sweep import OPERATIONS, med_independence, oracle_sweep


@pytest.mark.parametrize("case", exact_cases(), ids=lambda c: c[0])
def test_exact_case(case):
    name, got, want, oracle = case
    assert got == want
    assert oracle == want


def test_signal_between():
    assert signal_between(Event.of(0), Event.of(1, 1)) is not None
    assert signal_between(Event.of(0), Event.of(2, 1)) is None
    assert signal_between(Event.of(1, 1), Event.of(0)) is None


def test_light_hit_both_cones():
    b = mk_particle(Event.of(0, 3), (0, 0, 0))
    assert light_hit(Event.of(0), b) == Event.of(3, 3)
    assert light_hit(Event.of(0), b, future=False) == Event.of(-3, 3)


def test_light_hit_far_from_the_base_point():
    # both roots lie far from the particle's t = 0 event; the answer must still be lightlike to within eps
    a = mk_particle(Event.of(0, backend=APPROX), (0.3, -0.6, 0.1))
    e = Event.of(1000.25, 300.5, -600.0, 100.0, backend=APPROX)
    hit = light_hit(e, a)
    d = hit - e
    assert d.t > 0 and d.mdot(d) == 0


def test_line_meet():
    a = time_axis()
    b = mk_particle(Event.of(0, 2), (Fraction(-1, 2), 0, 0))
    assert line_meet(a, b) == Event.of(4)
    assert line_meet(a, mk_particle(Event.of(0, 1), (0, 0, 0))) is None


def test_traces_record_witnesses():
    a = time_axis()
    tr = Trace("simultaneous")
    assert simultaneous(a, Event.of(0, 3), Event.of(0, 0, 4), trace=tr)
    assert tr.steps and tr.to_json()


def test_division_and_errors():
    cal = Calibration(time_axis(), Event.of(0), Event.of(1))
    assert divide(cal, Event.of(6), Event.of(3)).carrier == Event.of(2)
    with pytest.raises(ZeroDivisionError):
        divide(cal, Event.of(6), Event.of(0))
    with pytest.raises(NotOnWorldline):
        plus(cal, Event.of(1, 1), Event.of(2))
    with pytest.raises(NotTimelike):
        mu(time_axis(), Event.of(0), Event.of(0), Event.of(0, 1))
    a = time_axis()
    with pytest.raises(DegenerateLine):
        ort(at_rest(a, (0, 0, 0)), at_rest(a, (0, 0, 0)), at_rest(a, (3, 0, 0)))
    with pytest.raises(DegenerateLine):
        pa(at_rest(a, (1, 0, 0)), at_rest(a, (1, 0, 0)), at_rest(a, (0, 0, 0)), at_rest(a, (0, 3, 0)))


values = st.fractions(min_value=-8, max_value=8, max_denominator=4)


@given(values, values, st.integers(0, 1000))
def test_field_operations_on_a_moving_clock(x, y, seed):
    rng = random.Random(seed)
    a = random_particle(rng, APPROX)
    o = a.at(rng.uniform(-2, 2))
    cal = Calibration(a, o, a.at(o.t + rng.uniform(0.5, 3)))
    px, py = cal.at_value(x), cal.at_value(y)
    assert plus(cal, px, py).value() == float(x + y)
    assert times(cal, px, py).value() == float(x * y)
    if y:
        assert divide(cal, px, py).value() == float(x / y)


def test_small_sweep_on_the_approximate_backend():
    rep = oracle_sweep(samples=30, seed=3)
    assert rep.ok, rep.mismatches
    assert set(rep.counts) == set(OPERATIONS)
    # the biased generator hits both truth values of each predicate
    for op in ("motionless", "simultaneous", "causal", "ted", "col", "pa", "ort", "med"):
        assert 0 < rep.counts[op]["true"] < rep.counts[op]["checked"], op


def test_med_independence_small():
    rep = med_independence(quadruples=20, choices=5, seed=1)
    assert rep.ok
    assert 0 < rep.equal_pairs < 20

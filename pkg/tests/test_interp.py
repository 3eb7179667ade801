from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigrel.interp import (
    GOLDEN_SETS, IDENTITY, axsym_bridge_check, boost, dilation, freeze, golden_diff, lorentz_factor,
    random_unit_poincare, render, roundtrip_check, signed_permutation, translation, tu_separation,
)
from sigrel.interp import SPECS
from sigrel.minkowski import Event, interval2
from sigrel.sigmodel import Signal, mk_particle, receives, transmits


@pytest.mark.parametrize("name", GOLDEN_SETS)
def test_golden_files_match(name):
    assert golden_diff(name) == []


def test_freeze_writes_the_rendering(tmp_path):
    path = freeze("lines-clauses", tmp_path)
    assert path.read_text(encoding="utf-8").splitlines() == render("lines-clauses")


@pytest.mark.parametrize("name", sorted(SPECS))
def test_specs_validate(name):
    SPECS[name]().validate()


def test_boost_is_a_lorentz_map():
    b = boost((1, 0, 0), Fraction(3, 5))
    assert lorentz_factor(Fraction(3, 5)) == Fraction(5, 4)
    e1, e2 = Event.of(1, 2, 3, 0), Event.of(4, -1, 0, 2)
    assert interval2(b.event(e1), b.event(e2)) == interval2(e1, e2)


def test_dilation_keeps_signals_and_incidence():
    d = dilation(2)
    s = Signal(Event.of(1), Event.of(3, 2))
    a = mk_particle(Event.of(0), (0, 0, 0))
    assert transmits(d.particle(a), d.signal(s)) == transmits(a, s)
    assert receives(d.particle(a), d.signal(s)) == receives(a, s)
    assert interval2(d.event(Event.of(0)), d.event(Event.of(1))) == 4


@given(st.integers(0, 5000))
def test_unit_poincare_maps_preserve_intervals(seed):
    f = random_unit_poincare(random.Random(seed))
    e1, e2 = Event.of(0, 1, 2, 3), Event.of(Fraction(1, 2), 0, -1, 4)
    assert interval2(f.event(e1), f.event(e2)) == interval2(e1, e2)


def test_composition_order():
    t = translation((1, 0, 0, 0))
    p = signed_permutation((1, 0, 2), (1, -1, 1))
    e = Event.of(0, 1, 2, 3)
    assert t.then(p).event(e) == p.event(t.event(e))
    assert IDENTITY.then(t).event(e) == t.event(e)


def test_separation_small():
    rep = tu_separation(seed=2, samples=40)
    assert rep.ok
    assert rep.to_json()["unit_pair"]


def test_axsym_bridge_small():
    rep = axsym_bridge_check(samples=15, seed=1)
    assert rep.ok, rep.failures[:1]


def test_roundtrip_small():
    rep = roundtrip_check(samples=30, seed=5, frame_samples=5)
    assert rep.ok, rep.mismatches[:1]
    assert rep.to_json()["frame_samples"] == 5
    assert len(rep.counts) == 8

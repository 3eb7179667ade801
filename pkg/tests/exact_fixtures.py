"""Hand-checked exact cases, one or more per signal-built operation.

Each case is (name, constructed value, expected value, oracle value or None).
Expected values are small Pythagorean numbers worked out by hand; where an
oracle exists it is evaluated too, so a case pins all three to each other.
"""

from __future__ import annotations

from fractions import Fraction

from sigrel.minkowski import Event
from sigrel.scalar import EXACT
from sigrel.sigmodel import mk_particle, time_axis
from sigrel.signalling import (
    Calibration, at_rest, causal_leq, col, cord_values, dd, desargues_experiment, frame_from_velocity, iso, med,
    mu, ort, pa, plus, simultaneous, ted, time_coord, times,
)
from sigrel.signalling import oracles as O


def E(*c) -> Event:
    return Event.of(*c, backend=EXACT)


def exact_cases() -> list[tuple[str, object, object, object]]:
    a = time_axis(EXACT)
    half = mk_particle(E(0), (Fraction(1, 2), 0, 0))
    boosted = mk_particle(E(0), (Fraction(3, 5), 0, 0))
    cal = Calibration(a, E(0), E(1))
    rest = lambda *p: at_rest(a, p)  # noqa: E731
    cases: list[tuple[str, object, object, object]] = []

    cases.append(("motionless: parallel pair", desargues_experiment(a, mk_particle(E(0, 1), (0, 0, 0))), True,
                  O.motionless(a, mk_particle(E(0, 1), (0, 0, 0)))))
    cases.append(("motionless: half light speed", desargues_experiment(a, half), False, O.motionless(a, half)))

    cases.append(("simultaneous: rest frame", simultaneous(a, E(0, 3), E(0, 0, 4)), True,
                  O.simultaneous_oracle(a, E(0, 3), E(0, 0, 4))))
    cases.append(("simultaneous: boosted plane t = x/2", simultaneous(half, E(0), E(Fraction(1, 2), 1)), True,
                  O.simultaneous_oracle(half, E(0), E(Fraction(1, 2), 1))))
    cases.append(("simultaneous: time-separated", simultaneous(a, E(0), E(1)), False,
                  O.simultaneous_oracle(a, E(0), E(1))))

    cases.append(("causal: timelike future", causal_leq(E(0), E(2, 1)), True, O.causal_oracle(E(0), E(2, 1))))
    cases.append(("causal: spacelike", causal_leq(E(0), E(0, 1)), False, O.causal_oracle(E(0), E(0, 1))))

    cases.append(("ted: equal durations", ted(a, E(0), E(2), E(6), E(8)), True,
                  O.ted_oracle(a, E(0), E(2), E(6), E(8))))
    cases.append(("ted: unequal durations", ted(a, E(0), E(2), E(6), E(9)), False,
                  O.ted_oracle(a, E(0), E(2), E(6), E(9))))

    p = plus(cal, E(2), E(3))
    cases.append(("plus: 2 + 3", p.carrier, E(5), O.plus_oracle(cal, cal.point(E(2)), cal.point(E(3))).carrier))
    t = times(cal, E(2), E(3))
    cases.append(("times: 2 * 3", t.carrier, E(6), O.times_oracle(cal, cal.point(E(2)), cal.point(E(3))).carrier))

    cases.append(("col: on the x axis", col(rest(0, 0, 0), rest(1, 0, 0), rest(3, 0, 0)), True,
                  O.col_oracle(rest(0, 0, 0), rest(1, 0, 0), rest(3, 0, 0))))
    cases.append(("col: a right turn", col(rest(0, 0, 0), rest(3, 0, 0), rest(3, 4, 0)), False,
                  O.col_oracle(rest(0, 0, 0), rest(3, 0, 0), rest(3, 4, 0))))

    cases.append(("pa: shifted x-axis pair", pa(rest(0, 0, 0), rest(3, 0, 0), rest(0, 4, 0), rest(3, 4, 0)), True,
                  O.pa_oracle(rest(0, 0, 0), rest(3, 0, 0), rest(0, 4, 0), rest(3, 4, 0))))
    cases.append(("pa: x versus y", pa(rest(0, 0, 0), rest(3, 0, 0), rest(0, 0, 0), rest(0, 4, 0)), False,
                  O.pa_oracle(rest(0, 0, 0), rest(3, 0, 0), rest(0, 0, 0), rest(0, 4, 0))))

    d = dd(cal, rest(0, 0, 0), rest(3, 4, 0))
    cases.append(("dd: 3-4-5", d.carrier, E(5), O.dd_oracle(cal, rest(0, 0, 0), rest(3, 4, 0)).carrier))

    cases.append(("ort: right angle", ort(rest(0, 0, 0), rest(3, 0, 0), rest(0, 4, 0)), True,
                  O.ort_oracle(rest(0, 0, 0), rest(3, 0, 0), rest(0, 4, 0))))
    cases.append(("ort: zero angle", ort(rest(0, 0, 0), rest(3, 0, 0), rest(5, 0, 0)), False,
                  O.ort_oracle(rest(0, 0, 0), rest(3, 0, 0), rest(5, 0, 0))))

    bcal = Calibration(boosted, E(0), boosted.at(Fraction(5, 4)))
    tc = time_coord(bcal, E(5, 3))
    cases.append(("time_coord: boosted clock", tc.carrier, boosted.at(5), O.time_coord_oracle(bcal, E(5, 3)).carrier))

    ident = frame_from_velocity((0, 0, 0), o=E(0), unit=1, backend=EXACT)
    cases.append(("cord: identity frame", tuple(cord_values(ident, E(2, 3, 4, 0))), tuple(E(2, 3, 4, 0)),
                  tuple(O.cord_oracle(ident, E(2, 3, 4, 0)))))
    fb = frame_from_velocity((Fraction(3, 5), 0, 0), o=E(0), unit=1, backend=EXACT)
    cases.append(("cord: boosted frame", tuple(cord_values(fb, E(5, 3))), tuple(E(4)),
                  tuple(O.cord_oracle(fb, E(5, 3)))))

    cases.append(("mu: interval 4", mu(a, E(0), E(0), E(5, 3)), E(4), O.mu_oracle(a, E(0), E(0), E(5, 3))))
    cases.append(("mu: reversed pair", mu(a, E(0), E(5, 3), E(0)), E(-4), O.mu_oracle(a, E(0), E(5, 3), E(0))))

    cases.append(("med: both interval 4", med(E(0), E(5, 3), E(0), E(4)), True,
                  O.med_oracle(E(0), E(5, 3), E(0), E(4))))
    cases.append(("med: 2 versus 3", med(E(0), E(2), E(0), E(3)), False, O.med_oracle(E(0), E(2), E(0), E(3))))

    c2 = Calibration(a, E(0), E(2))
    cases.append(("iso: unit 1 to unit 2", iso(cal, c2, E(3)).carrier, E(6),
                  O.iso_oracle(cal, c2, cal.point(E(3))).carrier))
    return cases

"""The nine acceptance criteria, one test each, each printing a PASS/FAIL line."""

from __future__ import annotations

import filecmp
import itertools
import random
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES
from exact_fixtures import exact_cases
from formula_gen import formulas
from sigrel import cli
from sigrel.folkit import (
    InterpretationSpec, affine_plane, build_translated_model, delta_sentences, lines_spec,
    meaning_preservation_check, to_text,
)
from sigrel.interp import roundtrip_check, tu_separation
from sigrel.interp.golden import read_source, translate_file
from sigrel.minkowski import Event, Frame, rest_offset
from sigrel.scalar import APPROX, EXACT
from sigrel.signalling import (
    Calibration, causal_leq, cord_values, divide, frame_from_velocity, iso, neg, plus, times,
)
from sigrel.signalling import oracles as O
from sigrel.signalling.sweep import OPERATIONS, med_independence, oracle_sweep
from sigrel.specrel import (
    SPECREL0, Body, Quantity, SpecRelModel, axsym_report, body_eq, body_eq_sampled, check_axiom, coords_of, q_plus,
    q_times, quantity_eq, random_calibration, random_frame, w_holds,
)


def verdict(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_operations_match_oracles():
    start = time.perf_counter()
    sweep = oracle_sweep(samples=200, seed=0)
    cases = exact_cases()
    exact_bad = [name for name, got, want, oracle in cases if got != want or oracle != want]
    elapsed = time.perf_counter() - start
    covered = [op for op in OPERATIONS if sweep.counts.get(op, {}).get("checked") == 200]
    ok = sweep.ok and len(covered) >= 12 and not exact_bad and elapsed < 60
    verdict(1, ok, f"{len(covered)} operations x 200 instances, {len(sweep.mismatches)} mismatches; "
                   f"{len(cases) - len(exact_bad)}/{len(cases)} exact cases; {elapsed:.1f} s")


def test_criterion_2_coordinates():
    boosted = frame_from_velocity((Fraction(3, 5), 0, 0), o=Event.of(0), unit=1, backend=EXACT)
    exact = tuple(cord_values(boosted, Event.of(5, 3))) == tuple(Event.of(4))
    rng = random.Random("criterion-2")
    bad = 0
    for _ in range(1000):
        f = random_frame(rng, APPROX)
        e = Event.of(*(rng.uniform(-5, 5) for _ in range(4)), backend=APPROX)
        if tuple(cord_values(f, e)) != tuple(O.cord_oracle(f, e)):
            bad += 1
    verdict(2, exact and bad == 0, f"boosted (5,3,0,0) -> (4,0,0,0) exact: {exact}; 1000 random frames, {bad} mismatches")


def _field_laws(cal: Calibration, x, y, z) -> list[str]:
    zero, one = cal.zero, cal.one
    fails = []

    def law(name, ok):
        if not ok:
            fails.append(name)

    law("+ commutes", plus(cal, x, y) == plus(cal, y, x))
    law("+ associates", plus(cal, plus(cal, x, y), z) == plus(cal, x, plus(cal, y, z)))
    law("0 is neutral", plus(cal, x, zero) == x)
    law("negation", plus(cal, x, neg(cal, x)) == zero)
    law("* commutes", times(cal, x, y) == times(cal, y, x))
    law("* associates", times(cal, times(cal, x, y), z) == times(cal, x, times(cal, y, z)))
    law("1 is neutral", times(cal, x, one) == x)
    law("distributes", times(cal, x, plus(cal, y, z)) == plus(cal, times(cal, x, y), times(cal, x, z)))
    if x != zero:
        law("division", times(cal, divide(cal, y, x), x) == y)
    if causal_leq(x.carrier, y.carrier):
        law("order respects +", causal_leq(plus(cal, x, z).carrier, plus(cal, y, z).carrier))
    if causal_leq(zero.carrier, x.carrier) and causal_leq(zero.carrier, y.carrier):
        law("order respects *", causal_leq(zero.carrier, times(cal, x, y).carrier))
    law("order is total", causal_leq(x.carrier, y.carrier) or causal_leq(y.carrier, x.carrier))
    law("values", plus(cal, x, y).value() == x.value() + y.value()
        and times(cal, x, y).value() == x.value() * y.value())
    return fails


def _small(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.choice((1, 2, 4)))


def test_criterion_3_time_field_and_isomorphisms():
    rng = random.Random("criterion-3")
    failures: dict[str, int] = {}
    for _ in range(500):
        cal = random_calibration(rng, APPROX)
        x, y, z = (cal.at_value(_small(rng)) for _ in range(3))
        for name in _field_laws(cal, x, y, z):
            failures[name] = failures.get(name, 0) + 1
    iso_bad = 0
    for _ in range(100):
        src, dst = random_calibration(rng, APPROX), random_calibration(rng, APPROX)
        x, y = src.at_value(_small(rng)), src.at_value(_small(rng))
        ix, iy = iso(src, dst, x), iso(src, dst, y)
        ok = (iso(src, dst, plus(src, x, y)) == plus(dst, ix, iy)
              and iso(src, dst, times(src, x, y)) == times(dst, ix, iy)
              and iso(src, dst, src.zero) == dst.zero and iso(src, dst, src.one) == dst.one
              and ix.value() == x.value())
        iso_bad += not ok
    verdict(3, not failures and iso_bad == 0,
            f"ordered-field laws on 500 triples, failures {failures or 'none'}; 100 isomorphisms, {iso_bad} bad")


def _rescaled(f: Frame, k: Fraction) -> Frame:
    V = f.a.direction
    axes = [f.a.translated(rest_offset(V, p.base - f.a.base).scale(k)) for p in f.axes]
    return Frame(f.a, f.o, f.u, *axes)


def test_criterion_4_quantities_bodies_and_axioms():
    rng = random.Random("criterion-4")
    model = SpecRelModel(APPROX)
    cals = [random_calibration(rng, APPROX) for _ in range(6)]
    values = (Fraction(-1), Fraction(1, 2), Fraction(2))
    qs = [Quantity.from_value(v, c) for v in values for c in cals]
    q_bad = 0
    for q1, q2, q3 in (rng.sample(qs, 3) for _ in range(500)):
        e12, e21, e23, e13 = quantity_eq(q1, q2), quantity_eq(q2, q1), quantity_eq(q2, q3), quantity_eq(q1, q3)
        q_bad += not quantity_eq(q1, q1) or e12 != e21 or (e12 and e23 and not e13)
        q_bad += e12 != quantity_eq(q1, q2, via="canonical")
    op_bad = 0
    for _ in range(100):
        q1, q2, r = rng.choice(qs), rng.choice(qs), rng.choice(qs)
        q1b = Quantity.from_value(q1.canonical.value, rng.choice(cals))
        op_bad += not quantity_eq(q_plus(q1, r), q_plus(q1b, r)) or not quantity_eq(q_times(q1, r), q_times(q1b, r))
        op_bad += not quantity_eq(q_plus(q1, q2), q_plus(q2, q1))

    frames = [random_frame(rng, APPROX) for _ in range(3)]
    pool = [Body.observer(f) for f in frames]
    pool += [Body.observer(_rescaled(f, k)) for f in frames for k in (Fraction(1, 2), Fraction(3))]
    pool += [Body.observer(_rescaled(f, Fraction(-1))) for f in frames]
    b_bad = 0
    for b1, b2, b3 in (rng.choices(pool, k=3) for _ in range(500)):
        e12, e23, e13 = body_eq(b1, b2), body_eq(b2, b3), body_eq(b1, b3)
        b_bad += not body_eq(b1, b1) or e12 != body_eq(b2, b1) or (e12 and e23 and not e13)
    probes = [Event.of(*(rng.uniform(-4, 4) for _ in range(4)), backend=APPROX) for _ in range(3)]
    b_bad += sum(body_eq(b1, b2) != body_eq_sampled(b1, b2, probes) for b1, b2 in itertools.product(pool[:6], pool))

    w_bad = 0
    for _ in range(50):
        m, b = model.observer(rng), model.observer(rng)
        t = Fraction(rng.randint(-3, 3))
        e = b.frame.a.at(t)
        cs = coords_of(m, e)
        moved = [Quantity.from_value(q.canonical.value, rng.choice(cals)) for q in cs]
        w_bad += not (w_holds(m, b, cs) and w_holds(m, b, moved))

    axioms = {ax: check_axiom(model, ax, samples=50, seed=0) for ax in SPECREL0}
    axioms_ok = all(r.ok for r in axioms.values())
    sym = axsym_report(model, samples=50, seed=0)
    witness = sym.failures[0] if sym.failures else None
    sym_fails = witness is not None and witness["dist2_m"] != witness["dist2_k"]
    ok = q_bad == 0 and op_bad == 0 and b_bad == 0 and w_bad == 0 and axioms_ok and sym_fails
    verdict(4, ok, f"quantity/body equality: {q_bad + b_bad} law failures; operations on representatives: "
                   f"{op_bad + w_bad} failures; {'/'.join(SPECREL0)} hold: {axioms_ok}; "
                   f"AxSym fails with a two-observer witness: {sym_fails}")


def test_criterion_5_roundtrips():
    rep = roundtrip_check(samples=1000, seed=0, frame_samples=100)
    total = sum(c["checked"] for c in rep.counts.values())
    verdict(5, not rep.mismatches, f"{total} round trips over {len(rep.counts)} kinds, {len(rep.mismatches)} mismatches")


def test_criterion_6_tu_separation():
    rep = tu_separation(seed=0, samples=500)
    summary = ", ".join(f"{k}: {v['failures']}/{v['checked']}" for k, v in rep.counts.items())
    verdict(6, rep.ok, f"failures per check: {summary}")


EXPECTED_CLAUSES = {
    "exists-line": "∃ℓ_p,ℓ_q ℓ_p≠ℓ_q,Col(x,ℓ_p,ℓ_q)",
    "line-equality": "Col(ℓ_p,h_p,h_q),Col(ℓ_q,h_p,h_q)",
    "incidence": "Col(x,ℓ_p,ℓ_q)",
}
EXPECTED_DELTA = [
    "(∃p,q π(p,q,ℓ),π(p,q,ℓ')) ↔ ℓ=ℓ'",
    "(∃ℓ π(p,q,ℓ),π(p',q',ℓ)) ↔ (Col(p',p,q),Col(q',p,q))",
    "(∃ℓ π(p,q,ℓ)) ↔ p≠q",
    "I(p,ℓ) ↔ (∃p',q' π(p',q',ℓ),Col(p,p',q'))",
]


def _corrupted_lines_spec() -> InterpretationSpec:
    from sigrel.folkit.parser import Signature

    source = Signature(["Points", "Lines"], {"I": ("Points", "Lines")})
    target = Signature(["Points"], {"Col": ("Points", "Points", "Points")})
    spec = InterpretationSpec(source, target)
    # line equality compares the first points only
    spec.add_sort("Lines", "ℓ", "h", ("p", "q"), ("Points", "Points"),
                  "(not (= ℓ_p ℓ_q))", "(= ℓ_p h_p)")
    spec.add_relation("I", [("p", "Points"), ("ℓ", "Lines")], "(Col p ℓ_p ℓ_q)")
    return spec


def test_criterion_7_translations_and_meaning_preservation():
    clauses = {name: to_text(f) for name, f in translate_file("lines", read_source("lines_clauses.sexp"))}
    spec = lines_spec()
    delta = [to_text(d) for d in delta_sentences(spec)]
    fs = formulas()
    checked, bad = 0, 0
    for order in (2, 3):
        rep = meaning_preservation_check(spec, affine_plane(order), fs)
        checked += rep.checked
        bad += len(rep.mismatches)
    m = affine_plane(2)
    control = meaning_preservation_check(_corrupted_lines_spec(), m, fs, reference=build_translated_model(spec, m))
    ok = clauses == EXPECTED_CLAUSES and delta == EXPECTED_DELTA and bad == 0 and control.mismatches
    verdict(7, bool(ok), f"clauses match: {clauses == EXPECTED_CLAUSES}; delta matches: {delta == EXPECTED_DELTA}; "
                         f"{len(fs)} formulas, {checked} assignments on AG(2,2) and AG(2,3), {bad} mismatches; "
                         f"corrupted equality caught with {len(control.mismatches)} mismatches")


def test_criterion_8_med_independence():
    rep = med_independence(quadruples=1000, choices=20, seed=0)
    verdict(8, rep.ok, f"1000 quadruples ({rep.equal_pairs} equal) x 20 choices of (a, o), "
                       f"{len(rep.disagreements)} disagreements")


DETERMINISM_COMMANDS = [
    ["coordinatize", "--figures"],
    ["check-axioms", "--samples", "5", "--figures"],
    ["roundtrip", "--samples", "20", "--frame-samples", "5", "--figures"],
    ["tu-separation", "--samples", "30", "--figures"],
    ["translate", "--golden"],
    ["scenario", "gen"],
]


def test_criterion_9_reports_are_deterministic(tmp_path, capsys):
    differing, files = [], 0
    for command in DETERMINISM_COMMANDS:
        runs = []
        for i in range(2):
            out = tmp_path / f"{command[0]}-{i}"
            code = cli.main([*command, "--seed", "7", "--out", str(out)])
            runs.append((code, capsys.readouterr().out, out))
        (c1, s1, d1), (c2, s2, d2) = runs
        names = sorted(p.name for p in d1.iterdir())
        files += len(names)
        same = c1 == c2 == 0 and s1 == s2 and names == sorted(p.name for p in d2.iterdir())
        if not (same and all(filecmp.cmp(d1 / n, d2 / n, shallow=False) for n in names)):
            differing.append(command[0])
    verdict(9, not differing, f"{len(DETERMINISM_COMMANDS)} commands, {files} report files (JSON, CSV, PNG) "
                              f"byte-identical across two runs with seed 7; differing: {differing or 'none'}")

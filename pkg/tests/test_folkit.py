from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formula_gen import X, Y, L, H, atoms, formulas
from sigrel.errors import FormulaSyntaxError, MissingDefinition, NotEquivalence, SortError
from sigrel.folkit import (
    And, Eq, Exists, FiniteModel, InterpretationSpec, Not, Rel, Signature, Var, affine_plane, alpha_equivalent,
    build_translated_model, check_sorts, closure, delta_sentences, evaluate, free_vars, lines_spec, meaning_preservation_check, parse,
    parse_many, quantifier_depth, quotient, to_sexpr, to_text, translate,
)

POINTS = Signature(["Points", "Lines"], {"I": ("Points", "Lines")})


def test_parse_and_print():
    f = parse("(exists (ℓ Lines) (and (I x ℓ) (not (= x y))))", POINTS, {"x": "Points", "y": "Points"})
    assert to_text(f) == "∃ℓ I(x,ℓ),x≠y"
    assert parse(to_sexpr(f), POINTS, {"x": "Points", "y": "Points"}) == f
    assert [v.name for v in free_vars(f)] == ["x", "y"]
    assert quantifier_depth(f) == 1


def test_parse_errors():
    with pytest.raises(FormulaSyntaxError):
        parse("(and (I x ℓ)", POINTS)
    with pytest.raises(FormulaSyntaxError):
        parse_many("(I x ℓ))", POINTS, {"x": "Points", "ℓ": "Lines"})
    with pytest.raises(SortError):
        parse("(I x y)", POINTS, {"x": "Points", "y": "Points"})


def test_check_sorts_rejects_cross_sort_equality():
    with pytest.raises(SortError):
        check_sorts(Eq(X, L), POINTS)


def test_alpha_equivalence_and_closure():
    f = Exists((L,), Rel("I", (X, L)))
    g = Exists((H,), Rel("I", (X, H)))
    assert alpha_equivalent(f, g)
    assert not alpha_equivalent(f, Exists((L,), Rel("I", (Y, L))))
    assert free_vars(closure(f)) == []


def test_translation_of_incidence():
    spec = lines_spec()
    assert to_text(translate(spec, Rel("I", (X, L)))) == "Col(x,ℓ_p,ℓ_q)"
    assert to_text(translate(spec, Eq(L, H))) == "Col(ℓ_p,h_p,h_q),Col(ℓ_q,h_p,h_q)"


def _joint_model(order: int) -> FiniteModel:
    """Points with Col, lines with I, and π sending a pair of points to the line it spans."""
    m = affine_plane(order)
    tm = build_translated_model(lines_spec(), m)
    return FiniteModel(
        {"Points": m.carriers["Points"], "Lines": tm.carriers["Lines"]},
        {"Col": m.relations["Col"], "I": tm.relations["I"],
         "π": {(p, q, line) for line in tm.carriers["Lines"] for p, q in line.members}},
    )


def _counterexamples(joint: FiniteModel, f) -> list[dict]:
    vs = free_vars(f)
    out = []
    for values in itertools.product(*(joint.carriers[v.sort] for v in vs)):
        k = dict(zip(vs, values))
        if not evaluate(joint, f, k):
            out.append({v.name: x for v, x in k.items()})
    return out


def test_delta_sentences_hold_on_domain_tuples():
    joint = _joint_model(3)
    sentences = delta_sentences(lines_spec())
    assert len(sentences) == 4
    for f in sentences:
        bad = _counterexamples(joint, f)
        # read literally, the pair-equality sentence also ranges over degenerate pairs (p = q),
        # where the collinearity side holds trivially; every counterexample must be of that kind
        assert all(k["p"] == k["q"] or k["p'"] == k["q'"] for k in bad), to_text(f)
    pair_equality = sentences[1]
    assert _counterexamples(joint, pair_equality)


def test_quotient_counts_lines():
    spec = lines_spec()
    for p in (2, 3):
        assert len(quotient(spec, affine_plane(p), "Lines")) == p * p + p


def test_quotient_rejects_non_equivalences():
    source = Signature(["Points", "Lines"], {"I": ("Points", "Lines")})
    target = Signature(["Points"], {"Col": ("Points", "Points", "Points")})
    spec = InterpretationSpec(source, target)
    # "shares a point" is reflexive and symmetric but not transitive
    spec.add_sort("Lines", "ℓ", "h", ("p", "q"), ("Points", "Points"), "(not (= ℓ_p ℓ_q))",
                  "(or (= ℓ_p h_p) (= ℓ_p h_q) (= ℓ_q h_p) (= ℓ_q h_q))")
    spec.add_relation("I", [("p", "Points"), ("ℓ", "Lines")], "(Col p ℓ_p ℓ_q)")
    with pytest.raises(NotEquivalence):
        quotient(spec, affine_plane(3), "Lines")


def test_validate_reports_missing_definitions():
    spec = InterpretationSpec(POINTS, Signature(["Points"], {"Col": ("Points", "Points", "Points")}))
    with pytest.raises(MissingDefinition):
        spec.validate()
    lines_spec().validate()


def test_spec_json_round_trip():
    spec = lines_spec()
    back = InterpretationSpec.from_json(spec.to_json())
    assert back.to_json() == spec.to_json()
    f = Exists((L,), And((Rel("I", (X, L)), Not(Rel("I", (Y, L))))))
    assert translate(back, f) == translate(spec, f)


def test_translated_model_incidence():
    spec = lines_spec()
    tm = build_translated_model(spec, affine_plane(2))
    assert len(tm.carriers["Lines"]) == 6
    # every line of AG(2,2) has exactly two points
    for line in tm.carriers["Lines"]:
        assert sum((p, line) in tm.relations["I"] for p in tm.carriers["Points"]) == 2


def test_formula_supply_is_deterministic():
    assert formulas() == formulas()
    assert set(atoms()) <= set(formulas())


@settings(max_examples=25)
@given(st.sampled_from(formulas()), st.integers(0, 10_000))
def test_meaning_preserved_with_random_representatives(f, seed):
    rep = meaning_preservation_check(lines_spec(), affine_plane(3), [f], trials=10, seed=seed)
    assert rep.ok, rep.mismatches[:1]


def test_meaning_check_catches_a_wrong_incidence():
    good = lines_spec()
    bad = InterpretationSpec.from_json(good.to_json())
    bad.add_relation("I", [("p", "Points"), ("ℓ", "Lines")], "(= p ℓ_p)")
    m = affine_plane(2)
    rep = meaning_preservation_check(bad, m, [Rel("I", (X, L))], reference=build_translated_model(good, m))
    assert not rep.ok


def test_unknown_variable_names_are_kept_apart():
    v = Var("x", "Points")
    assert v != Var("x", "Lines")

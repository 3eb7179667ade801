"""The two concrete interpretations as data.

``tr_spec`` defines the reference-frame language (quantities Q, bodies B,
Ph, Obs, W, +, ⋆) over the signalling language (Par, Sig, T, R).  ``Tr_spec``
goes the other way.  Functions are written as relations whose first place is
the value, so ``(+ q q1 q2)`` reads q = q1 + q2.

Symbols whose definitions are whole experiments (∥, Ort, Cord, Iso, Plus,
Times) are kept as auxiliary target symbols; their meaning lives in
``sigrel.signalling``.  Everything else is a macro with a formula body.
"""

from __future__ import annotations

from ..folkit.interpretation import InterpretationSpec
from ..folkit.parser import Signature

SIGNALLING = Signature(["Par", "Sig"], {"T": ("Par", "Sig"), "R": ("Par", "Sig")})
SPECREL_LANG = Signature(["B", "Q"], {
    "Ph": ("B",), "Obs": ("B",), "W": ("B", "B", "Q", "Q", "Q", "Q"),
    "+": ("Q", "Q", "Q"), "⋆": ("Q", "Q", "Q"),
})

# experiment-defined symbols, evaluated semantically
AUXILIARY = {
    "∥": ("Par", "Par"),
    "Ort": ("Par", "Par", "Par", "Par"),
    "Cord": ("Sig",) * 5 + ("Par", "Sig", "Sig", "Par", "Par", "Par"),
    "Iso": ("Sig", "Sig", "Par", "Sig", "Sig", "Par", "Sig", "Sig"),
    "Plus": ("Sig", "Sig", "Sig", "Par", "Sig"),
    "Times": ("Sig", "Sig", "Sig", "Par", "Sig", "Sig"),
}

_Q = ("x", "a", "o", "u")
_Q_SORTS = ("Sig", "Par", "Sig", "Sig")
_B = ("σ", "a", "o", "u", "x", "y", "z")
_B_SORTS = ("Sig", "Par", "Sig", "Sig", "Par", "Par", "Par")


def _q(name: str) -> tuple[str, str]:
    return (name, "Q")


def _b(name: str) -> tuple[str, str]:
    return (name, "B")


def tr_spec() -> InterpretationSpec:
    """Reference frames inside signalling: the quantity field up to isomorphism, bodies as photons or frames."""
    target = Signature(list(SIGNALLING.sorts), {**SIGNALLING.relations, **AUXILIARY})
    spec = InterpretationSpec(SPECREL_LANG, target)
    S, P = "Sig", "Par"
    spec.add_macro("Ev", [("e", S)], "(forall (a Par) (-> (T a e) (R a e)))")
    spec.add_macro("Beg", [("s", S), ("e", S)], "(forall (b Par) (-> (T b s) (T b e)))")
    spec.add_macro("End", [("s", S), ("e", S)], "(forall (b Par) (-> (R b s) (R b e)))")
    spec.add_macro("Path", [("e", S), ("s", S), ("g", S)], "(and (Beg s e) (End s g))")
    spec.add_macro("≺", [("e", S), ("g", S)],
                   "(exists ((h Sig) (s1 Sig) (s2 Sig)) (and (Path e s1 h) (Path h s2 g)))")
    spec.add_macro("Fp", [("a", P), ("o", S), ("u", S)],
                   "(and (Ev o) (Ev u) (not (= o u)) (≺ o u) (T a o) (T a u))")
    spec.add_macro("Op", [("a", P), ("o", S), ("u", S), ("ax", P), ("ay", P), ("az", P)],
                   "(and (Fp a o u) (∥ a ax) (∥ a ay) (∥ a az)"
                   " (Ort a ax a ay) (Ort a ax a az) (Ort a ay a az))")
    spec.add_macro("λ", [("e1", S), ("e2", S), ("e3", S)],
                   "(and (exists (s Sig) (or (Path e1 s e2) (Path e2 s e1)))"
                   " (exists (s Sig) (or (Path e1 s e3) (Path e3 s e1)))"
                   " (exists (s Sig) (or (Path e2 s e3) (Path e3 s e2))))")
    spec.add_macro("wl", [("e", S), ("s", S)],
                   "(exists ((e1 Sig) (e2 Sig)) (and (λ e e1 e2) (Beg s e1) (End s e2)))")

    spec.add_sort("Q", "q", "q'", _Q, _Q_SORTS,
                  "(and (T q_a q_x) (Ev q_x) (Fp q_a q_o q_u))",
                  "(Iso q_x q'_x q_a q_o q_u q'_a q'_o q'_u)")
    spec.add_sort("B", "b", "b'", _B, _B_SORTS,
                  "(or (not (Ev b_σ)) (and (Ev b_σ) (Op b_a b_o b_u b_x b_y b_z)))",
                  "(or (and (not (Ev b_σ)) (not (Ev b'_σ)) (forall (e Sig) (<-> (wl e b_σ) (wl e b'_σ))))"
                  " (and (Ev b_σ) (Ev b'_σ) (forall (e Sig) (exists ((t Sig) (x Sig) (y Sig) (z Sig))"
                  " (and (Cord e t x y z b_a b_o b_u b_x b_y b_z) (Cord e t x y z b'_a b'_o b'_u b'_x b'_y b'_z))))))")

    spec.add_relation("Ph", [_b("b")], "(not (Ev b_σ))")
    spec.add_relation("Obs", [_b("b")], "(and (Ev b_σ) (Op b_a b_o b_u b_x b_y b_z))")
    for name, op in (("+", "(Plus q_x r1 r2 q_a q_o)"), ("⋆", "(Times q_x r1 r2 q_a q_o q_u)")):
        spec.add_relation(name, [_q("q"), _q("q1"), _q("q2")],
                          "(exists ((r1 Sig) (r2 Sig)) (and"
                          " (Iso r1 q1_x q_a q_o q_u q1_a q1_o q1_u)"
                          " (Iso r2 q2_x q_a q_o q_u q2_a q2_o q2_u) " + op + "))")
    spec.add_relation("W", [_b("m"), _b("b"), _q("t"), _q("x"), _q("y"), _q("z")],
                      "(exists ((e Sig) (rt Sig) (rx Sig) (ry Sig) (rz Sig)) (and"
                      " (Iso rt t_x m_a m_o m_u t_a t_o t_u) (Iso rx x_x m_a m_o m_u x_a x_o x_u)"
                      " (Iso ry y_x m_a m_o m_u y_a y_o y_u) (Iso rz z_x m_a m_o m_u z_a z_o z_u)"
                      " (Cord e rt rx ry rz m_a m_o m_u m_x m_y m_z)"
                      " (-> (not (Ev b_σ)) (wl e b_σ)) (-> (Ev b_σ) (T b_a e)) (Ev m_σ)))")
    spec.validate()
    return spec


def Tr_spec() -> InterpretationSpec:
    """Signalling inside reference frames: particles as observers, signals as photon-observer triples."""
    spec = InterpretationSpec(SIGNALLING, SPECREL_LANG)
    spec.add_macro("Zero", [_q("x")], "(+ x x x)")
    spec.add_macro("≤", [_q("x"), _q("y")], "(exists ((z Q) (w Q)) (and (⋆ w z z) (+ y x w)))")
    spec.add_macro("Meet", [_b("b"), _b("p"), _b("a"), _q("t")],
                   "(exists ((x Q) (y Q) (z Q)) (and (W b p t x y z) (W b a t x y z)))")
    spec.add_macro("meet", [_b("a"), _b("p"), _b("e")],
                   "(exists ((b B) (t Q)) (and (Meet b a p t) (Meet b a e t)))")

    spec.add_sort("Par", "a", "a'", ("b",), ("B",),
                  "(Obs a_b)",
                  "(forall ((t Q) (x Q) (y Q) (z Q)) (<-> (W a_b a'_b t x y z) (and (Zero x) (Zero y) (Zero z))))")
    spec.add_sort("Sig", "σ", "σ'", ("b", "p", "e"), ("B", "B", "B"),
                  "(and (Ph σ_p) (Obs σ_b) (Obs σ_e) (exists ((t Q) (t' Q))"
                  " (and (≤ t t') (Meet σ_b σ_p σ_b t) (Meet σ_b σ_p σ_e t'))))",
                  "(and (meet σ_b σ'_b σ_p) (meet σ_e σ'_e σ_p) (-> (not (meet σ_b σ_p σ_e)) (= σ_p σ'_p)))")
    spec.add_relation("T", [("a", "Par"), ("σ", "Sig")], "(meet a_b σ_b σ_p)")
    spec.add_relation("R", [("a", "Par"), ("σ", "Sig")], "(meet a_b σ_e σ_p)")
    spec.validate()
    return spec


def lines_spec() -> InterpretationSpec:
    from ..folkit.models import lines_spec as _lines

    return _lines()


SPECS = {"lines": lines_spec, "tr": tr_spec, "Tr": Tr_spec}

"""Deterministic supply of small formulas over the points/lines signature."""

from __future__ import annotations

import itertools
import random

from sigrel.folkit import And, Eq, Exists, Forall, Iff, Implies, Not, Or, Rel, Var

X, Y = Var("x", "Points"), Var("y", "Points")
L, H = Var("ℓ", "Lines"), Var("h", "Lines")
VARS = (X, Y, L, H)


def atoms() -> list:
    out = [Rel("I", (p, l)) for p in (X, Y) for l in (L, H)]
    return out + [Eq(X, Y), Eq(L, H)]


def _line_quantifiers(f) -> int:
    """Largest number of nested quantifiers over lines on one branch."""
    if isinstance(f, (Rel, Eq)):
        return 0
    if isinstance(f, Not):
        return _line_quantifiers(f.body)
    if isinstance(f, (And, Or)):
        return max(_line_quantifiers(g) for g in f.items)
    if isinstance(f, (Implies, Iff)):
        return max(_line_quantifiers(f.left), _line_quantifiers(f.right))
    return _line_quantifiers(f.body) + sum(v.sort == "Lines" for v in f.vars)


def _unary(f) -> list:
    out = [Not(f)]
    for v in VARS:
        out += [Exists((v,), f), Forall((v,), f)]
    return out


def _binary(f, g) -> list:
    return [And((f, g)), Or((f, g)), Implies(f, g), Iff(f, g)]


def formulas(max_depth: int = 3, per_depth: int = 40, seed: int = 0, max_line_quantifiers: int = 2) -> list:
    """All atoms and all depth-1 formulas; then ``per_depth`` seeded picks at each deeper level.

    Formulas nesting more than ``max_line_quantifiers`` line quantifiers are skipped:
    the one-sorted side quantifies over point pairs, so each one costs a factor |P|².
    """
    rng = random.Random(f"formulas:{seed}")
    layers = [atoms()]
    for depth in range(1, max_depth + 1):
        below = layers[-1]
        anything = [f for layer in layers for f in layer]
        cands = [u for f in below for u in _unary(f)]
        cands += [b for f, g in itertools.product(below, anything) for b in _binary(f, g)]
        cands = [f for f in cands if _line_quantifiers(f) <= max_line_quantifiers]
        if depth > 1:
            cands = rng.sample(cands, min(per_depth, len(cands)))
        layers.append(cands)
    return [f for layer in layers for f in layer]

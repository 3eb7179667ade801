"""Finite many-sorted models, Tarskian evaluation, and the model-level translation."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Sequence

from ..errors import NotEquivalence, UnassignedVariable
from .interpretation import InterpretationSpec, RelDef, translate, translation_of_assignment_vars
from .syntax import And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Rel, Var, free_vars, substitute



@dataclass
class FiniteModel:
    """Finite carriers per sort; relations as tuple sets or as Python predicates."""

    carriers: dict[str, list] = field(default_factory=dict)
    relations: dict[str, Any] = field(default_factory=dict)

    def holds(self, name: str, args: tuple) -> bool:
        ext = self.relations[name]
        if callable(ext):
            return bool(ext(*args))
        return args in ext


def _compile(f: Formula, m: FiniteModel) -> Callable[[dict], bool]:
    if isinstance(f, Rel):
        name, args = f.name, f.args
        ext = m.relations.get(name)
        if ext is None:
            raise KeyError(f"model has no relation {name!r}")
        if callable(ext):
            return lambda k: bool(ext(*(k[a] for a in args)))
        return lambda k: tuple(k[a] for a in args) in ext
    if isinstance(f, Eq):
        left, right = f.left, f.right
        return lambda k: k[left] == k[right]
    if isinstance(f, Not):
        body = _compile(f.body, m)
        return lambda k: not body(k)
    if isinstance(f, And):
        items = [_compile(g, m) for g in f.items]
        return lambda k: all(g(k) for g in items)
    if isinstance(f, Or):
        items = [_compile(g, m) for g in f.items]
        return lambda k: any(g(k) for g in items)
    if isinstance(f, Implies):
        left, right = _compile(f.left, m), _compile(f.right, m)
        return lambda k: (not left(k)) or right(k)
    if isinstance(f, Iff):
        left, right = _compile(f.left, m), _compile(f.right, m)
        return lambda k: left(k) == right(k)
    body = _compile(f.body, m)
    vs = f.vars
    pools = [m.carriers.get(v.sort, []) for v in vs]
    want = isinstance(f, Exists)

    def quant(k: dict) -> bool:
        inner = dict(k)
        for combo in itertools.product(*pools):
            for v, x in zip(vs, combo):
                inner[v] = x
            if body(inner) == want:
                return want
        return not want

    return quant


def compile_formula(f: Formula, m: FiniteModel) -> Callable[[Mapping[Var, Any]], bool]:
    run = _compile(f, m)
    needed = free_vars(f)

    def call(k: Mapping[Var, Any]) -> bool:
        for v in needed:
            if v not in k:
                raise UnassignedVariable(v.name)
        return run(dict(k))

    return call


def evaluate(m: FiniteModel, f: Formula, k: Mapping[Var, Any] | None = None) -> bool:
    """Tarskian truth of ``f`` in ``m`` under assignment ``k`` (exhaustive quantification)."""
    return compile_formula(f, m)(k or {})


def assignments(m: FiniteModel, vs: Sequence[Var]):
    for combo in itertools.product(*(m.carriers.get(v.sort, []) for v in vs)):
        yield dict(zip(vs, combo))


# translated models


@dataclass(frozen=True, order=True)
class ClassOf:
    """An element of a defined sort: an equivalence class of matched tuples."""

    sort: str
    members: tuple

    @property
    def least(self) -> tuple:
        return self.members[0]

    def __repr__(self):
        return f"[{self.sort}:{self.members[0]}]"


def _domain_tuples(spec: InterpretationSpec, m: FiniteModel, sort: str) -> list[tuple]:
    sd = spec.sorts[sort]
    vs = sd.matched(sd.var)
    check = compile_formula(sd.domain, m)
    pools = [m.carriers.get(s, []) for s in sd.sorts]
    return [t for t in itertools.product(*pools) if check(dict(zip(vs, t)))]


def quotient(spec: InterpretationSpec, m: FiniteModel, sort: str) -> list[ClassOf]:
    """U/E for the defined sort; raises NotEquivalence if E is not an equivalence on U."""
    sd = spec.sorts[sort]
    U = _domain_tuples(spec, m, sort)
    a, b = sd.matched(sd.var), sd.matched(sd.other)
    eq = compile_formula(sd.equality, m)

    def E(u, v) -> bool:
        k = dict(zip(a, u))
        k.update(zip(b, v))
        return eq(k)

    rel = {(u, v) for u in U for v in U if E(u, v)}
    for u in U:
        if (u, u) not in rel:
            raise NotEquivalence(f"{sort}: equality formula is not reflexive at {u}")
    for u, v in rel:
        if (v, u) not in rel:
            raise NotEquivalence(f"{sort}: equality formula is not symmetric at {u}, {v}")
    succ: dict = {}
    for u, v in rel:
        succ.setdefault(u, set()).add(v)
    for u, vs in succ.items():
        for v in vs:
            if not succ.get(v, set()) <= vs:
                raise NotEquivalence(f"{sort}: equality formula is not transitive through {v}")
    classes: list[ClassOf] = []
    seen: set = set()
    for u in U:
        if u in seen:
            continue
        members = tuple(sorted(succ[u], key=repr))
        seen.update(members)
        classes.append(ClassOf(sort, members))
    return classes


def _expand_model(spec: InterpretationSpec, m: FiniteModel) -> FiniteModel:
    """The target model together with the spec's macros as predicates."""
    out = FiniteModel(dict(m.carriers), dict(m.relations))
    for name, rd in spec.macros.items():
        if name in out.relations:
            continue
        run = compile_formula(rd.body, out)
        params = rd.params
        out.relations[name] = (lambda run, params: lambda *args: run(dict(zip(params, args))))(run, params)
    return out


def build_translated_model(spec: InterpretationSpec, m: FiniteModel) -> FiniteModel:
    """tr(m): defined sorts become quotients, defined relations hold when their
    defining formula holds for some representatives."""
    m = _expand_model(spec, m)
    carriers: dict[str, list] = {}
    for sort in spec.source.sorts:
        if sort in spec.sorts:
            carriers[sort] = quotient(spec, m, sort)
        else:
            carriers[sort] = list(m.carriers.get(sort, []))
    relations: dict[str, set] = {}
    for name, rd in spec.relations.items():
        run = compile_formula(rd.body, m)
        ext = set()
        for combo in itertools.product(*(carriers[p.sort] for p in rd.params)):
            choices = []
            for p, x in zip(rd.params, combo):
                if p.sort in spec.sorts:
                    matched = spec.sorts[p.sort].matched(p.name)
                    choices.append([dict(zip(matched, t)) for t in x.members])
                else:
                    choices.append([{p: x}])
            for picks in itertools.product(*choices):
                k: dict = {}
                for d in picks:
                    k.update(d)
                if run(k):
                    ext.add(combo)
                    break
        relations[name] = ext
    return FiniteModel(carriers, relations)


def translate_assignment(spec: InterpretationSpec, f: Formula, k: Mapping[Var, Any],
                         rng: random.Random | None = None, matched: Mapping | None = None) -> dict[Var, Any]:
    """tr(k): kept-sort values unchanged; a defined-sort value becomes one of its
    representatives (the least one, or a random one when ``rng`` is given).

    ``matched`` is the variable matching of ``f`` when already computed.
    """
    if matched is None:
        matched = translation_of_assignment_vars(spec, f)
    out: dict[Var, Any] = {}
    for v, targets in matched.items():
        x = k[v]
        if v.sort in spec.sorts:
            rep_ = rng.choice(x.members) if rng is not None else x.least
            out.update(zip(targets, rep_))
        else:
            out[v] = x
    return out


@dataclass
class PreservationReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"checked": self.checked, "mismatches": self.mismatches[:20], "mismatch_count": len(self.mismatches)}


def meaning_preservation_check(spec: InterpretationSpec, m: FiniteModel, formulas: Sequence[Formula],
                               trials: int | None = None, seed: int = 0,
                               reference: FiniteModel | None = None) -> PreservationReport:
    """Compare tr(m) |= psi[k] with m |= tr(psi)[tr(k)].

    With ``trials=None`` every assignment is checked with least representatives;
    otherwise ``trials`` random assignments with random representatives.
    ``reference`` replaces tr(m) on the left-hand side (used for negative controls).
    """
    rng = random.Random(seed)
    left_model = reference if reference is not None else build_translated_model(spec, m)
    right_model = _expand_model(spec, m)
    report = PreservationReport()
    for f in formulas:
        lhs = compile_formula(f, left_model)
        rhs = compile_formula(translate(spec, f), right_model)
        vs = free_vars(f)
        matched = translation_of_assignment_vars(spec, f)
        if trials is None:
            ks = assignments(left_model, vs)
            pick = None
        else:
            ks = ({v: rng.choice(left_model.carriers[v.sort]) for v in vs} for _ in range(trials))
            pick = rng
        for k in ks:
            report.checked += 1
            a = lhs(k)
            b = rhs(translate_assignment(spec, f, k, pick, matched))
            if a != b:
                report.mismatches.append({"formula": repr(f)[:200], "assignment": {v.name: repr(x) for v, x in k.items()},
                                          "translated_model": a, "source_model": b})
    return report


def expand_macros(spec: InterpretationSpec, f: Formula, macros: Mapping[str, RelDef] | None = None) -> Formula:
    """Replace macro atoms by their (recursively expanded) definitions."""
    macros = spec.macros if macros is None else macros

    def ex(g: Formula) -> Formula:
        if isinstance(g, Rel) and g.name in macros:
            rd = macros[g.name]
            return ex(substitute(rd.body, dict(zip(rd.params, g.args))))
        if isinstance(g, (Rel, Eq)):
            return g
        if isinstance(g, Not):
            return Not(ex(g.body))
        if isinstance(g, And):
            return And(tuple(ex(h) for h in g.items))
        if isinstance(g, Or):
            return Or(tuple(ex(h) for h in g.items))
        if isinstance(g, Implies):
            return Implies(ex(g.left), ex(g.right))
        if isinstance(g, Iff):
            return Iff(ex(g.left), ex(g.right))
        return type(g)(g.vars, ex(g.body))

    return ex(f)


# affine-plane fixtures


def affine_plane(order: int) -> FiniteModel:
    """AG(2, p) for prime p as a one-sorted model: Points with the ternary Col."""
    pts = [(x, y) for x in range(order) for y in range(order)]

    def col(a, b, c) -> bool:
        # cross product of (b - a) and (c - a) vanishes mod p; coincidences count as collinear
        return ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) % order == 0

    ext = {(a, b, c) for a in pts for b in pts for c in pts if col(a, b, c)}
    return FiniteModel({"Points": pts}, {"Col": ext})


def lines_spec() -> InterpretationSpec:
    """Two-sorted affine planes (points, lines, incidence) inside the one-sorted Col language."""
    from .parser import Signature

    source = Signature(["Points", "Lines"], {"I": ("Points", "Lines")})
    target = Signature(["Points"], {"Col": ("Points", "Points", "Points")})
    spec = InterpretationSpec(source, target)
    spec.add_sort("Lines", "ℓ", "h", ("p", "q"), ("Points", "Points"),
                  "(not (= ℓ_p ℓ_q))",
                  "(and (Col ℓ_p h_p h_q) (Col ℓ_q h_p h_q))")
    spec.add_relation("I", [("p", "Points"), ("ℓ", "Lines")], "(Col p ℓ_p ℓ_q)")
    return spec



"""Interpretations that define new sorts, and the translation they induce.

A new sort is given by a variable matching (each variable x of the sort
stands for a tuple x_s1, ..., x_sn of target variables), a domain formula
over x's matched variables, and an equality formula over the matched
variables of two such variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..errors import MissingDefinition, SortError
from .parser import Signature, check_sorts, parse
from .syntax import (
    And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Rel, Var, all_names, closure, conj, fresh_name,
    substitute, to_sexpr,
)


@dataclass(frozen=True)
class SortDef:
    """Definition of a new sort by matching, domain formula and equality formula."""

    name: str
    var: str
    other: str
    suffixes: tuple[str, ...]
    sorts: tuple[str, ...]
    domain: Formula
    equality: Formula

    def matched(self, name: str) -> tuple[Var, ...]:
        return tuple(Var(f"{name}_{s}", t) for s, t in zip(self.suffixes, self.sorts))


@dataclass(frozen=True)
class RelDef:
    """Defining formula of a source relation; new-sort parameters appear through their matched variables."""

    name: str
    params: tuple[Var, ...]
    body: Formula


@dataclass
class InterpretationSpec:
    source: Signature
    target: Signature
    sorts: dict[str, SortDef] = field(default_factory=dict)
    relations: dict[str, RelDef] = field(default_factory=dict)
    # target-language abbreviations usable inside defining formulas (kept as relation symbols)
    macros: dict[str, RelDef] = field(default_factory=dict)

    def target_sorts_of(self, v: Var) -> tuple[Var, ...]:
        return self.sorts[v.sort].matched(v.name) if v.sort in self.sorts else (v,)

    def projection(self, sort: str) -> str:
        return "π" if len(self.sorts) == 1 else f"π_{sort}"

    def target_signature(self) -> Signature:
        sig = Signature(list(self.target.sorts), dict(self.target.relations))
        for m in self.macros.values():
            sig.relations[m.name] = tuple(p.sort for p in m.params)
        return sig

    def validate(self) -> None:
        """Well-sortedness of every defining formula over the matched variables."""
        tsig = self.target_signature()
        for sd in self.sorts.values():
            for s in sd.sorts:
                if s not in tsig.sorts:
                    raise SortError(f"matched sort {s!r} of {sd.name} is not a target sort")
            check_sorts(sd.domain, tsig)
            check_sorts(sd.equality, tsig)
            if len(sd.suffixes) != len(sd.sorts):
                raise SortError(f"matching of {sd.name} has mismatched arity")
        for rd in self.relations.values():
            if rd.name not in self.source.relations:
                raise MissingDefinition(rd.name)
            if tuple(p.sort for p in rd.params) != tuple(self.source.relations[rd.name]):
                raise SortError(f"parameters of {rd.name} do not match the source signature")
            check_sorts(rd.body, tsig)
        for sort in self.source.sorts:
            if sort not in self.sorts and sort not in self.target.sorts:
                raise MissingDefinition(f"sort {sort}")

    # serialisation

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "sorts": [
                {"name": s.name, "var": s.var, "other": s.other, "suffixes": list(s.suffixes),
                 "target_sorts": list(s.sorts), "domain": to_sexpr(s.domain), "equality": to_sexpr(s.equality)}
                for s in self.sorts.values()
            ],
            "relations": [_reldef_json(r) for r in self.relations.values()],
            "macros": [_reldef_json(r) for r in self.macros.values()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "InterpretationSpec":
        spec = cls(Signature.from_json(data["source"]), Signature.from_json(data["target"]))
        for m in data.get("macros", []):
            spec.add_macro(m["name"], [tuple(p) for p in m["params"]], m["body"])
        for s in data["sorts"]:
            spec.add_sort(s["name"], s["var"], s["other"], s["suffixes"], s["target_sorts"], s["domain"], s["equality"])
        for r in data["relations"]:
            spec.add_relation(r["name"], [tuple(p) for p in r["params"]], r["body"])
        return spec

    # builders taking formula text

    def _free_sorts(self, params) -> dict[str, str]:
        free: dict[str, str] = {}
        for name, sort in params:
            if sort in self.sorts:
                for v in self.sorts[sort].matched(name):
                    free[v.name] = v.sort
            else:
                free[name] = sort
        return free

    def add_sort(self, name, var, other, suffixes, sorts, domain: str, equality: str) -> SortDef:
        suffixes, sorts = tuple(suffixes), tuple(sorts)
        tmp = SortDef(name, var, other, suffixes, sorts, And(()), And(()))
        free = {v.name: v.sort for v in tmp.matched(var) + tmp.matched(other)}
        tsig = self.target_signature()
        sd = SortDef(name, var, other, suffixes, sorts, parse(domain, tsig, free), parse(equality, tsig, free))
        self.sorts[name] = sd
        return sd

    def add_relation(self, name, params, body: str) -> RelDef:
        vs = tuple(Var(n, s) for n, s in params)
        rd = RelDef(name, vs, parse(body, self.target_signature(), self._free_sorts(params)))
        self.relations[name] = rd
        return rd

    def add_macro(self, name, params, body: str) -> RelDef:
        vs = tuple(Var(n, s) for n, s in params)
        sig = self.target_signature()
        sig.relations[name] = tuple(s for _, s in params)
        rd = RelDef(name, vs, parse(body, sig, {n: s for n, s in params}))
        self.macros[name] = rd
        return rd


def _reldef_json(r: RelDef) -> dict:
    return {"name": r.name, "params": [[p.name, p.sort] for p in r.params], "body": to_sexpr(r.body)}


class _Translator:
    def __init__(self, spec: InterpretationSpec, f: Formula):
        self.spec = spec
        self.used = set(all_names(f))

    def match(self, v: Var) -> tuple[Var, ...]:
        sd = self.spec.sorts[v.sort]
        out = []
        for w in sd.matched(v.name):
            name = fresh_name(w.name, self.used)
            self.used.add(name)
            out.append(Var(name, w.sort))
        return tuple(out)

    def image(self, v: Var, env: Mapping[Var, tuple[Var, ...]]) -> tuple[Var, ...]:
        if v.sort in self.spec.sorts:
            return env[v]
        if v.sort not in self.spec.target.sorts:
            raise MissingDefinition(f"sort {v.sort}")
        return (v,)

    def instantiate(self, template: Formula, mapping: dict[Var, Var]) -> Formula:
        out = substitute(template, mapping, avoid=self.used)
        self.used |= all_names(out)
        return out

    def sort_formula(self, sd: SortDef, which: str, *images: tuple[Var, ...]) -> Formula:
        mapping: dict[Var, Var] = {}
        names = (sd.var,) if which == "domain" else (sd.var, sd.other)
        for name, img in zip(names, images):
            mapping.update(zip(sd.matched(name), img))
        return self.instantiate(sd.domain if which == "domain" else sd.equality, mapping)

    def tr(self, f: Formula, env: dict[Var, tuple[Var, ...]]) -> Formula:
        spec = self.spec
        if isinstance(f, Rel):
            if f.name not in spec.relations:
                if f.name in spec.target.relations and all(a.sort not in spec.sorts for a in f.args):
                    return f
                raise MissingDefinition(f.name)
            rd = spec.relations[f.name]
            mapping: dict[Var, Var] = {}
            for p, a in zip(rd.params, f.args):
                img = self.image(a, env)
                if p.sort in spec.sorts:
                    mapping.update(zip(spec.sorts[p.sort].matched(p.name), img))
                else:
                    mapping[p] = img[0]
            return self.instantiate(rd.body, mapping)
        if isinstance(f, Eq):
            if f.left.sort in spec.sorts:
                sd = spec.sorts[f.left.sort]
                return self.sort_formula(sd, "equality", env[f.left], env[f.right])
            self.image(f.left, env)
            return f
        if isinstance(f, Not):
            return Not(self.tr(f.body, env))
        if isinstance(f, And):
            return And(tuple(self.tr(g, env) for g in f.items))
        if isinstance(f, Or):
            return Or(tuple(self.tr(g, env) for g in f.items))
        if isinstance(f, Implies):
            return Implies(self.tr(f.left, env), self.tr(f.right, env))
        if isinstance(f, Iff):
            return Iff(self.tr(f.left, env), self.tr(f.right, env))
        inner = dict(env)
        new_vars: list[Var] = []
        domains: list[Formula] = []
        for v in f.vars:
            if v.sort in spec.sorts:
                img = self.match(v)
                inner[v] = img
                new_vars.extend(img)
                domains.append(self.sort_formula(spec.sorts[v.sort], "domain", img))
            else:
                self.image(v, inner)
                inner.pop(v, None)
                new_vars.append(v)
        body = self.tr(f.body, inner)
        if isinstance(f, Exists):
            return Exists(tuple(new_vars), conj(*domains, body) if domains else body)
        return Forall(tuple(new_vars), Implies(conj(*domains), body) if domains else body)


def translate(spec: InterpretationSpec, f: Formula) -> Formula:
    """tr(f): quantifiers via domain formulas, equality via equality formulas, atoms via definitions."""
    from .syntax import free_vars

    t = _Translator(spec, f)
    env: dict[Var, tuple[Var, ...]] = {}
    for v in free_vars(f):
        if v.sort in spec.sorts:
            env[v] = t.match(v)
    return t.tr(f, env)


def translation_of_assignment_vars(spec: InterpretationSpec, f: Formula) -> dict[Var, tuple[Var, ...]]:
    """The matched variables that ``translate`` gives to the free variables of ``f``."""
    from .syntax import free_vars

    t = _Translator(spec, f)
    return {v: (t.match(v) if v.sort in spec.sorts else (v,)) for v in free_vars(f)}


def delta_signature(spec: InterpretationSpec) -> Signature:
    sig = spec.target_signature().merged(spec.source)
    for sd in spec.sorts.values():
        sig.relations[spec.projection(sd.name)] = sd.sorts + (sd.name,)
    return sig


def delta_sentences(spec: InterpretationSpec, closed: bool = False) -> list[Formula]:
    """Definitional-extension sentences: three per new sort, one per defined relation.

    Free variables are left implicitly universal unless ``closed`` is set.
    """
    out: list[Formula] = []
    for sd in spec.sorts.values():
        pi = spec.projection(sd.name)
        ell = Var(sd.var, sd.name)
        ell2 = Var(sd.var + "'", sd.name)
        pv = tuple(Var(s, t) for s, t in zip(sd.suffixes, sd.sorts))
        pv2 = tuple(Var(s + "'", t) for s, t in zip(sd.suffixes, sd.sorts))
        used = {v.name for v in pv + pv2} | {ell.name, ell2.name}
        eq_inst = substitute(sd.equality, {**dict(zip(sd.matched(sd.other), pv)), **dict(zip(sd.matched(sd.var), pv2))},
                             avoid=used)
        dom_inst = substitute(sd.domain, dict(zip(sd.matched(sd.var), pv)), avoid=used)
        out.append(Iff(Exists(pv, And((Rel(pi, pv + (ell,)), Rel(pi, pv + (ell2,))))), Eq(ell, ell2)))
        out.append(Iff(Exists((ell,), And((Rel(pi, pv + (ell,)), Rel(pi, pv2 + (ell,))))), eq_inst))
        out.append(Iff(Exists((ell,), Rel(pi, pv + (ell,))), dom_inst))
    for rd in spec.relations.values():
        used = {p.name for p in rd.params} | all_names(rd.body)
        mapping: dict[Var, Var] = {}
        witnesses: list[Var] = []
        links: list[Formula] = []
        for p in rd.params:
            if p.sort not in spec.sorts:
                continue
            sd = spec.sorts[p.sort]
            fresh = []
            for s, t in zip(sd.suffixes, sd.sorts):
                name = fresh_name(s + "'", used)
                used.add(name)
                fresh.append(Var(name, t))
            mapping.update(zip(sd.matched(p.name), fresh))
            witnesses.extend(fresh)
            links.append(Rel(spec.projection(sd.name), tuple(fresh) + (p,)))
        body = substitute(rd.body, mapping, avoid=used)
        rhs = Exists(tuple(witnesses), conj(*links, body)) if witnesses else body
        out.append(Iff(Rel(rd.name, rd.params), rhs))
    return [closure(s) for s in out] if closed else out

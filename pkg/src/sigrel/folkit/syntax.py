"""Many-sorted first-order formulas over variables (no function symbols)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union


@dataclass(frozen=True)
class Var:
    name: str
    sort: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple[Var, ...]


@dataclass(frozen=True)
class Eq:
    left: Var
    right: Var


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: tuple[Var, ...]
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    vars: tuple[Var, ...]
    body: "Formula"


Formula = Union[Rel, Eq, Not, And, Or, Implies, Iff, Exists, Forall]
TRUE = And(())
FALSE = Or(())


def conj(*items: Formula) -> Formula:
    """n-ary conjunction, flattening nested conjunctions."""
    flat: list[Formula] = []
    for f in items:
        if isinstance(f, And):
            flat.extend(f.items)
        else:
            flat.append(f)
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def exists(vs: Iterable[Var], body: Formula) -> Formula:
    vs = tuple(vs)
    return Exists(vs, body) if vs else body


def forall(vs: Iterable[Var], body: Formula) -> Formula:
    vs = tuple(vs)
    return Forall(vs, body) if vs else body


# traversal


def free_vars(f: Formula) -> list[Var]:
    """Free variables in order of first occurrence."""
    out: list[Var] = []
    seen: set[Var] = set()

    def walk(g: Formula, bound: frozenset[Var]):
        if isinstance(g, Rel):
            vs: Iterable[Var] = g.args
        elif isinstance(g, Eq):
            vs = (g.left, g.right)
        elif isinstance(g, Not):
            walk(g.body, bound)
            return
        elif isinstance(g, (And, Or)):
            for h in g.items:
                walk(h, bound)
            return
        elif isinstance(g, (Implies, Iff)):
            walk(g.left, bound)
            walk(g.right, bound)
            return
        else:
            walk(g.body, bound | frozenset(g.vars))
            return
        for v in vs:
            if v not in bound and v not in seen:
                seen.add(v)
                out.append(v)

    walk(f, frozenset())
    return out


def all_names(f: Formula) -> set[str]:
    """Every variable name occurring in ``f``, free or bound."""
    names: set[str] = set()
    for node in walk(f):
        if isinstance(node, Rel):
            names.update(v.name for v in node.args)
        elif isinstance(node, Eq):
            names.update((node.left.name, node.right.name))
        elif isinstance(node, (Exists, Forall)):
            names.update(v.name for v in node.vars)
    return names


def walk(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from walk(f.body)
    elif isinstance(f, (And, Or)):
        for g in f.items:
            yield from walk(g)
    elif isinstance(f, (Implies, Iff)):
        yield from walk(f.left)
        yield from walk(f.right)
    elif isinstance(f, (Exists, Forall)):
        yield from walk(f.body)


def relations(f: Formula) -> set[str]:
    return {g.name for g in walk(f) if isinstance(g, Rel)}


def quantifier_depth(f: Formula) -> int:
    if isinstance(f, (Rel, Eq)):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    if isinstance(f, (And, Or)):
        return max((quantifier_depth(g) for g in f.items), default=0)
    if isinstance(f, (Implies, Iff)):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    return len(f.vars) + quantifier_depth(f.body)


def fresh_name(base: str, used: set[str]) -> str:
    if base not in used:
        return base
    i = 1
    while f"{base}{i}" in used:
        i += 1
    return f"{base}{i}"


def substitute(f: Formula, mapping: Mapping[Var, Var], avoid: set[str] | None = None) -> Formula:
    """Capture-avoiding simultaneous substitution of variables for free variables."""
    if not mapping:
        return f
    avoid = set(avoid or ()) | {v.name for v in mapping.values()} | all_names(f)

    def sub(g: Formula, m: Mapping[Var, Var]) -> Formula:
        if isinstance(g, Rel):
            return Rel(g.name, tuple(m.get(v, v) for v in g.args))
        if isinstance(g, Eq):
            return Eq(m.get(g.left, g.left), m.get(g.right, g.right))
        if isinstance(g, Not):
            return Not(sub(g.body, m))
        if isinstance(g, And):
            return And(tuple(sub(h, m) for h in g.items))
        if isinstance(g, Or):
            return Or(tuple(sub(h, m) for h in g.items))
        if isinstance(g, Implies):
            return Implies(sub(g.left, m), sub(g.right, m))
        if isinstance(g, Iff):
            return Iff(sub(g.left, m), sub(g.right, m))
        inner = {k: v for k, v in m.items() if k not in g.vars}
        targets = {v.name for v in inner.values()}
        new_vars = []
        for v in g.vars:
            if v.name in targets:
                nv = Var(fresh_name(v.name, avoid), v.sort)
                avoid.add(nv.name)
                inner[v] = nv
                new_vars.append(nv)
            else:
                new_vars.append(v)
        return type(g)(tuple(new_vars), sub(g.body, inner))

    return sub(f, dict(mapping))


def closure(f: Formula) -> Formula:
    """Universal closure over the free variables in order of first occurrence."""
    return forall(free_vars(f), f)


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    """Equal up to renaming of bound variables."""

    def eq(a: Formula, b: Formula, ma: dict, mb: dict, depth: int) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, (Rel, Eq)):
            if isinstance(a, Rel) and (a.name != b.name or len(a.args) != len(b.args)):
                return False
            xs = a.args if isinstance(a, Rel) else (a.left, a.right)
            ys = b.args if isinstance(b, Rel) else (b.left, b.right)
            for x, y in zip(xs, ys):
                if x.sort != y.sort:
                    return False
                if ma.get(x, x) != mb.get(y, y):
                    return False
            return True
        if isinstance(a, Not):
            return eq(a.body, b.body, ma, mb, depth)
        if isinstance(a, (And, Or)):
            return len(a.items) == len(b.items) and all(eq(x, y, ma, mb, depth) for x, y in zip(a.items, b.items))
        if isinstance(a, (Implies, Iff)):
            return eq(a.left, b.left, ma, mb, depth) and eq(a.right, b.right, ma, mb, depth)
        if len(a.vars) != len(b.vars):
            return False
        ma2, mb2 = dict(ma), dict(mb)
        for i, (x, y) in enumerate(zip(a.vars, b.vars)):
            if x.sort != y.sort:
                return False
            marker = ("#bound", depth, i)
            ma2[x] = marker
            mb2[y] = marker
        return eq(a.body, b.body, ma2, mb2, depth + 1)

    return eq(f, g, {}, {}, 0)


# printing


def to_sexpr(f: Formula) -> str:
    if isinstance(f, Rel):
        return "(" + " ".join([f.name, *(v.name for v in f.args)]) + ")"
    if isinstance(f, Eq):
        return f"(= {f.left.name} {f.right.name})"
    if isinstance(f, Not):
        return f"(not {to_sexpr(f.body)})"
    if isinstance(f, And):
        return "(" + " ".join(["and", *(to_sexpr(g) for g in f.items)]) + ")"
    if isinstance(f, Or):
        return "(" + " ".join(["or", *(to_sexpr(g) for g in f.items)]) + ")"
    if isinstance(f, Implies):
        return f"(-> {to_sexpr(f.left)} {to_sexpr(f.right)})"
    if isinstance(f, Iff):
        return f"(<-> {to_sexpr(f.left)} {to_sexpr(f.right)})"
    q = "exists" if isinstance(f, Exists) else "forall"
    binders = " ".join(f"({v.name} {v.sort})" for v in f.vars)
    return f"({q} ({binders}) {to_sexpr(f.body)})"


def to_text(f: Formula) -> str:
    """Infix rendering: comma for conjunction, quantifier scope to the end of the formula."""

    def atom(g: Formula) -> bool:
        return isinstance(g, (Rel, Eq)) or (isinstance(g, Not) and isinstance(g.body, Eq))

    def wrap(g: Formula) -> str:
        s = render(g)
        return s if atom(g) or (isinstance(g, Not) and not isinstance(g.body, (Exists, Forall))) else f"({s})"

    def render(g: Formula) -> str:
        if isinstance(g, Rel):
            return f"{g.name}(" + ",".join(v.name for v in g.args) + ")"
        if isinstance(g, Eq):
            return f"{g.left.name}={g.right.name}"
        if isinstance(g, Not):
            if isinstance(g.body, Eq):
                return f"{g.body.left.name}≠{g.body.right.name}"
            return "¬" + wrap(g.body)
        if isinstance(g, And):
            if not g.items:
                return "⊤"
            parts = []
            for i, h in enumerate(g.items):
                last = i == len(g.items) - 1
                needs = isinstance(h, (Or, Implies, Iff, And)) or (isinstance(h, (Exists, Forall)) and not last)
                parts.append(wrap(h) if needs else render(h))
            return ",".join(parts)
        if isinstance(g, Or):
            if not g.items:
                return "⊥"
            return " ∨ ".join(wrap(h) for h in g.items)
        if isinstance(g, Implies):
            return f"{wrap(g.left)} → {wrap(g.right)}"
        if isinstance(g, Iff):
            return f"{wrap(g.left)} ↔ {wrap(g.right)}"
        q = "∃" if isinstance(g, Exists) else "∀"
        return q + ",".join(v.name for v in g.vars) + " " + render(g.body)

    return render(f)

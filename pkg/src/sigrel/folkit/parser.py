"""S-expression syntax for many-sorted formulas.

    formula  := (R x1 ... xn) | (= x y) | (not f) | (and f ...) | (or f ...)
              | (-> f g) | (<-> f g) | (exists BINDERS f) | (forall BINDERS f)
    BINDERS  := (x Sort) | ((x Sort) (y Sort) ...)

Comments run from ``;`` to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from ..errors import FormulaSyntaxError, SortError
from .syntax import And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Rel, Var

_TOKEN = re.compile(r"\s*(?:;[^\n]*\n?\s*)*(?:(\()|(\))|([^\s()]+))")


@dataclass
class Signature:
    """Sorts and relation symbols with their argument sorts."""

    sorts: list[str] = field(default_factory=list)
    relations: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def merged(self, other: "Signature") -> "Signature":
        sorts = list(self.sorts) + [s for s in other.sorts if s not in self.sorts]
        return Signature(sorts, {**self.relations, **other.relations})

    def to_json(self) -> dict:
        return {"sorts": list(self.sorts), "relations": {k: list(v) for k, v in self.relations.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "Signature":
        return cls(list(data["sorts"]), {k: tuple(v) for k, v in data["relations"].items()})


@dataclass
class _Node:
    items: list | str
    pos: int


def _read(text: str) -> _Node:
    pos = 0
    stack: list[_Node] = []
    root: _Node | None = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "" or text[pos:].lstrip().startswith(";"):
                break
            raise FormulaSyntaxError("unexpected character", pos)
        start = m.start(m.lastindex) if m.lastindex else m.end()
        pos = m.end()
        if m.group(1):
            stack.append(_Node([], start))
        elif m.group(2):
            if not stack:
                raise FormulaSyntaxError("unbalanced ')'", start)
            node = stack.pop()
            if stack:
                stack[-1].items.append(node)  # type: ignore[union-attr]
            elif root is None:
                root = node
            else:
                raise FormulaSyntaxError("trailing input after formula", node.pos)
        elif m.group(3):
            atom = _Node(m.group(3), start)
            if stack:
                stack[-1].items.append(atom)  # type: ignore[union-attr]
            elif root is None:
                root = atom
            else:
                raise FormulaSyntaxError("trailing input after formula", start)
    if stack:
        raise FormulaSyntaxError("missing ')'", stack[-1].pos)
    if root is None:
        raise FormulaSyntaxError("empty input", 0)
    return root


_KEYWORDS = {"not", "and", "or", "->", "<->", "exists", "forall", "="}


class _Builder:
    def __init__(self, sig: Signature | None, free: Mapping[str, str]):
        self.sig = sig
        self.free = dict(free)

    def var(self, node: _Node, scope: Mapping[str, str], want: str | None) -> Var:
        if not isinstance(node.items, str):
            raise FormulaSyntaxError("expected a variable", node.pos)
        name = node.items
        sort = scope.get(name) or self.free.get(name)
        if sort is None:
            if want is None:
                raise SortError(f"cannot infer the sort of free variable {name!r} (at offset {node.pos})")
            self.free[name] = sort = want
        if want is not None and sort != want:
            raise SortError(f"variable {name!r} has sort {sort} but {want} is required (at offset {node.pos})")
        return Var(name, sort)

    def binders(self, node: _Node) -> list[tuple[str, str]]:
        items = node.items
        if isinstance(items, str):
            raise FormulaSyntaxError("expected binder list", node.pos)
        if len(items) == 2 and all(isinstance(i.items, str) for i in items):
            groups = [node]
        else:
            groups = items
        out = []
        for g in groups:
            if isinstance(g.items, str) or len(g.items) != 2 or not all(isinstance(i.items, str) for i in g.items):
                raise FormulaSyntaxError("binder must be (variable Sort)", g.pos)
            name, sort = g.items[0].items, g.items[1].items
            if self.sig is not None and sort not in self.sig.sorts:
                raise SortError(f"unknown sort {sort!r} (at offset {g.pos})")
            out.append((name, sort))  # type: ignore[arg-type]
        return out

    def formula(self, node: _Node, scope: Mapping[str, str]) -> Formula:
        if isinstance(node.items, str) or not node.items:
            raise FormulaSyntaxError("expected a parenthesised formula", node.pos)
        head, *rest = node.items
        if not isinstance(head.items, str):
            raise FormulaSyntaxError("expected an operator or relation name", head.pos)
        op = head.items

        def arity(n: int):
            if len(rest) != n:
                raise FormulaSyntaxError(f"{op} takes {n} argument(s)", node.pos)

        if op == "not":
            arity(1)
            return Not(self.formula(rest[0], scope))
        if op in ("and", "or"):
            items = tuple(self.formula(r, scope) for r in rest)
            return And(items) if op == "and" else Or(items)
        if op in ("->", "<->"):
            arity(2)
            left, right = self.formula(rest[0], scope), self.formula(rest[1], scope)
            return Implies(left, right) if op == "->" else Iff(left, right)
        if op in ("exists", "forall"):
            arity(2)
            bs = self.binders(rest[0])
            inner = dict(scope)
            for name, sort in bs:
                inner[name] = sort
            vs = tuple(Var(n, s) for n, s in bs)
            body = self.formula(rest[1], inner)
            return Exists(vs, body) if op == "exists" else Forall(vs, body)
        if op == "=":
            arity(2)
            try:
                left = self.var(rest[0], scope, None)
            except SortError:
                right = self.var(rest[1], scope, None)
                left = self.var(rest[0], scope, right.sort)
                return Eq(left, right)
            right = self.var(rest[1], scope, left.sort)
            return Eq(left, right)
        # relation atom
        if self.sig is not None:
            if op not in self.sig.relations:
                raise SortError(f"unknown relation {op!r} (at offset {head.pos})")
            sorts = self.sig.relations[op]
            if len(sorts) != len(rest):
                raise SortError(f"{op} expects {len(sorts)} arguments, got {len(rest)} (at offset {node.pos})")
        else:
            sorts = (None,) * len(rest)  # type: ignore[assignment]
        args = tuple(self.var(r, scope, s) for r, s in zip(rest, sorts))
        return Rel(op, args)


def parse(text: str, sig: Signature | None = None, free: Mapping[str, str] | None = None) -> Formula:
    """Parse one formula.  ``free`` fixes the sorts of free variables; without it
    they are inferred from their first occurrence and later conflicts raise SortError."""
    node = _read(text)
    return _Builder(sig, free or {}).formula(node, {})


def parse_many(text: str, sig: Signature | None = None, free: Mapping[str, str] | None = None) -> list[Formula]:
    """Parse a file of formulas, one top-level s-expression after another."""
    out = []
    depth = 0
    start = None
    i = 0
    while i < len(text):
        c = text[i]
        if c == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if c == "(":
            if depth == 0:
                start = i
            depth += 1
        elif c == ")":
            depth -= 1
            if depth < 0:
                raise FormulaSyntaxError("unbalanced ')'", i)
            if depth == 0:
                out.append(parse(text[start:i + 1], sig, free))
        elif depth == 0 and not c.isspace():
            raise FormulaSyntaxError("expected '('", i)
        i += 1
    if depth:
        raise FormulaSyntaxError("missing ')'", start)
    return out


def check_sorts(f: Formula, sig: Signature) -> None:
    """Raise SortError unless ``f`` is well-sorted over ``sig``."""
    from .syntax import walk

    for g in walk(f):
        if isinstance(g, Rel):
            if g.name not in sig.relations:
                raise SortError(f"unknown relation {g.name!r}")
            want = sig.relations[g.name]
            if tuple(v.sort for v in g.args) != tuple(want):
                raise SortError(f"{g.name} applied to sorts {[v.sort for v in g.args]}, expected {list(want)}")
        elif isinstance(g, Eq):
            if g.left.sort != g.right.sort:
                raise SortError(f"equality between sorts {g.left.sort} and {g.right.sort}")
        elif isinstance(g, (Exists, Forall)):
            for v in g.vars:
                if v.sort not in sig.sorts:
                    raise SortError(f"unknown sort {v.sort!r}")


def parse_named(text: str, sig: Signature | None = None) -> list[tuple[str, Formula]]:
    """Parse a formula file with directives in comments.

    ``; @free x Points ℓ Lines`` sets free-variable sorts for the rest of the file;
    ``; @name AxPh`` names the next formula (unnamed ones are numbered).
    """
    free: dict[str, str] = {}
    pending: str | None = None
    out: list[tuple[str, Formula]] = []
    buf: list[str] = []
    depth = 0
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.strip()
        if depth == 0 and stripped.startswith(";"):
            body = stripped.lstrip(";").strip()
            if body.startswith("@free"):
                words = body.split()[1:]
                if len(words) % 2:
                    raise FormulaSyntaxError("@free needs variable/sort pairs", offset)
                free.update(zip(words[0::2], words[1::2]))
            elif body.startswith("@name"):
                pending = body.split(None, 1)[1].strip()
            offset += len(line)
            continue
        code = line.split(";", 1)[0]
        if code.strip():
            buf.append(code)
            depth += code.count("(") - code.count(")")
            if depth < 0:
                raise FormulaSyntaxError("unbalanced ')'", offset)
            if depth == 0:
                try:
                    f = parse("".join(buf), sig, free)
                except FormulaSyntaxError as e:
                    raise FormulaSyntaxError(e.message, offset + (e.pos or 0)) from e
                out.append((pending or f"formula{len(out) + 1}", f))
                pending = None
                buf = []
        offset += len(line)
    if depth:
        raise FormulaSyntaxError("missing ')'", offset)
    return out

"""Golden formula files: rendered translations and definitions, diffed line by line."""

from __future__ import annotations

import difflib
from importlib import resources
from pathlib import Path

from ..folkit.interpretation import InterpretationSpec, delta_sentences, translate
from ..folkit.parser import parse_named
from ..folkit.syntax import Formula, to_text
from .specs import SPECS

GOLDEN_VERSION = "v1"


def golden_dir() -> Path:
    return Path(str(resources.files("sigrel") / "golden" / GOLDEN_VERSION))


def read_source(name: str) -> str:
    return (golden_dir() / name).read_text(encoding="utf-8")


def render_definitions(spec: InterpretationSpec) -> list[str]:
    lines = []
    for m in spec.macros.values():
        lines.append(f"{m.name}({','.join(p.name for p in m.params)}) :⇔ {to_text(m.body)}")
    for sd in spec.sorts.values():
        lines.append(f"var: {sd.var} ↦ ⟨{','.join(v.name for v in sd.matched(sd.var))}⟩")
        lines.append(f"{sd.name}({sd.var}) :⇔ {to_text(sd.domain)}")
        lines.append(f"{sd.var}={sd.other} :⇔ {to_text(sd.equality)}")
    for rd in spec.relations.values():
        lines.append(f"{rd.name}({','.join(p.name for p in rd.params)}) :⇔ {to_text(rd.body)}")
    return lines


def _named_lines(items: list[tuple[str, Formula]]) -> list[str]:
    return [f"{name}\t{to_text(f)}" for name, f in items]


def translate_file(spec_name: str, text: str) -> list[tuple[str, Formula]]:
    spec = SPECS[spec_name]()
    return [(name, translate(spec, f)) for name, f in parse_named(text, spec.source)]


# golden set -> (producer of rendered lines, golden file name)
def _sets():
    def translated(spec_name: str, source: str):
        return lambda: _named_lines(translate_file(spec_name, read_source(source)))

    def delta(spec_name: str):
        return lambda: [to_text(f) for f in delta_sentences(SPECS[spec_name]())]

    def definitions(spec_name: str):
        return lambda: render_definitions(SPECS[spec_name]())

    return {
        "lines-clauses": (translated("lines", "lines_clauses.sexp"), "lines_clauses.golden.txt"),
        "lines-delta": (delta("lines"), "lines_delta.golden.txt"),
        "tr-definitions": (definitions("tr"), "tr_definitions.golden.txt"),
        "tr-delta": (delta("tr"), "tr_delta.golden.txt"),
        "tr-axioms": (translated("tr", "specrel_axioms.sexp"), "specrel_axioms.golden.txt"),
        "Tr-definitions": (definitions("Tr"), "Tr_definitions.golden.txt"),
        "Tr-delta": (delta("Tr"), "Tr_delta.golden.txt"),
        "Tr-axioms": (translated("Tr", "signalling_axioms.sexp"), "signalling_axioms.golden.txt"),
    }


GOLDEN_SETS = tuple(_sets())


def render(set_name: str) -> list[str]:
    return _sets()[set_name][0]()


def golden_diff(set_name: str) -> list[str]:
    """Unified diff between the frozen file and the current rendering (empty when equal)."""
    producer, fname = _sets()[set_name]
    path = golden_dir() / fname
    expected = path.read_text(encoding="utf-8").splitlines() if path.exists() else []
    return list(difflib.unified_diff(expected, producer(), fromfile=fname, tofile=f"{set_name} (current)",
                                     lineterm=""))


def freeze(set_name: str, directory: Path | None = None) -> Path:
    """Write the current rendering as the golden file (used when a change is intended)."""
    producer, fname = _sets()[set_name]
    path = (directory or golden_dir()) / fname
    path.write_text("\n".join(producer()) + "\n", encoding="utf-8")
    return path

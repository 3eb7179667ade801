"""Many-sorted formulas, interpretations with new sorts, and finite-model checking."""

from .interpretation import InterpretationSpec, RelDef, SortDef, delta_signature, delta_sentences, translate
from .models import (
    ClassOf, FiniteModel, PreservationReport, affine_plane, build_translated_model, evaluate, expand_macros,
    lines_spec, meaning_preservation_check, quotient, translate_assignment,
)
from .parser import Signature, check_sorts, parse, parse_many
from .syntax import (
    And, Eq, Exists, Forall, Formula, Iff, Implies, Not, Or, Rel, Var, alpha_equivalent, closure, free_vars,
    quantifier_depth, to_sexpr, to_text,
)

__all__ = [
    "And", "ClassOf", "Eq", "Exists", "FiniteModel", "Forall", "Formula", "Iff", "Implies", "InterpretationSpec",
    "Not", "Or", "PreservationReport", "Rel", "RelDef", "Signature", "SortDef", "Var", "affine_plane",
    "alpha_equivalent", "build_translated_model", "check_sorts", "closure", "delta_signature", "delta_sentences",
    "evaluate", "expand_macros", "free_vars", "lines_spec", "meaning_preservation_check", "parse", "parse_many",
    "quantifier_depth", "quotient", "to_sexpr", "to_text", "translate", "translate_assignment",
]

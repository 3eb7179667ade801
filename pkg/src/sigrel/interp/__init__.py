"""The two interpretations between signalling and reference frames, and their checks."""

from .bridge import (
    ParticleView, RoundTripReport, SignallingView, SignalView, common_event, observer_on, represent_signal,
    roundtrip_check, semantic_Tr,
)
from .golden import GOLDEN_SETS, GOLDEN_VERSION, freeze, golden_diff, render, render_definitions, translate_file
from .separation import (
    IDENTITY, Affine4, AxSymBridgeReport, SeparationReport, axsym_bridge_check, boost, dilation, lorentz_factor,
    random_unit_pair, random_unit_poincare, signed_permutation, translation, tu_separation,
)
from .specs import AUXILIARY, SIGNALLING, SPECREL_LANG, SPECS, Tr_spec, lines_spec, tr_spec

__all__ = [
    "AUXILIARY", "Affine4", "AxSymBridgeReport", "GOLDEN_SETS", "GOLDEN_VERSION", "IDENTITY", "ParticleView",
    "RoundTripReport", "SIGNALLING", "SPECREL_LANG", "SPECS", "SeparationReport", "SignalView", "SignallingView",
    "Tr_spec", "axsym_bridge_check", "boost", "common_event", "dilation", "freeze", "golden_diff", "lines_spec",
    "lorentz_factor", "observer_on", "random_unit_pair", "random_unit_poincare", "render", "render_definitions",
    "represent_signal", "roundtrip_check", "semantic_Tr", "signed_permutation", "tr_spec", "translate_file",
    "translation", "tu_separation",
]

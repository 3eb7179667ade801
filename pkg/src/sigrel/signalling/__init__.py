"""Signal-only experiments that set up coordinates, each with its Minkowski oracle."""

from .clocks import (
    Calibration, FieldPoint, causal_leq, causal_witness, divide, fp, motionless, neg, plus,
    simultaneous, strictly_earlier, ted, ted_complete, time_event, times,
)
from .coords import cord, cord_values, frame_from_velocity, iso, med, mu, time_coord
from .desargues import desargues_experiment
from .radar import Trace, connected, light_hit, line_meet, signal_between
from .space import Location, at_rest, bw, col, dd, dd_anchor, ed, location_of, ort, pa

__all__ = [
    "Calibration", "FieldPoint", "Location", "Trace",
    "at_rest", "bw", "causal_leq", "causal_witness", "col", "connected", "cord", "cord_values", "dd",
    "dd_anchor", "desargues_experiment", "divide", "ed", "fp", "frame_from_velocity", "iso", "light_hit",
    "line_meet", "location_of", "med", "motionless", "mu", "neg", "ort", "pa", "plus", "signal_between",
    "simultaneous", "strictly_earlier", "ted", "ted_complete", "time_coord", "time_event", "times",
]

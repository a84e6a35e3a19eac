"""Constructive PCF coloring by reducible configurations."""

from .brooks import brooks_proper_color
from .colorer import ReductionTrace, TraceStep, check_hypotheses, color, color_planar7, cycle_coloring
from .configs import Config, Kind, find_config, iter_configs
from .extend import extend

__all__ = [
    "Config",
    "Kind",
    "ReductionTrace",
    "TraceStep",
    "brooks_proper_color",
    "check_hypotheses",
    "color",
    "color_planar7",
    "cycle_coloring",
    "extend",
    "find_config",
    "iter_configs",
]

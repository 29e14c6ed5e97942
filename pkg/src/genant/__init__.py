"""Generalized Langton's ants: simulation, highway detection, seeded experiments."""

from .core import (
    AntConfiguration, GridConfig, Heading, RuleError, RuleWord, Trace, Trajectory,
    apply_pattern, inverse_step, rotate_configuration, run, step,
)
from .analysis import (
    CatalogEntry, DetectorParams, HighwayReport, canonical_rotation, classify,
    detect_highway, load_catalog, primitive_period, speed,
)
from .patterns import PatternGrid, parse_pattern, serialize_pattern

__version__ = "0.1.0"

"""Exact symbolic computations in the weighted A-infinity torus algebra."""

from .algebra import Basic, Element, F2, Z, parse_basic, parse_element, \
    format_element
from .tiling import TilingPattern, enumerate_patterns, mu, validate_pattern

__all__ = [
    "Basic", "Element", "F2", "Z",
    "parse_basic", "parse_element", "format_element",
    "TilingPattern", "enumerate_patterns", "mu", "validate_pattern",
]

__version__ = "0.1.0"

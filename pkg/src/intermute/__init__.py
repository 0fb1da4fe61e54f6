"""Free categories with intermutation: formulae, arrow terms, strict
objects, legitimacy, relational and matrix models, and decision
procedures."""

from .formulae import parse_formula
from .terms import parse_arrow, type_of

__all__ = ["parse_formula", "parse_arrow", "type_of"]
__version__ = "0.1.0"

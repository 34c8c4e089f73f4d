"""Subset sum on discrete, polynomial and frequency-domain tapes."""
from .core import Answer, Backend, Instance, Variant, validate, reduce_rational, scale_to_unit
from .errors import TapeSumError

__all__ = [
    "Answer",
    "Backend",
    "Instance",
    "Variant",
    "validate",
    "reduce_rational",
    "scale_to_unit",
    "TapeSumError",
]

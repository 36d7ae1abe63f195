"""Metamorphic relation prediction from method-level source code metrics."""

__version__ = "0.1.0"

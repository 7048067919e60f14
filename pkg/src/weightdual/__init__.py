"""Exact tools for weight-system duality and reflexive polytopes."""

__version__ = "0.1.0"

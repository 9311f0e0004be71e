"""Exact finite-set engine for models of double-categorical theories."""

__version__ = "0.1.0"

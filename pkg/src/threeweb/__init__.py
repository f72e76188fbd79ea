"""Differential invariants and classification of three-webs W(3,2,2)."""

__version__ = "0.1.0"

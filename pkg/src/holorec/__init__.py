"""Hypergeometric term solutions of holonomic recurrences, computed exactly."""

__version__ = "0.1.0"

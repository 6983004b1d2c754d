"""Exact arithmetic for overpartition statistics, Frobenius-style
bijections, buffered representations, and truncated q-series checks."""

__version__ = "0.1.0"

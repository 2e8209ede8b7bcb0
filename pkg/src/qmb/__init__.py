"""Quasi-metrization of bornological (bi)universes, made computable."""

__version__ = "0.1.0"

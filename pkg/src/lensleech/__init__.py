"""Soft on-lens widget sensing: hex marker patterns, synthetic rendering,
and the detect -> match -> gesture pipeline."""

__version__ = "0.1.0"

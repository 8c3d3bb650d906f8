"""Exact construction and verification of Yang-Baxter operators from algebra data."""

__version__ = "0.1.0"

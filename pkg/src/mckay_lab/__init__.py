"""Exact computational-algebra lab around three classic McKay observations."""

__version__ = "0.1.0"

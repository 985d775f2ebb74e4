"""Degree-5 elliptic subcovers of genus-2 curves, in exact arithmetic."""

__version__ = "0.1.0"

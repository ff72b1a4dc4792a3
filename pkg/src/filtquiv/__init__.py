"""Unipotent invariants of filtered quiver representations."""

__version__ = "0.1.0"

"""Exact left add-approximation dimensions for bound quiver algebras over GF(p)."""

__version__ = "0.1.0"

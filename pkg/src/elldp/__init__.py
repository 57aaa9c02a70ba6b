"""Exact verification toolkit for root data, del Pezzo lattices, elliptic curves and Milnor numbers."""

__version__ = "0.1.0"

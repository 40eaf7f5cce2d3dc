"""Exact feasibility engine for equiangular line systems."""

__version__ = "0.1.0"

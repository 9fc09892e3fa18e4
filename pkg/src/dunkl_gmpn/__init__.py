"""Exact computations with Dunkl operators for the complex reflection groups G(m,p,N)."""

__version__ = "0.1.0"

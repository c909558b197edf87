"""Exact-arithmetic engine for braided exterior algebras and their
Fourier/Hodge theory on quantum groups, finite groups and braided planes."""

__version__ = "0.1.0"

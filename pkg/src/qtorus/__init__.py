"""Exact computational kernel for quantum Laurent polynomial algebras."""

__version__ = "0.1.0"

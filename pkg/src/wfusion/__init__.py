"""Exact fusion rules and module classification for simple current
extensions of Heisenberg times singlet vertex operator algebras."""

__version__ = "0.1.0"

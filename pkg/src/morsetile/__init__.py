"""Morse tilings and shellings of simplicial complexes and their products."""
__version__ = "0.1.0"

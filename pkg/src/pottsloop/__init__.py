"""Exact loop-equation engine for the 3-state Potts model on random triangulations."""

__version__ = "0.1.0"

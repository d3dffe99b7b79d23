"""Theorem checkers and the suite runner."""

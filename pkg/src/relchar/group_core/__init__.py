"""Permutation groups, element tables, quotients and named groups."""

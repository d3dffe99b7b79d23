"""Subgroups, series, Sylow theory and the normal-subgroup lattice."""

"""Exact character tables and operations on characters."""

"""Exact matching preclusion numbers, certificates and extremal constructions."""

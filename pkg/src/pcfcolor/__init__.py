"""Proper conflict-free coloring toolkit."""

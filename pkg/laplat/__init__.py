"""Exact geometry of Laplacian lattices under the simplicial distance."""

__version__ = "1.0.0"

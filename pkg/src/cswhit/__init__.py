"""Exact combinatorics behind the geometric Casselman--Shalika formula."""

__version__ = "0.1.0"

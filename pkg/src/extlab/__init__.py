"""Exact algorithms and a verification harness for matching extendability of vertex-transitive graphs."""

__version__ = "0.1.0"

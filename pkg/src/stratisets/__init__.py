"""Workbench for finite filtered simplicial sets over a poset."""

__version__ = "0.1.0"

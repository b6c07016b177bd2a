"""Kernelization toolkit for edge-coloring problems (ECS, Multi-STC and their edge-list variants)."""

__version__ = "0.1.0"

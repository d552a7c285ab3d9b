"""Numerical laboratory for the attraction-repulsion chemotaxis system with double saturation."""

__version__ = "0.1.0"
TOOL_NAME = "chemolab"

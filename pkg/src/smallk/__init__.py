"""Genuine small K types, P-matrix determinants and principal-series analysis
for covers of split real simple Lie groups, in exact arithmetic."""

from .errors import DomainError
from .roots import LieType, Root, RootSystem, Weight, build

__version__ = "0.1.0"

__all__ = ["DomainError", "LieType", "Root", "RootSystem", "Weight", "build", "__version__"]

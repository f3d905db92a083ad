"""Specht modules, Brauer quotients and blocks of symmetric groups over F_p."""

from .main import main

__all__ = ["main"]

"""Two-phase ML soft-decision decoding of binary linear block codes."""

from .cli import main

__version__ = "0.1.0"
__all__ = ["main"]

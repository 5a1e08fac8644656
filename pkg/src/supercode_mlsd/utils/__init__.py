"""Utility functions for supercode-mlsd."""

from .text_utils import bits_to_string, parse_parity_check, parse_received, render_parity_check

__all__ = ["bits_to_string", "parse_parity_check", "parse_received", "render_parity_check"]

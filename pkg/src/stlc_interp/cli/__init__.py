"""
cli - Command line interface for stlc-interpolation.
"""

from stlc_interp.cli.main import app, main

__all__ = ["app", "main"]

"""
surface - S-expression syntax and certificate documents.
"""

from stlc_interp.surface.sexpr import (
    language_lines,
    parse_context,
    parse_language,
    parse_term,
    parse_type,
    print_context,
    print_language,
    print_term,
    print_type,
)

__all__ = [
    "language_lines",
    "parse_context",
    "parse_language",
    "parse_term",
    "parse_type",
    "print_context",
    "print_language",
    "print_term",
    "print_type",
]

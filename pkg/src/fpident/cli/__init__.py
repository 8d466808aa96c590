"""Command-line front end."""

from .main import build_parser, main, run
from .parser import parse_polynomial, print_polynomial

__all__ = ["build_parser", "main", "run", "parse_polynomial", "print_polynomial"]

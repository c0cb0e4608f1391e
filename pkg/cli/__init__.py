"""Command-line entry point: ``python -m cli``."""

from cli.main import build_parser, load_algebra, load_module

__all__ = ['build_parser', 'load_algebra', 'load_module']

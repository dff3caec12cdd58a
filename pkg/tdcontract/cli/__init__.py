"""
The command line interface.
"""
# flake8: noqa F401
from .arguments import create_default_argument_parser, parse_arguments
from .cli import cli_main

__all__ = ("cli_main", "create_default_argument_parser", "parse_arguments")

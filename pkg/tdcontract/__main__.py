"""
A main file to execute tdcontract with CLI.
"""
import sys

from tdcontract.cli import cli_main


def main():
    """
    A main function, such that it can also be called with different entry
    points
    :return: None
    """
    sys.exit(cli_main())


if __name__ == "__main__":
    main()

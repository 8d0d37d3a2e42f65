#!/usr/bin/env python3

"""
Main entry point for the blind graph-rewriting machine.
"""

import sys

from cli import execute


def main():
    """Run the command line and exit with its status code."""
    sys.exit(execute(sys.argv[1:]))


if __name__ == "__main__":
    main()

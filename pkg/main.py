#!/usr/bin/env python3
"""
core-motzkin - Main Entry Point

This script serves as the main entry point for core-motzkin, a toolkit for
counting and enumerating simultaneous core partitions through rational
Motzkin paths and generalized Dyck paths.
"""

import sys

from src.cli import run


def main():
    """Main entry point for the application."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""
Entry point for running hop_toolkit as a module.

Usage:
    python -m hop_toolkit COMMAND [options]
"""

from .cli import main
import sys

if __name__ == "__main__":
    sys.exit(main())

"""
Main entry point for running dowkit as a module.

Usage:
    python -m dowkit pipeline relation.json
"""

import sys
from dowkit.cli import main

if __name__ == '__main__':
    sys.exit(main())

#!/usr/bin/env python3
# Area: CLI
# PRD: docs/prd-qweight.md
"""qweight entry point for a source checkout.

Usage:
    python run.py weights --n 6 --k 0 --D 2 --kind sl
    python run.py check 9 3 4 3 --format json
    python run.py family 12 3
    python run.py table --D 3 --format csv
    python run.py oracle five_qubit --purify
"""
import sys

from qweight.cli.main import main

if __name__ == "__main__":
    sys.exit(main())

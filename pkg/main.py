#!/usr/bin/env python3
"""
Command-line entry point.

Usage::

    python main.py catalog
    python main.py validate --algebra "gl(1|1)"
    python main.py verify strange --algebra "osp(1|2)"
    python main.py verify very-strange --algebra "sl(2|1)" --torus "1/2,0" --json
    python main.py verify even-vsf --algebra "sl(3)" --max-m 4
    python main.py decompose --algebra "C(0|2)"
    python main.py sweep --algebra "gl(1|1);sl(2|1)" --samples 5
"""

import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())

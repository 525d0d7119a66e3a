"""
Main entry point for the Reed-Muller list decoding toolkit.

    python main.py info --m 8 --r 3
    python main.py simulate --config recipes/table1_rm72.toml --out results/table1.csv
"""

import sys

from cli.commands import main


if __name__ == "__main__":
    sys.exit(main())

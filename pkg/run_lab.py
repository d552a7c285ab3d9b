"""
Simple runner script for the chemotaxis laboratory.

This script runs the command-line interface straight from a source checkout,
without installing the package first.
"""

import sys
from pathlib import Path

# Add the src directory to Python path as a fallback
src_path = Path(__file__).parent / "src"
if src_path.exists():
    sys.path.insert(0, str(src_path))

try:
    from chemolab.cli.main import main

    if __name__ == "__main__":
        sys.exit(main(sys.argv[1:]))

except KeyboardInterrupt:
    print("\nRun interrupted by user.", file=sys.stderr)
    sys.exit(130)
except ImportError as e:
    print(f"Import Error: {e}", file=sys.stderr)
    print("Make sure to install the package first:", file=sys.stderr)
    print("  uv pip install -e .", file=sys.stderr)
    sys.exit(1)

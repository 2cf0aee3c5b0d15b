"""Describe an expression against the bundled fixture corpus.

Thin wrapper over the package CLI that fills in the fixture paths, so a fresh
checkout can produce a description with one command:

    python3 scripts/run_demo.py
    python3 scripts/run_demo.py --expr "F_{n+1}/F_n" --context "ratio of consecutive fibonacci numbers"
"""

import argparse
import sys
from pathlib import Path

try:
    from mathgloss.pipeline import cli_run
except ImportError:  # running from a checkout without an editable install
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from mathgloss.pipeline import cli_run

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--expr", default="a^2+b^2=c^2")
    parser.add_argument("--context",
                        default="pythagorean theorem for the sides of a right triangle")
    parser.add_argument("--json", action="store_true",
                        help="emit the description and trace as JSON")
    args = parser.parse_args(argv)

    forwarded = ["--corpus", str(FIXTURES / "corpus.jsonl"),
                 "--vectors", str(FIXTURES / "vectors.txt"),
                 "--stopwords", str(FIXTURES / "stopwords.txt"),
                 "--expr", args.expr, "--context", args.context]
    forwarded.append("--json" if args.json else "--trace")
    return cli_run(forwarded)


if __name__ == "__main__":
    raise SystemExit(main())

"""Run every golden check and write the report (stdout, or the path given)."""

import argparse
import sys

from pauligeo.verify import DEFAULT_SYSTEMS, run_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", nargs="?")
    args = ap.parse_args()
    text, ok = run_checks(DEFAULT_SYSTEMS)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Check the library against the vendored OEIS b-file prefixes.

The fixtures under tests/data/ were generated by tools/make_bfiles.py
from self-contained algorithms (an exact Beatty floor and the published
recurrence), so this comparison crosses an implementation boundary, not
just a cache.
"""

import argparse
from pathlib import Path

from hofg import parse_bfile, resolve_offset, verify

FIXTURES = (
    ("b005206.txt", "g"),
    ("b123070.txt", "gbar"),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir",
                        default=str(Path(__file__).resolve().parent.parent
                                    / "tests" / "data"),
                        help="directory holding the b-files")
    args = parser.parse_args()

    for name, func in FIXTURES:
        text = (Path(args.data_dir) / name).read_text(encoding="ascii")
        records = parse_bfile(text)
        offset = resolve_offset(records, func)
        print(f"{name} against {func} (resolved offset {offset}):")
        report = verify(records, func, offset)
        for line in report.to_text().splitlines():
            print(f"  {line}")
        print(f"  {report.summary_json()}")
        print()


if __name__ == "__main__":
    main()

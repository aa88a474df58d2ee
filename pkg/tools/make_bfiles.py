"""Regenerate the vendored OEIS b-file fixtures under tests/data/.

The fixtures are used by the conformance tests and must not be produced by
the library under test, so everything here is self-contained:

* A005206 terms come from the exact Beatty floor a(n) = floor((n+1)/phi),
  computed in integer arithmetic only.
* A123070 terms come from the recurrence documented on its OEIS page,
  a(n) = n + 1 - a(a(n-1) + 1) for n > 3, with a(0..3) = 0, 1, 1, 2.

Both are cross-checked against hard-coded leading terms before writing.

Usage: python tools/make_bfiles.py [count]
"""

from __future__ import annotations

import sys
from math import isqrt
from pathlib import Path

A005206_HEAD = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12, 12]
A123070_HEAD = [0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 10, 11, 11, 12, 13]


def a005206(count: int) -> list[int]:
    out = []
    for n in range(count):
        m = n + 1
        out.append((m + isqrt(5 * m * m)) // 2 - m)
    return out


def a123070(count: int) -> list[int]:
    a = [0, 1, 1, 2]
    while len(a) < count:
        n = len(a)
        a.append(n + 1 - a[a[n - 1] + 1])
    return a[:count]


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10_000
    data_dir = Path(__file__).resolve().parent.parent / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for name, terms, head in [
        ("b005206.txt", a005206(count), A005206_HEAD),
        ("b123070.txt", a123070(count), A123070_HEAD),
    ]:
        assert terms[:len(head)] == head, f"{name}: leading terms drifted"
        assert all(y - x in (0, 1) for x, y in zip(terms, terms[1:]))
        path = data_dir / name
        path.write_text(
            f"# {name[1:7]} prefix, regenerated by tools/make_bfiles.py\n"
            + "".join(f"{n} {v}\n" for n, v in enumerate(terms)),
            encoding="ascii")
        print(f"wrote {path} ({count} terms)")


if __name__ == "__main__":
    main()

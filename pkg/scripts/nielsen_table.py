"""Brute-force Nielsen class counts for the four ramification types."""

from __future__ import annotations

import time

from quintcover.loci import nielsen_count
from quintcover.verify import NIELSEN_ROWS


def main() -> None:
    print(f"{'group':5} {'types':22} {'tuples':>7} {'classes':>8}  by conjugation       expected")
    for group, types, expected in NIELSEN_ROWS:
        start = time.perf_counter()
        res = nielsen_count(group, types)
        conj = ", ".join(f"{k}: {v}" for k, v in res.by_conjugation.items())
        print(f"{group:5} {types:22} {res.tuples:7} {res.classes:8}  {conj:20} {expected}"
              f"  ({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()

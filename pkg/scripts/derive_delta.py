"""Recover the degeneracy locus Delta(a, b) by eliminating z from Disc(x(x - 1) g3)."""

from __future__ import annotations

import time

from quintcover.loci import derive_delta


def main() -> None:
    start = time.perf_counter()
    d = derive_delta()
    print(f"elimination finished in {time.perf_counter() - start:.2f} s")
    for piece, split in d.pieces.items():
        print(f"{piece}: " + ", ".join(f"({k})^{m}" for k, m in split.multiplicities.items() if m))
        print(f"  cofactor: {split.cofactor}")
    print("weighted multiplicities in Res_z(F4, Disc):")
    for name, m in d.multiplicities.items():
        print(f"  {name:26} {m}")
    print(f"extra factor: {d.extra_factor}")
    print("missing factors:", d.missing() or "none")


if __name__ == "__main__":
    main()

"""Compare the transcribed g3 coefficient table with the division construction."""

from __future__ import annotations

from quintcover.curve import g3_symbolic, g3_transcription_delta


def main() -> None:
    for i, c in enumerate(g3_symbolic()):
        print(f"a{i} (constructed, {c.nterms()} terms, degree in z = {c.degree('z')})")
    delta = g3_transcription_delta()
    print(f"scale constructed/transcribed = {delta['scale']}")
    for name, row in delta["coefficients"].items():
        verdict = "agrees" if row["agrees"] else f"differs by {row['delta']} (mod F4(z))"
        print(f"  {name}: {verdict}")


if __name__ == "__main__":
    main()

"""Regenerate the bundled representation fixtures in src/hakenlab/data/reps.

Run from the repository root: ``python scripts/make_fixtures.py``.  The output
is deterministic; the test suite checks the frozen files, not this script.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from hakenlab.eulerclass.doubling import PairSystem, double_tuple
from hakenlab.eulerclass.sampling import random_pair_system
from hakenlab.exactfield import Mat2
from hakenlab.io import dump_representation

OUT = Path(__file__).resolve().parents[1] / "src" / "hakenlab" / "data" / "reps"


def hyp(attract, repel, lam) -> Mat2:
    """Hyperbolic element with the given attracting/repelling fixed points and multiplier lam^2."""
    c = Mat2(attract, repel, 1, 1)
    return c * Mat2.diag(lam, 1 / Fraction(lam)) * c.inverse()


def conj(c: Mat2, g: Mat2) -> Mat2:
    return c * g * c.inverse()


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    a9 = Mat2.diag(9, Fraction(1, 9))
    one = Mat2.identity()
    fixtures: dict[str, tuple] = {
        # surface tuples for the euler command
        "trivial-genus2": ((one, one), (one, one)),
        "diagonal-genus2": ((Mat2.diag(2, Fraction(1, 2)), Mat2.diag(3, Fraction(1, 3))),
                            (Mat2.diag(5, Fraction(1, 5)), Mat2.diag(Fraction(1, 7), 7))),
        # pair systems for the certify command
        "calibration": ((a9, conj(Mat2(1, -1, 1, 1), a9)),),
        "pants-9": ((a9, conj(Mat2(1, 1, 1, 2), a9)),),
        "parabolic-h": ((Mat2.diag(2, Fraction(1, 2)), Mat2(1, 1, 0, 1)),),
        "elliptic-a": ((Mat2(0, -1, 1, 0), Mat2.diag(3, Fraction(1, 3))),),
        "mixed-radicals": ((Mat2(2, 1, 1, 1), Mat2(3, 1, 2, 1)),),
        "near-identity": ((Mat2.diag(3, Fraction(1, 3)), Mat2(Fraction(6, 5), Fraction(1, 5), Fraction(-1, 5), Fraction(4, 5))),),
        "two-pairs-maximal": (
            (hyp(1, 3, 40), hyp(4, 2, 40)),
            (hyp(5, 7, 40), hyp(8, 6, 40)),
        ),
        "two-pairs-pants": (
            (hyp(1, 2, 40), hyp(3, 4, 40)),
            (hyp(5, 6, 40), hyp(7, 8, 40)),
        ),
        "three-pairs-maximal": (
            (hyp(1, 3, 60), hyp(4, 2, 60)),
            (hyp(5, 7, 60), hyp(8, 6, 60)),
            (hyp(9, 11, 60), hyp(12, 10, 60)),
        ),
    }
    for lam in (4, 25, 100):
        fixtures[f"crossing-{lam}"] = ((Mat2.diag(lam, Fraction(1, lam)), hyp(1, -1, lam)),)
        fixtures[f"pants-{lam}"] = ((Mat2.diag(lam, Fraction(1, lam)), hyp(1, 2, lam)),)
    rng = random.Random(2024)
    for i in range(4):
        fixtures[f"random-{i}"] = random_pair_system(rng, 1 + i % 2).pairs
    fixtures["calibration-doubled"] = double_tuple(PairSystem(fixtures["calibration"])).pairs
    for name, pairs in sorted(fixtures.items()):
        (OUT / f"{name}.json").write_text(dump_representation(pairs), encoding="utf-8")
        print(name)


if __name__ == "__main__":
    main()

from __future__ import annotations

import random

from a1weyl.f2_linalg import F2Vector
from a1weyl.symmetric_space import RootDatum, validate


def datum_from_ints(n: int, ints) -> RootDatum:
    return validate(n, [F2Vector(n, 0)] + [F2Vector(n, b) for b in ints])


def random_spanning_classes(rng: random.Random, n: int, k: int) -> list[int]:
    """``k`` distinct nonzero classes (``k >= n``) spanning GF(2)^n: a random basis plus extras."""
    k = min(k, (1 << n) - 1)
    while True:
        chosen = set(rng.sample(range(1, 1 << n), k))
        span = {0}
        for c in chosen:
            span |= {s ^ c for s in span}
        if len(span) == 1 << n:
            return sorted(chosen)

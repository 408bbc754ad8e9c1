"""Root data: the discrete symmetric space T inside G = Z^n.

A subset ``T`` of ``G`` with ``0 in T`` and ``G . T`` contained in ``T``
(where ``s . t = 2s - t``) is a union of cosets of ``2G`` containing ``2G``.
It is therefore determined by its image ``tab`` in ``G / 2G``, which is
what :class:`RootDatum` stores.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import f2_linalg
from .errors import BadLength, LengthMismatch, MissingZero, NotGenerating
from .f2_linalg import F2Vector
from .lattice import GVector, mod2


@dataclass(frozen=True)
class RootDatum:
    """Rank ``n`` plus the set of classes ``tab`` (sorted, deduplicated, contains 0)."""

    rank: int
    tab: tuple[F2Vector, ...]

    @property
    def nonzero(self) -> tuple[F2Vector, ...]:
        return tuple(c for c in self.tab if c)

    @property
    def cardinality(self) -> int:
        """Number of nonzero classes."""
        return len(self.tab) - 1

    def __contains__(self, cls: F2Vector) -> bool:
        return cls in self._members

    @cached_property
    def _members(self) -> frozenset[F2Vector]:
        return frozenset(self.tab)

    def mask(self) -> int:
        """Bitmask over ``range(2**rank)`` with bit ``c.bits`` set for each class ``c``."""
        m = 0
        for c in self.tab:
            m |= 1 << c.bits
        return m


def validate(rank: int, raw_tab: Iterable[F2Vector | str]) -> RootDatum:
    """Build a :class:`RootDatum`, checking lengths, 0-membership and spanning."""
    if rank < 1:
        raise BadLength(f"rank must be at least 1, got {rank}")
    classes = set()
    for v in raw_tab:
        if isinstance(v, str):
            v = F2Vector.from_str(v)
        if v.n != rank:
            raise BadLength(f"class {v} has length {v.n}, expected {rank}")
        classes.add(v)
    if F2Vector.zero(rank) not in classes:
        raise MissingZero("the zero class is not in tab")
    tab = tuple(sorted(classes, key=F2Vector.sort_key))
    nonzero = [c for c in tab if c]
    r = f2_linalg.rank(f2_linalg.F2Matrix.from_rows(nonzero, rank)) if nonzero else 0
    if r != rank:
        raise NotGenerating(f"tab spans a subspace of dimension {r} < {rank}")
    return RootDatum(rank, tab)


def full_datum(n: int) -> RootDatum:
    """The datum with ``T = G``."""
    return validate(n, (F2Vector(n, b) for b in range(1 << n)))


def basis_datum(n: int) -> RootDatum:
    """The datum whose nonzero classes are the standard basis."""
    return validate(n, [F2Vector.zero(n)] + [F2Vector.unit(n, i) for i in range(n)])


def smul(s: Sequence[int], t: Sequence[int]) -> GVector:
    """The symmetric-space product ``s . t = 2s - t``."""
    if len(s) != len(t):
        raise LengthMismatch(f"lengths {len(s)} and {len(t)}")
    return tuple(2 * a - b for a, b in zip(s, t))


def contains(d: RootDatum, t: Sequence[int]) -> bool:
    if len(t) != d.rank:
        raise LengthMismatch(f"vector of length {len(t)} for rank {d.rank}")
    return mod2(t) in d

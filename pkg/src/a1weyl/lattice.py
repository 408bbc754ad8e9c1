"""Exact arithmetic in Z^n, its wedge square, and the mod-2 symmetric square.

Integer vectors are plain tuples of Python ints, so coefficients never
overflow.  Wedge coordinates are indexed by pairs ``(i, j)`` with ``i < j``
in lexicographic order; the symmetric square of GF(2)^n uses the ``n``
diagonal coordinates first and then the same pair order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import LengthMismatch
from .f2_linalg import F2Vector

GVector = tuple[int, ...]
WedgeVector = tuple[int, ...]


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def sym_dim(n: int) -> int:
    return n * (n + 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair ``(i, j)``, ``i < j``, among all pairs of ``range(n)``."""
    if not 0 <= i < j < n:
        raise IndexError((i, j))
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _row_offsets(n: int) -> tuple[int, ...]:
    return tuple(pair_index(n, i, i + 1) if i + 1 < n else num_pairs(n) for i in range(n))


def _check_same(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)}")


def gvector(coords) -> GVector:
    return tuple(int(c) for c in coords)


def gadd(a: GVector, b: GVector) -> GVector:
    _check_same(a, b)
    return tuple(x + y for x, y in zip(a, b))


def gsub(a: GVector, b: GVector) -> GVector:
    _check_same(a, b)
    return tuple(x - y for x, y in zip(a, b))


def gscale(k: int, a: GVector) -> GVector:
    return tuple(k * x for x in a)


def wedge(g: GVector, h: GVector) -> WedgeVector:
    """Coordinates ``g_i h_j - g_j h_i`` of ``g ^ h``."""
    _check_same(g, h)
    n = len(g)
    return tuple(g[i] * h[j] - g[j] * h[i] for i, j in pairs(n))


def mod2(g: Sequence[int]) -> F2Vector:
    bits = 0
    for i, c in enumerate(g):
        if c & 1:
            bits |= 1 << i
    return F2Vector(len(g), bits)


def lift(gbar: F2Vector) -> GVector:
    """The 0/1 representative of a class in Z^n / 2Z^n."""
    return tuple(gbar)


@dataclass(frozen=True)
class SymTensor:
    """Element of the symmetric square of GF(2)^n.

    ``bits`` packs ``n`` diagonal coordinates followed by the off-diagonal
    pairs; the off-diagonal coordinate ``(i, j)`` is the shared coefficient
    of ``e_i (x) e_j`` and ``e_j (x) e_i``.
    """

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> sym_dim(self.n):
            raise ValueError("bits set beyond the symmetric square dimension")

    @classmethod
    def from_parts(cls, diag: F2Vector, off: F2Vector) -> SymTensor:
        n = diag.n
        if off.n != num_pairs(n):
            raise LengthMismatch(f"off-diagonal part of length {off.n} for n={n}")
        return cls(n, diag.bits | (off.bits << n))

    @classmethod
    def zero(cls, n: int) -> SymTensor:
        return cls(n, 0)

    @property
    def diag(self) -> F2Vector:
        return F2Vector(self.n, self.bits & ((1 << self.n) - 1))

    @property
    def off(self) -> F2Vector:
        return F2Vector(num_pairs(self.n), self.bits >> self.n)

    def as_vector(self) -> F2Vector:
        return F2Vector(sym_dim(self.n), self.bits)

    def matrix(self) -> list[list[int]]:
        """Symmetric 0/1 matrix with this tensor's coefficients."""
        n = self.n
        d, o = self.diag, self.off
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = d[i]
        for k, (i, j) in enumerate(pairs(n)):
            m[i][j] = m[j][i] = o[k]
        return m

    def __xor__(self, other: SymTensor) -> SymTensor:
        if other.n != self.n:
            raise LengthMismatch(f"ranks {self.n} and {other.n}")
        return SymTensor(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0


def sym_square(gbar: F2Vector) -> SymTensor:
    """The class of ``g (x) g``: diagonal ``g_i``, off-diagonal ``g_i g_j``."""
    n = gbar.n
    g = gbar.bits
    off = 0
    offsets = _row_offsets(n)
    rest = g
    while rest:
        low = rest & -rest
        i = low.bit_length() - 1
        rest ^= low
        # the pairs (i, i+1..n-1) occupy one contiguous block
        off |= (g >> (i + 1)) << offsets[i]
    return SymTensor(n, g | (off << n))


def wedge_mod2(g: F2Vector, h: F2Vector) -> F2Vector:
    """``g ^ h`` reduced mod 2 (coordinates ``g_i h_j + g_j h_i``)."""
    if g.n != h.n:
        raise LengthMismatch(f"lengths {g.n} and {h.n}")
    return sym_square(g ^ h).off ^ sym_square(g).off ^ sym_square(h).off


def pi_map(w: F2Vector, n: int) -> SymTensor:
    """``u ^ v -> u (x) v - v (x) u`` on GF(2) coefficients: zero diagonal, off-diagonal ``w``."""
    if w.n != num_pairs(n):
        raise LengthMismatch(f"wedge vector of length {w.n} for n={n}")
    return SymTensor(n, w.bits << n)


def sqrt_diag(s: SymTensor) -> F2Vector:
    return s.diag


def phi(w: F2Vector, gbar: F2Vector) -> SymTensor:
    """Map the mod-2 Heisenberg element ``(w, gbar)`` to ``pi(w) + gbar (x) gbar``."""
    return pi_map(w, gbar.n) ^ sym_square(gbar)


def heisenberg_mul2(a: tuple[F2Vector, F2Vector], b: tuple[F2Vector, F2Vector]):
    """Product ``(s, g)(t, h) = (s + t + g ^ h, g + h)`` over GF(2)."""
    (s, g), (t, h) = a, b
    return s ^ t ^ wedge_mod2(g, h), g ^ h

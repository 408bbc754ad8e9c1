"""Bit-packed linear algebra over GF(2).

Vectors are stored as Python ints (bit ``i`` is coordinate ``i``).  Matrices
are stored row-major as ``uint64`` words so that elimination is a sequence of
word-parallel XORs over numpy arrays.

Elimination always inserts rows top-down and picks the leftmost (lowest
index) nonzero column of the reduced row as pivot.  The reduced basis is kept
in reduced row echelon form, so reducing a new row against it is a single
XOR of the selected basis rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import LengthMismatch

_WORD = 64


def _nwords(nbits: int) -> int:
    return (nbits + _WORD - 1) // _WORD


@dataclass(frozen=True, order=True)
class F2Vector:
    """Vector in GF(2)^n with coordinate ``i`` stored as bit ``i`` of ``bits``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits set beyond length {self.n}")

    @classmethod
    def zero(cls, n: int) -> F2Vector:
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> F2Vector:
        if not 0 <= i < n:
            raise IndexError(i)
        return cls(n, 1 << i)

    @classmethod
    def from_iterable(cls, coords: Iterable[int]) -> F2Vector:
        bits = 0
        n = 0
        for i, c in enumerate(coords):
            if c & 1:
                bits |= 1 << i
            n = i + 1
        return cls(n, bits)

    @classmethod
    def from_str(cls, s: str) -> F2Vector:
        """Parse a bitstring; character ``i`` is coordinate ``i``."""
        if s and s.strip("01"):
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(len(s), int(s[::-1], 2) if s else 0)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")[::-1] if self.n else ""

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        for _ in range(self.n):
            yield b & 1
            b >>= 1

    def __xor__(self, other: F2Vector) -> F2Vector:
        if other.n != self.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n}")
        return F2Vector(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def concat(self, other: F2Vector) -> F2Vector:
        return F2Vector(self.n + other.n, self.bits | (other.bits << self.n))

    def sort_key(self) -> str:
        """Key for the lexicographic order of bitstrings."""
        return str(self)


def _int_to_words(bits: int, nwords: int) -> np.ndarray:
    return np.frombuffer(bits.to_bytes(8 * nwords, "little"), dtype="<u8")


def _words_to_int(words: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(words, dtype="<u8").tobytes(), "little")


class F2Matrix:
    """Row-major bit-packed matrix over GF(2).

    ``words`` has shape ``(nrows, ceil(ncols / 64))`` and dtype ``uint64``;
    padding bits past ``ncols`` are always zero.
    """

    __slots__ = ("words", "ncols")

    def __init__(self, words: np.ndarray, ncols: int):
        words = np.asarray(words, dtype=np.uint64)
        if words.ndim != 2 or words.shape[1] != _nwords(ncols):
            raise LengthMismatch(f"word array of shape {words.shape} for {ncols} columns")
        self.words = words
        self.ncols = ncols

    @classmethod
    def from_rows(cls, rows: Sequence[F2Vector], ncols: int | None = None) -> F2Matrix:
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty row list")
            ncols = rows[0].n
        nw = _nwords(ncols)
        words = np.zeros((len(rows), nw), dtype=np.uint64)
        for i, row in enumerate(rows):
            if row.n != ncols:
                raise LengthMismatch(f"row {i} has length {row.n}, expected {ncols}")
            if nw:
                words[i] = _int_to_words(row.bits, nw)
        return cls(words, ncols)

    @classmethod
    def from_bool(cls, array) -> F2Matrix:
        """Pack a 2-d array of 0/1 (or bool) entries."""
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        nrows, ncols = a.shape
        nw = _nwords(ncols)
        padded = np.zeros((nrows, nw * _WORD), dtype=np.uint8)
        padded[:, :ncols] = a & 1
        packed = np.packbits(padded, axis=1, bitorder="little")
        return cls(packed.view("<u8").astype(np.uint64).reshape(nrows, nw), ncols)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls.from_bool(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls(np.zeros((nrows, _nwords(ncols)), dtype=np.uint64), ncols)

    @property
    def nrows(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> F2Vector:
        return F2Vector(self.ncols, _words_to_int(self.words[i]))

    @property
    def rows(self) -> list[F2Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def to_bool(self) -> np.ndarray:
        bytes_ = self.words.astype("<u8").view(np.uint8).reshape(self.nrows, -1)
        bits = np.unpackbits(bytes_, axis=1, bitorder="little")
        return bits[:, : self.ncols].astype(np.uint8)

    def permute_rows(self, order: Sequence[int]) -> F2Matrix:
        return F2Matrix(self.words[np.asarray(order, dtype=np.intp)], self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.ncols == other.ncols and np.array_equal(self.words, other.words)

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"


class _Echelon:
    """Incremental reduced row echelon basis, optionally tracking row combinations.

    Each stored row is ``data words | combination words``; the combination
    part records which input rows XOR to it.
    """

    def __init__(self, ncols: int, nrows: int, track: bool):
        self.ncols = ncols
        self.dw = _nwords(ncols)
        self.tw = _nwords(nrows) if track else 0
        cap = min(nrows, ncols)
        self.basis = np.zeros((cap, self.dw + self.tw), dtype=np.uint64)
        self.piv_word = np.zeros(cap, dtype=np.intp)
        self.piv_mask = np.zeros(cap, dtype=np.uint64)
        self.rank = 0

    def reduce(self, x: np.ndarray) -> np.ndarray:
        r = self.rank
        if r:
            sel = (x[self.piv_word[:r]] & self.piv_mask[:r]) != 0
            if sel.any():
                x ^= np.bitwise_xor.reduce(self.basis[:r][sel], axis=0)
        return x

    def insert(self, x: np.ndarray) -> bool:
        """Reduce ``x`` in place; add it to the basis if it is not in the span."""
        self.reduce(x)
        nz = np.flatnonzero(x[: self.dw])
        if nz.size == 0:
            return False
        w0 = int(nz[0])
        val = int(x[w0])
        mask = np.uint64(val & -val)
        r = self.rank
        hit = np.flatnonzero(self.basis[:r, w0] & mask)
        if hit.size:
            self.basis[hit, w0:] ^= x[w0:]
        self.basis[r] = x
        self.piv_word[r] = w0
        self.piv_mask[r] = mask
        self.rank = r + 1
        return True


def _augmented_row(m: F2Matrix, i: int, tw: int) -> np.ndarray:
    x = np.zeros(m.words.shape[1] + tw, dtype=np.uint64)
    x[: m.words.shape[1]] = m.words[i]
    if tw:
        x[m.words.shape[1] + i // _WORD] = np.uint64(1 << (i % _WORD))
    return x


def _combination(x: np.ndarray, dw: int, nrows: int) -> F2Vector:
    return F2Vector(nrows, _words_to_int(x[dw:]) & ((1 << nrows) - 1))


def rank(m: F2Matrix) -> int:
    """GF(2) rank of the row space; ``m`` is not modified."""
    ech = _Echelon(m.ncols, m.nrows, track=False)
    for i in range(m.nrows):
        if ech.rank == m.ncols:
            break
        ech.insert(m.words[i].copy())
    return ech.rank


def dependency_certificate(m: F2Matrix) -> F2Vector | None:
    """Return a nonzero ``c`` with ``sum(c_i * row_i) == 0``, or None if the rows are independent.

    The certificate is the one attached to the first row that lies in the
    span of the rows above it: its coefficient is 1, rows below it get 0,
    and the rows above (being independent) are determined uniquely.
    """
    ech = _Echelon(m.ncols, m.nrows, track=True)
    for i in range(m.nrows):
        x = _augmented_row(m, i, ech.tw)
        if not ech.insert(x):
            return _combination(x, ech.dw, m.nrows)
    return None


def left_nullspace(m: F2Matrix) -> list[F2Vector]:
    """Basis of ``{c : c @ m == 0}``, one vector per dependent row in top-down order."""
    ech = _Echelon(m.ncols, m.nrows, track=True)
    out = []
    for i in range(m.nrows):
        x = _augmented_row(m, i, ech.tw)
        if not ech.insert(x):
            out.append(_combination(x, ech.dw, m.nrows))
    return out


def solve(m: F2Matrix, target: F2Vector) -> F2Vector | None:
    """Find ``c`` with ``sum(c_i * row_i) == target``; None if ``target`` is outside the row space."""
    if target.n != m.ncols:
        raise LengthMismatch(f"target length {target.n}, matrix has {m.ncols} columns")
    ech = _Echelon(m.ncols, m.nrows, track=True)
    for i in range(m.nrows):
        ech.insert(_augmented_row(m, i, ech.tw))
    x = np.zeros(ech.dw + ech.tw, dtype=np.uint64)
    if ech.dw:
        x[: ech.dw] = _int_to_words(target.bits, ech.dw)
    ech.reduce(x)
    if np.any(x[: ech.dw]):
        return None
    return _combination(x, ech.dw, m.nrows)


def combine(m: F2Matrix, coeffs: F2Vector) -> F2Vector:
    """XOR of the rows selected by ``coeffs``."""
    if coeffs.n != m.nrows:
        raise LengthMismatch(f"{coeffs.n} coefficients for {m.nrows} rows")
    idx = coeffs.support()
    if not idx or m.words.shape[1] == 0:
        return F2Vector.zero(m.ncols)
    return F2Vector(m.ncols, _words_to_int(np.bitwise_xor.reduce(m.words[idx], axis=0)))


def rank_of_ints(rows: Iterable[int]) -> int:
    """Rank of a few short rows given as ints; cheaper than packing for tiny inputs."""
    basis: list[int] = []
    for x in rows:
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
            basis.sort(reverse=True)
    return len(basis)

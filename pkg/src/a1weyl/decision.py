"""Deciding whether U -> W is an isomorphism, with certificates.

The map is an isomorphism exactly when the nonzero classes of the datum are
2-independent, i.e. their symmetric squares ``t (x) t`` are linearly
independent over GF(2).  A dependency among them is a nontrivial kernel
element of the abelianized map; :func:`find_identity_word` lifts it to an
explicit word of reflections that is trivial in W.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import f2_linalg
from .errors import BudgetExhausted, InvalidWitness, IsIndependent, RankTooLarge
from .f2_linalg import F2Matrix, F2Vector
from .lattice import GVector, lift, mod2, pairs, sym_dim, sym_square, wedge_mod2
from .symmetric_space import RootDatum
from .weyl import UabElement, WabElement, eval_word_Uab, eval_word_W, eval_word_Wab

DEFAULT_MAX_ENUM_RANK = 4


@dataclass(frozen=True)
class Verdict:
    independent: bool
    rank_sym: int
    cardinality: int

    @property
    def iso(self) -> bool:
        return self.independent


@dataclass(frozen=True)
class Witness:
    dependency: tuple[F2Vector, ...]
    pad_zero: bool
    uab_element: UabElement
    word_in_W: tuple[GVector, ...] | None = None

    def letters(self) -> list[F2Vector]:
        """The dependency classes followed by the zero class when padding is needed."""
        out = list(self.dependency)
        if self.pad_zero and out:
            out.append(F2Vector.zero(out[0].n))
        return out


def _class_bits(classes: Sequence[F2Vector], n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = b"".join(c.bits.to_bytes(nbytes, "little") for c in classes)
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(len(classes), nbytes)
    return np.unpackbits(arr, axis=1, bitorder="little")[:, :n]


def sym_matrix(classes: Sequence[F2Vector], n: int) -> F2Matrix:
    """Matrix whose rows are the symmetric squares of ``classes``."""
    if not classes:
        return F2Matrix.zeros(0, sym_dim(n))
    g = _class_bits(classes, n)
    iu, ju = np.triu_indices(n, 1)
    return F2Matrix.from_bool(np.concatenate([g, g[:, iu] & g[:, ju]], axis=1))


def decide(d: RootDatum) -> Verdict:
    classes = d.nonzero
    r = f2_linalg.rank(sym_matrix(classes, d.rank))
    return Verdict(independent=r == len(classes), rank_sym=r, cardinality=len(classes))


def is_2_independent(classes: Sequence[F2Vector]) -> bool:
    classes = list(classes)
    if not classes:
        return True
    return f2_linalg.rank(sym_matrix(classes, classes[0].n)) == len(classes)


def extract_witness(d: RootDatum) -> Witness:
    classes = d.nonzero
    cert = f2_linalg.dependency_certificate(sym_matrix(classes, d.rank))
    if cert is None:
        raise IsIndependent("the nonzero classes are 2-independent")
    dep = tuple(classes[i] for i in cert.support())
    return Witness(dep, len(dep) % 2 == 1, UabElement(frozenset(dep), 1))


def check_witness(d: RootDatum, w: Witness) -> None:
    """Raise InvalidWitness unless ``w`` is an abelian kernel certificate for ``d``."""
    if not w.dependency:
        raise InvalidWitness("empty dependency")
    if len(set(w.dependency)) != len(w.dependency):
        raise InvalidWitness("repeated class in dependency")
    for c in w.dependency:
        if c.n != d.rank or not c or c not in d:
            raise InvalidWitness(f"class {c} is not a nonzero class of the datum")
    if w.pad_zero != (len(w.dependency) % 2 == 1):
        raise InvalidWitness("pad flag does not match the parity of the dependency")
    total = 0
    for c in w.dependency:
        total ^= sym_square(c).bits
    if total:
        raise InvalidWitness("symmetric squares do not sum to zero")
    if w.uab_element != UabElement(frozenset(w.dependency), 1):
        raise InvalidWitness("kernel element does not match the dependency")


class _Steps:
    def __init__(self, budget: int):
        self.left = budget

    def spend(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise BudgetExhausted("step budget exhausted")


def _alt_sum(word: list[list[int]], n: int) -> list[int]:
    g = [0] * n
    for k, t in enumerate(word):
        sgn = 1 if k % 2 == 0 else -1
        for a in range(n):
            g[a] += sgn * t[a]
    return g


def _wedge_part(d: RootDatum, word: list[list[int]], steps: _Steps):
    steps.spend(len(word))
    return eval_word_W(d, word)


def find_identity_word(d: RootDatum, w: Witness, budget: int = 10**6) -> list[GVector]:
    """Lift an abelian kernel certificate to a word over T that is trivial in W.

    The word uses the dependency classes once each (plus the zero class when
    padding is needed), pairs ``[x, x]`` of further classes, and zero-class
    gadgets ``[2a, 0, 2b, 2a+2b]``; letter multiplicities mod 2 therefore
    match the witness.  Construction:

    1. lift each letter to its 0/1 representative and make the alternating
       sum of letters vanish by shifting the first letter by an even vector;
    2. the wedge part is then even; its half mod 2 changes by ``e_a ^ s``
       when a letter of class ``s`` is shifted by ``2 e_a`` (and a zero-class
       letter by ``-+2 e_a`` to keep the alternating sum); solve for the
       shifts over GF(2) so the wedge part becomes divisible by 4;
    3. cancel the remaining ``4 M`` with gadgets, each contributing
       ``4 (a ^ b)``.

    The result is verified by exact evaluation before it is returned.
    Every letter evaluation and elimination row costs one step.
    """
    check_witness(d, w)
    if budget <= 0:
        raise BudgetExhausted("step budget exhausted")
    steps = _Steps(budget)
    n = d.rank

    word = [list(lift(c)) for c in w.dependency]
    if w.pad_zero:
        word.append([0] * n)
        ref = len(word) - 1
    else:
        word += [[0] * n, [0] * n]
        ref = len(word) - 2

    # extend the span of the letters' classes to all of G/2G with [x, x] pairs
    span = [c.bits for c in w.dependency]
    r = f2_linalg.rank_of_ints(span)
    for c in d.nonzero:
        if r == n:
            break
        steps.spend()
        if f2_linalg.rank_of_ints(span + [c.bits]) > r:
            span.append(c.bits)
            r += 1
            word += [list(lift(c)), list(lift(c))]

    g = _alt_sum(word, n)
    word[0] = [x - y for x, y in zip(word[0], g)]

    l = _wedge_part(d, word, steps).l
    if any(x % 2 for x in l):
        raise InvalidWitness("wedge part is odd; the dependency is not a kernel element")
    residue = F2Vector.from_iterable((x // 2) & 1 for x in l)

    if residue:
        # one representative letter per nonzero class suffices for the span
        movers = {}
        for k, t in enumerate(word):
            c = mod2(t)
            if c and c not in movers:
                movers[c] = k
        moves = [(k, a) for k in movers.values() for a in range(n)]
        gens = [wedge_mod2(F2Vector.unit(n, a), mod2(word[k])) for k, a in moves]
        steps.spend(len(gens))
        coeffs = f2_linalg.solve(F2Matrix.from_rows(gens, len(residue)), residue)
        if coeffs is None:
            raise BudgetExhausted("no representative shift cancels the wedge residue")
        for idx in coeffs.support():
            k, a = moves[idx]
            eps = -1 if (k + ref) % 2 == 0 else 1
            word[k][a] += 2
            word[ref][a] += 2 * eps
        l = _wedge_part(d, word, steps).l

    if any(x % 4 for x in l):
        raise BudgetExhausted("wedge residue is not divisible by 4 after shifting")
    for (i, j), x in zip(pairs(n), l):
        m = x // 4
        if m:
            steps.spend(4)
            two_a = [0] * n
            two_b = [0] * n
            two_a[i] = -2 * m
            two_b[j] = 2
            word += [two_a, [0] * n, two_b, [p + q for p, q in zip(two_a, two_b)]]

    result = [tuple(t) for t in word]
    steps.spend(len(result))
    if not eval_word_W(d, result).is_identity():
        raise BudgetExhausted("constructed word does not evaluate to the identity")
    if eval_word_Uab(d, [mod2(t) for t in result]) != w.uab_element:
        raise InvalidWitness("constructed word has the wrong image in the abelianization")
    return result


def verify_word(d: RootDatum, w: Witness, word: Sequence[Sequence[int]]) -> bool:
    """True if ``word`` is trivial in W and maps to the witness's kernel element."""
    return (
        eval_word_W(d, word).is_identity()
        and eval_word_Uab(d, [mod2(t) for t in word]) == w.uab_element
        and not w.uab_element.is_identity()
    )


def witness_abelian_image(d: RootDatum, w: Witness) -> WabElement:
    return eval_word_Wab(d, w.letters())


# -- enumeration ---------------------------------------------------------


def _verdict_small(n: int, classes: Sequence[int]) -> Verdict:
    rows = [sym_square(F2Vector(n, c)).bits for c in classes]
    r = f2_linalg.rank_of_ints(rows)
    return Verdict(r == len(rows), r, len(rows))


def _mask_classes(mask: int) -> list[int]:
    return [b for b in range(mask.bit_length()) if (mask >> b) & 1]


def general_linear_group(n: int) -> np.ndarray:
    """All of GL(n, 2) as permutations of ``range(2**n)``; shape ``(|GL|, 2**n)``."""
    cols_list = []
    size = 1 << n

    def extend(cols, span):
        if len(cols) == n:
            cols_list.append(tuple(cols))
            return
        for c in range(1, size):
            if c not in span:
                extend(cols + [c], span | {s ^ c for s in span})

    extend([], {0})
    cols = np.array(cols_list, dtype=np.int64).reshape(len(cols_list), n)
    perm = np.zeros((len(cols_list), size), dtype=np.int64)
    for x in range(1, size):
        low = (x & -x).bit_length() - 1
        perm[:, x] = perm[:, x & (x - 1)] ^ cols[:, low]
    return perm


def gl_orbit(perm: np.ndarray, mask: int) -> set[int]:
    """Masks of the images of the class set ``mask`` under every group element."""
    members = _mask_classes(mask)
    images = np.left_shift(np.int64(1), perm[:, members])
    return set(np.bitwise_or.reduce(images, axis=1).tolist())


def apply_gl(matrix_cols: Sequence[int], c: F2Vector) -> F2Vector:
    """Image of ``c`` under the matrix whose column ``i`` is ``matrix_cols[i]``."""
    out = 0
    for i in c.support():
        out ^= matrix_cols[i]
    return F2Vector(c.n, out)


def enumerate_data(
    n: int, up_to_gl: bool = False, max_rank: int = DEFAULT_MAX_ENUM_RANK
) -> Iterator[tuple[RootDatum, Verdict]]:
    """Every valid datum of rank ``n`` with its verdict, ordered by class mask.

    The mask of a datum has bit ``b`` set when the class with bits ``b`` is in
    ``tab``.  With ``up_to_gl`` only the datum of smallest mask in each
    GL(n, 2)-orbit is produced.
    """
    if n < 1:
        raise RankTooLarge(f"rank must be at least 1, got {n}")
    if n > max_rank:
        raise RankTooLarge(f"rank {n} exceeds the enumeration limit {max_rank}")
    size = 1 << n
    perm = general_linear_group(n) if up_to_gl else None
    seen: set[int] = set()
    for sub in range(1 << (size - 1)):
        mask = (sub << 1) | 1
        if up_to_gl:
            if mask in seen:
                continue
        classes = _mask_classes(mask)[1:]
        if f2_linalg.rank_of_ints(classes) != n:
            continue
        if up_to_gl:
            seen |= gl_orbit(perm, mask)
        tab = tuple(sorted((F2Vector(n, b) for b in [0] + classes), key=F2Vector.sort_key))
        yield RootDatum(n, tab), _verdict_small(n, classes)


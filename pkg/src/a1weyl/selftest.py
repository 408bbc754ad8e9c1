"""Randomized axiom and property checks, runnable from the command line.

Each check draws its own random instances from a seeded ``random.Random``
and returns a :class:`CheckResult`; nothing here depends on pytest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .errors import ValidationError
from .f2_linalg import F2Vector
from .lattice import GVector, mod2, sym_square, wedge
from .symmetric_space import RootDatum, smul, validate
from .weyl import (
    WabElement,
    WeylElement,
    abelianize,
    act,
    eval_word_W,
    eval_word_Wab,
    reflect_W,
    w_inv,
    w_mul,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_gvector(rng: random.Random, n: int, bound: int = 20) -> GVector:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def random_datum(rng: random.Random, n: int, extra: int | None = None) -> RootDatum:
    """A random spanning datum: a random basis plus ``extra`` random classes."""
    while True:
        picks = {F2Vector(n, rng.randrange(1, 1 << n)) for _ in range(n)}
        if extra is None:
            extra = rng.randint(0, n * (n + 1))
        picks |= {F2Vector(n, rng.randrange(1 << n)) for _ in range(extra)}
        picks.add(F2Vector.zero(n))
        try:
            return validate(n, picks)
        except ValidationError:
            continue


def random_root(rng: random.Random, d: RootDatum, bound: int = 10) -> GVector:
    c = rng.choice(d.tab)
    return tuple(b + 2 * rng.randint(-bound, bound) for b in c)


def random_weyl(rng: random.Random, n: int, bound: int = 20) -> WeylElement:
    l = random_gvector(rng, n * (n - 1) // 2, bound)
    return WeylElement(l, random_gvector(rng, n, bound), rng.choice((1, -1)))


def _check(name: str, fn: Callable[[random.Random, int], str | None], rng, iters) -> CheckResult:
    try:
        failure = fn(rng, iters)
    except Exception as exc:  # a crash is a failed check, not an aborted run
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, failure is None, failure or "")


def _symmetric_space_axioms(rng, iters):
    for _ in range(iters):
        n = rng.randint(1, 6)
        r, s, t = (random_gvector(rng, n) for _ in range(3))
        if smul(s, s) != s:
            return f"S1 fails at {s}"
        if smul(s, smul(s, t)) != t:
            return f"S2 fails at {s}, {t}"
        if smul(r, smul(s, t)) != smul(smul(r, s), smul(r, t)):
            return f"S3 fails at {r}, {s}, {t}"
        if mod2(smul(s, t)) != mod2(t):
            return f"class not preserved at {s}, {t}"
    return None


def _group_laws(rng, iters):
    for _ in range(iters):
        n = rng.randint(1, 5)
        a, b, c = (random_weyl(rng, n) for _ in range(3))
        e = WeylElement.identity(n)
        if w_mul(w_mul(a, b), c) != w_mul(a, w_mul(b, c)):
            return "associativity"
        if w_mul(a, e) != a or w_mul(e, a) != a:
            return "identity"
        if not w_mul(a, w_inv(a)).is_identity() or not w_mul(w_inv(a), a).is_identity():
            return "inverse"
        if w_mul(a, b).affine() != a.affine() * b.affine():
            return "projection to A is not a homomorphism"
        vg = b.g if a.v == 1 else tuple(-x for x in b.g)
        expected_l = tuple(x + y + z for x, y, z in zip(a.l, b.l, wedge(a.g, vg)))
        if w_mul(a, b).l != expected_l:
            return "cocycle term"
        if abelianize(w_mul(a, b)) != abelianize(a) * abelianize(b):
            return "abelianization is not a homomorphism"
    return None


def _reflection_axioms_W(rng, iters):
    for _ in range(iters):
        n = rng.randint(1, 5)
        d = random_datum(rng, n)
        s, t = random_root(rng, d), random_root(rng, d)
        rt, rs = reflect_W(d, t), reflect_W(d, s)
        if act(rt, s) != smul(t, s):
            return f"G2 fails at {t}, {s}"
        if w_mul(w_mul(rt, rs), w_inv(rt)) != reflect_W(d, smul(t, s)):
            return f"G3 fails at {t}, {s}"
        if not w_mul(rt, rt).is_identity():
            return f"G4 fails at {t}"
        if act(rs, act(rs, t)) != t:
            return f"action is not involutive at {s}, {t}"
        # G1: an element built from reflections is a word in them
        word = [random_root(rng, d) for _ in range(rng.randint(0, 6))]
        acc = WeylElement.identity(n)
        for x in word:
            acc = w_mul(acc, reflect_W(d, x))
        if eval_word_W(d, word) != acc:
            return "word evaluation disagrees with iterated products"
    return None


def _reflection_axioms_Wab(rng, iters):
    for _ in range(iters):
        n = rng.randint(1, 5)
        d = random_datum(rng, n)
        s, t = rng.choice(d.tab), rng.choice(d.tab)
        rt = WabElement(sym_square(t), -1)
        rs = WabElement(sym_square(s), -1)
        # the product on T_ab is trivial: t . s = s
        if rt * rs * rt != rs:
            return f"G3 fails at {t}, {s}"
        if not (rt * rt).is_identity():
            return f"G4 fails at {t}"
        if eval_word_Wab(d, [t, s, t]) != eval_word_Wab(d, [s]):
            return "conjugation relation on words"
        word = [random_root(rng, d) for _ in range(rng.randint(0, 8))]
        if abelianize(eval_word_W(d, word)) != eval_word_Wab(d, [mod2(x) for x in word]):
            return "abelianization square does not commute"
    return None


def _gadget(rng, iters):
    for _ in range(iters):
        n = rng.randint(2, 5)
        d = validate(n, [F2Vector.zero(n)] + [F2Vector.unit(n, i) for i in range(n)])
        a, b = random_gvector(rng, n, 10), random_gvector(rng, n, 10)
        two_a = tuple(2 * x for x in a)
        two_b = tuple(2 * x for x in b)
        word = [two_a, (0,) * n, two_b, tuple(x + y for x, y in zip(two_a, two_b))]
        got = eval_word_W(d, word)
        if got != WeylElement(tuple(4 * x for x in wedge(a, b)), (0,) * n, 1):
            return f"gadget fails at {a}, {b}"
    return None


CHECKS = {
    "symmetric-space-axioms": _symmetric_space_axioms,
    "group-laws-and-cocycle": _group_laws,
    "reflection-axioms-W": _reflection_axioms_W,
    "reflection-axioms-Wab": _reflection_axioms_Wab,
    "gadget-identity": _gadget,
}


def run_all(seed: int = 0, iters: int = 1000) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        results.append(_check(name, fn, random.Random(f"{seed}:{name}"), iters))
    return results

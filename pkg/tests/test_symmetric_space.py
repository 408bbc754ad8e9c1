import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a1weyl.errors import BadLength, LengthMismatch, MissingZero, NotGenerating
from a1weyl.f2_linalg import F2Vector
from a1weyl.lattice import mod2
from a1weyl.symmetric_space import basis_datum, contains, full_datum, smul, validate

ints = st.integers(-10**4, 10**4)


@st.composite
def triples(draw):
    n = draw(st.integers(1, 6))
    vec = st.lists(ints, min_size=n, max_size=n).map(tuple)
    return draw(vec), draw(vec), draw(vec)


class TestValidate:
    def test_basis_plus_zero(self):
        d = validate(2, ["00", "01", "10"])
        assert d.rank == 2 and [str(c) for c in d.tab] == ["00", "01", "10"]

    def test_missing_zero(self):
        with pytest.raises(MissingZero):
            validate(2, ["01", "10"])

    def test_not_generating(self):
        with pytest.raises(NotGenerating):
            validate(2, ["00", "11"])

    def test_ragged(self):
        with pytest.raises(BadLength):
            validate(2, ["00", "010"])

    def test_dedup_and_sort(self):
        d = validate(3, ["110", "000", "001", "110", "100", "010"])
        assert [str(c) for c in d.tab] == ["000", "001", "010", "100", "110"]
        assert d.cardinality == 4

    def test_idempotent(self):
        d = validate(3, ["000", "111", "011", "001"])
        assert validate(d.rank, d.tab) == d

    def test_helpers(self):
        assert full_datum(3).cardinality == 7
        assert basis_datum(4).nonzero == tuple(sorted((F2Vector.unit(4, i) for i in range(4)), key=str))


class TestSmul:
    def test_formula(self):
        assert smul((1, 0), (0, 1)) == (2, -1)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            smul((1,), (1, 2))

    @given(triples())
    def test_axioms(self, rst):
        r, s, t = rst
        assert smul(s, s) == s
        assert smul(s, smul(s, t)) == t
        assert smul(r, smul(s, t)) == smul(smul(r, s), smul(r, t))

    @given(triples())
    def test_class_preserved(self, rst):
        _, s, t = rst
        assert mod2(smul(s, t)) == mod2(t)
        d = basis_datum(len(t))
        if contains(d, t) and contains(d, s):
            assert contains(d, smul(s, t))


class TestContains:
    def test_examples(self):
        d = validate(2, ["00", "01", "10"])
        assert contains(d, (3, -2))
        assert not contains(d, (1, 1))

    @given(st.lists(ints, min_size=3, max_size=3))
    def test_even_vectors(self, u):
        d = validate(3, ["000", "100", "010", "001"])
        assert contains(d, tuple(2 * x for x in u))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            contains(validate(2, ["00", "01", "10"]), (1, 2, 3))


@pytest.mark.parametrize("seed_classes", [[(1, 0)], [(1, 1), (0, 1)], [(3, -1)]])
def test_closure_is_a_union_of_cosets(seed_classes):
    """Close a seed set under t -> 2g - t (g in a box) and compare with the mod-2 preimage."""
    box = range(-4, 5)
    members = {(0, 0)} | set(seed_classes)
    frontier = set(members)
    while frontier:
        new = set()
        for t in frontier:
            for g in itertools.product(range(-2, 3), repeat=2):
                x = smul(g, t)
                if all(c in box for c in x) and x not in members:
                    new.add(x)
        members |= new
        frontier = new
    classes = {mod2(t) for t in members}
    assert classes == {mod2(t) for t in [(0, 0), *seed_classes]}
    preimage = {x for x in itertools.product(box, repeat=2) if mod2(x) in classes}
    assert members == preimage

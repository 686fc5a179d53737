"""Lattice layer: pairing, SNF/HNF, center, dimension and the search oracle."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from qtorus import lattice
from qtorus.errors import DimensionMismatch, InvalidExponentSystem, SearchSpaceTooLarge
from qtorus.lattice import (
    ExponentSystem,
    Sublattice,
    algebra_dimension,
    brute_force_max_isotropic,
    center_lattice,
    coordinate_family,
    hermite_normal_form,
    is_commutative_sublattice,
    smith_normal_form,
)
from qtorus.scalars import generic, root_of_unity


def sys2(e12=1, mode=None):
    return ExponentSystem.create(2, [[[0, e12], [-e12, 0]]], mode or generic(1))


def sys3(mode=None):
    return ExponentSystem.create(3, [[[0, 1, 0], [-1, 0, 0], [0, 0, 0]]], mode or generic(1))


# ----------------------------------------------------------------------
# validation


def test_validate_accepts_antisymmetric():
    sys2().validate()


def test_validate_rejects_nonzero_diagonal():
    with pytest.raises(InvalidExponentSystem) as ei:
        ExponentSystem.create(2, [[[1, 0], [0, 0]]], generic(1))
    assert ei.value.location == (1, 1, 1)


def test_validate_rejects_symmetric_pair():
    with pytest.raises(InvalidExponentSystem) as ei:
        ExponentSystem.create(2, [[[0, 1], [1, 0]]], generic(1))
    assert ei.value.location == (1, 2, 1)


# ----------------------------------------------------------------------
# pairing


def test_pairing_examples():
    s = sys2()
    assert s.pairing((1, 0), (0, 1)) == (1,)
    assert s.pairing((1, 1), (1, 1)) == (0,)
    s3 = sys3()
    assert s3.pairing((1, 1, 0), (0, 1, 1)) == (1,)
    with pytest.raises(DimensionMismatch):
        s.pairing((1, 0, 0), (0, 1, 0))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_pairing_bilinear_alternating(data):
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    n = data.draw(st.integers(1, 4))
    r = data.draw(st.integers(1, 2))
    mats = []
    for _ in range(r):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = rng.randint(-3, 3)
                m[j][i] = -m[i][j]
        mats.append(m)
    s = ExponentSystem.create(n, mats, generic(r))
    a = tuple(rng.randint(-4, 4) for _ in range(n))
    b = tuple(rng.randint(-4, 4) for _ in range(n))
    c = tuple(rng.randint(-4, 4) for _ in range(n))
    assert s.pairing(a, a) == (0,) * r
    assert s.pairing(a, b) == tuple(-x for x in s.pairing(b, a))
    ab = tuple(x + y for x, y in zip(a, b))
    assert s.pairing(ab, c) == tuple(x + y for x, y in zip(s.pairing(a, c), s.pairing(b, c)))


# ----------------------------------------------------------------------
# smith / hermite


def test_snf_examples():
    _, d, _ = smith_normal_form([[1, 0], [0, 1]])
    assert d == [[1, 0], [0, 1]]
    _, d, _ = smith_normal_form([[2, 0], [0, 3]])
    assert d == [[1, 0], [0, 6]]
    _, d, _ = smith_normal_form([[0]])
    assert d == [[0]]


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    import itertools as it

    total = 0
    for perm in it.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_snf_reconstruction_and_unimodularity(data):
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 4))
    m = [[data.draw(st.integers(-6, 6)) for _ in range(cols)] for _ in range(rows)]
    u, d, v = smith_normal_form(m)
    assert lattice.mat_mul(lattice.mat_mul(u, m), v) == d
    assert abs(_det(u)) == 1
    assert abs(_det(v)) == 1
    diag = [d[i][i] for i in range(min(rows, cols))]
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0 or diag[i] != 0:
            assert diag[i] >= 0
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_hnf_is_lattice_canonical(data):
    n = data.draw(st.integers(1, 3))
    k = data.draw(st.integers(1, 3))
    rows = [[data.draw(st.integers(-4, 4)) for _ in range(n)] for _ in range(k)]
    h1 = hermite_normal_form(rows)
    # permuting rows or adding one row to another must not change the HNF
    rng = random.Random(data.draw(st.integers(0, 1000)))
    rows2 = [r[:] for r in rows]
    rng.shuffle(rows2)
    if len(rows2) >= 2:
        rows2[0] = [x + y for x, y in zip(rows2[0], rows2[1])]
    assert hermite_normal_form(rows2) == h1


# ----------------------------------------------------------------------
# center


def test_center_examples():
    assert center_lattice(sys2()).rank == 0
    c = center_lattice(sys3())
    assert c.rank == 1
    assert c.hnf() == ((0, 0, 1),)
    c3 = center_lattice(sys2(mode=root_of_unity(3)))
    assert c3.rank == 2
    assert c3.hnf() == ((3, 0), (0, 3))


def test_center_is_isotropic_everywhere():
    rng = random.Random(5)
    for trial in range(30):
        n = rng.randint(1, 4)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = rng.randint(-2, 2)
                m[j][i] = -m[i][j]
        mode = generic(1) if trial % 2 else root_of_unity(rng.choice([2, 3, 4, 6]))
        s = ExponentSystem.create(n, [m], mode)
        c = center_lattice(s)
        for a in c.basis:
            for j in range(n):
                ej = tuple(1 if t == j else 0 for t in range(n))
                assert s.pairing_trivial(s.pairing(a, ej))


# ----------------------------------------------------------------------
# commutative sublattices and dimension


def test_is_commutative_sublattice():
    s = sys2()
    assert is_commutative_sublattice(Sublattice.from_vectors(2, [(1, 0)]), s)
    assert not is_commutative_sublattice(Sublattice.from_vectors(2, [(1, 0), (0, 1)]), s)
    s3 = sys2(mode=root_of_unity(3))
    assert is_commutative_sublattice(Sublattice.from_vectors(2, [(3, 0), (0, 1)]), s3)


def test_algebra_dimension_examples():
    assert algebra_dimension(sys2()).value == 1
    assert algebra_dimension(sys3()).value == 2
    assert algebra_dimension(sys2(mode=root_of_unity(3))).value == 2


def test_brute_force_examples():
    zero = ExponentSystem.create(2, [[[0, 0], [0, 0]]], generic(1))
    assert brute_force_max_isotropic(zero, 2) == 2
    assert brute_force_max_isotropic(sys2(), 3) == 1
    assert brute_force_max_isotropic(sys2(mode=root_of_unity(3)), 3) == 2


def test_brute_force_budget():
    n = 4
    m = [[0] * n for _ in range(n)]
    m[0][1], m[1][0] = 1, -1
    s = ExponentSystem.create(n, [m], generic(1))
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_max_isotropic(s, 6, budget=20_000)


def test_dimension_r2_bounds():
    e1 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
    e2 = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    s = ExponentSystem.create(3, [e1, e2], generic(2))
    res = algebra_dimension(s)
    assert res.exact and res.value == 2
    assert center_lattice(s).rank == 0


# ----------------------------------------------------------------------
# coordinate family


def test_coordinate_family_counts():
    fam1 = coordinate_family(1)
    assert [b.rank for b in fam1] == [1, 0]
    fam2 = coordinate_family(2)
    assert sorted(b.rank for b in fam2) == [0, 1, 1, 2]
    fam3 = coordinate_family(3)
    assert len(fam3) == 8
    assert sorted(b.rank for b in fam3) == [0, 1, 1, 1, 2, 2, 2, 3]
    assert [b.rank for b in fam3] == sorted((b.rank for b in fam3), reverse=True)


# ----------------------------------------------------------------------
# sublattice mechanics


def test_sublattice_membership_and_saturation():
    b = Sublattice.from_vectors(2, [(1, 2)])
    assert b.contains((2, 4))
    assert b.coordinates((2, 4)) == (2,)
    assert not b.contains((1, 1))
    assert b.saturated
    b2 = Sublattice.from_vectors(2, [(2, 0), (0, 2)])
    assert not b2.saturated
    with pytest.raises(ValueError):
        Sublattice.from_vectors(2, [(1, 1), (2, 2)])


def test_oracle_agrees_with_formula_sample():
    # small sample of the exhaustive acceptance sweep
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 3)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = rng.randint(-2, 2)
                m[j][i] = -m[i][j]
        mode = rng.choice([generic(1), root_of_unity(2), root_of_unity(3), root_of_unity(4), root_of_unity(6)])
        s = ExponentSystem.create(n, [m], mode)
        bound = 2 if not mode.is_root else mode.m
        assert algebra_dimension(s).value == brute_force_max_isotropic(s, bound)

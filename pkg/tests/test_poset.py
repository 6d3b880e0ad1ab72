import pytest
from hypothesis import given, strategies as st

from cubicalh.errors import CycleError, NotComparableError, NotGradedError, PosetError, RedundantEdgeError
from cubicalh.poset import Poset, boolean_lattice, chain, product


def number_mobius(n: int) -> int:
    # classical arithmetic Mobius function by trial division
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisor_poset(n: int) -> Poset:
    return Poset.from_order(range(1, n + 1), lambda a, b: b % a == 0)


def test_validation_errors():
    with pytest.raises(PosetError):
        Poset(["a", "a"], [])
    with pytest.raises(CycleError):
        Poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CycleError):
        Poset(["a"], [("a", "a")])
    with pytest.raises(RedundantEdgeError):
        Poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(PosetError):
        Poset("ab", [("a", "z")])


def test_chain_basics():
    C = chain(3)
    assert len(C) == 4 and C.length() == 3
    assert C.minimum() == 0 and C.maximum() == 3
    assert C.rank(2) == 2 and C.leq(0, 3) and not C.leq(3, 0)
    assert C.mobius(0, 1) == -1 and C.mobius(0, 2) == 0
    assert not C.is_locally_eulerian()
    with pytest.raises(NotComparableError):
        C.interval(2, 1)


def test_ungraded_rank():
    diamond = Poset("abcd", [("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")])
    assert diamond.is_lower_graded() and diamond.rank("d") == 2
    lopsided = Poset("abcd", [("a", "b"), ("b", "d"), ("c", "d")])
    # d sits at height 2 via b but height 1 via c
    assert not lopsided.is_lower_graded()
    skewed = Poset("abcde", [("a", "b"), ("b", "c"), ("a", "d"), ("c", "e"), ("d", "e")])
    with pytest.raises(NotGradedError):
        skewed.rank("e")
    assert not skewed.is_lower_graded()


@given(st.integers(1, 60))
def test_divisor_mobius_matches_arithmetic(n):
    P = divisor_poset(n)
    for a in range(1, n + 1):
        for b in range(a, n + 1, a):
            assert P.mobius(a, b) == number_mobius(b // a)


@given(st.integers(1, 40))
def test_mobius_inverts_zeta(n):
    P = divisor_poset(n)
    for s, t in P.intervals():
        total = sum(P.mobius(s, u) for u in P.interval(s, t).members)
        assert total == (1 if s == t else 0)


def test_boolean_lattice_is_eulerian_and_boolean():
    B = boolean_lattice(4)
    assert len(B) == 16 and B.length() == 4
    assert B.is_locally_eulerian()
    bottom, top = frozenset(), frozenset(range(4))
    assert B.mobius(bottom, top) == 1
    assert B.is_boolean_interval(bottom, top)


@given(st.integers(1, 40))
def test_boolean_intervals_of_divisors(n):
    P = divisor_poset(n)
    for a, b in P.intervals():
        squarefree = number_mobius(b // a) != 0
        assert P.is_boolean_interval(a, b) == squarefree


def test_product_of_chains():
    P = product(chain(1), chain(1))
    assert len(P) == 4
    assert P.is_boolean_interval((0, 0), (1, 1))
    assert P.mobius((0, 0), (1, 1)) == 1


def test_derived_posets_and_json():
    B = boolean_lattice(3)
    up = B.subposet_above(frozenset({0}))
    assert len(up) == 4 and up.length() == 2
    down = B.principal_ideal(frozenset({0, 1}))
    assert len(down) == 4
    P = Poset(["x", "y", "z"], [("x", "y"), ("x", "z")])
    assert Poset.from_json(P.to_json()) == P
    assert P.relabel({"x": 1, "y": 2, "z": 3}).maximals() == [2, 3]
    assert P.minimals() == ["x"] and P.maximum() is None


def test_from_order_matches_covers():
    P = Poset.from_order([1, 2, 3, 6], lambda a, b: b % a == 0)
    assert sorted(P.covers()) == [(1, 2), (1, 3), (2, 6), (3, 6)]


def test_worked_examples():
    from cubicalh.complexes import standard_cube

    assert Poset("abc", [("a", "b"), ("b", "c")]).length() == 2
    assert boolean_lattice(3).mobius(frozenset(), frozenset(range(3))) == -1
    square = standard_cube(2).face_poset()
    assert square.rank("**") == 2
    assert square.is_boolean_interval("00", "**")
    assert len(square.subposet_above("00")) == 4
    assert len(standard_cube(3).face_poset().principal_ideal("**0")) == 9
    diamond3 = Poset(["0", "a", "b", "c", "1"], [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])
    assert not diamond3.is_boolean_interval("0", "1")
    atoms = boolean_lattice(3).induced([s for s in boolean_lattice(3).elements if s])
    assert len(atoms.minimals()) == 3

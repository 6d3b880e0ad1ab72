import pytest
from hypothesis import given, strategies as st

from cubicalh.errors import DegreeBoundError, InexactDivisionError
from cubicalh.polynomial import (
    ONE, X, ZERO, Polynomial, divmod_exact, exact_div, face_term, geometric, is_nonnegative,
    is_palindromic, is_unimodal, rational_substitute, reflect,
)

coeff_lists = st.lists(st.integers(-50, 50), max_size=7)
polys = coeff_lists.map(Polynomial)


def test_trimming_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert ZERO.degree == float("-inf")
    assert Polynomial([0, 0, 3]).degree == 2
    assert Polynomial([5])[7] == 0


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        Polynomial([1.0, 2])
    with pytest.raises(TypeError):
        Polynomial([True])


def test_str_and_eval():
    p = Polynomial([4, 8, 4])
    assert str(p) == "4 + 8x + 4x^2"
    assert str(Polynomial([0, -4, -4])) == "-4x - 4x^2"
    assert str(ZERO) == "0"
    assert p(-1) == 0 and p(2) == 36


def test_int_equality():
    assert Polynomial([3]) == 3
    assert ZERO == 0
    assert X + 1 == Polynomial([1, 1])


@given(polys, polys, st.integers(-5, 5))
def test_ring_operations_match_evaluation(p, q, v):
    assert (p + q)(v) == p(v) + q(v)
    assert (p * q)(v) == p(v) * q(v)
    assert (p - q)(v) == p(v) - q(v)


@given(polys, st.integers(0, 4))
def test_power(p, n):
    expected = ONE
    for _ in range(n):
        expected = expected * p
    assert p ** n == expected


monics = st.tuples(coeff_lists, st.sampled_from([1, -1])).map(lambda t: Polynomial(t[0] + [t[1]]))


@given(polys, monics)
def test_division_by_monic_recovers(p, q):
    quot, rem = divmod_exact(p * q, q)
    assert quot == p and rem == 0
    assert exact_div(p * q, q) == p


def test_inexact_division():
    with pytest.raises(InexactDivisionError):
        exact_div(Polynomial([1, 1]), Polynomial([0, 2]))
    with pytest.raises(ZeroDivisionError):
        divmod_exact(Polynomial([1]), ZERO)


def test_reflect():
    assert reflect(Polynomial([1, 2]), 3) == Polynomial([0, 0, 2, 1])
    with pytest.raises(DegreeBoundError):
        reflect(Polynomial([1, 2, 3]), 1)


@given(polys, st.integers(0, 8))
def test_reflect_involution(p, extra):
    d = max(p.degree, 0) + extra if p else extra
    assert reflect(reflect(p, d), d) == p


def test_palindromic_and_shape_predicates():
    assert is_palindromic(Polynomial([0, 4, 4, 0]), 3)
    assert is_palindromic(ZERO, 2)
    assert not is_palindromic(Polynomial([1, 2]), 2)
    assert is_nonnegative(Polynomial([0, 1])) and not is_nonnegative(Polynomial([1, -1]))
    assert is_unimodal(Polynomial([1, 3, 3, 1])) and not is_unimodal(Polynomial([2, 1, 2]))


def test_face_term_and_geometric():
    assert face_term(1, 2, 2) == Polynomial([0, 2, -2])
    assert geometric(3) == Polynomial([1, 1, 1])
    assert geometric(3, 1) == Polynomial([0, 1, 1])


@given(polys, st.integers(0, 4))
def test_rational_substitute_matches_pointwise(p, extra):
    # den^m p(num/den) evaluated at integers with den(v) != 0
    m = max(p.degree, 0) + extra if p else extra
    num, den = Polynomial([1, 2]), Polynomial([3, 1])
    r = rational_substitute(p, num, den, m)
    for v in (0, 1, 2, -1):
        dv, nv = den(v), num(v)
        lhs = r(v)
        rhs = sum(c * nv ** i * dv ** (m - i) for i, c in enumerate(p.coeffs))
        assert lhs == rhs


def test_worked_examples():
    assert exact_div(Polynomial([1, 2, 1]), Polynomial([1, 1])) == Polynomial([1, 1])
    assert exact_div(Polynomial([4, 8, 8, 8, 4]), Polynomial([1, 1])) == Polynomial([4, 4, 4, 4])
    assert exact_div(Polynomial([0, 3, 3]), Polynomial([1, 1])) == Polynomial([0, 3])
    assert rational_substitute(Polynomial([1, 1]), X, ONE, 1) == Polynomial([1, 1])
    assert rational_substitute(Polynomial([2]), Polynomial([1, 3]), Polynomial([3, 1]), 1) == Polynomial([6, 2])
    assert rational_substitute(X ** 2, Polynomial([0, 2]), Polynomial([1, -1]), 2) == Polynomial([0, 0, 4])
    assert reflect(Polynomial([1, 2]), 1) == Polynomial([2, 1])
    assert reflect(ONE, 2) == X ** 2
    assert is_palindromic(Polynomial([0, -4, -4]), 3)
    assert not is_nonnegative(Polynomial([0, -4, -4]))

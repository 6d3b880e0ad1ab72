import pytest
from hypothesis import given, strategies as st

from cubicalh import corpus
from cubicalh.complexes import CubicalComplex, standard_cube
from cubicalh.corpus import gen_grid, gen_segment, gen_stellar, square_path
from cubicalh.enumeration import h_long_cubical, h_short_cubical
from cubicalh.errors import IdentityViolation, NotAVertexError, SubdivisionError, TargetNotCubeError
from cubicalh.polynomial import Polynomial, exact_div, is_palindromic
from cubicalh.subdivision import (
    SubdivisionMap, cbs_closed_form, ell_one_formula, interior_counts, is_locally_quasi_geometric,
    is_quasi_geometric, local_h_long, local_h_short, local_h_short_via_excess, locality_decompose_long,
    locality_decompose_short, lqg_violations, product_subdivision, restriction, trivial_subdivision,
    validate_subdivision, vertex_contribution, vertex_contributions,
)

X1 = Polynomial([1, 1])


def with_carrier(s, **changes):
    carrier = dict(s.carrier)
    carrier.update(changes)
    return SubdivisionMap(s.source, s.target, carrier)


def test_segment_values():
    for t in range(0, 6):
        s = gen_segment(t)
        assert validate_subdivision(s).ok
        assert h_short_cubical(s.source, 1).poly == Polynomial([t + 2, t])
        assert local_h_short(s).poly == t * X1
        assert local_h_long(s).poly == Polynomial([0, t])


def test_validation_catches_broken_carriers():
    s = gen_segment(1)
    mid = next(v for v in s.source.vertices() if s.carrier[v] == "*")
    end = next(v for v in s.source.vertices() if s.carrier[v] == "0")
    assert "order-preserving" in validate_subdivision(with_carrier(s, **{"[0,1]": "1"})).checks_failed()
    assert "connected" in validate_subdivision(with_carrier(s, **{mid: "0"})).checks_failed()
    bad = with_carrier(s, **{end: "*"})
    assert not validate_subdivision(bad).ok
    missing = SubdivisionMap(s.source, s.target, {k: v for k, v in s.carrier.items() if k != mid})
    assert validate_subdivision(missing).checks_failed() == {"carrier-domain"}
    collapsed = SubdivisionMap(s.source, s.target, {**s.carrier, "zz": "*"})
    assert "carrier-domain" in validate_subdivision(collapsed).checks_failed()


def test_validation_catches_wrong_dimension():
    # the whole source of a square carried onto edges is not a subdivision
    K = standard_cube(1)
    s = SubdivisionMap(standard_cube(2), K, {f: "*" for f in standard_cube(2).faces()})
    assert {"dimension", "surjective"} <= validate_subdivision(s).checks_failed()


def test_trivial_and_restriction():
    s = trivial_subdivision(standard_cube(2))
    assert local_h_short(s).poly == 0
    r = restriction(corpus.get("schlegel-2").obj, "*0")
    assert r.target.dim == 1 and validate_subdivision(r).ok
    assert local_h_short(r).poly == 0


def test_excess():
    s = corpus.get("schlegel-2").obj
    assert all(0 <= s.excess(G) <= 2 for G in s.source.faces())


def test_cube_target_required():
    s = trivial_subdivision(square_path())
    with pytest.raises(TargetNotCubeError):
        local_h_short(s)


def test_not_a_vertex():
    s = gen_segment(1)
    with pytest.raises(NotAVertexError):
        vertex_contribution(s, "[0,1]")


def test_strict_mode_raises_on_asymmetry():
    # a map that is not a subdivision can produce an asymmetric alternating sum
    s = with_carrier(gen_segment(1), **{"[0]": "*"})
    with pytest.raises(IdentityViolation):
        local_h_short(s)
    assert local_h_short(s, strict=False).poly is not None


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_schlegel(d):
    s = corpus.get(f"schlegel-{d}").obj
    geo = sum((Polynomial.monomial(i) for i in range(d)), Polynomial())
    assert local_h_short(s).poly == 2 ** d * X1 * geo
    assert local_h_long(s).poly == 2 ** d * Polynomial.monomial(1) * geo


def test_pushed_cube_negative_local_h():
    s = corpus.get("pushed-cube").obj
    assert h_short_cubical(s.source, 3).poly == Polynomial([12, 4])
    assert local_h_short(s).poly == Polynomial([0, -4, -4])
    assert local_h_long(s).poly == Polynomial([0, 0, -4])
    assert not is_locally_quasi_geometric(s) and lqg_violations(s)


def test_reference_classification():
    expected = {"nongeometric-square": (False, False), "pushed-cube": (False, False),
                "remark-square": (False, True), "grid-3x3": (True, True)}
    for name, (lqg, qg) in expected.items():
        s = corpus.get(name).obj
        assert (is_locally_quasi_geometric(s), is_quasi_geometric(s)) == (lqg, qg), name


def test_lqg_not_qg_candidate():
    s = corpus.get("lqg-not-qg-square").obj
    assert validate_subdivision(s).ok
    assert is_locally_quasi_geometric(s) and not is_quasi_geometric(s)
    assert local_h_short(s).poly == 8 * X1 ** 2


@pytest.mark.parametrize("K", [standard_cube(1), standard_cube(2), standard_cube(3), square_path()],
                         ids=["segment", "square", "cube", "square-path"])
@pytest.mark.parametrize("t", [1, 2])
def test_cbs_closed_form_matches_construction(K, t):
    built = corpus.gen_cubical_barycentric(K, t)
    assert validate_subdivision(built).ok
    assert cbs_closed_form(K, t).poly == h_short_cubical(built.source, K.dim).poly


@given(st.integers(0, 3), st.integers(1, 5))
def test_cbs_closed_form_on_cubes(d, t):
    # every face of a cube is refined into a (t+1)-grid, so each axis contributes (t+2) + t x
    assert cbs_closed_form(standard_cube(d), t).poly == Polynomial([t + 2, t]) ** d


def test_cbs_order_must_be_positive():
    with pytest.raises(SubdivisionError):
        cbs_closed_form(standard_cube(1), 0)


grid_parts = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@given(grid_parts)
def test_grid_identities(parts):
    s = gen_grid(len(parts), parts)
    d = len(parts)
    inner = 1
    for p in parts:
        inner *= p - 1
    ell = local_h_short(s).poly
    assert ell == inner * X1 ** d
    assert ell == local_h_short_via_excess(s).poly
    big = local_h_long(s).poly
    assert Polynomial.monomial(1) * ell == X1 * big
    assert is_palindromic(big, d + 1)
    exact_div(ell, X1)
    c = interior_counts(s)
    assert ell[0] == c["interior_vertices"] == inner
    assert ell[1] == ell_one_formula(s)
    assert sum(vertex_contributions(s).values(), Polynomial()) == ell
    assert locality_decompose_short(s).balanced and locality_decompose_long(s).balanced


names = st.sampled_from(corpus._PRODUCT_FACTORS)


@given(names, names)
def test_product_formula(a, b):
    A, B = corpus.get(a).obj, corpus.get(b).obj
    if A.target.dim + B.target.dim > 4:
        return
    P = product_subdivision(A, B)
    assert validate_subdivision(P).ok
    assert local_h_short(P).poly == local_h_short(A).poly * local_h_short(B).poly
    if is_locally_quasi_geometric(A) and is_locally_quasi_geometric(B):
        assert is_locally_quasi_geometric(P)


cell_sets = st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=5)


@given(cell_sets, st.data())
def test_stellar_on_random_square_complexes(cells, data):
    K = CubicalComplex.from_boxes([((i, i + 1), (j, j + 1)) for i, j in cells])
    F = data.draw(st.sampled_from(sorted(K.faces(2))))
    s = gen_stellar(K, F)
    assert validate_subdivision(s).ok
    assert h_short_cubical(s.source, 2).poly - h_short_cubical(K).poly == 4 * X1 ** 2
    assert h_long_cubical(s.source, 2).poly - h_long_cubical(K).poly == Polynomial([0, 4, 4])
    assert locality_decompose_short(s).balanced and locality_decompose_long(s).balanced


def test_vertex_contributions_on_schlegel():
    s = corpus.get("schlegel-2").obj
    contribs = vertex_contributions(s)
    assert all(is_palindromic(p, 2) for p in contribs.values())
    assert sum(contribs.values(), Polynomial()) == 4 * X1 ** 2


def test_worked_examples():
    s = gen_segment(1)
    contribs = vertex_contributions(s)
    assert sorted(str(p) for p in contribs.values()) == ["0", "0", "1 + x"]
    assert all(p == 0 for p in vertex_contributions(trivial_subdivision(standard_cube(2))).values())
    grid = gen_grid(2, (2, 2))
    r = restriction(grid, "*0")
    assert len(r.source.vertices()) == 3
    assert all(grid.excess(v) == 2 for v in grid.source.vertices() if grid.carrier[v] == "**")
    pushed = corpus.get("pushed-cube").obj
    G = restriction(pushed, "**1")
    assert local_h_short(G).poly == local_h_short(corpus.get("schlegel-2").obj).poly
    assert G.source.f_vector() == corpus.get("schlegel-2").obj.source.f_vector()
    assert local_h_short(product_subdivision(gen_segment(2), gen_segment(3))).poly == 6 * X1 ** 2
    flat = product_subdivision(trivial_subdivision(standard_cube(2)), gen_segment(1))
    assert local_h_short(flat).poly == 0
    assert cbs_closed_form(standard_cube(1), 1).poly == Polynomial([3, 1])
    assert cbs_closed_form(standard_cube(0), 3).poly == 1
    dec = locality_decompose_short(corpus.gen_cubical_barycentric(standard_cube(1), 1))
    assert dec.lhs == dec.rhs == Polynomial([3, 1])

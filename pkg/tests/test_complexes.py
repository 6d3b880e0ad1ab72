from math import comb

import pytest
from hypothesis import given, strategies as st

from cubicalh.complexes import (
    EMPTY, CubicalComplex, SimplicialComplex, boundary_simplex, cube_codes, path_complex,
    product_complex, simplex_complex, standard_cube, validate_cubical,
)
from cubicalh.corpus import boundary_cube, glued_squares, square_path
from cubicalh.errors import ComplexError, FaceNotFoundError, NotPureError
from cubicalh.polynomial import Polynomial


@pytest.mark.parametrize("d", range(0, 5))
def test_cube_f_vector(d):
    K = standard_cube(d)
    assert K.f_vector() == [comb(d, k) * 2 ** (d - k) for k in range(d + 1)]
    assert K.reduced_euler() == 0
    assert validate_cubical(K).ok


@pytest.mark.parametrize("d", range(1, 5))
def test_boundary_cube(d):
    K = boundary_cube(d)
    assert K.f_vector() == [comb(d, k) * 2 ** (d - k) for k in range(d)]
    # sphere of dimension d - 1
    assert K.reduced_euler() == (-1) ** (d - 1)
    boundary, interior = K.boundary_interior()
    assert boundary == set() and EMPTY in interior


def test_simplicial_constructors():
    D = boundary_simplex(4)
    assert D.f_vector() == [4, 6, 4]
    assert simplex_complex(3).f_vector() == [3, 3, 1]
    assert path_complex(3).f_vector() == [3, 2]
    assert D.reduced_euler() == 1
    S = SimplicialComplex.from_facets([(1, 2, 3), (3, 4)])
    assert not S.is_pure()
    with pytest.raises(NotPureError):
        S.require_pure()


def test_face_queries():
    K = standard_cube(2)
    assert sorted(K.vertices()) == ["00", "01", "10", "11"]
    assert K.facets() == ["**"]
    assert sorted(K.face_vertices("*0")) == ["00", "10"]
    with pytest.raises(FaceNotFoundError):
        K.check_face("zz")
    L = K.link("00")
    assert L.f_vector() == [2, 1]


def test_boundary_interior_of_square():
    K = standard_cube(2)
    boundary, interior = K.boundary_interior()
    assert interior == {"**"}
    assert EMPTY in boundary and len(boundary) == 9
    assert sorted(square_path().interior_faces()) == ["[0,1]x[0,1]", "[1,2]x[0,1]", "[1]x[0,1]"]


def test_product_complex():
    K, names = product_complex(standard_cube(1), standard_cube(1))
    assert K.f_vector() == [4, 4, 1]
    assert names[("*", "0")] == "*0"
    assert validate_cubical(K).ok


def test_glued_squares_fail_meet_but_pass_intervals():
    rep = validate_cubical(glued_squares())
    assert rep.checks_failed() == {"meet"}


def test_non_cube_face_rejected():
    tri = CubicalComplex.from_face_covers([("a", 0, []), ("b", 0, []), ("c", 0, []),
                                           ("ab", 1, ["a", "b"]), ("bc", 1, ["b", "c"]),
                                           ("ca", 1, ["c", "a"]), ("T", 2, ["ab", "bc", "ca"])])
    assert "cube-interval" in validate_cubical(tri).checks_failed()
    with pytest.raises(ComplexError):
        cube_codes(tri, "T")


def test_dims_must_follow_covers():
    with pytest.raises(ComplexError):
        CubicalComplex.from_face_covers([("a", 0, []), ("e", 2, ["a"])])


def test_cube_codes_roundtrip():
    K = standard_cube(3)
    codes = cube_codes(K, "***")
    assert len(codes) == 27
    # each face gets a distinct code with the right number of free axes
    assert len(set(codes.values())) == 27
    assert all(c.count("*") == K.dims[f] for f, c in codes.items())


# random unions of unit squares in a small grid
cell_sets = st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=6)


def squares(cells):
    return CubicalComplex.from_boxes([((i, i + 1), (j, j + 1)) for i, j in cells])


@given(cell_sets)
def test_random_box_complexes_are_cubical(cells):
    K = squares(cells)
    assert validate_cubical(K).ok
    assert K.f_vector()[2] == len(cells)
    assert K.has_intersection_property()


@given(cell_sets, cell_sets)
def test_product_f_polynomial_multiplies(a, b):
    K, L = squares(a), squares(b)
    M, _ = product_complex(K, L)
    assert M.f_polynomial() == K.f_polynomial() * L.f_polynomial()
    # 1 + reduced Euler characteristic is the Euler characteristic, and it multiplies
    assert 1 + M.reduced_euler() == (1 + K.reduced_euler()) * (1 + L.reduced_euler())


@given(cell_sets)
def test_json_roundtrip(cells):
    from cubicalh.serialize import complex_from_json

    K = squares(cells)
    K2 = complex_from_json(K.to_json())
    assert K2.poset == K.poset and K2.dims == K.dims


def test_worked_examples():
    assert standard_cube(3).f_vector() == [8, 12, 6, 1]
    assert validate_cubical(boundary_cube(3)).ok
    assert standard_cube(3).link("000").f_vector() == [3, 3, 1]
    assert boundary_cube(3).link("000").f_vector() == [3, 3]
    assert standard_cube(2).f_polynomial() == Polynomial([4, 4, 1])
    assert len(simplex_complex(3).all_faces()) == 8
    assert len(boundary_simplex(3).all_faces()) == 7
    from cubicalh.corpus import gen_segment

    seg = gen_segment(1).source
    assert sorted(seg.interior_faces()) == ["[0,1]", "[1,2]", "[1]"]

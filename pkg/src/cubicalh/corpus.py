"""Named constructions with known invariants, used as golden values and test instances."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Any, Callable

from .complexes import (
    EMPTY,
    CubicalComplex,
    FaceComplex,
    boundary_simplex,
    code_id,
    cube_codes,
    path_complex,
    simplex_complex,
    standard_cube,
)
from .enumeration import h_long_cubical, h_short_cubical
from .errors import ParameterError, UnknownEntryError
from .formal import FormalSubdivision
from .polynomial import Polynomial, geometric
from .poset import Poset
from .subdivision import SubdivisionMap, product_subdivision, restriction, trivial_subdivision

REFERENCE = "reference"
DERIVED = "derived"


@dataclass
class CorpusEntry:
    name: str
    kind: str  # subdivision | formal | complex | poset
    obj: Any
    is_lqg: bool | None = None
    is_qg: bool | None = None
    is_geometric: bool | None = None
    cm_links: bool = False
    manifold: str | None = None  # ball | sphere | manifold
    experimental: bool = False
    expected: dict = field(default_factory=dict)
    description: str = ""

    def expect(self, key: str, poly, provenance: str = DERIVED):
        self.expected[key] = (Polynomial(poly) if not isinstance(poly, Polynomial) else poly, provenance)
        return self

    def metadata(self) -> dict:
        return {
            "is_lqg": self.is_lqg, "is_qg": self.is_qg, "is_geometric": self.is_geometric,
            "cm_links": self.cm_links, "manifold": self.manifold, "experimental": self.experimental,
        }


# subdivisions of a segment and of cubes


def gen_segment(t: int) -> SubdivisionMap:
    """Segment cut into ``t + 1`` edges."""
    if t < 0:
        raise ParameterError("t must be nonnegative")
    src = CubicalComplex.from_boxes([((i, i + 1),) for i in range(t + 1)])
    carrier = {}
    for f in src.faces():
        (a, b), = src.boxes[f]
        if a == b == 0:
            carrier[f] = "0"
        elif a == b == t + 1:
            carrier[f] = "1"
        else:
            carrier[f] = "*"
    return SubdivisionMap(src, standard_cube(1), carrier)


def gen_schlegel(d: int) -> SubdivisionMap:
    """The boundary of a ``(d+1)``-cube minus one facet, carried onto that facet."""
    if d < 1:
        raise ParameterError("d must be at least 1")
    big = standard_cube(d + 1)
    drop = {code_id("*" * (d + 1)), code_id("*" * d + "0")}
    src = big.subcomplex([f for f in big.faces() if f not in drop])
    carrier = {}
    for f in src.faces():
        c = src.codes[f]
        carrier[f] = code_id(c[:d]) if c[d] == "0" else code_id("*" * d)
    return SubdivisionMap(src, standard_cube(d), carrier)


def _pushed(d: int) -> SubdivisionMap:
    """Two stacked ``d``-cubes carried onto one, the shared facet carried by the whole cube."""
    lower = tuple([(0, 1)] * d)
    upper = tuple([(0, 1)] * (d - 1) + [(1, 2)])
    src = CubicalComplex.from_boxes([lower, upper])
    shared = tuple([(0, 1)] * (d - 1) + [(1, 1)])
    top = code_id("*" * d)
    roof = code_id("*" * (d - 1) + "1")
    carrier = {}
    for f in src.faces():
        box = src.boxes[f]
        if box in (lower, shared):
            carrier[f] = top
        elif box == upper:
            carrier[f] = top
        elif box[-1][1] == 2:
            carrier[f] = roof
        else:
            carrier[f] = code_id("".join("0" if (a, b) == (0, 0) else "1" if (a, b) == (1, 1) else "*"
                                         for a, b in box))
    return SubdivisionMap(src, standard_cube(d), carrier)


def gen_pushed_cube() -> SubdivisionMap:
    return _pushed(3)


def gen_nongeometric_square() -> SubdivisionMap:
    return _pushed(2)


def gen_remark_square() -> SubdivisionMap:
    """Square with two points on each of two sides and three quadrilaterals.

    Corners a=00, b=10, c=11, d=01; e, f lie on bc and g, h on cd.
    """
    carriers_v = {"a": "00", "b": "10", "c": "11", "d": "01",
                  "e": "1*", "f": "1*", "g": "*1", "h": "*1"}
    edges = {"ab": "*0", "be": "1*", "ef": "1*", "fc": "1*", "cg": "*1", "gh": "*1",
             "hd": "*1", "da": "0*", "ed": "**", "eg": "**"}
    quads = {"abed": "abde", "dehg": "degh", "cefg": "cefg"}
    cells = [(v, 0, {v}) for v in carriers_v]
    cells += [(e, 1, set(e)) for e in edges]
    cells += [(q, 2, set(vs)) for q, vs in quads.items()]
    src = CubicalComplex.from_vertex_sets(cells)
    carrier = {**carriers_v, **edges, **{q: "**" for q in quads}}
    return SubdivisionMap(src, standard_cube(2), carrier)


def gen_lqg_not_qg_square() -> SubdivisionMap:
    """Candidate square subdivision that is locally quasi-geometric but not quasi-geometric.

    One quadrilateral G has all four vertices 1, 2, 3, 4 on the bottom side; two of
    its edges are arcs over the points a, b and c, d, and the regions under the arcs
    are each cut into a ring of four quadrilaterals around a central one.
    """
    bottom = ["P0", "1", "a", "b", "2", "3", "c", "d", "4", "P5"]
    cv = {v: "*0" for v in bottom}
    cv.update({"P0": "00", "P5": "10", "TL": "01", "TR": "11"})
    inner = [f"w{i}" for i in range(1, 9)]
    cv.update({w: "**" for w in inner})
    edges = {}
    for u, v in zip(bottom, bottom[1:]):
        edges[(u, v)] = "*0"
    edges[("P0", "TL")] = "0*"
    edges[("TL", "TR")] = "*1"
    edges[("TR", "P5")] = "1*"
    for u, v in [("4", "1"), ("TL", "4"), ("1", "2"), ("3", "4")]:
        edges[(u, v)] = "**"
    quads = [("1", "P0", "TL", "4"), ("TL", "TR", "P5", "4"), ("1", "2", "3", "4")]
    for (p, q, r, s), (w1, w2, w3, w4) in [(("1", "a", "b", "2"), inner[:4]),
                                            (("3", "c", "d", "4"), inner[4:])]:
        ring = [(p, q, w2, w1), (q, r, w3, w2), (r, s, w4, w3), (s, p, w1, w4), (w1, w2, w3, w4)]
        quads += ring
        for quad in ring:
            for u, v in zip(quad, quad[1:] + quad[:1]):
                if (u, v) not in edges and (v, u) not in edges:
                    edges[(u, v)] = "**"
    cells = [(v, 0, {v}) for v in cv]
    cells += [(f"{u}-{v}", 1, {u, v}) for u, v in edges]
    cells += [("Q" + "".join(q), 2, set(q)) for q in quads]
    src = CubicalComplex.from_vertex_sets(cells)
    carrier = dict(cv)
    carrier.update({f"{u}-{v}": c for (u, v), c in edges.items()})
    carrier.update({"Q" + "".join(q): "**" for q in quads})
    return SubdivisionMap(src, standard_cube(2), carrier)


def gen_trivial(d: int) -> SubdivisionMap:
    return trivial_subdivision(standard_cube(d))


def gen_grid(d: int, parts) -> SubdivisionMap:
    """Axis-aligned grid on the ``d``-cube with ``parts[i]`` slabs along axis ``i``."""
    parts = list(parts)
    if d < 1 or len(parts) != d or any(p < 1 for p in parts):
        raise ParameterError("need d >= 1 and d positive part counts")
    s = gen_segment(parts[0] - 1)
    for p in parts[1:]:
        s = product_subdivision(s, gen_segment(p - 1))
    return s


# subdivisions of complexes


def gen_stellar(K: FaceComplex, F) -> SubdivisionMap:
    """Replace the facet ``F`` by the boundary of a cube over it minus ``F`` itself."""
    K.check_face(F, allow_empty=False)
    d = K.dims[F]
    if d < 1 or K.poset.upper_covers(F):
        raise ParameterError(f"{F!r} is not a facet of dimension at least 1")
    codes = cube_codes(K, F)
    inv = {c: g for g, c in codes.items()}

    def name(c):
        return inv[c[:d]] if c[d] == "0" else f"{F}#{c}"

    faces = []
    for g in K.faces():
        if g != F:
            faces.append((g, K.dims[g], [h for h in K.poset.lower_covers(g) if h != EMPTY]))
    new = [c for c in ("".join(x) for x in iproduct("01*", repeat=d + 1))
           if c[d] in "1*" and c != "*" * (d + 1)]
    new.sort(key=lambda c: c.count("*"))
    for c in new:
        below = [name(c[:i] + e + c[i + 1:]) for i, ch in enumerate(c) if ch == "*" for e in "01"]
        faces.append((f"{F}#{c}", c.count("*"), below))
    src = CubicalComplex.from_face_covers(faces)
    carrier = {g: g for g in K.faces() if g != F}
    carrier.update({f"{F}#{c}": F for c in new})
    return SubdivisionMap(src, K, carrier)


def _interval_barycentric(K: FaceComplex) -> SubdivisionMap:
    P = K.poset
    faces = []
    pairs = [(s, u) for s in K.faces() for u in K.faces() if P.leq(s, u)]
    for s, u in sorted(pairs, key=lambda p: K.dims[p[1]] - K.dims[p[0]]):
        below = [f"[{a}:{u}]" for a in P.upper_covers(s) if P.leq(a, u)]
        below += [f"[{s}:{b}]" for b in P.lower_covers(u) if b != EMPTY and P.leq(s, b)]
        faces.append((f"[{s}:{u}]", K.dims[u] - K.dims[s], below))
    src = CubicalComplex.from_face_covers(faces)
    return SubdivisionMap(src, K, {f"[{s}:{u}]": u for s, u in pairs})


def _grid_refinement(K: FaceComplex, n: int) -> SubdivisionMap:
    """Cut every edge of ``K`` into ``n + 1`` pieces and every face into the induced grid."""
    faces_K = K.faces()
    codes = {F: cube_codes(K, F) for F in faces_K}
    lookup = {F: {c: g for g, c in codes[F].items()} for F in faces_K}

    def mirror(entry):
        kind, j = entry
        return (kind, n + 1 - j) if kind == "v" else (kind, n - j)

    axis_maps = {}

    def facet_map(F, H):
        # axis a of H -> (axis of F, flipped?)
        key = (F, H)
        if key not in axis_maps:
            k = K.dims[H]
            out = []
            cH = codes[F][H]
            for a in range(k):
                X = lookup[H]["*" * a + "0" + "*" * (k - a - 1)]
                cX = codes[F][X]
                j = next(i for i in range(len(cH)) if cH[i] == "*" and cX[i] != "*")
                out.append((j, cX[j] == "1"))
            axis_maps[key] = out
        return axis_maps[key]

    def canonical(F, pos):
        while True:
            k = K.dims[F]
            hit = next((i for i, e in enumerate(pos) if e[0] == "v" and e[1] in (0, n + 1)), None)
            if hit is None:
                return F, tuple(pos)
            side = "0" if pos[hit][1] == 0 else "1"
            H = lookup[F]["*" * hit + side + "*" * (k - hit - 1)]
            new = []
            for j, flip in facet_map(F, H):
                new.append(mirror(pos[j]) if flip else pos[j])
            F, pos = H, new

    def fid(F, pos):
        return f"{F}|" + ",".join(f"{a}{j}" for a, j in pos)

    entries = [("v", j) for j in range(1, n + 1)] + [("e", j) for j in range(n + 1)]
    faces, carrier = [], {}
    for F in faces_K:
        k = K.dims[F]
        for pos in iproduct(entries, repeat=k):
            below = []
            for i, (a, j) in enumerate(pos):
                if a == "e":
                    for jj in (j, j + 1):
                        G, p = canonical(F, list(pos[:i]) + [("v", jj)] + list(pos[i + 1:]))
                        below.append(fid(G, p))
            dim = sum(1 for a, _ in pos if a == "e")
            faces.append((fid(F, pos), dim, below))
            carrier[fid(F, pos)] = F
    faces.sort(key=lambda f: f[1])
    return SubdivisionMap(CubicalComplex.from_face_covers(faces), K, carrier)


def gen_cubical_barycentric(K: FaceComplex, t: int = 1) -> SubdivisionMap:
    """Order-``t`` cubical barycentric subdivision: every face becomes a ``(t+1)``-grid."""
    if t < 1:
        raise ParameterError("t must be at least 1")
    K.require_pure()
    if t == 1:
        return _interval_barycentric(K)
    return _grid_refinement(K, t)


# formal subdivisions


def simplex_face_poset(d: int) -> Poset:
    """Nonempty subsets of ``{1..d}``; ids are the sorted elements joined by commas."""
    V = [str(i) for i in range(1, d + 1)]
    sets = [frozenset(c) for k in range(1, d + 1) for c in combinations(V, k)]
    name = {s: ",".join(sorted(s, key=int)) for s in sets}
    covers = [(name[s - {v}], name[s]) for s in sets if len(s) > 1 for v in s]
    return Poset([name[s] for s in sets], covers)


def gen_interval_poset_subdivision(d: int) -> FormalSubdivision:
    """Closed intervals of the face poset of a simplex on ``d`` vertices, mapped to their tops."""
    if d < 1:
        raise ParameterError("d must be at least 1")
    P = simplex_face_poset(d)
    pairs = [(s, t) for s, t in P.intervals()]
    name = {(s, t): f"[{s}:{t}]" for s, t in pairs}
    covers = []
    for s, t in pairs:
        for a in P.upper_covers(s):
            if P.leq(a, t):
                covers.append((name[(a, t)], name[(s, t)]))
        for b in P.lower_covers(t):
            if P.leq(s, b):
                covers.append((name[(s, b)], name[(s, t)]))
    Q = Poset([name[p] for p in pairs], covers)
    return FormalSubdivision(Q, P, {name[(s, t)]: t for s, t in pairs})


def annulus_prism() -> CubicalComplex:
    """Lateral surface of a triangular prism: 6 vertices, 9 edges, 3 squares."""
    cells = [(f"{s}{i}", 0, {f"{s}{i}"}) for s in "ab" for i in (1, 2, 3)]
    pairs = [(1, 2), (2, 3), (1, 3)]
    for s in "ab":
        for i, j in pairs:
            cells.append((f"{s}{i}{j}", 1, {f"{s}{i}", f"{s}{j}"}))
    for i in (1, 2, 3):
        cells.append((f"v{i}", 1, {f"a{i}", f"b{i}"}))
    for i, j in pairs:
        cells.append((f"q{i}{j}", 2, {f"a{i}", f"a{j}", f"b{i}", f"b{j}"}))
    return CubicalComplex.from_vertex_sets(cells)


def annulus_target() -> Poset:
    """Two disjoint triangles under a single rank-2 element."""
    elements, covers = [], []
    for s in "ab":
        elements += [f"{s}{i}" for i in (1, 2, 3)]
    for s in "ab":
        for i, j in [(1, 2), (2, 3), (1, 3)]:
            e = f"{s}{i}{j}"
            elements.append(e)
            covers += [(f"{s}{i}", e), (f"{s}{j}", e), (e, "T")]
    elements.append("T")
    return Poset(elements, covers)


def gen_annulus() -> FormalSubdivision:
    Q = annulus_prism().face_poset()
    P = annulus_target()
    sigma = {t: (t if t in P else "T") for t in Q.elements}
    return FormalSubdivision(Q, P, sigma)


# named complexes


def boundary_cube(d: int) -> CubicalComplex:
    C = standard_cube(d)
    return C.subcomplex([f for f in C.faces() if f != code_id("*" * d)])


def square_path() -> CubicalComplex:
    return CubicalComplex.from_boxes([((0, 1), (0, 1)), ((1, 2), (0, 1))])


def segment_path() -> CubicalComplex:
    return CubicalComplex.from_boxes([((0, 1),), ((1, 2),)])


def cube_path() -> CubicalComplex:
    return CubicalComplex.from_boxes([((0, 1), (0, 1), (0, 1)), ((1, 2), (0, 1), (0, 1))])


def glued_squares() -> CubicalComplex:
    """Two squares sharing two opposite edges; not a meet-semilattice."""
    cells = [(v, 0, {v}) for v in "abcd"]
    cells += [(e, 1, set(e[:2])) for e in ("ab", "cd")]
    cells += [("ac1", 1, {"a", "c"}), ("ac2", 1, {"a", "c"}), ("bd1", 1, {"b", "d"}),
              ("bd2", 1, {"b", "d"})]
    faces = []
    for fid, dim, vs in cells:
        faces.append((fid, dim, [] if dim == 0 else sorted(vs)))
    faces.append(("S1", 2, ["ab", "cd", "ac1", "bd1"]))
    faces.append(("S2", 2, ["ab", "cd", "ac2", "bd2"]))
    return CubicalComplex.from_face_covers(faces)


# registry


def _square_local(t: int) -> Polynomial:
    return t * Polynomial([1, 1]) ** 2


def _schlegel_local(d: int) -> Polynomial:
    return 2 ** d * Polynomial([1, 1]) * geometric(d)


def _schlegel_long(d: int) -> Polynomial:
    return 2 ** d * geometric(d + 1, 1)


def _build() -> dict:
    E: dict[str, CorpusEntry] = {}

    def add(entry: CorpusEntry):
        E[entry.name] = entry
        return entry

    geo = dict(is_lqg=True, is_qg=True, is_geometric=True, cm_links=True)
    for t in (0, 1, 2, 3, 5):
        add(CorpusEntry(f"segment-t{t}", "subdivision", gen_segment(t), **geo,
                        description=f"segment with {t} interior vertices")) \
            .expect("h_short", [t + 2, t], REFERENCE) \
            .expect("local_h_short", [t, t], REFERENCE) \
            .expect("local_h_long", [0, t], REFERENCE)
    add(CorpusEntry("nongeometric-square", "subdivision", gen_nongeometric_square(),
                    is_lqg=False, is_qg=False, is_geometric=False, cm_links=True,
                    description="two stacked squares carried onto one")) \
        .expect("h_short", [6, 2], REFERENCE).expect("local_h_short", [], REFERENCE) \
        .expect("local_h_long", [], DERIVED)
    for d in (1, 2, 3, 4):
        e = add(CorpusEntry(f"schlegel-{d}", "subdivision", gen_schlegel(d), **geo,
                            description=f"Schlegel diagram of the {d + 1}-cube"))
        e.expect("local_h_short", _schlegel_local(d), REFERENCE)
        e.expect("local_h_long", _schlegel_long(d), REFERENCE)
        e.expect("h_short", 2 ** (d + 1) * geometric(d + 1) - 2 ** d * Polynomial.monomial(d), DERIVED)
    E["schlegel-2"].expect("h_short", [8, 8, 4], REFERENCE)
    add(CorpusEntry("pushed-cube", "subdivision", gen_pushed_cube(),
                    is_lqg=False, is_qg=False, is_geometric=False, cm_links=True,
                    description="two stacked cubes carried onto one")) \
        .expect("h_short", [12, 4], REFERENCE).expect("local_h_short", [0, -4, -4], REFERENCE) \
        .expect("local_h_long", [0, 0, -4], REFERENCE)
    add(CorpusEntry("remark-square", "subdivision", gen_remark_square(),
                    is_lqg=False, is_qg=True, is_geometric=False, cm_links=True,
                    description="quasi-geometric square that is not locally quasi-geometric")) \
        .expect("local_h_short", [], DERIVED)
    add(CorpusEntry("lqg-not-qg-square", "subdivision", gen_lqg_not_qg_square(),
                    is_lqg=True, is_qg=False, is_geometric=False, cm_links=True, experimental=True,
                    description="candidate locally quasi-geometric square that is not quasi-geometric")) \
        .expect("local_h_short", _square_local(8), DERIVED)
    for d in (0, 1, 2, 3):
        add(CorpusEntry(f"trivial-{d}", "subdivision", gen_trivial(d), **geo,
                        description=f"identity subdivision of the {d}-cube")) \
            .expect("local_h_short", [1] if d == 0 else [], REFERENCE)
    for parts in ((2, 2), (3, 2), (3, 3), (2, 1, 1), (2, 2, 2)):
        s = gen_grid(len(parts), parts)
        inner = 1
        for p in parts:
            inner *= p - 1
        e = add(CorpusEntry("grid-" + "x".join(map(str, parts)), "subdivision", s, **geo,
                            description="axis-aligned grid"))
        ell = inner * Polynomial([1, 1]) ** len(parts)
        e.expect("local_h_short", ell, DERIVED)
        if len(parts) == 2:
            e.expect("local_h_long", inner * Polynomial([0, 1, 1]), REFERENCE)
    for d, K in ((1, segment_path()), (2, square_path()), (3, cube_path())):
        F = K.facets()[0]
        e = add(CorpusEntry(f"stellar-{d}", "subdivision", gen_stellar(K, F), **geo,
                            description=f"cubical stellar subdivision of one facet of a {d}-dimensional path"))
        e.expect("h_short", h_short_cubical(K).poly + _schlegel_local(d), REFERENCE)
        e.expect("h_long", h_long_cubical(K).poly + _schlegel_long(d), REFERENCE)
    cbs_bases = {"segment": standard_cube(1), "square-path": square_path(),
                 "square": standard_cube(2), "cube": standard_cube(3)}
    for t in (1, 2):
        for label, K in cbs_bases.items():
            add(CorpusEntry(f"cbs-{label}-t{t}", "subdivision", gen_cubical_barycentric(K, t), **geo,
                            description=f"order-{t} cubical barycentric subdivision of {label}"))
    E["cbs-segment-t1"].expect("h_short", [3, 1], DERIVED)
    for d in range(1, 6):
        add(CorpusEntry(f"interval-simplex-{d}", "formal", gen_interval_poset_subdivision(d),
                        description=f"interval poset subdivision of the simplex on {d} vertices")) \
            .expect("local_h_general", geometric(d), REFERENCE)
    add(CorpusEntry("annulus", "formal", gen_annulus(),
                    description="prism lateral surface over a rank-2 annulus poset")) \
        .expect("h_general", [6, 6], REFERENCE).expect("local_h_general", [0, 6], REFERENCE)
    add(CorpusEntry("annulus-q", "poset", gen_annulus().source,
                    description="face poset of the prism lateral surface")).expect("h_general", [6, 6], REFERENCE)
    add(CorpusEntry("annulus-p", "poset", annulus_target(),
                    description="rank-2 poset over two disjoint triangles"))
    add(CorpusEntry("boundary-3-cube", "complex", boundary_cube(3), manifold="sphere")) \
        .expect("h_short", [8, 8, 8], REFERENCE).expect("h_long", [4, 4, 4, 4], DERIVED)
    add(CorpusEntry("boundary-square", "complex", boundary_cube(2), manifold="sphere"))
    for d in (1, 2, 3):
        add(CorpusEntry(f"cube-{d}", "complex", standard_cube(d), manifold="ball"))
    add(CorpusEntry("square-path", "complex", square_path(), manifold="ball"))
    add(CorpusEntry("cube-path", "complex", cube_path(), manifold="ball"))
    add(CorpusEntry("annulus-prism", "complex", annulus_prism(), manifold="manifold")) \
        .expect("h_short", [6, 6], REFERENCE)
    add(CorpusEntry("simplex-3", "complex", simplex_complex(3), manifold="ball")).expect("h_simplicial", [1])
    add(CorpusEntry("boundary-triangle", "complex", boundary_simplex(3), manifold="sphere")) \
        .expect("h_simplicial", [1, 1, 1])
    add(CorpusEntry("boundary-tetrahedron", "complex", boundary_simplex(4), manifold="sphere"))
    add(CorpusEntry("path-3", "complex", path_complex(3), manifold="ball")).expect("h_simplicial", [1, 1])
    return E


@lru_cache(maxsize=1)
def _registry() -> dict:
    return _build()


def names() -> list[str]:
    return list(_registry())


def get(name: str) -> CorpusEntry:
    try:
        return _registry()[name]
    except KeyError:
        raise UnknownEntryError(f"no corpus entry named {name!r}") from None


def entries(kind: str | None = None) -> list[CorpusEntry]:
    return [e for e in _registry().values() if kind is None or e.kind == kind]


def subdivisions() -> list[CorpusEntry]:
    return entries("subdivision")


def cube_subdivisions() -> list[CorpusEntry]:
    return [e for e in subdivisions() if len(e.obj.target.facets()) == 1]


_PRODUCT_FACTORS = ["segment-t0", "segment-t1", "segment-t2", "nongeometric-square", "schlegel-1",
                    "schlegel-2", "remark-square", "grid-2x2", "trivial-1", "trivial-2"]


@lru_cache(maxsize=1)
def derived_instances() -> tuple:
    """Products of small cube subdivisions and restrictions of corpus subdivisions.

    Returns ``(name, SubdivisionMap, inherited_lqg)`` triples.
    """
    out = []
    for a, b in combinations(_PRODUCT_FACTORS, 2):
        A, B = get(a), get(b)
        if A.obj.target.dim + B.obj.target.dim > 4:
            continue
        lqg = bool(A.is_lqg and B.is_lqg)
        out.append((f"{a}*{b}", product_subdivision(A.obj, B.obj), lqg))
    for e in subdivisions():
        s = e.obj
        if len(s.source) > 400:
            continue
        for F in s.target.faces():
            if 1 <= s.target.dims[F] < s.target.dim:
                out.append((f"{e.name}|{F}", restriction(s, F), e.is_lqg))
    return tuple(out)


def product_pairs() -> list[tuple[str, str]]:
    return [(a, b) for a, b in combinations(_PRODUCT_FACTORS, 2)
            if get(a).obj.target.dim + get(b).obj.target.dim <= 4]


def expected_json(entry: CorpusEntry) -> dict:
    return {
        "name": entry.name,
        "kind": entry.kind,
        "metadata": entry.metadata(),
        "expected": {k: {"coeffs": list(p.coeffs), "provenance": prov}
                     for k, (p, prov) in sorted(entry.expected.items())},
    }


ALL_BUILDERS: dict[str, Callable] = {
    "segment": gen_segment, "schlegel": gen_schlegel, "pushed_cube": gen_pushed_cube,
    "nongeometric_square": gen_nongeometric_square, "remark_square": gen_remark_square,
    "grid": gen_grid, "stellar": gen_stellar, "cubical_barycentric": gen_cubical_barycentric,
    "interval_poset_subdivision": gen_interval_poset_subdivision, "annulus": gen_annulus,
}

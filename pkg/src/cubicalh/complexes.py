"""Simplicial and cubical complexes stored as face posets.

A complex is a poset of faces that contains the empty face ``EMPTY`` as its
minimum, plus a dimension label per face (``EMPTY`` has dimension -1).  Face
ids are strings.  Simplicial complexes built from vertex sets also remember
the vertex set of each face; cubical complexes built from axis-aligned boxes
remember the box, and faces of standard cubes carry ``{0,1,*}`` codes.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product as iproduct
from math import comb
from typing import Iterable, Mapping

from .errors import ComplexError, EmptyFaceError, FaceNotFoundError, NotPureError
from .polynomial import Polynomial
from .poset import Poset, _bits
from .reports import ValidationReport

EMPTY = "∅"


class FaceComplex:
    kind = "complex"

    def __init__(self, poset: Poset, dims: Mapping, codes: Mapping | None = None,
                 boxes: Mapping | None = None, vertex_sets: Mapping | None = None):
        if EMPTY not in poset or poset.minimum() != EMPTY:
            raise ComplexError("the empty face must be the minimum of the face poset")
        self.poset = poset
        self.dims = dict(dims)
        self.dims[EMPTY] = -1
        for f in poset.elements:
            if f not in self.dims:
                raise ComplexError(f"face {f!r} has no dimension")
        for lo, hi in poset.covers():
            if self.dims[hi] != self.dims[lo] + 1:
                raise ComplexError(
                    f"cover {lo!r} < {hi!r} jumps from dimension {self.dims[lo]} to {self.dims[hi]}"
                )
        self.codes = dict(codes) if codes else None
        self.boxes = dict(boxes) if boxes else None
        self.vertex_sets = dict(vertex_sets) if vertex_sets else None
        self._faces = [f for f in poset.topological_order() if f != EMPTY]
        self._vmask = None

    # construction

    @classmethod
    def from_face_covers(cls, faces: Iterable[tuple], **extra):
        """``faces`` yields ``(id, dim, covered_ids)``; vertices cover ``EMPTY`` implicitly."""
        elements, dims, covers = [EMPTY], {}, []
        for fid, dim, below in faces:
            if fid == EMPTY:
                raise ComplexError(f"{EMPTY!r} is reserved for the empty face")
            elements.append(fid)
            dims[fid] = dim
            below = list(below)
            if not below:
                covers.append((EMPTY, fid))
            covers.extend((b, fid) for b in below)
        return cls(Poset(elements, covers), dims, **extra)

    def relabel(self, mapping: Mapping):
        m = dict(mapping)
        m.setdefault(EMPTY, EMPTY)
        return type(self)(
            self.poset.relabel(m),
            {m[f]: d for f, d in self.dims.items()},
            codes={m[f]: c for f, c in self.codes.items()} if self.codes else None,
            boxes={m[f]: b for f, b in self.boxes.items()} if self.boxes else None,
            vertex_sets={m[f]: v for f, v in self.vertex_sets.items()} if self.vertex_sets else None,
        )

    # queries

    def __contains__(self, f):
        return f in self.poset

    def __len__(self):
        return len(self._faces)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, f={self.f_vector()})"

    def faces(self, dim: int | None = None) -> list:
        """Nonempty faces in topological order, optionally of one dimension."""
        if dim is None:
            return list(self._faces)
        return [f for f in self._faces if self.dims[f] == dim]

    def all_faces(self) -> list:
        return [EMPTY] + self._faces

    def vertices(self) -> list:
        return self.faces(0)

    def check_face(self, f, allow_empty=True):
        if f not in self.poset:
            raise FaceNotFoundError(f"face {f!r} not in complex")
        if f == EMPTY and not allow_empty:
            raise EmptyFaceError("a nonempty face is required")
        return f

    @property
    def dim(self) -> int:
        return max((self.dims[f] for f in self._faces), default=-1)

    def facets(self) -> list:
        return [f for f in self.poset.maximals() if f != EMPTY]

    def is_pure(self) -> bool:
        d = self.dim
        return all(self.dims[f] == d for f in self.facets())

    def require_pure(self) -> int:
        if not self.is_pure():
            raise NotPureError("complex is not pure")
        return self.dim

    def f_vector(self) -> list[int]:
        c = Counter(self.dims[f] for f in self._faces)
        return [c[i] for i in range(self.dim + 1)]

    def f_polynomial(self) -> Polynomial:
        return Polynomial(self.f_vector())

    def reduced_euler(self) -> int:
        return sum(1 if self.dims[f] % 2 == 0 else -1 for f in self.all_faces())

    def vertex_mask(self, f) -> int:
        """Bitset (over poset indices) of the vertices of ``f``."""
        if self._vmask is None:
            vm = self.poset.mask(self.vertices())
            self._vmask = vm
        return self.poset.below_mask(f) & self._vmask

    def face_vertices(self, f) -> list:
        return self.poset.members(self.vertex_mask(f))

    def faces_below(self, f) -> list:
        return [g for g in self.poset.down_set(f) if g != EMPTY]

    def faces_above(self, f) -> list:
        return self.poset.up_set(f)

    def subcomplex(self, members: Iterable):
        """Subcomplex on ``members`` (nonempty faces) plus ``EMPTY``."""
        keep = set(members)
        keep.add(EMPTY)
        closed = all(g in keep for f in keep for g in self.poset.lower_covers(f))
        if closed:
            order = [f for f in self.poset.elements if f in keep]
            covers = [(a, b) for a, b in self.poset.covers() if b in keep]
            P = Poset(order, covers)
        else:
            P = self.poset.induced(keep)
        return type(self)(
            P, {f: self.dims[f] for f in P.elements},
            codes={f: self.codes[f] for f in P.elements if f in self.codes} if self.codes else None,
            boxes={f: self.boxes[f] for f in P.elements if f in self.boxes} if self.boxes else None,
            vertex_sets={f: self.vertex_sets[f] for f in P.elements if f in self.vertex_sets}
            if self.vertex_sets else None,
        )

    def closure(self, faces: Iterable) -> set:
        out = set()
        for f in faces:
            out.update(self.poset.down_set(f))
        return out

    def face_poset(self, min_dim: int = 0) -> Poset:
        """Poset of faces of dimension at least ``min_dim`` (so ``EMPTY`` is dropped by default)."""
        return self.poset.induced({f for f in self.all_faces() if self.dims[f] >= min_dim})

    def link(self, f) -> "SimplicialComplex":
        """Faces above ``f`` with ``f`` playing the empty face; a simplicial poset."""
        self.check_face(f, allow_empty=False)
        up = self.poset.up_set(f)
        P = self.poset.induced(set(up)).relabel({g: (EMPTY if g == f else g) for g in up})
        base = self.dims[f]
        return SimplicialComplex(P, {(EMPTY if g == f else g): self.dims[g] - base - 1 for g in up})

    # boundary and interior

    def boundary_interior(self) -> tuple[set, set]:
        """Combinatorial boundary and interior (both as sets of faces, ``EMPTY`` included)."""
        d = self.require_pure()
        if d < 0:
            return set(), {EMPTY}
        ridges = [f for f in self.all_faces() if self.dims[f] == d - 1]
        free = [r for r in ridges if len(self.poset.upper_covers(r)) == 1]
        boundary = self.closure(free)
        interior = {f for f in self.all_faces() if f not in boundary}
        return boundary, interior

    def interior_faces(self) -> list:
        _, inner = self.boundary_interior()
        return [f for f in self._faces if f in inner]

    def is_pseudomanifold(self) -> bool:
        d = self.dim
        if d <= 0:
            return True
        return all(
            len(self.poset.upper_covers(r)) <= 2 for r in self.faces(d - 1)
        )

    def is_strongly_connected(self) -> bool:
        d = self.dim
        facets = self.facets()
        if not facets:
            return False
        if d == 0:
            return len(facets) == 1
        seen = {facets[0]}
        stack = [facets[0]]
        while stack:
            f = stack.pop()
            for r in self.poset.lower_covers(f):
                for g in self.poset.upper_covers(r):
                    if g not in seen:
                        seen.add(g)
                        stack.append(g)
        return len(seen) == len(facets)

    def has_intersection_property(self) -> bool:
        """Every nonempty face is determined by its vertex set."""
        seen = set()
        for f in self._faces:
            m = self.vertex_mask(f)
            if m in seen:
                return False
            seen.add(m)
        return True

    # serialization

    def to_json(self) -> dict:
        faces = []
        for f in self._faces:
            entry = {"id": f, "dim": self.dims[f],
                     "covers": [g for g in self.poset.lower_covers(f) if g != EMPTY]}
            if self.codes and f in self.codes:
                entry["code"] = self.codes[f]
            faces.append(entry)
        return {"kind": self.kind, "faces": faces}


class SimplicialComplex(FaceComplex):
    """Simplicial complex, or more generally a simplicial poset."""

    kind = "simplicial"

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable]) -> "SimplicialComplex":
        sets = set()
        for F in facets:
            F = frozenset(str(v) for v in F)
            for k in range(len(F) + 1):
                for c in combinations(sorted(F), k):
                    sets.add(frozenset(c))
        return cls.from_vertex_sets(sets)

    @classmethod
    def from_vertex_sets(cls, sets: Iterable[frozenset]) -> "SimplicialComplex":
        sets = sorted({frozenset(s) for s in sets}, key=lambda s: (len(s), sorted(s)))
        ids = {s: (EMPTY if not s else ",".join(sorted(s))) for s in sets}
        if frozenset() not in ids:
            ids[frozenset()] = EMPTY
            sets.insert(0, frozenset())
        present = set(sets)
        covers = []
        for s in sets:
            for v in s:
                lo = s - {v}
                if lo not in present:
                    raise ComplexError(f"family is not closed under subsets at {sorted(s)}")
                covers.append((ids[lo], ids[s]))
        P = Poset([ids[s] for s in sets], covers)
        return cls(P, {ids[s]: len(s) - 1 for s in sets},
                   vertex_sets={ids[s]: s for s in sets})

    def simplex_size(self, f) -> int:
        return self.dims[f] + 1


def simplex_complex(n: int) -> SimplicialComplex:
    if n < 1:
        raise ComplexError("a simplex needs at least one vertex")
    return SimplicialComplex.from_facets([range(1, n + 1)])


def boundary_simplex(n: int) -> SimplicialComplex:
    if n < 1:
        raise ComplexError("a simplex needs at least one vertex")
    V = [str(i) for i in range(1, n + 1)]
    return SimplicialComplex.from_facets([[v for v in V if v != w] for w in V])


def path_complex(n: int) -> SimplicialComplex:
    """Path with ``n`` vertices ``1..n``."""
    if n == 1:
        return simplex_complex(1)
    return SimplicialComplex.from_facets([(i, i + 1) for i in range(1, n)])


# cubical complexes


def box_id(box) -> str:
    return "x".join(f"[{a},{b}]" if a != b else f"[{a}]" for a, b in box)


def _sub_boxes(box):
    per_axis = [[(a, a), (b, b), (a, b)] if a != b else [(a, a)] for a, b in box]
    return [tuple(c) for c in iproduct(*per_axis)]


def _box_facets(box):
    out = []
    for i, (a, b) in enumerate(box):
        if a != b:
            for e in (a, b):
                out.append(box[:i] + ((e, e),) + box[i + 1:])
    return out


class CubicalComplex(FaceComplex):
    kind = "cubical"

    @classmethod
    def from_boxes(cls, boxes: Iterable) -> "CubicalComplex":
        """Union of axis-aligned boxes ``((lo, hi), ...)`` with ``hi - lo`` in ``{0, 1}`` per axis."""
        faces = set()
        for box in boxes:
            box = tuple((int(a), int(b)) for a, b in box)
            if any(b - a not in (0, 1) for a, b in box):
                raise ComplexError(f"box {box} is not an elementary cube")
            faces.update(_sub_boxes(box))
        ordered = sorted(faces, key=lambda bx: (sum(b - a for a, b in bx), bx))

        def dim(bx):
            return sum(b - a for a, b in bx)

        return cls.from_face_covers(
            ((box_id(bx), dim(bx), [box_id(f) for f in _box_facets(bx)]) for bx in ordered),
            boxes={box_id(bx): bx for bx in ordered},
        )

    @classmethod
    def from_vertex_sets(cls, cells: Iterable[tuple]) -> "CubicalComplex":
        """``cells`` yields ``(id, dim, vertex_set)``; covers are derived from inclusion."""
        cells = [(fid, d, frozenset(vs)) for fid, d, vs in cells]
        by_dim: dict[int, list] = {}
        for c in cells:
            by_dim.setdefault(c[1], []).append(c)
        faces = []
        for fid, d, vs in sorted(cells, key=lambda c: c[1]):
            below = [g for g, _, ws in by_dim.get(d - 1, []) if ws < vs] if d > 0 else []
            faces.append((fid, d, below))
        return cls.from_face_covers(faces)


def _code_faces(d: int) -> list[str]:
    return ["".join(c) for c in iproduct("01*", repeat=d)]


def code_id(code: str) -> str:
    return code if code else "()"


def code_leq(a: str, b: str) -> bool:
    return all(x == y or y == "*" for x, y in zip(a, b))


def standard_cube(d: int) -> CubicalComplex:
    """Face complex of ``[0,1]^d``; faces are identified by their ``{0,1,*}`` codes."""
    if d < 0:
        raise ComplexError("dimension must be nonnegative")
    codes = sorted(_code_faces(d), key=lambda c: (c.count("*"), c))
    faces = []
    for c in codes:
        below = [code_id(c[:i] + e + c[i + 1:]) for i, ch in enumerate(c) if ch == "*" for e in "01"]
        faces.append((code_id(c), c.count("*"), below))

    def as_box(c):
        return tuple((0, 0) if ch == "0" else (1, 1) if ch == "1" else (0, 1) for ch in c)

    return CubicalComplex.from_face_covers(
        faces, codes={code_id(c): c for c in codes}, boxes={code_id(c): as_box(c) for c in codes}
    )


def cube_top(d: int) -> str:
    return code_id("*" * d)


def product_face_id(K: FaceComplex, f, L: FaceComplex, g) -> str:
    if K.codes and L.codes and f in K.codes and g in L.codes:
        return code_id(K.codes[f] + L.codes[g])
    if K.boxes and L.boxes and f in K.boxes and g in L.boxes:
        return box_id(K.boxes[f] + L.boxes[g])
    return f"({f},{g})"


def product_complex(K: CubicalComplex, L: CubicalComplex) -> tuple[CubicalComplex, dict]:
    """Cartesian product; also returns the map ``(f, g) -> product face id``."""
    names = {}
    for f in K.faces():
        for g in L.faces():
            names[(f, g)] = product_face_id(K, f, L, g)
    if len(set(names.values())) != len(names):
        names = {(f, g): f"({f},{g})" for f, g in names}
    faces = []
    for f in K.faces():
        for g in L.faces():
            below = [names[(a, g)] for a in K.poset.lower_covers(f) if a != EMPTY]
            below += [names[(f, b)] for b in L.poset.lower_covers(g) if b != EMPTY]
            faces.append((names[(f, g)], K.dims[f] + L.dims[g], below))
    faces.sort(key=lambda t: t[1])
    codes = boxes = None
    if K.codes and L.codes:
        codes = {names[(f, g)]: K.codes[f] + L.codes[g] for f, g in names
                 if f in K.codes and g in L.codes}
    if K.boxes and L.boxes:
        boxes = {names[(f, g)]: K.boxes[f] + L.boxes[g] for f, g in names
                 if f in K.boxes and g in L.boxes}
    return CubicalComplex.from_face_covers(faces, codes=codes, boxes=boxes), names


def cube_codes(K: FaceComplex, F) -> dict:
    """Label the faces of the cube ``[EMPTY, F]`` by ``{0,1,*}`` codes.

    Axes come from pairs of disjoint facets of ``F``; the ``0`` side of each axis
    is the one containing the first vertex of ``F`` in topological order.
    """
    K.check_face(F, allow_empty=False)
    k = K.dims[F]
    if k == 0:
        return {F: ""}
    facets = [g for g in K.poset.lower_covers(F)]
    vm = {g: K.vertex_mask(g) for g in facets}
    base = min(_bits(K.vertex_mask(F)))
    pairs, used = [], set()
    for g in facets:
        if g in used:
            continue
        partner = [h for h in facets if h != g and h not in used and not (vm[g] & vm[h])]
        if len(partner) != 1:
            raise ComplexError(f"face {F!r} is not combinatorially a cube")
        h = partner[0]
        used.update((g, h))
        pairs.append((g, h) if (vm[g] >> base) & 1 else (h, g))
    if len(pairs) != k:
        raise ComplexError(f"face {F!r} is not combinatorially a cube")
    out = {}
    for G in K.faces_below(F):
        code = []
        for zero, one in pairs:
            if K.poset.leq(G, zero):
                code.append("0")
            elif K.poset.leq(G, one):
                code.append("1")
            else:
                code.append("*")
        out[G] = "".join(code)
    return out


def validate_cubical(K: FaceComplex) -> ValidationReport:
    report = ValidationReport("cubical")
    P = K.poset
    if P.minimum() != EMPTY:
        report.fail("minimum", None, "the empty face is not the unique minimum")
        return report
    for F in K.faces():
        k = K.dims[F]
        below = K.faces_below(F)
        profile = Counter(K.dims[g] for g in below)
        for i in range(k + 1):
            want = 2 ** (k - i) * comb(k, i)
            if profile[i] != want:
                report.fail("cube-interval", F,
                            f"{profile[i]} faces of dimension {i} below, expected {want}")
                break
        else:
            for g in below:
                if not P.is_boolean_interval(g, F):
                    report.fail("cube-interval", F, f"interval [{g}, {F}] is not Boolean")
                    break
    # meets: enough to check pairs of maximal faces that share a vertex
    by_vertex: dict = {}
    for F in K.facets():
        for v in K.face_vertices(F):
            by_vertex.setdefault(v, []).append(F)
    checked = set()
    for v, fs in by_vertex.items():
        for a, b in combinations(fs, 2):
            if (a, b) in checked:
                continue
            checked.add((a, b))
            common = P.below_mask(a) & P.below_mask(b)
            tops = [x for x in _bits(common) if not (P._above[x] & common & ~(1 << x))]
            if len(tops) != 1:
                report.fail("meet", f"{a} ^ {b}",
                            "no greatest lower bound: maximal common faces "
                            + ", ".join(sorted(map(str, P.members(sum(1 << t for t in tops))))))
    if report.ok and not K.has_intersection_property():
        report.note("faces are not determined by their vertex sets")
    return report

"""h-type polynomials of simplicial and cubical complexes."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .complexes import EMPTY, FaceComplex
from .errors import IdentityViolation, InexactDivisionError
from .polynomial import ZERO, Polynomial, exact_div, face_term, reflect


@dataclass(frozen=True)
class HVector:
    kind: str
    d: int
    poly: Polynomial

    @property
    def coeffs(self) -> list[int]:
        return list(self.poly.coeffs)

    def __eq__(self, other):
        if isinstance(other, HVector):
            return self.kind == other.kind and self.d == other.d and self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash((self.kind, self.d, self.poly))

    def to_json(self) -> dict:
        return {"kind": self.kind, "d": self.d, "coeffs": self.coeffs}

    @classmethod
    def from_json(cls, data) -> "HVector":
        return cls(data["kind"], data["d"], Polynomial(data["coeffs"]))


def _sum_terms(dims: Iterable[int], d: int, base: int, shift: int) -> Polynomial:
    counts = Counter(dims)
    total = ZERO
    for k in sorted(counts):
        total = total + counts[k] * face_term(k + shift, d, base)
    return total


def h_simplicial(D: FaceComplex, d: int | None = None) -> HVector:
    """Sum of ``x^|F| (1-x)^(d-|F|)`` over all faces, the empty face included."""
    if d is None:
        d = D.dim + 1
    return HVector("simplicial", d, _sum_terms((D.dims[f] for f in D.all_faces()), d, 1, 1))


def h_simplicial_interior(D: FaceComplex, d: int | None = None) -> HVector:
    if d is None:
        d = D.require_pure() + 1
    _, inner = D.boundary_interior()
    return HVector("simplicial-interior", d, _sum_terms((D.dims[f] for f in inner), d, 1, 1))


def h_short_cubical(K: FaceComplex, d: int | None = None) -> HVector:
    """Sum of ``(2x)^dim(F) (1-x)^(d-dim F)`` over nonempty faces."""
    if d is None:
        d = max(K.dim, 0)
    return HVector("short", d, _sum_terms((K.dims[f] for f in K.faces()), d, 2, 0))


def h_short_cubical_interior(K: FaceComplex, d: int | None = None) -> HVector:
    if d is None:
        d = max(K.require_pure(), 0)
    _, inner = K.boundary_interior()
    return HVector("short-interior", d,
                   _sum_terms((K.dims[f] for f in inner if f != EMPTY), d, 2, 0))


def reduced_euler(K: FaceComplex) -> int:
    return K.reduced_euler()


def long_from_short(short: Polynomial, d: int, chi: int) -> Polynomial:
    """Solve ``(x+1) h = 2^d + x h_short + (-2)^d chi x^(d+2)`` for ``h``."""
    rhs = Polynomial([2 ** d]) + Polynomial([0, 1]) * short + Polynomial.monomial(d + 2, (-2) ** d * chi)
    try:
        h = exact_div(rhs, Polynomial([1, 1]))
    except InexactDivisionError as exc:
        raise IdentityViolation(f"short h and Euler characteristic {chi} are inconsistent: {exc}") from exc
    if h[0] != 2 ** d:
        raise IdentityViolation(f"constant term {h[0]} of the long cubical h is not 2^{d}")
    if h[d + 1] != (-2) ** d * chi:
        raise IdentityViolation("top coefficient of the long cubical h disagrees with the Euler characteristic")
    return h


def h_long_cubical(K: FaceComplex, d: int | None = None) -> HVector:
    if d is None:
        d = max(K.dim, 0)
    short = h_short_cubical(K, d).poly
    return HVector("long", d, long_from_short(short, d, K.reduced_euler()))


def link_h(K: FaceComplex, F, d: int | None = None) -> Polynomial:
    """``h(link_K(F))`` with dimension parameter ``dim K - dim F`` by default."""
    if d is None:
        d = K.dim - K.dims[F]
    L = K.link(F)
    return h_simplicial(L, d).poly


def link_h_fast(K: FaceComplex, F, d: int) -> Polynomial:
    """Same value as ``link_h`` computed from dimensions of the faces above ``F``."""
    base = K.dims[F]
    return _sum_terms((K.dims[g] - base - 1 for g in K.faces_above(F)), d, 1, 1)


def hetyei_decomposition(K: FaceComplex) -> dict:
    d = K.require_pure()
    return {v: HVector("simplicial", d, link_h_fast(K, v, d)) for v in K.vertices()}


def hetyei_sum(K: FaceComplex) -> Polynomial:
    return sum((h.poly for h in hetyei_decomposition(K).values()), ZERO)


def short_simplicial_h(D: FaceComplex, m: int = 0) -> Polynomial:
    """Sum of ``h(link(F))`` over faces of dimension ``m``, with parameter ``dim D - m``."""
    d = D.require_pure() - m
    return sum((link_h_fast(D, F, d) for F in D.faces(m)), ZERO)


def simplicial_reciprocity(D: FaceComplex) -> tuple[Polynomial, Polynomial]:
    d = D.require_pure() + 1
    return reflect(h_simplicial(D, d).poly, d), h_simplicial_interior(D, d).poly


def short_cubical_reciprocity(K: FaceComplex) -> tuple[Polynomial, Polynomial]:
    d = max(K.require_pure(), 0)
    return reflect(h_short_cubical(K, d).poly, d), h_short_cubical_interior(K, d).poly


def evaluation_identity(K: FaceComplex) -> tuple[int, int]:
    """``h_short(K, -1)`` and ``2^dim (1 + reduced Euler characteristic)``."""
    d = max(K.dim, 0)
    return h_short_cubical(K, d).poly(-1), 2 ** d * (1 + K.reduced_euler())

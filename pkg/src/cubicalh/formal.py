"""Incidence algebras over integer polynomials, acceptable functions, and formal subdivisions."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .enumeration import HVector
from .errors import (
    DegreeBoundError,
    DegreeExceedsRankError,
    FormalError,
    HostMismatchError,
    IdentityViolation,
    InconsistencyError,
    NoMaximumError,
    NotGradedError,
    NotLocallyEulerianError,
    NotLocallyGradedError,
    NotUnitaryError,
)
from .polynomial import ONE, ZERO, Polynomial, is_palindromic, reflect, x_minus_one_pow
from .poset import Poset, _bits
from .reports import ValidationReport

log = logging.getLogger(__name__)


def _truncate(p: Polynomial, m: int) -> Polynomial:
    return Polynomial(p.coeffs[: m + 1]) if m >= 0 else ZERO


class PointFunction:
    """A polynomial attached to every element of a poset."""

    def __init__(self, host: Poset, values: Mapping):
        self.host = host
        self.values = {t: values[t] for t in host.elements}

    def __getitem__(self, t) -> Polynomial:
        return self.values[t]

    def __eq__(self, other):
        return isinstance(other, PointFunction) and self.host is other.host and self.values == other.values

    def __repr__(self):
        return f"PointFunction({len(self.values)} values)"


class IncidenceFunction:
    """A polynomial attached to every closed interval ``[s, t]`` of a poset."""

    def __init__(self, host: Poset, values: Mapping):
        self.host = host
        self.values = dict(values)
        missing = [st for st in host.intervals() if st not in self.values]
        if missing:
            raise FormalError(f"no value on interval {missing[0]}")

    @classmethod
    def from_rule(cls, host: Poset, rule: Callable) -> "IncidenceFunction":
        return cls(host, {(s, t): rule(s, t) for s, t in host.intervals()})

    def __getitem__(self, st) -> Polynomial:
        return self.values[st]

    def __eq__(self, other):
        if not isinstance(other, IncidenceFunction) or other.host is not self.host:
            return NotImplemented if not isinstance(other, IncidenceFunction) else False
        return all(self.values[k] == other.values[k] for k in self.values)

    def __repr__(self):
        return f"IncidenceFunction({len(self.values)} intervals)"

    def is_unitary(self) -> bool:
        return all(self.values[(t, t)] == ONE for t in self.host.elements)


def delta(P: Poset) -> IncidenceFunction:
    return IncidenceFunction.from_rule(P, lambda s, t: ONE if s == t else ZERO)


def zeta(P: Poset) -> IncidenceFunction:
    return IncidenceFunction.from_rule(P, lambda s, t: ONE)


def mobius_function(P: Poset) -> IncidenceFunction:
    return IncidenceFunction.from_rule(P, lambda s, t: Polynomial([P.mobius(s, t)]))


def _between(P: Poset, s, u) -> list:
    i, j = P.index[s], P.index[u]
    m = P._above[i] & P._below[j]
    return [P.elements[k] for k in _bits(m)]


def convolve(f, g: IncidenceFunction):
    """Convolution ``f * g``; ``f`` may be a point function or an incidence function."""
    P = g.host
    if f.host is not P and f.host != P:
        raise HostMismatchError("convolution of functions on different posets")
    if isinstance(f, PointFunction):
        out = {}
        for t in P.elements:
            acc = ZERO
            for s in P.members(P.below_mask(t)):
                acc = acc + f.values[s] * g.values[(s, t)]
            out[t] = acc
        return PointFunction(P, out)
    out = {}
    for s, u in P.intervals():
        acc = ZERO
        for t in _between(P, s, u):
            acc = acc + f.values[(s, t)] * g.values[(t, u)]
        out[(s, u)] = acc
    return IncidenceFunction(P, out)


def invert(g: IncidenceFunction) -> IncidenceFunction:
    """Two-sided inverse of a unitary incidence function."""
    if not g.is_unitary():
        raise NotUnitaryError("only unitary incidence functions are inverted here")
    P = g.host
    order = {e: k for k, e in enumerate(P.topological_order())}
    out = {}
    for s in P.elements:
        ups = sorted(P.up_set(s), key=order.__getitem__)
        for u in ups:
            if u == s:
                out[(s, s)] = ONE
                continue
            acc = ZERO
            for t in _between(P, s, u):
                if t != u:
                    acc = acc + out[(s, t)] * g.values[(t, u)]
            out[(s, u)] = -acc
    return IncidenceFunction(P, out)


def bar(f):
    P = f.host
    try:
        if isinstance(f, PointFunction):
            return PointFunction(P, {t: reflect(p, P.rank(t)) for t, p in f.values.items()})
        return IncidenceFunction(
            P, {(s, t): reflect(p, P.interval_rank(s, t)) for (s, t), p in f.values.items()}
        )
    except DegreeBoundError as exc:
        raise DegreeExceedsRankError(str(exc)) from None


def lambda_kernel(P: Poset) -> IncidenceFunction:
    """``(x-1)^rank(s,t)`` on every interval."""
    if not P.is_locally_graded():
        raise NotLocallyGradedError("some interval is not graded")
    return IncidenceFunction.from_rule(P, lambda s, t: x_minus_one_pow(P.interval_rank(s, t)))


def is_kernel(kappa: IncidenceFunction) -> bool:
    if not kappa.is_unitary():
        return False
    try:
        kb = bar(kappa)
    except (DegreeExceedsRankError, NotGradedError):
        return False
    return convolve(kappa, kb) == delta(kappa.host)


def gamma(P: Poset, kappa: IncidenceFunction | None = None) -> PointFunction:
    """The acceptable function with value 1 on minimal elements and low degree elsewhere."""
    if not P.is_lower_graded():
        raise NotGradedError("poset is not lower graded")
    if kappa is None:
        kappa = lambda_kernel(P)
    out = {}
    for t in P.topological_order():
        if not P.lower_covers(t):
            out[t] = ONE
            continue
        r = P.rank(t)
        R = ZERO
        for s in P.members(P.below_mask(t)):
            if s != t:
                R = R + out[s] * kappa.values[(s, t)]
        g = -_truncate(R, (r - 1) // 2)
        if R.degree > r or R + g != reflect(g, r):
            raise InconsistencyError(f"no acceptable value at {t!r}; kernel or grading is wrong")
        out[t] = g
    return PointFunction(P, out)


def xi(P: Poset, kappa: IncidenceFunction | None = None) -> IncidenceFunction:
    """The totally acceptable function with unit diagonal and low degree elsewhere."""
    if kappa is None:
        kappa = lambda_kernel(P)
    order = {e: k for k, e in enumerate(P.topological_order())}
    out = {}
    for s in P.elements:
        for u in sorted(P.up_set(s), key=order.__getitem__):
            if u == s:
                out[(s, s)] = ONE
                continue
            r = P.interval_rank(s, u)
            R = ZERO
            for t in _between(P, s, u):
                if t != u:
                    R = R + out[(s, t)] * kappa.values[(t, u)]
            g = -_truncate(R, (r - 1) // 2)
            if R.degree > r or R + g != reflect(g, r):
                raise InconsistencyError(f"no totally acceptable value on [{s!r}, {u!r}]")
            out[(s, u)] = g
    return IncidenceFunction(P, out)


def is_acceptable(f: PointFunction, kappa: IncidenceFunction) -> bool:
    try:
        return convolve(f, kappa).values == bar(f).values
    except DegreeExceedsRankError:
        return False


def require_eulerian(P: Poset):
    if len(P) == 0:
        raise FormalError("the empty poset has no h-polynomial")
    if not P.is_lower_graded():
        raise NotGradedError("poset is not lower graded")
    if not P.is_locally_eulerian():
        raise NotLocallyEulerianError("some interval has Möbius value different from (-1)^rank")


def h_bar_general(P: Poset, d: int | None = None, gam: PointFunction | None = None) -> Polynomial:
    if d is None:
        d = P.length()
    if gam is None:
        gam = gamma(P)
    total = ZERO
    for t in P.elements:
        total = total + gam[t] * x_minus_one_pow(d - P.rank(t))
    return total


def h_general(P: Poset, d: int | None = None, check: bool = True) -> HVector:
    if check:
        require_eulerian(P)
    if d is None:
        d = P.length()
    return HVector("general", d, reflect(h_bar_general(P, d), d))


# formal subdivisions


@dataclass(frozen=True, eq=False)
class FormalSubdivision:
    source: Poset
    target: Poset
    sigma: Mapping
    ranks: Mapping | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma", dict(self.sigma))

    def restriction_members(self, u) -> list:
        below = self.target.below_mask(u)
        T = self.target
        return [t for t in self.source.elements if (below >> T.index[self.sigma[t]]) & 1]

    def interior(self, u) -> list:
        return [t for t in self.source.elements if self.sigma[t] == u]

    def gamma(self) -> PointFunction:
        if "gamma" not in self._cache:
            self._cache["gamma"] = gamma(self.source)
        return self._cache["gamma"]

    def xi(self) -> IncidenceFunction:
        if "xi" not in self._cache:
            self._cache["xi"] = xi(self.target)
        return self._cache["xi"]

    def xi_inverse(self) -> IncidenceFunction:
        if "xi_inv" not in self._cache:
            self._cache["xi_inv"] = invert(self.xi())
        return self._cache["xi_inv"]

    def _sum(self, members, r: int) -> Polynomial:
        g = self.gamma()
        Q = self.source
        total = ZERO
        for t in members:
            total = total + g[t] * x_minus_one_pow(r - Q.rank(t))
        return total

    def restriction_h(self, u) -> Polynomial:
        """``h(Q_u)`` with parameter ``rank(u)``; the restriction's own gamma agrees with Q's."""
        r = self.target.rank(u)
        return reflect(self._sum(self.restriction_members(u), r), r)

    def interior_h(self, u) -> Polynomial:
        r = self.target.rank(u)
        return reflect(self._sum(self.interior(u), r), r)


def validate_formal(F: FormalSubdivision) -> ValidationReport:
    rep = ValidationReport("formal")
    rep.note("topological regularity of the subdivision is assumed, only poset conditions are checked")
    Q, P = F.source, F.target
    if len(P) == 0 or len(Q) == 0:
        rep.fail("nonempty", None, "source and target must be nonempty")
        return rep
    for t in Q.elements:
        if t not in F.sigma or F.sigma[t] not in P:
            rep.fail("sigma-domain", t, "sigma is undefined or leaves the target")
    if not rep.ok:
        return rep
    for name, X in (("source", Q), ("target", P)):
        if not X.is_lower_graded():
            rep.fail("lower-graded", name, "poset is not lower graded")
        elif not X.is_locally_eulerian():
            rep.fail("locally-eulerian", name, "poset is not locally Eulerian")
    if not rep.ok:
        return rep
    if F.ranks:
        for t, r in F.ranks.items():
            X = Q if t in Q else P if t in P else None
            if X is None:
                rep.fail("ranks", t, "rank given for an unknown element")
            elif X.rank(t) != r:
                rep.fail("ranks", t, f"declared rank {r} but the poset gives {X.rank(t)}")
    hit = set(F.sigma.values())
    for u in P.elements:
        if u not in hit:
            rep.fail("surjective", u, "not in the image of sigma")
    for t in Q.elements:
        if Q.rank(t) > P.rank(F.sigma[t]):
            rep.fail("rank", t, f"rank {Q.rank(t)} exceeds rank of {F.sigma[t]}")
    ideal_ok = True
    for u in P.elements:
        members = F.restriction_members(u)
        mask = Q.mask(members)
        if any(Q.below_mask(t) & ~mask for t in members):
            rep.fail("ideal", u, "restriction is not an order ideal")
            ideal_ok = False
            continue
        length = max((Q.rank(t) for t in members), default=-1)
        if length != P.rank(u):
            rep.fail("ideal", u, f"restriction has length {length}, expected {P.rank(u)}")
            ideal_ok = False
    if not ideal_ok:
        return rep
    try:
        F.gamma()
    except InconsistencyError as exc:
        rep.fail("gamma", None, str(exc))
        return rep
    for u in P.elements:
        r = P.rank(u)
        lhs = F._sum(F.restriction_members(u), r)
        inner = F._sum(F.interior(u), r)
        try:
            rhs = reflect(inner, r)
        except DegreeBoundError:
            rep.fail("reciprocity", u, "interior sum has degree above the rank")
            continue
        if lhs != rhs:
            rep.fail("reciprocity", u, f"{lhs} != {rhs}")
    return rep


def local_h_general(F: FormalSubdivision, strict: bool = True) -> Polynomial:
    P = F.target
    top = P.maximum()
    if top is None:
        raise NoMaximumError("target has no maximum element")
    return _local_h_at(F, top, strict)


def _local_h_at(F: FormalSubdivision, top, strict: bool = True) -> Polynomial:
    P = F.target
    inv = F.xi_inverse()
    total = ZERO
    for u in P.down_set(top):
        total = total + F.restriction_h(u) * inv[(u, top)]
    d = P.rank(top)
    if not is_palindromic(total, d):
        message = f"generalized local h {total} is not symmetric about {d}"
        if strict:
            raise IdentityViolation(message)
        log.warning(message)
    return total


def acceptability_check(F: FormalSubdivision, values: Callable | None = None) -> bool:
    """Whether ``u -> values(u)`` (default ``h(Q_u)``) is acceptable for the lambda kernel."""
    P = F.target
    if values is None:
        values = F.restriction_h
    f = PointFunction(P, {u: values(u) for u in P.elements})
    return is_acceptable(f, lambda_kernel(P))


def general_locality(F: FormalSubdivision) -> tuple[Polynomial, Polynomial]:
    """Both sides of ``h(Q) = sum_u local_h(Q_u) h(P_{>=u})`` for a graded target."""
    P = F.target
    d = P.length()
    if any(P.rank(t) != d for t in P.maximals()) or any(P.rank(t) != 0 for t in P.minimals()):
        raise NotGradedError("target poset is not graded")
    lhs = reflect(h_bar_general(F.source, d, F.gamma()), d)
    rhs = ZERO
    for u in P.elements:
        ell = _local_h_at(F, u, strict=False)
        up = P.subposet_above(u)
        rhs = rhs + ell * h_general(up, d - P.rank(u), check=False).poly
    return lhs, rhs


def gamma_xi_identity(P: Poset) -> bool:
    """``gamma_t`` equals the sum of ``xi_{a t}`` over minimal ``a <= t``."""
    g = gamma(P)
    x = xi(P)
    mins = set(P.minimals())
    for t in P.elements:
        total = ZERO
        for a in P.down_set(t):
            if a in mins:
                total = total + x[(a, t)]
        if total != g[t]:
            return False
    return True


def lift_subdivision(s) -> FormalSubdivision:
    """Poset-level view of a cubical subdivision: nonempty faces of source and target."""
    return lift_truncated(s, 0)


def lift_truncated(s, m: int) -> FormalSubdivision:
    """Faces of dimension at least ``m`` of source and target, with the carrier map."""
    Q = s.source.face_poset(m)
    P = s.target.face_poset(m)
    sigma = {t: s.carrier[t] for t in Q.elements}
    return FormalSubdivision(Q, P, sigma)

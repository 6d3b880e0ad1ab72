"""Verification batteries over corpus entries, derived instances and user files."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import corpus
from .complexes import FaceComplex
from .enumeration import (
    evaluation_identity,
    h_long_cubical,
    h_short_cubical,
    h_simplicial,
    hetyei_sum,
    link_h_fast,
    short_simplicial_h,
    short_cubical_reciprocity,
    simplicial_reciprocity,
)
from .errors import CubicalHError, InexactDivisionError
from .formal import (
    FormalSubdivision,
    acceptability_check,
    gamma,
    gamma_xi_identity,
    general_locality,
    h_general,
    is_kernel,
    lambda_kernel,
    lift_subdivision,
    lift_truncated,
    local_h_general,
    validate_formal,
    xi,
)
from .poset import chain
from .polynomial import Polynomial, exact_div, is_nonnegative, is_palindromic, is_unimodal
from .subdivision import (
    SubdivisionMap,
    ell_one_formula,
    interior_counts,
    is_cube_target,
    is_locally_quasi_geometric,
    is_quasi_geometric,
    local_h_long,
    local_h_short,
    local_h_short_via_excess,
    locality_decompose_long,
    locality_decompose_short,
    restriction,
    restriction_long_h,
    restriction_short_h,
    validate_subdivision,
    vertex_contributions,
)

log = logging.getLogger(__name__)

SUITES = ("golden", "reciprocity", "symmetry", "locality", "product", "nonnegativity", "formal")


@dataclass
class Check:
    suite: str
    instance: str
    check: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"suite": self.suite, "instance": self.instance, "check": self.check, "ok": self.ok,
                "detail": self.detail}


@dataclass
class SuiteResult:
    checks: list = field(default_factory=list)
    observations: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def extend(self, other: "SuiteResult"):
        self.checks.extend(other.checks)
        self.observations.extend(other.observations)


@dataclass
class Scope:
    """Instances a suite runs over."""

    subdivisions: list = field(default_factory=list)  # (name, SubdivisionMap, lqg flag or None, cm)
    complexes: list = field(default_factory=list)  # (name, complex, manifold kind or None)
    formal: list = field(default_factory=list)  # (name, FormalSubdivision)
    posets: list = field(default_factory=list)  # (name, Poset)
    entries: list = field(default_factory=list)  # CorpusEntry objects with golden values


def corpus_scope(derived: bool = True) -> Scope:
    sc = Scope()
    for e in corpus.entries():
        sc.entries.append(e)
        if e.kind == "subdivision":
            sc.subdivisions.append((e.name, e.obj, e.is_lqg, e.cm_links))
        elif e.kind == "formal":
            sc.formal.append((e.name, e.obj))
        elif e.kind == "complex":
            sc.complexes.append((e.name, e.obj, e.manifold))
        elif e.kind == "poset":
            sc.posets.append((e.name, e.obj))
    if derived:
        for name, s, _ in corpus.derived_instances():
            sc.subdivisions.append((name, s, None, True))
    return sc


def file_scope(name: str, kind: str, obj) -> Scope:
    sc = Scope()
    if kind == "subdivision":
        sc.subdivisions.append((name, obj, None, False))
    elif kind == "formal":
        sc.formal.append((name, obj))
    elif kind == "complex":
        sc.complexes.append((name, obj, None))
    elif kind == "poset":
        sc.posets.append((name, obj))
    return sc


class _Recorder:
    def __init__(self, suite: str, instance: str):
        self.suite, self.instance = suite, instance
        self.result = SuiteResult()

    def check(self, name: str, ok: bool, detail: str = ""):
        self.result.checks.append(Check(self.suite, self.instance, name, bool(ok), "" if ok else detail))

    def observe(self, text: str):
        self.result.observations.append({"suite": self.suite, "instance": self.instance, "note": text})


def _guard(suite, name, fn, *args) -> SuiteResult:
    rec = _Recorder(suite, name)
    try:
        fn(rec, *args)
    except CubicalHError as exc:
        rec.check("no-error", False, f"{type(exc).__name__}: {exc}")
    return rec.result


def _cube_parts(s: SubdivisionMap) -> list[tuple[str, SubdivisionMap]]:
    """The subdivision itself if it targets a cube, else its restrictions to facets."""
    if is_cube_target(s):
        return [("", s)]
    return [(f"|{F}", restriction(s, F)) for F in s.target.facets() if s.target.dims[F] >= 0]


# individual batteries


def _golden(rec: _Recorder, e):
    for key, (want, prov) in sorted(e.expected.items()):
        if key == "h_short":
            obj = e.obj.source if e.kind == "subdivision" else e.obj
            got = h_short_cubical(obj, obj.dim if e.kind == "complex" else e.obj.target.dim).poly
        elif key == "h_long":
            obj = e.obj.source if e.kind == "subdivision" else e.obj
            got = h_long_cubical(obj, obj.dim if e.kind == "complex" else e.obj.target.dim).poly
        elif key == "h_simplicial":
            got = h_simplicial(e.obj).poly
        elif key == "local_h_short":
            got = local_h_short(e.obj).poly
        elif key == "local_h_long":
            got = local_h_long(e.obj).poly
        elif key == "h_general":
            P = e.obj.source if e.kind == "formal" else e.obj
            got = h_general(P).poly
        elif key == "local_h_general":
            got = local_h_general(e.obj)
        else:
            rec.check(key, False, "unknown expected-value key")
            continue
        rec.check(f"{key} ({prov})", got == want, f"computed {got}, expected {want}")
    if e.kind == "subdivision":
        s = e.obj
        rep = validate_subdivision(s)
        rec.check("valid", rep.ok, "; ".join(f["check"] + "@" + str(f["location"]) for f in rep.failures))
        if e.is_lqg is not None:
            rec.check("lqg-flag", is_locally_quasi_geometric(s) == e.is_lqg, "flag disagrees with predicate")
        if e.is_qg is not None:
            rec.check("qg-flag", is_quasi_geometric(s) == e.is_qg, "flag disagrees with predicate")


def _reciprocity_complex(rec: _Recorder, K: FaceComplex, manifold):
    if K.kind == "simplicial":
        if manifold:
            a, b = simplicial_reciprocity(K)
            rec.check("simplicial-reciprocity", a == b, f"{a} != {b}")
        return
    if manifold:
        a, b = short_cubical_reciprocity(K)
        rec.check("short-cubical-reciprocity", a == b, f"{a} != {b}")
    a, b = evaluation_identity(K)
    rec.check("evaluation-at-minus-one", a == b, f"{a} != {b}")
    if manifold in ("ball", "sphere"):
        for v in K.vertices():
            L = K.link(v)
            a, b = simplicial_reciprocity(L)
            if a != b:
                rec.check("link-reciprocity", False, f"link of {v}: {a} != {b}")
                return
        rec.check("link-reciprocity", True)


def _reciprocity_sub(rec: _Recorder, s: SubdivisionMap):
    # every source of a valid subdivision onto a ball is a ball
    _reciprocity_complex(rec, s.source, "ball" if _target_is_ball(s) else None)


def _target_is_ball(s: SubdivisionMap) -> bool:
    return is_cube_target(s) or s.target.reduced_euler() == 0 and s.target.is_pseudomanifold() \
        and s.target.is_strongly_connected() and bool(s.target.interior_faces())


def _symmetry(rec: _Recorder, s: SubdivisionMap):
    for suffix, part in _cube_parts(s):
        d = part.target.dim
        ell = local_h_short(part, strict=False).poly
        other = local_h_short_via_excess(part).poly
        rec.check("agreement" + suffix, ell == other, f"{ell} != {other}")
        rec.check("short-palindromic" + suffix, is_palindromic(ell, d), f"{ell} about {d}")
        if d >= 1:
            try:
                exact_div(ell, Polynomial([1, 1]))
                rec.check("divisible-by-x+1" + suffix, True)
            except InexactDivisionError as exc:
                rec.check("divisible-by-x+1" + suffix, False, str(exc))
            big = local_h_long(part, strict=False).poly
            rec.check("long-palindromic" + suffix, is_palindromic(big, d + 1), f"{big} about {d + 1}")
            rec.check("long-divisible-by-x" + suffix, big[0] == 0, f"{big}")
            rec.check("short-long-relation" + suffix,
                      Polynomial([0, 1]) * ell == Polynomial([1, 1]) * big, f"{ell} vs {big}")
            c = interior_counts(part)
            n = c["interior_vertices"]
            rec.check("ell0-elld" + suffix, ell[0] == n and ell[d] == n,
                      f"ell_0={ell[0]}, ell_d={ell[d]}, interior vertices {n}")
            rec.check("ell1-formula" + suffix, ell[1] == ell_one_formula(part),
                      f"ell_1={ell[1]}, formula {ell_one_formula(part)}")
        contribs = vertex_contributions(part)
        total = sum(contribs.values(), Polynomial())
        rec.check("vertex-sum" + suffix, total == ell, f"{total} != {ell}")
        bad = [v for v, p in contribs.items() if not is_palindromic(p, d)]
        rec.check("vertex-palindromic" + suffix, not bad, f"not symmetric at {bad[:3]}")


def _locality(rec: _Recorder, s: SubdivisionMap):
    if not s.target.is_pure():
        return
    dec = locality_decompose_short(s)
    rec.check("short-locality", dec.balanced, f"{dec.lhs} != {dec.rhs}")
    dec = locality_decompose_long(s)
    rec.check("long-locality", dec.balanced, f"{dec.lhs} != {dec.rhs}")


def _hetyei(rec: _Recorder, K: FaceComplex):
    if K.kind != "cubical" or not K.is_pure() or K.dim < 0:
        return
    a, b = hetyei_sum(K), h_short_cubical(K).poly
    rec.check("hetyei", a == b, f"{a} != {b}")


def _nonnegativity(rec: _Recorder, s: SubdivisionMap, flagged, cm):
    lqg = is_locally_quasi_geometric(s) if flagged is None else flagged
    if not lqg:
        return
    for suffix, part in _cube_parts(s):
        ell = local_h_short(part, strict=False).poly
        rec.check("ell-nonnegative" + suffix, is_nonnegative(ell), f"{ell}")
        neg = {v: p for v, p in vertex_contributions(part).items() if not is_nonnegative(p)}
        rec.check("contributions-nonnegative" + suffix, not neg, f"negative at {sorted(neg)[:3]}")
        if part.target.dim >= 1:
            big = local_h_long(part, strict=False).poly
            rec.check("(x+1)L-nonnegative" + suffix, is_nonnegative(Polynomial([1, 1]) * big), f"{big}")
            rec.observe(f"long local h{suffix} = {big}; nonnegative: {is_nonnegative(big)}")
        rec.observe(f"short local h{suffix} = {ell}; unimodal: {is_unimodal(ell)}")
    if cm and s.target.is_pure():
        d = s.target.dim
        a, b = h_short_cubical(s.source, d).poly, h_short_cubical(s.target, d).poly
        diff = a - b
        rec.check("monotonicity", is_nonnegative(diff), f"{a} - {b} = {diff}")


def _classification(rec: _Recorder, e):
    s = e.obj
    lqg, qg = is_locally_quasi_geometric(s), is_quasi_geometric(s)
    if e.is_lqg is not None:
        rec.check("lqg-classification", lqg == e.is_lqg, f"predicate says {lqg}")
    if e.is_qg is not None:
        rec.check("qg-classification", qg == e.is_qg, f"predicate says {qg}")
    if e.is_geometric:
        rec.check("geometric-implies-lqg", lqg, "geometric instance is not lqg")


def _formal_sub(rec: _Recorder, s: SubdivisionMap):
    F = lift_subdivision(s)
    rep = validate_formal(F)
    rec.check("formal-valid", rep.ok, "; ".join(f"{f['check']}@{f['location']}" for f in rep.failures[:3]))
    if not rep.ok:
        return
    P = F.target
    rec.check("acceptability", acceptability_check(F), "h_short of restrictions is not acceptable")
    if is_cube_target(s):
        a = local_h_general(F, strict=False)
        b = local_h_short(s, strict=False).poly
        rec.check("reduces-to-cubical", a == b, f"{a} != {b}")
        rec.check("generalized-symmetry", is_palindromic(a, P.length()), f"{a}")
    if s.target.is_pure():
        lhs, rhs = general_locality(F)
        rec.check("general-locality", lhs == rhs, f"{lhs} != {rhs}")
        dec = locality_decompose_short(s)
        rec.check("general-matches-cubical", rhs == dec.rhs, f"{rhs} != {dec.rhs}")
    if s.source.dim >= 2:
        T = lift_truncated(s, 1)
        rep1 = validate_formal(T)
        rec.check("truncated-formal-valid", rep1.ok,
                  "; ".join(f"{f['check']}@{f['location']}" for f in rep1.failures[:3]))


def _formal_entry(rec: _Recorder, F: FormalSubdivision):
    rep = validate_formal(F)
    rec.check("formal-valid", rep.ok, "; ".join(f"{f['check']}@{f['location']}" for f in rep.failures[:3]))
    if not rep.ok:
        return
    P = F.target
    rec.check("acceptability", acceptability_check(F), "h of restrictions is not acceptable")
    if P.maximum() is not None:
        ell = local_h_general(F, strict=False)
        rec.check("generalized-symmetry", is_palindromic(ell, P.rank(P.maximum())), f"{ell}")
    graded = all(P.rank(t) == P.length() for t in P.maximals())
    if graded:
        lhs, rhs = general_locality(F)
        rec.check("general-locality", lhs == rhs, f"{lhs} != {rhs}")


def _poset_checks(rec: _Recorder, P):
    if not (P.is_lower_graded() and P.is_locally_eulerian()):
        rec.observe("not a lower graded locally Eulerian poset; kernel checks skipped")
        return
    rec.check("lambda-is-kernel", is_kernel(lambda_kernel(P)), "lambda fails the kernel test")
    rec.check("gamma-xi-identity", gamma_xi_identity(P), "gamma differs from the sum of xi")
    X = xi(P)
    boolean = all(P.is_boolean_interval(s, t) for s, t in P.intervals())
    if boolean:
        rec.check("xi-boolean", all(v == Polynomial([1]) for v in X.values.values()), "xi != 1")


def _complex_formal(rec: _Recorder, K: FaceComplex, manifold):
    P = K.face_poset()
    if len(P) == 0:
        return
    _poset_checks(rec, P)
    g = gamma(P)
    if K.kind == "cubical":
        ok = all(g[t] == Polynomial([2 ** P.rank(t)]) for t in P.elements)
        rec.check("gamma-cube", ok, "gamma differs from 2^rank")
        if K.is_pure():
            a, b = h_general(P).poly, h_short_cubical(K).poly
            rec.check("h-general-is-short-cubical", a == b, f"{a} != {b}")
    else:
        ok = all(g[t] == Polynomial([P.rank(t) + 1]) for t in P.elements)
        rec.check("gamma-simplex", ok, "gamma differs from rank + 1")
        full = K.poset
        g1 = gamma(full)
        rec.check("gamma-simplicial-poset", all(v == Polynomial([1]) for v in g1.values.values()),
                  "gamma differs from 1")
        a, b = h_general(full).poly, h_simplicial(K).poly
        rec.check("h-general-is-simplicial", a == b, f"{a} != {b}")
        if K.is_pure():
            a = h_general(P).poly
            b = short_simplicial_h(K)
            rec.check("h-general-is-short-simplicial", a == b, f"{a} != {b}")
    if K.is_pure():
        for m in range(1, K.dim + 1):
            Pm = K.face_poset(m)
            a = h_general(Pm).poly
            b = short_simplicial_h(K, m) if K.kind == "simplicial" else \
                sum((link_h_fast(K, F, K.dim - m) for F in K.faces(m)), Polynomial())
            rec.check(f"truncation-{m}", a == b, f"{a} != {b}")


def _long_acceptability(rec: _Recorder):
    s = corpus.get("segment-t1").obj
    F = lift_subdivision(s)
    short_ok = acceptability_check(F, lambda u: restriction_short_h(s, u))
    long_ok = acceptability_check(F, lambda u: restriction_long_h(s, u))
    rec.check("short-acceptable", short_ok, "short cubical h of restrictions not acceptable")
    rec.check("long-not-acceptable", not long_ok, "long cubical h unexpectedly acceptable")
    chain3 = chain(3)
    rec.check("chain-kernel-fails", not is_kernel(lambda_kernel(chain3)), "lambda passed on a 3-chain")


# driver


def _run_tasks(tasks, workers: int) -> SuiteResult:
    out = SuiteResult()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda t: _guard(*t), tasks))
    else:
        results = [_guard(*t) for t in tasks]
    for r in results:
        out.extend(r)
    return out


def run_suite(suite: str, scope: Scope, workers: int = 1) -> SuiteResult:
    if suite == "all":
        out = SuiteResult()
        for name in SUITES:
            out.extend(run_suite(name, scope, workers))
        return out
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    tasks = []
    if suite == "golden":
        tasks += [(suite, e.name, _golden, e) for e in scope.entries]
    elif suite == "reciprocity":
        tasks += [(suite, n, _reciprocity_complex, K, m) for n, K, m in scope.complexes]
        tasks += [(suite, n, _reciprocity_sub, s) for n, s, _, _ in scope.subdivisions]
    elif suite == "symmetry":
        tasks += [(suite, n, _symmetry, s) for n, s, _, _ in scope.subdivisions]
    elif suite == "locality":
        tasks += [(suite, n, _locality, s) for n, s, _, _ in scope.subdivisions]
    elif suite == "product":
        tasks += [(suite, n, _hetyei, K) for n, K, _ in scope.complexes]
        tasks += [(suite, n, _hetyei, s.source) for n, s, _, _ in scope.subdivisions]
        if scope.entries:
            tasks += [(suite, f"{a}*{b}", _product_pair, a, b) for a, b in corpus.product_pairs()]
            cx = [(n, K) for n, K, _ in scope.complexes if K.kind == "cubical"]
            tasks += [(suite, f"{a}x{b}", _complex_product, K, L) for (a, K), (b, L) in
                      _pairs(cx) if K.dim + L.dim <= 4]
    elif suite == "nonnegativity":
        tasks += [(suite, n, _nonnegativity, s, flag, cm) for n, s, flag, cm in scope.subdivisions]
        tasks += [(suite, e.name, _classification, e) for e in scope.entries if e.kind == "subdivision"]
    elif suite == "formal":
        tasks += [(suite, n, _formal_sub, s) for n, s, _, _ in scope.subdivisions]
        tasks += [(suite, n, _formal_entry, F) for n, F in scope.formal]
        tasks += [(suite, n, _complex_formal, K, m) for n, K, m in scope.complexes]
        tasks += [(suite, n, _poset_checks, P) for n, P in scope.posets]
        tasks += [(suite, n + ":source", _poset_checks, F.source) for n, F in scope.formal]
        if scope.entries:
            tasks.append((suite, "segment-t1:long", _long_acceptability))
    return _run_tasks(tasks, workers)


def _pairs(items):
    for i in range(len(items)):
        for j in range(i, len(items)):
            yield items[i], items[j]


def _product_pair(rec: _Recorder, a: str, b: str):
    from .subdivision import product_subdivision

    A, B = corpus.get(a).obj, corpus.get(b).obj
    prod = product_subdivision(A, B)
    got = local_h_short(prod, strict=False).poly
    want = local_h_short(A, strict=False).poly * local_h_short(B, strict=False).poly
    rec.check("local-h-product", got == want, f"{got} != {want}")
    got = h_short_cubical(prod.source).poly
    want = h_short_cubical(A.source, A.target.dim).poly * h_short_cubical(B.source, B.target.dim).poly
    rec.check("h-short-product", got == want, f"{got} != {want}")


def _complex_product(rec: _Recorder, K, L):
    from .complexes import product_complex, validate_cubical

    M, _ = product_complex(K, L)
    rec.check("product-valid", validate_cubical(M).ok, "product is not a valid cubical complex")
    got = h_short_cubical(M).poly
    want = h_short_cubical(K).poly * h_short_cubical(L).poly
    rec.check("h-short-product", got == want, f"{got} != {want}")

"""Batch command line: invariants, validation, verification suites and corpus export."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import corpus, serialize, suites
from .complexes import FaceComplex, validate_cubical
from .enumeration import (
    evaluation_identity,
    h_long_cubical,
    h_short_cubical,
    h_short_cubical_interior,
    h_simplicial,
    h_simplicial_interior,
    hetyei_decomposition,
)
from .errors import CubicalHError, ParameterError, ParseError, UnknownEntryError
from .formal import h_general, lift_subdivision, local_h_general, validate_formal
from .poset import Poset
from .reports import ValidationReport
from .subdivision import (
    SubdivisionMap,
    is_cube_target,
    is_locally_quasi_geometric,
    is_quasi_geometric,
    local_h_long,
    local_h_short,
    local_h_short_via_excess,
    validate_subdivision,
    vertex_contributions,
)

log = logging.getLogger("cubicalh")


class KindMismatch(ParameterError):
    pass


class Report:
    def __init__(self, command: str):
        self.command = command
        self.inputs: list = []
        self.results: dict = {}
        self.failures: list = []

    def add_input(self, path, digest):
        self.inputs.append({"path": str(path), "sha256": digest})

    def fail(self, check, location, detail):
        self.failures.append({"check": check, "location": None if location is None else str(location),
                              "detail": detail})

    def absorb(self, rep: ValidationReport):
        self.failures.extend(rep.failures)

    def to_json(self) -> dict:
        key = lambda f: (str(f.get("check")), str(f.get("location")), str(f.get("detail")))
        return {"command": self.command, "inputs": self.inputs, "results": self.results,
                "failures": sorted(self.failures, key=key)}


def coeffs(p, length: int | None = None) -> list[int]:
    """Lowest degree first, zero padded to ``length`` entries when given."""
    out = list(p.coeffs)
    if length is not None and len(out) < length:
        out += [0] * (length - len(out))
    return out


def _load(report: Report, path):
    kind, obj, digest = serialize.load(path)
    report.add_input(path, digest)
    return kind, obj


# commands


def cmd_hvec(args, report: Report):
    kind, obj = _load(report, args.file)
    d = None
    if kind == "subdivision":
        obj, d = obj.source, obj.target.dim
    elif kind == "formal":
        obj = obj.source
    if isinstance(obj, Poset):
        if args.kind != "general":
            raise KindMismatch(f"--kind {args.kind} needs a complex, got a poset")
        h = h_general(obj).poly
        report.results["h_general"] = coeffs(h)
        return
    K: FaceComplex = obj
    if d is None:
        d = K.dim
    if args.kind == "simplicial":
        if K.kind != "simplicial":
            raise KindMismatch("--kind simplicial needs a simplicial complex")
        report.results["h_simplicial"] = coeffs(h_simplicial(K, d + 1).poly, d + 2)
        if args.interior:
            report.results["h_simplicial_interior"] = coeffs(h_simplicial_interior(K, d + 1).poly, d + 2)
    elif args.kind == "short":
        if K.kind != "cubical":
            raise KindMismatch("--kind short needs a cubical complex")
        report.results["h_short"] = coeffs(h_short_cubical(K, d).poly, d + 1)
        if args.interior:
            report.results["h_short_interior"] = coeffs(h_short_cubical_interior(K, d).poly, d + 1)
    elif args.kind == "long":
        if K.kind != "cubical":
            raise KindMismatch("--kind long needs a cubical complex")
        report.results["h_long"] = coeffs(h_long_cubical(K, d).poly, d + 2)
    else:
        P = K.face_poset()
        report.results["h_general"] = coeffs(h_general(P).poly)
    if args.links:
        K.require_pure()
        report.results["links"] = {str(v): coeffs(h.poly, d + 1) for v, h in hetyei_decomposition(K).items()}
    if args.euler:
        lhs, rhs = evaluation_identity(K)
        report.results["reduced_euler"] = K.reduced_euler()
        report.results["h_short_at_minus_one"] = lhs
        report.results["evaluation_identity"] = lhs == rhs
        if K.kind == "cubical" and lhs != rhs:
            report.fail("evaluation-identity", None, f"{lhs} != {rhs}")


def _validate_any(kind, obj) -> ValidationReport:
    if kind == "subdivision":
        return validate_subdivision(obj)
    if kind == "formal":
        return validate_formal(obj)
    if kind == "complex":
        if obj.kind == "cubical":
            return validate_cubical(obj)
        rep = ValidationReport("simplicial complex")
        if not obj.is_pure():
            rep.note("complex is not pure")
        return rep
    rep = ValidationReport("poset")
    if not obj.is_lower_graded():
        rep.fail("lower-graded", None, "poset is not lower graded")
    elif not obj.is_locally_eulerian():
        rep.fail("locally-eulerian", None, "some interval is not Eulerian")
    return rep


def cmd_validate(args, report: Report):
    kind, obj = _load(report, args.file)
    rep = _validate_any(kind, obj)
    report.results["kind"] = kind
    report.results["valid"] = rep.ok
    if rep.notes:
        report.results["notes"] = list(rep.notes)
    report.absorb(rep)


def cmd_localh(args, report: Report):
    kind, obj = _load(report, args.file)
    if kind not in ("subdivision", "formal"):
        raise KindMismatch(f"localh needs a subdivision or formal subdivision, got a {kind}")
    rep = _validate_any(kind, obj)
    report.results["valid"] = rep.ok
    if not rep.ok:
        report.absorb(rep)
        if not args.force:
            report.results["refused"] = "input failed validation; rerun with --force to compute anyway"
            return
    if kind == "formal":
        if args.kind != "general":
            raise KindMismatch(f"--kind {args.kind} needs a cubical subdivision")
        # generalized polynomials are reported trimmed; their degree bound is a rank, not a dimension
        report.results["local_h_general"] = coeffs(local_h_general(obj, strict=False))
        return
    s: SubdivisionMap = obj
    if args.kind == "general":
        F = lift_subdivision(s)
        report.results["local_h_general"] = coeffs(local_h_general(F, strict=False))
    else:
        if not is_cube_target(s):
            raise KindMismatch("short and long local h need a subdivision of a single cube")
        d = s.target.dim
        ell = local_h_short(s, strict=False).poly
        if args.kind == "short":
            report.results["local_h_short"] = coeffs(ell, d + 1)
        else:
            report.results["local_h_long"] = coeffs(local_h_long(s, strict=False).poly, d + 2)
        if args.both_paths:
            other = local_h_short_via_excess(s).poly
            report.results["excess_formula"] = coeffs(other, d + 1)
            report.results["paths_agree"] = other == ell
            if other != ell:
                report.fail("both-paths", None, f"defining sum {ell} != excess formula {other}")
        if args.contributions:
            report.results["contributions"] = {str(v): coeffs(p, d + 1)
                                               for v, p in vertex_contributions(s).items()}
    if args.predicates:
        report.results["lqg"] = is_locally_quasi_geometric(s)
        report.results["qg"] = is_quasi_geometric(s)


def cmd_verify(args, report: Report):
    scope = suites.Scope() if args.no_corpus else suites.corpus_scope()
    for path in args.file or []:
        kind, obj = _load(report, path)
        extra = suites.file_scope(Path(path).name, kind, obj)
        for attr in ("subdivisions", "complexes", "formal", "posets"):
            getattr(scope, attr).extend(getattr(extra, attr))
    res = suites.run_suite(args.suite, scope, workers=args.workers)
    instances: dict = {}
    for c in res.checks:
        row = instances.setdefault(f"{c.suite}:{c.instance}", {"passed": 0, "failed": 0})
        row["passed" if c.ok else "failed"] += 1
        if not c.ok:
            report.fail(f"{c.suite}/{c.check}", c.instance, c.detail)
    report.results["suite"] = args.suite
    report.results["checks"] = len(res.checks)
    report.results["instances"] = dict(sorted(instances.items()))
    report.results["observations"] = sorted(res.observations, key=lambda o: (o["suite"], o["instance"], o["note"]))


def _emit(name: str, outdir: Path) -> list[str]:
    e = corpus.get(name)
    kind = {"subdivision": "subdivision", "formal": "formal", "complex": "complex", "poset": "poset"}[e.kind]
    outdir.mkdir(parents=True, exist_ok=True)
    inst, exp = outdir / f"{name}.json", outdir / f"{name}.expected.json"
    serialize.save(inst, kind, e.obj)
    exp.write_text(serialize.dumps(corpus.expected_json(e)), encoding="utf-8")
    return [inst.name, exp.name]


def cmd_corpus(args, report: Report):
    if args.action == "list":
        report.results["entries"] = {e.name: {"kind": e.kind, "description": e.description,
                                              **e.metadata()} for e in corpus.entries()}
        return
    outdir = Path(args.outdir)
    if args.action == "emit":
        if not args.name:
            raise ParameterError("corpus emit needs an entry name")
        report.results["written"] = _emit(args.name, outdir)
    else:
        written = []
        for name in corpus.names():
            written += _emit(name, outdir)
        report.results["written"] = written


# parser and entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand's defaults from clobbering flags given before it
    common.add_argument("--json", metavar="PATH", default=argparse.SUPPRESS, help="also write the report to PATH")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="print nothing on stdout")

    p = argparse.ArgumentParser(prog="cubicalh", parents=[common],
                                description="Exact face-enumeration invariants of cubical and simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hvec", parents=[common], help="h-polynomial of a complex or poset")
    h.add_argument("file")
    h.add_argument("--kind", choices=["simplicial", "short", "long", "general"], default="short")
    h.add_argument("--interior", action="store_true", help="also the interior h-polynomial")
    h.add_argument("--links", action="store_true", help="simplicial h of every vertex link")
    h.add_argument("--euler", action="store_true", help="reduced Euler characteristic and h(-1)")
    h.set_defaults(func=cmd_hvec)

    lh = sub.add_parser("localh", parents=[common], help="local h-polynomial of a subdivision")
    lh.add_argument("file")
    lh.add_argument("--kind", choices=["short", "long", "general"], default="short")
    lh.add_argument("--both-paths", action="store_true", help="cross-check against the excess formula")
    lh.add_argument("--contributions", action="store_true", help="per-vertex contributions")
    lh.add_argument("--predicates", action="store_true", help="locally quasi-geometric and quasi-geometric")
    lh.add_argument("--force", action="store_true", help="compute even if validation fails")
    lh.set_defaults(func=cmd_localh)

    v = sub.add_parser("validate", parents=[common], help="validate an input file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    ver = sub.add_parser("verify", parents=[common], help="run an identity suite")
    ver.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    ver.add_argument("--file", action="append", help="add a user file to the scope (repeatable)")
    ver.add_argument("--no-corpus", action="store_true", help="skip the built-in corpus")
    ver.add_argument("--workers", type=int, default=1)
    ver.set_defaults(func=cmd_verify)

    c = sub.add_parser("corpus", parents=[common], help="list or export built-in instances")
    c.add_argument("action", choices=["list", "emit", "emit-all"])
    c.add_argument("name", nargs="?")
    c.add_argument("--outdir", default=".")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    report = Report(args.command)
    code = 0
    try:
        args.func(args, report)
    except (ParseError, UnknownEntryError, ParameterError) as exc:
        report.fail("input", None, f"{type(exc).__name__}: {exc}")
        code = 2
    except CubicalHError as exc:
        report.fail("error", None, f"{type(exc).__name__}: {exc}")
        code = 1
    if code == 0 and report.failures:
        code = 1
    text = serialize.dumps(report.to_json())
    if getattr(args, "json", None):
        Path(args.json).write_text(text, encoding="utf-8")
    if not getattr(args, "quiet", False):
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

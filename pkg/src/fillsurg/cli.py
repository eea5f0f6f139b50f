"""Command-line front end: ``fillsurg <command> ...``.

Exit codes: 0 success, 1 a negative domain verdict (invalid certificate,
obstruction, rule not applicable, table check failure), 2 bad usage or
unparseable input.  ``--tsv`` switches any command to tab-separated output
with a header row; :func:`read_tsv` parses it back.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Sequence

from fillsurg.braid import BraidError, closure_components, exponent_sum, parse_braid, permutation, word_length
from fillsurg.catalog import CatalogError, load_catalog, verify_table
from fillsurg.certificates import (
    CertificateError,
    CertificateParseError,
    compare_with_braid,
    parse_certificate,
    validate,
)
from fillsurg.constructions import (
    InconsistentInput,
    cable_rule,
    lens_rule,
    positive_braid_rule,
    satellite_rule,
)
from fillsurg.disk import DiskClass, consistent_classes, gap_report, min_coefficient_for_genus, mu_bounds
from fillsurg.invariants import alexander, positive_braid_genus
from fillsurg.torus import InvalidTorusParameters, blowup_schedule, normalize_pq

__all__ = ["main", "run", "read_tsv", "build_parser"]

OK, DOMAIN_FAILURE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_tsv(text: str) -> list[dict[str, str]]:
    """Rows of a ``--tsv`` output as dicts keyed by the header."""
    return list(csv.DictReader(io.StringIO(text), delimiter="\t"))


def _write_tsv(out, rows: list[dict[str, object]]) -> None:
    if not rows:
        return
    w = csv.DictWriter(out, fieldnames=list(rows[0]), delimiter="\t", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: _cell(v) for k, v in row.items()})


def _cell(v: object) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "Y" if v else "N"
    return str(v)


def _schedule_text(schedule) -> str:
    return ",".join(f"{m}x{count}" for m, count in schedule) or "-"


def _read_braid(text: str):
    try:
        return parse_braid(text)
    except BraidError as exc:
        raise UsageError(f"bad braid {text!r}: {exc}") from exc


def _shipped_certificate(name: str) -> Path | None:
    base = Path(str(resources.files("fillsurg") / "data" / "certificates"))
    for candidate in (base / name, base / f"{name}.cert"):
        if candidate.is_file():
            return candidate
    return None


def _read_certificate(arg: str):
    """A path, a shipped certificate name (e.g. ``10_142``), or an inline JSON literal."""
    if arg.lstrip().startswith("{"):
        text = arg
    else:
        path = Path(arg)
        if not path.is_file():
            path = _shipped_certificate(arg)
            if path is None:
                raise UsageError(f"no certificate file or shipped certificate named {arg!r}")
        text = path.read_text(encoding="utf-8")
    try:
        return parse_certificate(text)
    except CertificateParseError as exc:
        raise UsageError(str(exc)) from exc


# -- commands -------------------------------------------------------------


def cmd_torus(args, out) -> int:
    if args.sweep is not None:
        if args.p is not None:
            raise UsageError("give either P Q or --sweep PMAX")
        pairs = [(p, q) for p in range(3, args.sweep + 1) for q in range(2, p) if gcd(p, q) == 1]
    else:
        if args.p is None or args.q is None:
            raise UsageError("torus needs P and Q (or --sweep PMAX)")
        try:
            normalize_pq(args.p, args.q)
        except InvalidTorusParameters as exc:
            raise UsageError(str(exc)) from exc
        pairs = [(args.p, args.q)]
    reports = [blowup_schedule(p, q) for p, q in pairs]
    if args.tsv:
        _write_tsv(
            out,
            [
                {
                    "p": r.p,
                    "q": r.q,
                    "cf": r.cf,
                    "mu": r.mu,
                    "m": r.m,
                    "c": r.c,
                    "genus": r.genus,
                    "schedule": _schedule_text(r.blowup_schedule),
                    "tangency": r.terminal_tangency,
                }
                for r in reports
            ],
        )
        return OK
    for r in reports:
        if r.q == 1:
            print(f"T({r.p},1) is the unknot: mu = 0", file=out)
            continue
        print(f"T({r.p},{r.q})  slice genus {r.genus}", file=out)
        print(f"  cf       p/q = {r.cf}   remainders {','.join(map(str, r.remainders))}", file=out)
        print(
            f"  schedule {_schedule_text(r.blowup_schedule)} (multiplicity x blowups), "
            f"terminal tangency {r.terminal_tangency}",
            file=out,
        )
        print(f"  mu = {r.mu}    pq - a_n, from the Euclidean resolution of x^p = y^q", file=out)
        print(f"  m = {r.m}    pq - c(p,q) with c = {r.c}; ceil(m) = mu", file=out)
        print(f"  disk class {{{r.disk_class}}}, 2g < mu <= 4g: {2 * r.genus} < {r.mu} <= {4 * r.genus}", file=out)
    return OK


def cmd_braid(args, out) -> int:
    w = _read_braid(args.word)
    comps = closure_components(w)
    positive = all(x > 0 for x in w.letters)
    row: dict[str, object] = {
        "word": w,
        "strands": w.strands,
        "length": word_length(w),
        "exponent_sum": exponent_sum(w),
        "self_linking": exponent_sum(w) - w.strands,
        "permutation": " ".join(map(str, permutation(w).images)),
        "components": comps,
        "alexander": alexander(w) if comps == 1 else None,
        "positive": positive,
        "positive_genus": positive_braid_genus(w) if positive and comps == 1 else None,
        "coefficient_bound": positive_braid_rule(w).coefficient_bound if positive and comps == 1 else None,
    }
    if args.tsv:
        _write_tsv(out, [row])
        return OK
    print(f"{w}", file=out)
    print(f"  length {row['length']}, exponent sum {row['exponent_sum']}, self-linking e - n = {row['self_linking']}", file=out)
    print(f"  permutation {row['permutation']}  ({comps} closure component{'s' if comps != 1 else ''})", file=out)
    if comps == 1:
        print(f"  Alexander polynomial {row['alexander']}   (reduced Burau: det(I - B) / (1 + t + ... + t^(n-1)))", file=out)
    if row["positive_genus"] is not None:
        print(
            f"  positive braid: slice genus {row['positive_genus']} = (e - n + 1)/2, "
            f"fillable coefficient <= {row['coefficient_bound']} = 4g",
            file=out,
        )
    return OK


def cmd_certify(args, out) -> int:
    cert = _read_certificate(args.certificate)
    target = _read_braid(args.braid) if args.braid else None
    try:
        rep = validate(cert)
    except CertificateError as exc:
        if args.tsv:
            _write_tsv(out, [{"valid": False, "error": type(exc).__name__, "message": exc}])
        else:
            print(f"invalid certificate: {type(exc).__name__}: {exc}", file=out)
        return DOMAIN_FAILURE
    cons = compare_with_braid(cert, target) if target is not None else None
    row: dict[str, object] = {
        "valid": True,
        "genus": rep.genus,
        "surgery_coefficient": rep.surgery_coefficient,
        "self_linking": rep.self_linking,
        "disk_class": rep.disk_class,
        "bands": rep.bands,
        "nodes": rep.nodes,
        "higher_twists": rep.higher_twists,
        "extended": rep.extended,
        "braid": rep.flattened,
        "consistent": None if cons is None else cons.consistent,
    }
    if args.tsv:
        _write_tsv(out, [row])
    else:
        print(f"valid certificate in Br_{cert.strands}: {rep.bands} bands, {rep.nodes} nodes, {rep.higher_twists} higher twists", file=out)
        print(f"  flattened  {rep.flattened}", file=out)
        print(f"  disk class {{{rep.disk_class}}}   (one blowup per multiple point)", file=out)
        print(f"  g = {rep.genus}    sum m(m-1)/2, the genus formula for the smoothed disk", file=out)
        print(f"  r = {rep.surgery_coefficient}    sum m^2 = 2g + sum m, a fillable smooth surgery coefficient", file=out)
        print(f"  sl = {rep.self_linking}    e - n = 2g - 1 (transverse boundary of a symplectic disk)", file=out)
        if rep.extended:
            print("  extended: uses full twists of multiplicity >= 3 beyond the band/node criterion", file=out)
        if cons is not None:
            verdict = "consistent" if cons.consistent else "INCONSISTENT"
            print(
                f"  against {target}: {verdict} (cycle type {_cell(cons.cycle_type)}, "
                f"self-linking {_cell(cons.exponent_sum)}, Alexander {_cell(cons.alexander)})",
                file=out,
            )
            for note in cons.notes:
                print(f"    {note}", file=out)
    if cons is not None and not cons.consistent:
        return DOMAIN_FAILURE
    return OK


def _parse_class(text: str) -> DiskClass:
    try:
        return DiskClass.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_diskclass(args, out) -> int:
    d = _parse_class(args.parts)
    row = {
        "class": d if d.parts else "-",
        "surgery_coefficient": d.surgery_coefficient,
        "genus": d.genus,
        "parts_sum": sum(d.parts),
        "blows_down": 1 in d.parts,
    }
    if args.tsv:
        _write_tsv(out, [row])
        return OK
    print(f"class {{{d}}}", file=out)
    print(f"  r = {d.surgery_coefficient}    sum n^2 (minus the self-intersection)", file=out)
    print(f"  g = {d.genus}    sum n(n-1)/2, forced slice genus of the boundary", file=out)
    print(f"  r - 2g = {sum(d.parts)} = sum n", file=out)
    if 1 in d.parts:
        print(f"  has a unit part: blowing it down gives {{{DiskClass(d.parts[:-1])}}}, so r - 1 is fillable too", file=out)
    return OK


def cmd_gapset(args, out) -> int:
    if args.limit < 1:
        raise UsageError("limit must be >= 1")
    rep = gap_report(args.limit)
    published = sorted(rep.published)
    computed = sorted(rep.computed)
    if args.tsv:
        _write_tsv(
            out,
            [
                {
                    "limit": args.limit,
                    "published": ",".join(map(str, published)),
                    "computed": ",".join(map(str, computed)),
                    "missing_from_published": ",".join(map(str, sorted(rep.missing_from_published))) or None,
                    "discrepancy": rep.discrepancy,
                }
            ],
        )
        return OK
    print(f"r <= {args.limit} whose every sum-of-squares representation uses 1:", file=out)
    print(f"  published list: {{{', '.join(map(str, published))}}}", file=out)
    print(f"  computed      : {{{', '.join(map(str, computed))}}}   (complement of the monoid generated by 4, 9, 16, ...)", file=out)
    if rep.missing_from_published:
        print(
            f"  DISCREPANCY: {sorted(rep.missing_from_published)} computed but absent from the published list "
            "(23 is the Frobenius number of {4, 9})",
            file=out,
        )
    if rep.not_computed:
        print(f"  DISCREPANCY: {sorted(rep.not_computed)} published but representable without 1", file=out)
    return OK


def cmd_consistent(args, out) -> int:
    if args.r < 0 or args.g < 0:
        raise UsageError("r and g must be non-negative")
    classes = consistent_classes(args.r, args.g)
    if args.tsv:
        _write_tsv(out, [{"r": args.r, "g": args.g, "class": c if c.parts else "-"} for c in classes] or [{"r": args.r, "g": args.g, "class": None}])
    else:
        print(f"classes with sum n^2 = {args.r} and sum n(n-1)/2 = {args.g}:", file=out)
        for c in classes:
            print(f"  {{{c}}}", file=out)
        if not classes:
            print("  none: no embedded disk realizes this coefficient at this genus", file=out)
        lo, hi = mu_bounds(args.g)
        print(f"  least coefficient for genus {args.g}: {min_coefficient_for_genus(args.g)}; bounds {lo} <= mu <= {hi}", file=out)
    return OK if classes else DOMAIN_FAILURE


def _print_verdict(v, out, tsv: bool) -> int:
    if tsv:
        _write_tsv(
            out,
            [
                {
                    "rule": v.rule,
                    "fillable": v.fillable,
                    "coefficient_bound": v.coefficient_bound,
                    "crossing_change_budget": v.crossing_change_budget,
                    "notes": "; ".join(v.notes),
                }
            ],
        )
    else:
        labels = {
            "a": "positive braid closure",
            "b": "lens space surgery",
            "c": "twisted satellite with braided fillable pattern",
            "d": "cable of a knot with fillable surgery",
        }
        print(f"rule ({v.rule}) {labels[v.rule]}: fillable = {v.fillable}", file=out)
        if v.coefficient_bound is not None:
            print(f"  coefficient bound {v.coefficient_bound}", file=out)
        if v.crossing_change_budget is not None:
            print(f"  at most {v.crossing_change_budget} positive crossing changes unknot it", file=out)
        for note in v.notes:
            print(f"  {note}", file=out)
    return OK if v.fillable == "yes" else DOMAIN_FAILURE


def cmd_construct(args, out) -> int:
    try:
        if args.rule == "positive":
            w = _read_braid(args.word)
            try:
                v = positive_braid_rule(w)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        elif args.rule == "lens":
            v = lens_rule(args.genus, args.coefficient)
        elif args.rule == "satellite":
            v = satellite_rule(_read_certificate(args.pattern), args.m, args.satellite_genus)
        else:
            v = cable_rule(args.p, args.q, args.m)
    except InconsistentInput as exc:
        print(f"inconsistent input: {exc}", file=out)
        return DOMAIN_FAILURE
    except CertificateError as exc:
        print(f"pattern rejected: {exc}", file=out)
        return DOMAIN_FAILURE
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _print_verdict(v, out, args.tsv)


def cmd_table(args, out) -> int:
    try:
        records = load_catalog(args.path)
    except (CatalogError, OSError) as exc:
        raise UsageError(f"cannot load catalog: {exc}") from exc
    if args.name:
        records = [r for r in records if r.name == args.name]
        if not records:
            raise UsageError(f"no row named {args.name!r}")
    report = verify_table(records, expected=None if (args.path or args.name) else (59, 48, 11))
    if args.tsv:
        rows = []
        for rec in records:
            row = rec.to_row()
            g_r = report.certificate_results.get(rec.name)
            row["certificate_r"] = str(g_r[1]) if g_r else "-"
            row["evidence"] = rec.evidence
            row["status"] = "fail" if any(f.name == rec.name for f in report.failures) else "ok"
            rows.append(row)
        _write_tsv(out, rows)
    else:
        for rec in records:
            g_r = report.certificate_results.get(rec.name)
            mu = "inf" if rec.mu is None else (str(rec.mu) if rec.mu_exact is not None else f"<={rec.mu}")
            extra = f"  certificate r = {g_r[1]}" if g_r else ""
            obs = f"  {','.join(map(str, report.obstructions.get(rec.name, ())))}" if rec.fillable == "N" else ""
            note = "" if rec.note in ("", "-") else f"  {rec.note}"
            print(
                f"{rec.name:<8} {rec.fillable}  g*={rec.slice_genus}  mu={mu:<5} [{rec.evidence}]{extra}{obs}{note}",
                file=out,
            )
        print(
            f"{report.rows} rows, {report.yes} Y, {report.no} N, {report.certificates_checked} certificates checked, "
            f"{len(report.failures)} failures",
            file=out,
        )
        for issue in report.failures:
            print(f"  FAIL {issue}", file=out)
        for issue in report.warnings:
            print(f"  warning {issue}", file=out)
        if args.verbose:
            for issue in report.info:
                print(f"  note {issue}", file=out)
    return OK if report.ok else DOMAIN_FAILURE


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 on its own; keep messages on stderr
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fillsurg", description="Fillable positive surgery calculator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def tsv_flag(p):
        p.add_argument("--tsv", action="store_true", help="tab-separated output")

    def add(name, func, help_text, tsv=True):
        p = sub.add_parser(name, help=help_text)
        if tsv:
            tsv_flag(p)
        p.set_defaults(func=func)
        return p

    p = add("torus", cmd_torus, "minimal fillable coefficient of T(p,q)")
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("q", type=int, nargs="?")
    p.add_argument("--sweep", type=int, metavar="PMAX", help="all coprime 2 <= q < p <= PMAX")

    p = add("braid", cmd_braid, "invariants of a braid word")
    p.add_argument("word", help='e.g. "B3: 1 2 -1"')

    p = add("certify", cmd_certify, "validate a band/full-twist certificate")
    p.add_argument("certificate", help="path, shipped name (e.g. 10_142), or inline JSON")
    p.add_argument("--braid", help="compare the flattened certificate against this braid")

    p = add("diskclass", cmd_diskclass, "arithmetic of a disk class")
    p.add_argument("parts", help='comma-separated, e.g. "3,2,2"')

    p = add("gapset", cmd_gapset, "coefficients that always need a unit part")
    p.add_argument("limit", type=int)

    p = add("consistent", cmd_consistent, "disk classes with given r and g")
    p.add_argument("r", type=int)
    p.add_argument("g", type=int)

    p = add("construct", cmd_construct, "sufficient conditions for fillability", tsv=False)
    rules = p.add_subparsers(dest="rule", required=True, parser_class=_Parser)
    q = rules.add_parser("positive")
    tsv_flag(q)
    q.add_argument("word")
    q = rules.add_parser("lens")
    tsv_flag(q)
    q.add_argument("genus", type=int)
    q.add_argument("coefficient", type=int)
    q = rules.add_parser("satellite")
    tsv_flag(q)
    q.add_argument("pattern", help="pattern certificate")
    q.add_argument("m", type=int, help="fillable coefficient of the companion")
    q.add_argument("--satellite-genus", type=int)
    q = rules.add_parser("cable")
    tsv_flag(q)
    q.add_argument("p", type=int)
    q.add_argument("q", type=int)
    q.add_argument("m", type=int, help="fillable coefficient of the companion")

    p = add("table", cmd_table, "verify the low-crossing catalog")
    p.add_argument("name", nargs="?", help="show a single row")
    p.add_argument("--path", help="catalog TSV (default: shipped dataset)")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"fillsurg: error: {exc}", file=sys.stderr)
        return USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Low-crossing quasipositive knots and their fillable surgery status.

The shipped dataset lives in ``data/low_crossing.tsv`` (tab-separated, UTF-8, ``#``
comment lines carry provenance).  Columns::

    name qp g4 c4 fillable mu mu_is_exact braid certificate_file obstruction note

``-`` marks an absent value.  ``mu`` is an integer or ``inf``; ``c4`` may be a
lower bound written ``>=k``.  Certificate files are resolved against the
``certificates/`` directory next to the TSV.

Slice genera, clasp numbers and quasipositivity are cited data: nothing here
recomputes them.  :func:`verify_table` checks what can be checked, namely the
certificates, torus and twist knot formulas, genus bounds, and that every
non-fillable row carries an obstruction.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Literal

from fillsurg.braid import BraidError, BraidWord, parse_braid
from fillsurg.certificates import (
    Certificate,
    CertificateError,
    load_certificate,
    twist_knot_certificate,
    validate,
)
from fillsurg.disk import min_coefficient_for_genus, mu_bounds
from fillsurg.invariants import alexander
from fillsurg.torus import mu_torus

__all__ = [
    "Reason",
    "KnotRecord",
    "CatalogError",
    "RowIssue",
    "TableReport",
    "COLUMNS",
    "obstruct",
    "load_catalog",
    "default_catalog_path",
    "verify_table",
]

COLUMNS = (
    "name",
    "qp",
    "g4",
    "c4",
    "fillable",
    "mu",
    "mu_is_exact",
    "braid",
    "certificate_file",
    "obstruction",
    "note",
)


class Reason(str, Enum):
    NOT_QUASIPOSITIVE = "NotQuasipositive"
    CLASP_EXCEEDS_GENUS = "ClaspExceedsGenus"
    NEGATIVE_DOUBLE_POINTS = "NegativeDoublePoints"

    def __str__(self) -> str:
        return self.value


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def obstruct(quasipositive: bool, g: int, c: int, c_minus: int = 0) -> list[Reason]:
    """Necessary conditions for a fillable positive surgery that fail.

    A fillable positive surgery forces the knot to be quasipositive, the
    4-dimensional clasp number c to equal the slice genus g, and every
    minimal immersed disk to have no negative double points (c_minus = 0).
    ``c`` may be a lower bound for the clasp number; the check stays sound.
    """
    if g < 0 or c < 0 or c_minus < 0:
        raise ValueError("g, c and c_minus must be non-negative")
    if c < g:
        raise ValueError(f"clasp number {c} below slice genus {g} is impossible")
    reasons = []
    if not quasipositive:
        reasons.append(Reason.NOT_QUASIPOSITIVE)
    if c > g:
        reasons.append(Reason.CLASP_EXCEEDS_GENUS)
    if c_minus > 0:
        reasons.append(Reason.NEGATIVE_DOUBLE_POINTS)
    return reasons


@dataclass(frozen=True)
class KnotRecord:
    name: str
    quasipositive: bool
    slice_genus: int
    clasp_number: int | None
    fillable: Literal["Y", "N"]
    mu_exact: int | None = None
    mu_upper: int | None = None
    note: str = ""
    certificate: Certificate | None = None
    obstruction: tuple[Reason, ...] = ()
    clasp_is_lower_bound: bool = False
    braid: BraidWord | None = None
    certificate_file: str | None = None
    line: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.fillable not in ("Y", "N"):
            raise ValueError(f"{self.name}: fillable must be Y or N")
        if self.fillable == "N" and not self.obstruction:
            raise ValueError(f"{self.name}: non-fillable row without an obstruction")
        if self.mu_exact is not None and self.mu_upper is not None:
            raise ValueError(f"{self.name}: mu is either exact or an upper bound, not both")
        if self.fillable == "Y" and self.mu is None:
            raise ValueError(f"{self.name}: fillable row needs a mu value")
        if self.fillable == "N" and self.mu is not None:
            raise ValueError(f"{self.name}: non-fillable row has finite mu")

    @property
    def mu(self) -> int | None:
        return self.mu_exact if self.mu_exact is not None else self.mu_upper

    @property
    def evidence(self) -> str:
        """What backs the row: a shipped certificate, an obstruction, or only the 4g_* ceiling."""
        if self.fillable == "N":
            return "obstruction"
        if self.certificate is not None:
            return "certificate"
        return "4g_* bound"

    def to_row(self) -> dict[str, str]:
        if self.clasp_number is None:
            c4 = "-"
        else:
            c4 = (">=" if self.clasp_is_lower_bound else "") + str(self.clasp_number)
        return {
            "name": self.name,
            "qp": "Y" if self.quasipositive else "N",
            "g4": str(self.slice_genus),
            "c4": c4,
            "fillable": self.fillable,
            "mu": "inf" if self.mu is None else str(self.mu),
            "mu_is_exact": "-" if self.mu is None else ("Y" if self.mu_exact is not None else "N"),
            "braid": str(self.braid) if self.braid is not None else "-",
            "certificate_file": self.certificate_file or "-",
            "obstruction": ",".join(r.value for r in self.obstruction) or "-",
            "note": self.note or "-",
        }


def default_catalog_path() -> Path:
    return Path(str(resources.files("fillsurg") / "data" / "low_crossing.tsv"))


def _opt(value: str) -> str | None:
    value = value.strip()
    return None if value in ("", "-") else value


def _int(value: str, what: str, line: int) -> int:
    try:
        n = int(value)
    except ValueError:
        raise CatalogError(f"{what} must be an integer, got {value!r}", line) from None
    if n < 0:
        raise CatalogError(f"{what} must be non-negative, got {n}", line)
    return n


def _yn(value: str, what: str, line: int) -> bool:
    if value not in ("Y", "N"):
        raise CatalogError(f"{what} must be Y or N, got {value!r}", line)
    return value == "Y"


def _resolve_cert(base: Path, name: str) -> Path:
    for candidate in (base / "certificates" / name, base / name):
        if candidate.is_file():
            return candidate
    raise FileNotFoundError(name)


def _parse_row(cells: list[str], line: int, base: Path) -> KnotRecord:
    if len(cells) != len(COLUMNS):
        raise CatalogError(f"expected {len(COLUMNS)} tab-separated columns, got {len(cells)}", line)
    row = dict(zip(COLUMNS, (c.strip() for c in cells)))
    name = row["name"]
    if not name or name == "-":
        raise CatalogError("missing knot name", line)
    qp = _yn(row["qp"], "qp", line)
    g = _int(row["g4"], "g4", line)

    c4 = _opt(row["c4"])
    clasp, lower = None, False
    if c4 is not None:
        if c4.startswith(">="):
            lower, c4 = True, c4[2:]
        clasp = _int(c4, "c4", line)
        if clasp < g and not lower:
            raise CatalogError(f"clasp number {clasp} below slice genus {g}", line)

    fillable = row["fillable"]
    if fillable not in ("Y", "N"):
        raise CatalogError(f"fillable must be Y or N, got {fillable!r}", line)

    mu_exact = mu_upper = None
    if row["mu"] != "inf":
        mu = _int(row["mu"], "mu", line)
        if _yn(row["mu_is_exact"], "mu_is_exact", line):
            mu_exact = mu
        else:
            mu_upper = mu

    braid = None
    if (text := _opt(row["braid"])) is not None:
        try:
            braid = parse_braid(text)
        except BraidError as exc:
            raise CatalogError(f"bad braid: {exc}", line) from exc

    cert, cert_file = None, _opt(row["certificate_file"])
    if cert_file is not None:
        try:
            cert = load_certificate(_resolve_cert(base, cert_file))
        except FileNotFoundError:
            raise CatalogError(f"certificate file {cert_file!r} not found", line) from None
        except (CertificateError, ValueError) as exc:
            raise CatalogError(f"bad certificate {cert_file!r}: {exc}", line) from exc

    obstruction = ()
    if (text := _opt(row["obstruction"])) is not None:
        try:
            obstruction = tuple(Reason(x.strip()) for x in text.split(","))
        except ValueError as exc:
            raise CatalogError(f"unknown obstruction in {text!r}", line) from exc

    try:
        record = KnotRecord(
            name=name,
            quasipositive=qp,
            slice_genus=g,
            clasp_number=clasp,
            fillable=fillable,
            mu_exact=mu_exact,
            mu_upper=mu_upper,
            note=_opt(row["note"]) or "",
            certificate=cert,
            obstruction=obstruction,
            clasp_is_lower_bound=lower,
            braid=braid,
            certificate_file=cert_file,
            line=line,
        )
    except ValueError as exc:
        raise CatalogError(str(exc), line) from exc

    if cert is not None:
        try:
            r = validate(cert).surgery_coefficient
        except CertificateError as exc:
            raise CatalogError(f"certificate {cert_file!r} does not validate: {exc}", line) from exc
        if record.mu is None or r > record.mu:
            raise CatalogError(f"certificate gives r = {r}, above the stated mu {row['mu']}", line)
    return record


def load_catalog(path: str | Path | None = None) -> list[KnotRecord]:
    """Parse a catalog TSV; the shipped dataset when ``path`` is None."""
    path = Path(path) if path is not None else default_catalog_path()
    records: list[KnotRecord] = []
    seen: set[str] = set()
    header_done = False
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, cells in enumerate(csv.reader(fh, delimiter="\t"), start=1):
            if not cells or (len(cells) == 1 and not cells[0].strip()):
                continue
            if cells[0].lstrip().startswith("#"):
                continue
            if not header_done:
                if tuple(c.strip() for c in cells) != COLUMNS:
                    raise CatalogError("missing or malformed header row", lineno)
                header_done = True
                continue
            rec = _parse_row(cells, lineno, path.parent)
            if rec.name in seen:
                raise CatalogError(f"duplicate row {rec.name}", lineno)
            seen.add(rec.name)
            records.append(rec)
    return records


@dataclass(frozen=True)
class RowIssue:
    name: str
    message: str

    def __str__(self) -> str:
        return f"{self.name}: {self.message}"


@dataclass
class TableReport:
    rows: int = 0
    yes: int = 0
    no: int = 0
    certificates_checked: int = 0
    failures: list[RowIssue] = field(default_factory=list)
    warnings: list[RowIssue] = field(default_factory=list)
    info: list[RowIssue] = field(default_factory=list)
    certificate_results: dict[str, tuple[int, int]] = field(default_factory=dict)  # name -> (g, r)
    obstructions: dict[str, tuple[Reason, ...]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


_TORUS = re.compile(r"torus T\((\d+),(\d+)\)")
_TWIST = re.compile(r"twist K_(\d+)")

EXPECTED_TOTALS = (59, 48, 11)


def _check_yes(rec: KnotRecord, report: TableReport) -> None:
    fail = lambda msg: report.failures.append(RowIssue(rec.name, msg))  # noqa: E731
    g, mu = rec.slice_genus, rec.mu
    lower, upper = mu_bounds(g)
    if mu < lower:
        fail(f"mu {mu} below the lower bound {lower} for slice genus {g}")
    if (mu == 0) != (g == 0):
        fail(f"mu = {mu} with slice genus {g}: mu vanishes exactly for slice knots")
    if rec.mu_exact is not None and rec.mu_exact < min_coefficient_for_genus(g):
        fail(f"exact mu {mu} below the least disk-class coefficient {min_coefficient_for_genus(g)}")
    if rec.mu_upper is not None and rec.mu_upper == min_coefficient_for_genus(g):
        report.info.append(RowIssue(rec.name, f"bound {mu} is attained: no disk class of genus {g} has smaller r"))

    cert_r = None
    if rec.certificate is not None:
        report.certificates_checked += 1
        try:
            rep = validate(rec.certificate)
        except CertificateError as exc:
            fail(f"certificate does not validate: {exc}")
        else:
            cert_r = rep.surgery_coefficient
            report.certificate_results[rec.name] = (rep.genus, cert_r)
            if cert_r > mu:
                fail(f"certificate r = {cert_r} exceeds stated mu {mu}")
            if rec.mu_exact is not None and cert_r < rec.mu_exact:
                fail(f"certificate r = {cert_r} beats the stated exact mu {mu}")
            if rep.genus != g:
                fail(f"certificate genus {rep.genus} differs from slice genus {g}")
            if rec.braid is not None and alexander(rep.flattened) != alexander(rec.braid):
                fail("certificate closure and catalog braid have different Alexander polynomials")

    if mu > upper:
        best = min(mu, cert_r) if cert_r is not None else mu
        if best <= upper:
            report.warnings.append(
                RowIssue(rec.name, f"stated bound {mu} exceeds 4g_* = {upper}; certificate gives {best}")
            )
        else:
            fail(f"stated bound {mu} exceeds 4g_* = {upper}")

    if m := _TORUS.search(rec.note):
        p, q = int(m.group(1)), int(m.group(2))
        expected = mu_torus(p, q)
        if rec.mu_exact != expected:
            fail(f"torus knot T({p},{q}) has mu {expected}, table says {mu}")
    if m := _TWIST.search(rec.note):
        ell = int(m.group(1))
        k = (ell - 1) // 2
        rep = validate(twist_knot_certificate(k))
        if (rep.genus, rep.surgery_coefficient) != (g, rec.mu_exact):
            fail(f"twist knot K_{ell} certificate gives (g, r) = ({rep.genus}, {rep.surgery_coefficient})")
        if rec.braid is not None and alexander(rep.flattened) != alexander(rec.braid):
            fail(f"twist knot K_{ell} certificate does not close to this knot")


def _check_no(rec: KnotRecord, report: TableReport) -> None:
    if rec.clasp_number is None:
        report.failures.append(RowIssue(rec.name, "non-fillable row without clasp data"))
        return
    reasons = tuple(obstruct(rec.quasipositive, rec.slice_genus, rec.clasp_number))
    report.obstructions[rec.name] = reasons
    if not reasons:
        report.failures.append(RowIssue(rec.name, "no necessary condition fails for a non-fillable row"))
    elif set(reasons) != set(rec.obstruction):
        report.failures.append(
            RowIssue(rec.name, f"recorded obstruction {list(map(str, rec.obstruction))} but computed {list(map(str, reasons))}")
        )


def verify_table(records: list[KnotRecord] | None = None, expected: tuple[int, int, int] | None = EXPECTED_TOTALS) -> TableReport:
    """Check every row; failures and warnings are sorted by row name.

    ``expected`` holds the published (rows, Y, N) totals; pass None to skip
    the count check for a custom catalog.
    """
    if records is None:
        records = load_catalog()
    report = TableReport()
    for rec in records:
        report.rows += 1
        if rec.fillable == "Y":
            report.yes += 1
            _check_yes(rec, report)
        else:
            report.no += 1
            _check_no(rec, report)
    if expected is not None and (report.rows, report.yes, report.no) != tuple(expected):
        report.failures.append(
            RowIssue("<totals>", f"got {report.rows} rows, {report.yes} Y, {report.no} N; expected {expected}")
        )
    return report

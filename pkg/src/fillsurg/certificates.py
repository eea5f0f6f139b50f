"""Band/node certificates for fillable positive surgery.

A certificate is an ordered product, in Br_n, of

* positive bands ``w s_i w^-1`` (simple branch points of the disk), and
* positive full twists ``w (s_s s_{s+1} ... s_{s+m-2})^m w^-1`` of multiplicity
  ``m >= 2`` (an ordinary m-fold point; ``m = 2`` is a positive node).

With exactly ``n - 1`` bands and a knot closure, the factorization is the
monodromy of a singular genus-0 disk.  Blowing up each m-fold point once gives
an embedded disk of class ``sum m_j e_j`` in a blowup of B^4, so

    g = sum m_j (m_j - 1) / 2        r = sum m_j^2 = 2 g + sum m_j

and r is a fillable smooth surgery coefficient of the closure.  Twists with
``m >= 3`` go beyond the band/node criterion proper; reports flag them as
``extended``.

File format (``.cert``, JSON)::

    {"strands": 3,
     "factors": [{"kind": "twist", "conjugator": [], "start": 1, "multiplicity": 3},
                 {"kind": "band", "conjugator": [-2], "index": 1}]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Sequence

from fillsurg.braid import (
    BraidWord,
    BraidValidationError,
    closure_components,
    embedded_band,
    exponent_sum,
    free_reduce,
    inverse_letters,
    permutation,
)
from fillsurg.disk import DiskClass

__all__ = [
    "CertificateError",
    "CertificateParseError",
    "BandCountMismatch",
    "NotAKnot",
    "IndexOutOfRange",
    "Factor",
    "Certificate",
    "CertificateReport",
    "Consistency",
    "band",
    "node",
    "full_twist",
    "flatten",
    "validate",
    "compare_with_braid",
    "twist_knot_certificate",
    "pretzel_certificate",
    "torus_certificate",
    "load_certificate",
    "parse_certificate",
    "dump_certificate",
]


class CertificateError(ValueError):
    pass


class CertificateParseError(CertificateError):
    """The certificate document itself is malformed."""


class BandCountMismatch(CertificateError):
    pass


class NotAKnot(CertificateError):
    pass


class IndexOutOfRange(CertificateError):
    pass


@dataclass(frozen=True)
class Factor:
    kind: Literal["band", "twist"]
    conjugator: tuple[int, ...] = ()
    index: int = 1  # band generator, or twist start strand
    multiplicity: int = 1  # always 1 for bands

    def __post_init__(self) -> None:
        object.__setattr__(self, "conjugator", tuple(map(int, self.conjugator)))
        if self.kind not in ("band", "twist"):
            raise CertificateError(f"unknown factor kind {self.kind!r}")
        if self.kind == "band" and self.multiplicity != 1:
            raise CertificateError("bands have multiplicity 1")
        if self.kind == "twist" and self.multiplicity < 2:
            raise CertificateError("full twists need multiplicity >= 2")
        if 0 in self.conjugator:
            raise IndexOutOfRange("conjugator letter 0")

    @property
    def is_node(self) -> bool:
        return self.kind == "twist" and self.multiplicity == 2

    def core(self) -> tuple[int, ...]:
        if self.kind == "band":
            return (self.index,)
        block = tuple(range(self.index, self.index + self.multiplicity - 1))
        return block * self.multiplicity

    def max_strand(self) -> int:
        """Smallest strand count in which this factor makes sense."""
        top = self.index + 1 if self.kind == "band" else self.index + self.multiplicity - 1
        return max(top, max(map(abs, self.conjugator), default=0) + 1)

    def letters(self) -> tuple[int, ...]:
        return self.conjugator + self.core() + inverse_letters(self.conjugator)

    def conjugated(self, w: Sequence[int]) -> Factor:
        return Factor(self.kind, tuple(w) + self.conjugator, self.index, self.multiplicity)

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "conjugator": list(self.conjugator)}
        if self.kind == "band":
            d["index"] = self.index
        else:
            d["start"] = self.index
            d["multiplicity"] = self.multiplicity
        return d

    def __str__(self) -> str:
        core = f"s{self.index}" if self.kind == "band" else (
            f"s{self.index}^2" if self.is_node else
            "(" + " ".join(f"s{i}" for i in range(self.index, self.index + self.multiplicity - 1)) + f")^{self.multiplicity}"
        )
        if not self.conjugator:
            return core
        w = " ".join(str(x) for x in self.conjugator)
        return f"[{w}] {core} [{w}]^-1"


def band(conjugator: Sequence[int] = (), i: int = 1) -> Factor:
    return Factor("band", tuple(conjugator), i, 1)


def node(conjugator: Sequence[int] = (), s: int = 1) -> Factor:
    return Factor("twist", tuple(conjugator), s, 2)


def full_twist(conjugator: Sequence[int] = (), s: int = 1, m: int = 2) -> Factor:
    return Factor("twist", tuple(conjugator), s, m)


def _band_from_word(w: BraidWord) -> Factor:
    """Band factor whose flattening is the embedded band word ``w`` = u s_j u^-1."""
    letters = w.letters
    k = len(letters) // 2
    return band(letters[:k], letters[k])


@dataclass(frozen=True)
class Certificate:
    strands: int
    factors: tuple[Factor, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.strands < 1:
            raise IndexOutOfRange("certificate needs at least one strand")

    @property
    def bands(self) -> list[Factor]:
        return [f for f in self.factors if f.kind == "band"]

    @property
    def twists(self) -> list[Factor]:
        return [f for f in self.factors if f.kind == "twist"]

    @property
    def extended(self) -> bool:
        return any(f.multiplicity >= 3 for f in self.twists)

    def conjugated(self, w: Sequence[int]) -> Certificate:
        return Certificate(self.strands, tuple(f.conjugated(w) for f in self.factors))

    def disk_class(self) -> DiskClass:
        return DiskClass(tuple(f.multiplicity for f in self.twists))

    def to_dict(self) -> dict:
        return {"strands": self.strands, "factors": [f.to_dict() for f in self.factors]}


@dataclass(frozen=True)
class CertificateReport:
    genus: int
    surgery_coefficient: int
    self_linking: int
    flattened: BraidWord
    disk_class: DiskClass
    bands: int
    nodes: int
    higher_twists: int
    extended: bool


def _check_indices(c: Certificate) -> None:
    for pos, f in enumerate(c.factors):
        if f.index < 1 or f.max_strand() > c.strands:
            raise IndexOutOfRange(f"factor {pos} ({f}) does not fit in Br_{c.strands}")


def flatten(c: Certificate) -> BraidWord:
    _check_indices(c)
    return _flatten_checked(c)


def _flatten_checked(c: Certificate) -> BraidWord:
    letters = tuple(x for f in c.factors for x in f.letters())
    try:
        word = BraidWord(c.strands, letters)
    except BraidValidationError as exc:
        raise IndexOutOfRange(str(exc)) from exc
    return free_reduce(word)


def validate(c: Certificate) -> CertificateReport:
    _check_indices(c)
    nbands = len(c.bands)
    if nbands != c.strands - 1:
        raise BandCountMismatch(f"{nbands} bands in Br_{c.strands}; need exactly {c.strands - 1}")
    word = _flatten_checked(c)
    comps = closure_components(word)
    if comps != 1:
        raise NotAKnot(f"closure has {comps} components")
    dc = c.disk_class()
    g = dc.genus
    r = dc.surgery_coefficient
    sl = exponent_sum(word) - c.strands
    assert sl == 2 * g - 1, (sl, g)
    assert r == 2 * g + sum(dc.parts)
    twists = c.twists
    return CertificateReport(
        genus=g,
        surgery_coefficient=r,
        self_linking=sl,
        flattened=word,
        disk_class=dc,
        bands=nbands,
        nodes=sum(1 for f in twists if f.is_node),
        higher_twists=sum(1 for f in twists if f.multiplicity >= 3),
        extended=c.extended,
    )


@dataclass(frozen=True)
class Consistency:
    """Invariant comparison of a certificate's flattening with a target braid.

    ``consistent`` only means no computed invariant tells the closures apart.
    """

    consistent: bool
    cycle_type: bool
    exponent_sum: bool
    alexander: bool | None  # None when it could not be compared (e.g. target not a knot)
    notes: tuple[str, ...] = ()


def compare_with_braid(c: Certificate, target: BraidWord) -> Consistency:
    from fillsurg.invariants import alexander

    word = flatten(c)
    notes = []
    same_cycles = permutation(word).cycle_type() == permutation(target).cycle_type() if word.strands == target.strands else (
        closure_components(word) == closure_components(target)
    )
    if word.strands != target.strands:
        notes.append("different strand counts: exponent sums compared after accounting for stabilization")
    e_ok = exponent_sum(word) - word.strands == exponent_sum(target) - target.strands
    alex: bool | None = None
    if closure_components(word) == 1 and closure_components(target) == 1:
        alex = alexander(word) == alexander(target)
    else:
        notes.append("Alexander polynomial not compared (not both knots)")
    ok = same_cycles and e_ok and alex is not False
    return Consistency(ok, same_cycles, e_ok, alex, tuple(notes))


def twist_knot_certificate(k: int) -> Certificate:
    """Certificate for the positive twist knot K_(2k+1) in Br_(2k+2).

    Bands s(k+1, 2k+1), then the node s(1, 2k+1)^2, then s(i, k+i) s(i+1, k+i)
    for i = 1..k: 2k+1 bands and one node.  Starting with s(k, 2k+1) instead
    closes up to K_(2k-1) (the trefoil for k = 1).
    """
    if k < 1:
        raise ValueError("twist knot family starts at k = 1")
    n = 2 * k + 2
    factors = [_band_from_word(embedded_band(k + 1, 2 * k + 1, n))]
    top = embedded_band(1, 2 * k + 1, n).letters
    half = len(top) // 2
    factors.append(node(top[:half], top[half]))
    for i in range(1, k + 1):
        factors.append(_band_from_word(embedded_band(i, k + i, n)))
        factors.append(_band_from_word(embedded_band(i + 1, k + i, n)))
    return Certificate(n, tuple(factors))


def pretzel_certificate() -> Certificate:
    """P(-2,3,7): (s1 s2)^3 (s2^-1 s1 s2) s2^2 s2^2 s2 in Br_3."""
    return Certificate(
        3,
        (full_twist((), 1, 3), band((-2,), 1), node((), 2), node((), 2), band((), 2)),
    )


def torus_certificate(p: int, q: int) -> Certificate:
    """Certificate for T(p, q), q in {2, 3}, matching the Euclidean blowup schedule.

    q = 2: s1^p = (s1^2)^((p-1)/2) s1.  q = 3 uses (s1 s2)^3 full twists; the
    remainder (s1 s2) or (s1 s2)^2 = s1^2 s2 s1 supplies the bands.
    """
    p, q = max(p, q), min(p, q)
    if q == 2 and p % 2 == 1:
        return Certificate(2, tuple([node((), 1)] * ((p - 1) // 2) + [band((), 1)]))
    if q == 3 and p % 3:
        twists = [full_twist((), 1, 3)] * (p // 3)
        if p % 3 == 1:
            tail = [band((), 1), band((), 2)]
        else:
            tail = [node((), 1), band((), 2), band((), 1)]
        return Certificate(3, tuple(twists + tail))
    raise ValueError(f"no built-in certificate for T({p},{q})")


def parse_certificate(obj: dict | str) -> Certificate:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise CertificateParseError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "strands" not in obj or "factors" not in obj:
        raise CertificateParseError("certificate needs 'strands' and 'factors'")
    if not isinstance(obj["factors"], list):
        raise CertificateParseError("'factors' must be a list")
    factors = []
    for pos, f in enumerate(obj["factors"]):
        try:
            kind = f["kind"]
            conj = tuple(f.get("conjugator", ()))
            if kind == "band":
                factors.append(band(conj, int(f["index"])))
            elif kind == "twist":
                factors.append(full_twist(conj, int(f["start"]), int(f["multiplicity"])))
            else:
                raise CertificateParseError(f"unknown factor kind {kind!r}")
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateParseError(f"factor {pos} is malformed: {exc}") from exc
    try:
        strands = int(obj["strands"])
    except (TypeError, ValueError) as exc:
        raise CertificateParseError(f"bad strand count: {exc}") from exc
    return Certificate(strands, tuple(factors))


def dump_certificate(c: Certificate) -> str:
    lines = [f'{{"strands": {c.strands},', ' "factors": [']
    body = [json.dumps(f.to_dict()) for f in c.factors]
    lines.append(",\n".join("  " + b for b in body))
    lines.append(" ]}")
    return "\n".join(lines) + "\n"


def load_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))

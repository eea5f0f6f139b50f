"""Sufficient conditions for a knot to have a fillable positive surgery.

Each rule returns a :class:`ConstructionVerdict`.  The rules are sufficient,
never necessary, so a rule that does not apply answers ``not_determined``
rather than "no".
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal

from fillsurg.braid import BraidWord, closure_components, word_length
from fillsurg.certificates import Certificate, CertificateError, validate
from fillsurg.invariants import NotAKnotError, positive_braid_genus

__all__ = [
    "ConstructionVerdict",
    "InconsistentInput",
    "positive_braid_rule",
    "lens_rule",
    "satellite_rule",
    "cable_rule",
]

Clause = Literal["a", "b", "c", "d"]


class InconsistentInput(ValueError):
    """The supplied data contradicts a known theorem."""


@dataclass(frozen=True)
class ConstructionVerdict:
    fillable: Literal["yes", "not_determined"]
    coefficient_bound: int | None
    rule: Clause
    notes: tuple[str, ...] = ()
    crossing_change_budget: int | None = None

    def __post_init__(self) -> None:
        if self.fillable == "yes" and self.coefficient_bound is not None and self.coefficient_bound < 0:
            raise ValueError("coefficient bound must be non-negative")


def positive_braid_rule(w: BraidWord) -> ConstructionVerdict:
    """Closure of a positive braid: fillable, with coefficient 4g at worst.

    Also reports the unknotting bound (l - n + 1)/2 on the number of
    positive-to-negative crossing changes that unknot the closure; each one
    becomes a positive double point of the immersed disk.
    """
    if any(x < 0 for x in w.letters):
        raise ValueError("positive braid rule needs a positive word")
    if closure_components(w) != 1:
        raise NotAKnotError(f"closure of {w} is not a knot")
    g = positive_braid_genus(w)
    budget = (word_length(w) - w.strands + 1) // 2
    return ConstructionVerdict(
        "yes",
        4 * g,
        "a",
        (f"slice genus {g} (positive braid)", "coefficient 4g from blowing up every double point"),
        crossing_change_budget=budget,
    )


def lens_rule(g: int, lens_coefficient: int) -> ConstructionVerdict:
    """A lens space surgery at ``lens_coefficient`` is itself fillable.

    Integer lens space surgeries satisfy coefficient > 2g - 1, so anything at
    or below 2g - 1 is rejected as inconsistent input.
    """
    if g < 0 or lens_coefficient <= 0:
        raise ValueError("need g >= 0 and a positive lens space coefficient")
    if lens_coefficient <= 2 * g - 1:
        raise InconsistentInput(
            f"lens space surgery at {lens_coefficient} contradicts the bound coefficient > 2g - 1 = {2 * g - 1}"
        )
    return ConstructionVerdict(
        "yes",
        lens_coefficient,
        "b",
        ("tight contact structures on lens spaces are fillable",),
    )


def satellite_rule(
    pattern_cert: Certificate, companion_coefficient: int, satellite_genus: int | None = None
) -> ConstructionVerdict:
    """Twisted satellite P_m(C) of a companion with fillable coefficient m.

    No formula for the satellite's own coefficient is known; one is reported
    only when the caller supplies the satellite's slice genus (then 4g).
    """
    if companion_coefficient < 0:
        raise ValueError("companion coefficient must be non-negative")
    try:
        report = validate(pattern_cert)
    except CertificateError as exc:
        raise type(exc)(f"pattern is not a braided fillable pattern: {exc}") from exc
    notes = [
        f"pattern certificate: {report.bands} bands, {report.nodes} nodes"
        + (", extended full twists" if report.extended else ""),
        f"twisting parameter m = {companion_coefficient}",
    ]
    bound = None
    if satellite_genus is not None:
        bound = 4 * satellite_genus
        notes.append("coefficient 4 g_* of the satellite")
    else:
        notes.append("existence only; no coefficient formula for the satellite")
    return ConstructionVerdict("yes", bound, "c", tuple(notes))


def cable_rule(p: int, q: int, companion_coefficient: int) -> ConstructionVerdict:
    """Cable C_{p,q} is the twisted satellite with pattern T(p, q - m p)."""
    if p < 1:
        raise ValueError("cable needs p >= 1")
    if gcd(p, q) != 1:
        raise ValueError(f"cable parameters ({p},{q}) are not coprime")
    shifted = q - companion_coefficient * p
    if shifted > 0:
        return ConstructionVerdict(
            "yes",
            None,
            "d",
            (f"pattern T({p},{shifted}) is a positive braid closure", "existence only"),
        )
    return ConstructionVerdict(
        "not_determined",
        None,
        "d",
        (f"q/p = {q}/{p} does not exceed m = {companion_coefficient}; the rule is sufficient, not necessary",),
    )

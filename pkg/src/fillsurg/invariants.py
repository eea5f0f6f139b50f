"""Integer Laurent polynomials, the reduced Burau representation and classical invariants.

Reduced Burau images, for sigma_i in Br_n acting on Z[t, t^-1]^(n-1): the
identity matrix except for row i, which reads::

    column:  i-1    i     i+1
             t     -t     1

(entries whose column falls outside 1..n-1 are dropped), and sigma_i^-1 has
row i equal to ``1, -t^-1, t^-1``.  A word maps to the product of its letters'
matrices in reading order.  With this choice

    det(B(w) - I) = (1 + t + ... + t^(n-1)) * Delta(t)

up to a unit +-t^k, which :func:`alexander` divides out and normalizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from fillsurg import kernels
from fillsurg.braid import BraidWord, closure_components, exponent_sum

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "burau_reduced",
    "alexander",
    "alexander_from_det",
    "self_linking",
    "positive_braid_genus",
    "torus_knot_alexander",
    "NotAKnotError",
]


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


def _trim_both(low: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    start = 0
    while start < len(coeffs) and coeffs[start] == 0:
        start += 1
    end = len(coeffs)
    while end > start and coeffs[end - 1] == 0:
        end -= 1
    if start == end:
        return 0, ()
    return low + start, tuple(coeffs[start:end])


class LaurentPoly:
    """Finitely supported integer Laurent polynomial in t, stored densely.

    ``low`` is the lowest exponent carrying a nonzero coefficient and
    ``coeffs[k]`` the coefficient of ``t**(low + k)``; the zero polynomial has
    no coefficients.  Instances are immutable and hashable.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        coefficients = {k: v for k, v in (coefficients or {}).items() if v}
        if not coefficients:
            low, coeffs = 0, ()
        else:
            low = min(coefficients)
            dense = [0] * (max(coefficients) - low + 1)
            for k, v in coefficients.items():
                dense[k - low] = int(v)
            low, coeffs = _trim_both(low, dense)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable[int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        low, c = _trim_both(low, list(coeffs))
        object.__setattr__(obj, "low", low)
        object.__setattr__(obj, "coeffs", c)
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.from_dense(0, [c])

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls.from_dense(k, [c])

    @property
    def coefficients(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def _aligned(self, other: LaurentPoly) -> tuple[int, list[int], list[int]]:
        low = min(self.low, other.low)
        a = [0] * (self.low - low) + list(self.coeffs)
        b = [0] * (other.low - low) + list(other.coeffs)
        return low, a, b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low, a, b = self._aligned(other)
        return LaurentPoly.from_dense(low, kernels.poly_add(a, b))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly.from_dense(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        return LaurentPoly.from_dense(
            self.low + other.low, kernels.poly_mul(list(self.coeffs), list(other.coeffs))
        )

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return LaurentPoly.from_dense(self.low + k, self.coeffs)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient in Z[t, t^-1]; raises ArithmeticError when other does not divide self."""
        if self.is_zero():
            return self
        q = kernels.poly_exact_div(list(self.coeffs), list(other.coeffs))
        return LaurentPoly.from_dense(self.low - other.low, q)

    def __call__(self, t):
        return sum(c * t ** (self.low + k) for k, c in enumerate(self.coeffs))

    def substitute_inverse(self) -> LaurentPoly:
        """p(t^-1)."""
        return LaurentPoly.from_dense(-self.high, list(reversed(self.coeffs))) if self.coeffs else self

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coefficients!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.coefficients.items()):
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                term = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: terms like ``2*t^-1 - 3 + t``."""
        import re

        s = text.replace(" ", "")
        if s == "0":
            return cls()
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        term_re = re.compile(r"([+-])(\d+)?(?:(\*)?t(?:\^(-?\d+))?)?")
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = term_re.match(s, pos)
            if m is None or m.end() == pos + 1:
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at {pos}")
            sign, num, star, exp = m.groups()
            has_t = "t" in m.group(0)
            if star and not num:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            if not has_t and num is None:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            c = int(num) if num else 1
            k = (int(exp) if exp is not None else 1) if has_t else 0
            coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
            pos = m.end()
        return cls(coeffs)


@dataclass(frozen=True)
class LaurentMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("LaurentMatrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, d: int) -> LaurentMatrix:
        one, zero = LaurentPoly.constant(1), LaurentPoly()
        return cls(tuple(tuple(one if r == c else zero for c in range(d)) for r in range(d)))

    def __getitem__(self, rc: tuple[int, int]) -> LaurentPoly:
        return self.rows[rc[0]][rc[1]]

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        d = self.dim
        cols = [[other.rows[k][c] for k in range(d)] for c in range(d)]
        out = []
        for r in range(d):
            row = self.rows[r]
            out.append(
                tuple(
                    sum((row[k] * cols[c][k] for k in range(d) if not row[k].is_zero()), LaurentPoly())
                    for c in range(d)
                )
            )
        return LaurentMatrix(tuple(out))

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        return LaurentMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def det(self) -> LaurentPoly:
        if self.dim == 0:
            return LaurentPoly.constant(1)
        # shift every row to polynomial entries, take the Z[t] determinant, shift back
        shifts = []
        rows = []
        for row in self.rows:
            lows = [e.low for e in row if not e.is_zero()]
            k = min(lows) if lows else 0
            shifts.append(k)
            rows.append([[0] * (e.low - k) + list(e.coeffs) if not e.is_zero() else [] for e in row])
        d = kernels.poly_det(rows)
        return LaurentPoly.from_dense(sum(shifts), d)


def _from_scaled(s: int, rows: list) -> LaurentMatrix:
    return LaurentMatrix(tuple(tuple(LaurentPoly.from_dense(-s, e) for e in row) for row in rows))


def burau_reduced(w: BraidWord) -> LaurentMatrix:
    if w.strands < 2:
        raise ValueError("reduced Burau representation needs at least 2 strands")
    s, rows = kernels.burau_poly_matrix(w.strands, list(w.letters))
    return _from_scaled(s, rows)


def _normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        raise ArithmeticError("Alexander polynomial vanished")
    span = p.high - p.low
    if span % 2:
        raise ArithmeticError(f"Alexander polynomial {p} has odd span; cannot be symmetric")
    q = p.shift(-(p.low + span // 2))
    if q(1) < 0:
        q = -q
    return q


def alexander_from_det(det_minus_identity: LaurentPoly, strands: int) -> LaurentPoly:
    """Divide det(B - I) by 1 + t + ... + t^(n-1) and normalize."""
    cyclotomic = LaurentPoly.from_dense(0, [1] * strands)
    return _normalize_alexander(det_minus_identity.exact_div(cyclotomic))


def alexander(w: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, symmetric with Delta(1) = 1."""
    if closure_components(w) != 1:
        raise NotAKnotError(f"closure of {w} has {closure_components(w)} components")
    if w.strands == 1:
        return LaurentPoly.constant(1)
    s, rows = kernels.burau_poly_matrix(w.strands, list(w.letters))
    d = len(rows)
    # det(t^s B - t^s I) = t^(s d) det(B - I); the unit is irrelevant after normalization
    scaled_id = [0] * s + [1]
    for i in range(d):
        rows[i][i] = kernels.poly_sub(rows[i][i], scaled_id)
    det = LaurentPoly.from_dense(0, kernels.poly_det(rows))
    try:
        return alexander_from_det(det, w.strands)
    except ArithmeticError as exc:  # exactness is a theorem here
        raise AssertionError(f"non-exact Alexander division for {w}: {exc}") from exc


def self_linking(w: BraidWord) -> int:
    return exponent_sum(w) - w.strands


def positive_braid_genus(w: BraidWord) -> int:
    if any(x < 0 for x in w.letters):
        raise ValueError("positive_braid_genus needs a positive braid word")
    if closure_components(w) != 1:
        raise NotAKnotError(f"closure of {w} has {closure_components(w)} components")
    twice = exponent_sum(w) - w.strands + 1
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def torus_knot_alexander(p: int, q: int) -> LaurentPoly:
    """Closed form (t^pq - 1)(t - 1)/((t^p - 1)(t^q - 1)), normalized."""
    num = LaurentPoly({p * q: 1, 0: -1}) * LaurentPoly({1: 1, 0: -1})
    den = LaurentPoly({p: 1, 0: -1}) * LaurentPoly({q: 1, 0: -1})
    return _normalize_alexander(num.exact_div(den))

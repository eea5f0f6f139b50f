"""Minimal fillable surgery coefficients of positive torus knots.

For coprime p > q >= 2 the Euclidean algorithm p_0 = p, p_1 = q,
p_{j-1} = a_j p_j + p_{j+1} ends at p_n = 1, and gives

    p q = a_1 p_1^2 + ... + a_{n-1} p_{n-1}^2 + a_n.

Resolving the singularity of x^p + y^q = 0 takes a_j blowups of multiplicity
p_j for j < n, so T(p, q) bounds an embedded disk with r = p q - a_n, which is
the ceiling of the negative-definite surgery bound m(T(p, q)) = p q - c(p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd

from fillsurg.disk import DiskClass

__all__ = [
    "ContinuedFraction",
    "TorusReport",
    "InvalidTorusParameters",
    "normalize_pq",
    "continued_fraction",
    "euclid_remainders",
    "mu_torus",
    "m_torus",
    "c_torus",
    "reversed_cf_c",
    "blowup_schedule",
    "torus_genus",
]


class InvalidTorusParameters(ValueError):
    pass


@dataclass(frozen=True)
class ContinuedFraction:
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", a)
        if not a or any(x < 1 for x in a):
            raise ValueError(f"continued fraction needs positive coefficients, got {a}")
        if len(a) > 1 and a[-1] < 2:
            raise ValueError("last coefficient must be >= 2")

    @property
    def value(self) -> Fraction:
        return evaluate_cf(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.coefficients) + "]"


def evaluate_cf(coeffs) -> Fraction:
    """a_1 + 1/(a_2 + 1/(... + 1/a_n))."""
    h, k, h0, k0 = 1, 0, 0, 1  # convergent recurrence, integers only
    for a in coeffs:
        h, k, h0, k0 = a * h + h0, a * k + k0, h, k
    return Fraction(h, k)


def normalize_pq(p: int, q: int) -> tuple[int, int]:
    """Order as p > q and check the parameters describe a torus knot."""
    if p < 1 or q < 1:
        raise InvalidTorusParameters(f"torus knot parameters must be positive, got ({p},{q})")
    if gcd(p, q) != 1:
        raise InvalidTorusParameters(f"T({p},{q}) is not a knot: gcd = {gcd(p, q)}")
    if p < q:
        p, q = q, p
    if p == q:  # only (1, 1)
        raise InvalidTorusParameters("T(1,1) is degenerate")
    return p, q


def euclid_remainders(p: int, q: int) -> tuple[list[int], list[int]]:
    """(remainders p_0..p_n, quotients a_1..a_n) of the Euclidean algorithm on p/q."""
    rems = [p, q]
    quots = []
    while rems[-1] != 0:
        a, r = divmod(rems[-2], rems[-1])
        quots.append(a)
        rems.append(r)
    return rems[:-1], quots


@lru_cache(maxsize=4096)
def continued_fraction(p: int, q: int) -> ContinuedFraction:
    if q < 1 or p <= q:
        raise InvalidTorusParameters(f"need p > q >= 1, got ({p},{q})")
    if gcd(p, q) != 1:
        raise InvalidTorusParameters(f"({p},{q}) not coprime")
    _, quots = euclid_remainders(p, q)
    return ContinuedFraction(tuple(quots))


def torus_genus(p: int, q: int) -> int:
    return (p - 1) * (q - 1) // 2


def mu_torus(p: int, q: int) -> int:
    p, q = normalize_pq(p, q)
    if q == 1:
        return 0
    return p * q - continued_fraction(p, q).coefficients[-1]


def c_torus(p: int, q: int) -> Fraction:
    """q / p* for an even-length expansion, p / q* for odd length (inverses mod q, mod p)."""
    p, q = normalize_pq(p, q)
    if q == 1:
        raise InvalidTorusParameters("c(p, 1) is undefined for the unknot")
    n = len(continued_fraction(p, q))
    if n % 2 == 0:
        return Fraction(q, pow(p, -1, q))
    return Fraction(p, pow(q, -1, p))


def m_torus(p: int, q: int) -> Fraction:
    p, q = normalize_pq(p, q)
    if q == 1:
        return Fraction(0)
    return p * q - c_torus(p, q)


def reversed_cf_c(p: int, q: int) -> Fraction:
    """[a_n, a_{n-1}, ..., a_k] with k = 2 for even n and k = 1 for odd n."""
    p, q = normalize_pq(p, q)
    if q == 1:
        raise InvalidTorusParameters("c(p, 1) is undefined for the unknot")
    a = continued_fraction(p, q).coefficients
    stop = 1 if len(a) % 2 == 0 else 0
    return evaluate_cf(a[::-1][: len(a) - stop])


@dataclass(frozen=True)
class TorusReport:
    p: int
    q: int
    cf: ContinuedFraction | None
    remainders: tuple[int, ...]
    mu: int
    m: Fraction
    c: Fraction | None
    genus: int
    blowup_schedule: tuple[tuple[int, int], ...]  # (multiplicity p_j, count a_j), j < n
    terminal_tangency: int  # a_n: order of tangency left after the last blowup

    @property
    def disk_class(self) -> DiskClass:
        return DiskClass(tuple(m for m, count in self.blowup_schedule for _ in range(count)))

    @property
    def surgery_coefficient(self) -> int:
        return sum(count * m * m for m, count in self.blowup_schedule)


def blowup_schedule(p: int, q: int) -> TorusReport:
    p, q = normalize_pq(p, q)
    if q == 1:
        return TorusReport(p, 1, None, (p, 1), 0, Fraction(0), None, 0, (), 0)
    rems, quots = euclid_remainders(p, q)
    n = len(quots)
    schedule = tuple((rems[j], quots[j - 1]) for j in range(1, n))
    report = TorusReport(
        p=p,
        q=q,
        cf=ContinuedFraction(tuple(quots)),
        remainders=tuple(rems),
        mu=p * q - quots[-1],
        m=m_torus(p, q),
        c=c_torus(p, q),
        genus=torus_genus(p, q),
        blowup_schedule=schedule,
        terminal_tangency=quots[-1],
    )
    assert report.surgery_coefficient == report.mu
    assert ceil(report.m) == report.mu
    return report

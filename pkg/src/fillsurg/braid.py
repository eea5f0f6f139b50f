"""Braid words in the Artin presentation of Br_n.

A word is a strand count plus a tuple of signed letters: ``e > 0`` stands for
the generator sigma_e and ``e < 0`` for its inverse.  Text form::

    B4: 1 2 2 -3

Permutations act left to right on strand positions: the letter sigma_i swaps
whatever currently sits in positions i and i+1, after all letters to its left
have been applied.  ``Permutation.images[k-1]`` is the starting position of
the strand that ends in position k, so ``B3: 1 2`` gives the cycle 1->2->3->1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from operator import neg
from typing import Iterable, Sequence

__all__ = [
    "BraidError",
    "BraidParseError",
    "BraidValidationError",
    "BraidWord",
    "Permutation",
    "parse_braid",
    "format_braid",
    "free_reduce",
    "permutation",
    "closure_components",
    "exponent_sum",
    "word_length",
    "inverse_letters",
    "embedded_band",
]


class BraidError(ValueError):
    """Base class for malformed braid input."""


class BraidParseError(BraidError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


class BraidValidationError(BraidError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(map(int, self.letters))
        object.__setattr__(self, "letters", letters)
        if self.strands < 1:
            raise BraidValidationError(f"strand count must be >= 1, got {self.strands}")
        top = self.strands - 1
        if letters and (0 in letters or max(letters) > top or min(letters) < -top):
            pos, letter = next((i, x) for i, x in enumerate(letters) if x == 0 or abs(x) > top)
            raise BraidValidationError(f"letter {letter} at index {pos} is not a generator of Br_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidValidationError("cannot concatenate words in different braid groups")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, inverse_letters(self.letters))

    def conjugate(self, w: Sequence[int]) -> BraidWord:
        """Return ``w * self * w^-1``."""
        return BraidWord(self.strands, tuple(w) + self.letters + inverse_letters(w))

    def stabilize(self) -> BraidWord:
        """Positive Markov stabilization: add a strand and append sigma_n."""
        return BraidWord(self.strands + 1, self.letters + (self.strands,))

    def __str__(self) -> str:
        return format_braid(self)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


_HEADER = re.compile(r"\s*B\s*(-?\d+)\s*:")
_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"-?\d+")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"B<n>: l1 l2 ..."`` into a :class:`BraidWord`."""
    m = _HEADER.match(text)
    if m is None:
        raise BraidParseError("expected header 'B<n>:'", 1)
    strands = int(m.group(1))
    if strands < 1:
        raise BraidParseError(f"strand count must be a positive integer, got {strands}", m.start(1) + 1)
    letters = []
    for tok in _TOKEN.finditer(text, m.end()):
        if not _LETTER.fullmatch(tok.group()):
            raise BraidParseError(f"bad letter {tok.group()!r}", tok.start() + 1)
        value = int(tok.group())
        if value == 0:
            raise BraidParseError("letter 0 is not a generator", tok.start() + 1)
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord) -> str:
    if not w.letters:
        return f"B{w.strands}:"
    return f"B{w.strands}: " + " ".join(str(x) for x in w.letters)


def inverse_letters(letters: Iterable[int]) -> tuple[int, ...]:
    return tuple(map(neg, reversed(tuple(letters))))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def permutation(w: BraidWord) -> Permutation:
    # where[p] = strand (by starting position) currently sitting in position p
    where = list(range(w.strands + 1))
    for x in w.letters:
        i = abs(x)
        where[i], where[i + 1] = where[i + 1], where[i]
    return Permutation(tuple(where[1:]))


def closure_components(w: BraidWord) -> int:
    return len(permutation(w).cycles())


def exponent_sum(w: BraidWord) -> int:
    return len(w.letters) - 2 * sum(map((0).__gt__, w.letters))


def word_length(w: BraidWord) -> int:
    return len(w.letters)


def embedded_band(i: int, j: int, n: int) -> BraidWord:
    """sigma(i, j) = s_i s_{i+1} ... s_{j-1} s_j s_{j-1}^-1 ... s_i^-1 in Br_n."""
    if not 1 <= i <= j <= n - 1:
        raise BraidValidationError(f"embedded band needs 1 <= i <= j <= n-1, got i={i}, j={j}, n={n}")
    up = tuple(range(i, j))
    return BraidWord(n, up + (j,) + inverse_letters(up))

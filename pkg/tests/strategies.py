"""Random braid words and certificates for property tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from fillsurg.braid import BraidWord, closure_components
from fillsurg.certificates import Certificate, Factor


@st.composite
def braid_words(draw, max_strands: int = 8, max_length: int = 40, min_strands: int = 1):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letter = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(n, tuple(draw(st.lists(letter, max_size=max_length))))


def knot_words(max_strands: int = 5, max_length: int = 14):
    return braid_words(max_strands=max_strands, max_length=max_length, min_strands=2).filter(
        lambda w: closure_components(w) == 1
    )


def _uniform(rng: random.Random, lo: int, hi: int) -> int:
    # rng.randint is the sampler's bottleneck; scaling random() is uniform enough here
    return lo + int(rng.random() * (hi - lo + 1))


def _conjugator(rng: random.Random, n: int, max_len: int = 3) -> tuple[int, ...]:
    gens = [i for i in range(1 - n, n) if i]
    return tuple(rng.choices(gens, k=_uniform(rng, 0, max_len)))


def _is_knot(n: int, letters) -> bool:
    perm = list(range(n))
    for x in letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    p, steps = perm[0], 1
    while p != 0:
        p, steps = perm[p], steps + 1
    return steps == n


def random_certificate(rng: random.Random, max_strands: int = 6, max_factors: int = 8, max_m: int = 4) -> Certificate:
    """A valid certificate: n - 1 bands, some full twists, knot closure (rejection sampled)."""
    while True:
        n = _uniform(rng, 2, max_strands)
        extra = _uniform(rng, 0, max_factors - (n - 1))
        factors = [Factor("band", _conjugator(rng, n), _uniform(rng, 1, n - 1)) for _ in range(n - 1)]
        for _ in range(extra):
            m = _uniform(rng, 2, min(max_m, n))
            s = _uniform(rng, 1, n - m + 1)
            factors.append(Factor("twist", _conjugator(rng, n), s, m))
        rng.shuffle(factors)
        if _is_knot(n, [x for f in factors for x in f.letters()]):
            return Certificate(n, tuple(factors))


@st.composite
def certificates(draw, max_strands: int = 6, max_factors: int = 8, max_m: int = 4):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_certificate(random.Random(seed), max_strands, max_factors, max_m)

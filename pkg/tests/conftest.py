"""Shared hypothesis strategies for the exact-arithmetic test suite."""

from __future__ import annotations

from hypothesis import settings, strategies as st

from daha import GeneratorLetter, GeneratorWord, LaurentPoly, Permutation, ScalarPoly, SkeinElement

settings.register_profile("daha", deadline=None, max_examples=60)
settings.load_profile("daha")

small_exponents = st.integers(min_value=-2, max_value=2)
small_coeffs = st.integers(min_value=-3, max_value=3)


@st.composite
def scalar_polys(draw, max_terms: int = 4):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = [
        ((draw(small_exponents), draw(small_exponents), draw(small_exponents)), draw(small_coeffs))
        for _ in range(n)
    ]
    return ScalarPoly(terms)


@st.composite
def laurent_polys(draw, rank: int | None = None, max_terms: int = 4, max_exp: int = 3):
    if rank is None:
        rank = draw(st.integers(min_value=1, max_value=4))
    exps = st.integers(min_value=-max_exp, max_value=max_exp)
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = []
    for _ in range(n):
        key = tuple(draw(exps) for _ in range(rank))
        coeff = draw(scalar_polys(max_terms=2))
        terms.append((key, coeff))
    return LaurentPoly(rank, terms)


@st.composite
def permutations(draw, kappa: int | None = None):
    if kappa is None:
        kappa = draw(st.integers(min_value=1, max_value=4))
    images = draw(st.permutations(tuple(range(1, kappa + 1))))
    return Permutation(tuple(images))


@st.composite
def skein_elements(draw, kappa: int | None = None, max_terms: int = 3, max_exp: int = 2):
    if kappa is None:
        kappa = draw(st.integers(min_value=1, max_value=3))
    exps = st.integers(min_value=-max_exp, max_value=max_exp)
    n = draw(st.integers(min_value=0, max_value=max_terms))
    terms = []
    for _ in range(n):
        key = (tuple(draw(exps) for _ in range(kappa)), draw(permutations(kappa=kappa)))
        coeff = draw(scalar_polys(max_terms=2))
        terms.append((key, coeff))
    return SkeinElement(kappa, terms)


@st.composite
def generator_letters(draw, kappa: int):
    kinds = ["x", "y"] if kappa == 1 else ["s", "x", "y"]
    kind = draw(st.sampled_from(kinds))
    index = draw(st.integers(min_value=1, max_value=kappa - 1 if kind == "s" else kappa))
    sign = draw(st.sampled_from([1, -1]))
    return GeneratorLetter(kind, index, sign)


@st.composite
def generator_words(draw, kappa: int | None = None, max_len: int = 6):
    if kappa is None:
        kappa = draw(st.integers(min_value=1, max_value=4))
    n = draw(st.integers(min_value=0, max_value=max_len))
    return GeneratorWord(kappa, [draw(generator_letters(kappa)) for _ in range(n)])

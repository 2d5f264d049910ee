"""The standard polynomial representation on Laurent polynomials.

The generators act on ``Z[s^±1, c^±1][X_1^±1, ..., X_k^±1]`` by

* ``x_i``: multiplication by X_i,
* ``s_i``: the divided-difference (Demazure-Lusztig type) operator

      f  |->  s * swap_i(f) + (s - s^-1) * (swap_i(f) - f) / (X_i X_{i+1}^-1 - 1),

  where the division is exact (:func:`~daha.laurent.exact_divide`),
* ``y_1``: the twisted rotation :func:`~daha.laurent.rotate_variables`
  followed by s_{k-1}^-1, ..., s_1^-1 (rotation acts first),
* ``s_i^-1 = s_i - (s - s^-1)`` from the quadratic relation, and ``y_1^-1``
  is the exact inverse chain s_1, ..., s_{k-1}, then the inverse rotation.

Words act letter by letter, rightmost letter first, so that word
concatenation matches operator composition for a left action.  Letters
``x_i``/``y_i`` with i > 1 act through their expansions into the generating
set.  All operations are pure and inputs are never mutated.
"""

from __future__ import annotations

from .errors import RankMismatchError
from .laurent import (
    LaurentPoly,
    exact_divide,
    rotate_variables,
    rotate_variables_inverse,
    swap_variables,
)
from .scalars import hbar, s_power
from .words import GeneratorWord, expand_y


def act_x(i: int, f: LaurentPoly, exp: int = 1) -> LaurentPoly:
    """Multiply by X_i^exp (exp = -1 gives the inverse letter)."""
    return f * LaurentPoly.variable(f.rank, i, exp)


def act_sigma(i: int, f: LaurentPoly) -> LaurentPoly:
    """Apply the braid letter s_i."""
    swapped = swap_variables(f, i)
    return swapped.scale(s_power(1)) + exact_divide(swapped - f, i).scale(hbar())


def act_sigma_inv(i: int, f: LaurentPoly) -> LaurentPoly:
    """Apply s_i^-1 = s_i - (s - s^-1)."""
    return act_sigma(i, f) - f.scale(hbar())


def act_y1(f: LaurentPoly) -> LaurentPoly:
    """Apply y_1: rotation first, then s_{k-1}^-1 down to s_1^-1.

    The composition order is forced: applying the rotation last breaks the
    torus relation x1^-1 y1 x1 y1^-1 = c^2 s1...s1 in the representation
    (the test suite checks both facts).
    """
    g = rotate_variables(f)
    for i in range(f.rank - 1, 0, -1):
        g = act_sigma_inv(i, g)
    return g


def act_y1_inv(f: LaurentPoly) -> LaurentPoly:
    """Apply the inverse of y_1: s_1 up to s_{k-1}, then the inverse rotation."""
    g = f
    for i in range(1, f.rank):
        g = act_sigma(i, g)
    return rotate_variables_inverse(g)


def act_word(word: GeneratorWord, f: LaurentPoly) -> LaurentPoly:
    """Act by a generator word, rightmost letter first."""
    if word.kappa != f.rank:
        raise RankMismatchError(f"word kappa {word.kappa} does not match rank {f.rank}")
    for letter in reversed(word.letters):
        kind, i, sign = letter.kind, letter.index, letter.sign
        if kind == "x":
            f = act_x(i, f, sign)
        elif kind == "s":
            f = act_sigma(i, f) if sign > 0 else act_sigma_inv(i, f)
        elif i == 1:
            f = act_y1(f) if sign > 0 else act_y1_inv(f)
        else:
            expansion = expand_y(i, word.kappa)
            f = act_word(expansion if sign > 0 else expansion.inverse(), f)
    return f

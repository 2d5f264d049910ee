"""The braid-skein module and the enhanced polynomial representation.

Elements here model braids in the punctured torus whose strands start at the
marked points and end on a fixed family of parallel curves.  After resolving
all crossings, such a braid is a combination of basis pairs

    (a_1^{n_1} ... a_kappa^{n_kappa}, sigma)

where the exponent n_i counts how often strand i winds around the torus and
the permutation sigma in S_kappa records which curve each strand ends on.
Coefficients live in Z[s^±1, c^±1, d^±1]: ``s`` from crossing resolutions
(hbar = s - s^-1), ``c`` from sliding across the puncture, and ``d`` from
ends sliding past each other on the target curves.

Generator actions (all pure functions; inputs never mutated):

* ``x_i`` multiplies by a_i, i.e. increments the i-th exponent.

* ``s_i`` on a bare permutation pair (1, sigma) is the two-case rule of
  :func:`act_sigma_base`:

      d^-1 (1, t_i sigma)                       if sigma(i) < sigma(i+1)
      d (1, t_i sigma) + hbar (1, sigma)        if sigma(i) > sigma(i+1)

  where t_i sigma is sigma precomposed with the position swap (i, i+1).  On
  a general pair the braid letter is first pushed through the monomial with
  :func:`push_sigma_past_monomial`, using the commutation rules

      s_i x_i     = x_{i+1} s_i - hbar x_{i+1}
      s_i x_{i+1} = x_i s_i     + hbar x_{i+1}
      s_i x_j     = x_j s_i                       (j != i, i+1)

  and their inverse-letter consequences

      s_i x_i^-1     = x_{i+1}^-1 s_i + hbar x_i^-1
      s_i x_{i+1}^-1 = x_i^-1 s_i     - hbar x_i^-1.

* ``y_1`` sends (a^n, sigma) to c^(2 n_1) times the basis pair with
  cyclically shifted exponents (a_kappa picks up n_1) and permutation
  t_1, ..., t_{kappa-1} applied in that order, then applies the braid chain
  s_{kappa-1}^-1 first down to s_1^-1 last.

* ``s_i^-1 = s_i - hbar`` and ``y_1^-1`` are exact operator inverses,
  validated by round-trip tests rather than separate closed forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from ._tokens import TokenStream, parse_signed_int
from .errors import ParseError, RankMismatchError
from .laurent import LaurentPoly, _format_laurent_term, _monomial_string
from .scalars import ScalarPoly, c_power, d_power, hbar, parse_scalar_sum
from .words import GeneratorWord, expand_y

ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """An element of S_kappa in one-line image notation, 1-based."""

    images: tuple[int, ...]

    def __post_init__(self):
        kappa = len(self.images)
        if kappa < 1 or sorted(self.images) != list(range(1, kappa + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{kappa}")

    @classmethod
    def identity(cls, kappa: int) -> "Permutation":
        return cls(tuple(range(1, kappa + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, start=1))

    def precompose_swap(self, i: int) -> "Permutation":
        """Compose with the transposition of positions i, i+1 acting first.

        The result pi satisfies pi(i) = self(i+1), pi(i+1) = self(i) and
        agrees with self elsewhere; in particular the comparison of values
        at positions i, i+1 flips, which is what the two-case braid rule
        needs.  Applying it twice returns the original permutation.
        """
        if not 1 <= i <= self.size - 1:
            raise IndexError(f"swap index {i} out of range for size {self.size}")
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for j, v in enumerate(self.images, start=1):
            images[v - 1] = j
        return Permutation(tuple(images))

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.images) + "]"


def all_permutations(kappa: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, kappa + 1)):
        yield Permutation(images)


BasisKey = tuple[ExponentVector, Permutation]


class SkeinElement:
    """A finite combination of basis pairs (a-monomial, permutation)."""

    __slots__ = ("_kappa", "_terms")

    def __init__(
        self,
        kappa: int,
        terms: Mapping[BasisKey, ScalarPoly] | Iterable[tuple[BasisKey, ScalarPoly]] = (),
    ):
        if kappa < 1:
            raise ValueError(f"kappa must be >= 1, got {kappa}")
        self._kappa = kappa
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[BasisKey, ScalarPoly] = {}
        for (exps, perm), coeff in items:
            key = (tuple(int(e) for e in exps), perm)
            if len(key[0]) != kappa or perm.size != kappa:
                raise ValueError(f"basis pair {key} does not match kappa={kappa}")
            if isinstance(coeff, int):
                coeff = ScalarPoly.integer(coeff)
            total = data.get(key)
            total = coeff if total is None else total + coeff
            if total.is_zero():
                data.pop(key, None)
            else:
                data[key] = total
        self._terms = data

    @classmethod
    def _raw(cls, kappa: int, data: dict[BasisKey, ScalarPoly]) -> "SkeinElement":
        obj = object.__new__(cls)
        obj._kappa = kappa
        obj._terms = data
        return obj

    @classmethod
    def zero(cls, kappa: int) -> "SkeinElement":
        return cls._raw(kappa, {})

    @classmethod
    def basis(
        cls,
        kappa: int,
        exps: Iterable[int],
        perm: Permutation | None = None,
        coeff: ScalarPoly | int = 1,
    ) -> "SkeinElement":
        if perm is None:
            perm = Permutation.identity(kappa)
        return cls(kappa, [((tuple(exps), perm), coeff)])

    @property
    def kappa(self) -> int:
        return self._kappa

    @property
    def terms(self) -> Mapping[BasisKey, ScalarPoly]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if self._kappa != other._kappa:
            raise RankMismatchError(f"kappa mismatch: {self._kappa} vs {other._kappa}")
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            total = data.get(key)
            total = coeff if total is None else total + coeff
            if total.is_zero():
                del data[key]
            else:
                data[key] = total
        return SkeinElement._raw(self._kappa, data)

    def __neg__(self) -> "SkeinElement":
        return SkeinElement._raw(self._kappa, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: ScalarPoly | int) -> "SkeinElement":
        if isinstance(coeff, int):
            coeff = ScalarPoly.integer(coeff)
        if coeff.is_zero():
            return SkeinElement._raw(self._kappa, {})
        if coeff.is_one():
            return self
        data: dict[BasisKey, ScalarPoly] = {}
        for key, old in self._terms.items():
            new = old * coeff
            if not new.is_zero():
                data[key] = new
        return SkeinElement._raw(self._kappa, data)

    def shift_exponents(self, offset: Sequence[int], coeff: ScalarPoly | int = 1) -> "SkeinElement":
        """Multiply by the a-monomial with the given exponent offset."""
        if isinstance(coeff, int):
            coeff = ScalarPoly.integer(coeff)
        data: dict[BasisKey, ScalarPoly] = {}
        for (exps, perm), old in self._terms.items():
            new = old * coeff
            if not new.is_zero():
                data[(tuple(e + o for e, o in zip(exps, offset)), perm)] = new
        return SkeinElement._raw(self._kappa, data)

    def multiply_by_a_poly(self, poly: LaurentPoly) -> "SkeinElement":
        """Multiply by a Laurent polynomial in the a-variables."""
        if poly.rank != self._kappa:
            raise RankMismatchError(f"rank {poly.rank} does not match kappa {self._kappa}")
        result = SkeinElement.zero(self._kappa)
        for exps, coeff in poly.terms.items():
            result = result + self.shift_exponents(exps, coeff)
        return result

    def substitute_d_eq_s(self) -> "SkeinElement":
        """Set d = s in every coefficient (cancellations are pruned)."""
        data: dict[BasisKey, ScalarPoly] = {}
        for key, coeff in self._terms.items():
            new = coeff.substitute_d_eq_s()
            if not new.is_zero():
                data[key] = new
        return SkeinElement._raw(self._kappa, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._kappa == other._kappa and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._kappa, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps, perm in sorted(self._terms, key=lambda k: (k[0], k[1].images), reverse=True):
            coeff = self._terms[(exps, perm)]
            sign, body = _format_skein_term(coeff, exps, perm)
            if not pieces:
                pieces.append(f"-{body}" if sign < 0 else body)
            else:
                pieces.append(f"{'-' if sign < 0 else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"<SkeinElement kappa={self._kappa} {self}>"


def _format_skein_term(coeff: ScalarPoly, exps: ExponentVector, perm: Permutation) -> tuple[int, str]:
    mono = _monomial_string(exps, "a") or "1"
    basis = f"({mono},{perm})"
    if len(coeff.terms) == 1:
        sign, scalar_body = _format_laurent_term(coeff, (), True)
        if scalar_body == "1":
            return sign, basis
        return sign, f"{scalar_body}*{basis}"
    return 1, f"({coeff})*{basis}"


# -- generator actions ---------------------------------------------------------


def act_x(i: int, v: SkeinElement, exp: int = 1) -> SkeinElement:
    """Multiply by a_i^exp: shift the i-th exponent of every basis term."""
    if not 1 <= i <= v.kappa:
        raise IndexError(f"variable index {i} out of range for kappa {v.kappa}")
    offset = [0] * v.kappa
    offset[i - 1] = exp
    return v.shift_exponents(offset)


def act_sigma_base(i: int, perm: Permutation) -> SkeinElement:
    """The braid letter s_i on the exponent-free pair (1, perm)."""
    kappa = perm.size
    if not 1 <= i <= kappa - 1:
        raise IndexError(f"braid index {i} out of range for kappa {kappa}")
    zero_exps = (0,) * kappa
    swapped = perm.precompose_swap(i)
    if perm(i) < perm(i + 1):
        return SkeinElement._raw(kappa, {(zero_exps, swapped): d_power(-1)})
    return SkeinElement(
        kappa,
        [((zero_exps, swapped), d_power(1)), ((zero_exps, perm), hbar())],
    )


_POS, _NEG = 1, -1


def _letter_rule(i: int, j: int, sign: int, kappa: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The pair (A, B) with s_i x_j^sign = A s_i + B, as a-polynomials."""
    var = LaurentPoly.variable
    h = hbar()
    if j == i and sign == _POS:
        return var(kappa, i + 1), var(kappa, i + 1).scale(-h)
    if j == i + 1 and sign == _POS:
        return var(kappa, i), var(kappa, i + 1).scale(h)
    if j == i and sign == _NEG:
        return var(kappa, i + 1, -1), var(kappa, i, -1).scale(h)
    if j == i + 1 and sign == _NEG:
        return var(kappa, i, -1), var(kappa, i, -1).scale(-h)
    return var(kappa, j, sign), LaurentPoly.zero(kappa)


def monomial_letters(
    exps: Sequence[int], variable_order: Sequence[int] | None = None
) -> list[tuple[int, int]]:
    """Factor an a-monomial into single letters (variable index, ±1).

    The default order is a_1^{n_1} ... a_kappa^{n_kappa} left to right; a
    different variable order yields the same algebra element, which the
    oracle tests exploit.
    """
    kappa = len(exps)
    order = range(1, kappa + 1) if variable_order is None else variable_order
    if sorted(order) != list(range(1, kappa + 1)):
        raise ValueError(f"variable_order must be a permutation of 1..{kappa}, got {variable_order}")
    letters: list[tuple[int, int]] = []
    for j in order:
        e = exps[j - 1]
        sign = _POS if e > 0 else _NEG
        letters.extend((j, sign) for _ in range(abs(e)))
    return letters


def push_sigma_past_monomial(
    i: int,
    exps: Sequence[int],
    variable_order: Sequence[int] | None = None,
) -> tuple[LaurentPoly, LaurentPoly]:
    """Rewrite s_i * a^exps as f * s_i + g with f, g polynomials in the a's.

    The braid letter moves right through the letter factorization of the
    monomial one letter at a time, applying the commutation rules listed in
    the module docstring.  The result does not depend on the factorization
    order; coefficients involve only powers of s.
    """
    kappa = len(exps)
    if not 1 <= i <= kappa - 1:
        raise IndexError(f"braid index {i} out of range for kappa {kappa}")
    f = LaurentPoly.one(kappa)
    g = LaurentPoly.zero(kappa)
    for j, sign in monomial_letters(exps, variable_order):
        a_part, b_part = _letter_rule(i, j, sign, kappa)
        letter_monomial = LaurentPoly.variable(kappa, j, sign)
        g = f * b_part + g * letter_monomial
        f = f * a_part
    return f, g


def act_sigma(i: int, v: SkeinElement) -> SkeinElement:
    """Apply the braid letter s_i to a general element."""
    if not 1 <= i <= v.kappa - 1:
        raise IndexError(f"braid index {i} out of range for kappa {v.kappa}")
    result = SkeinElement.zero(v.kappa)
    for (exps, perm), coeff in v.terms.items():
        f, g = push_sigma_past_monomial(i, exps)
        base = act_sigma_base(i, perm)
        moved = base.multiply_by_a_poly(f)
        if not g.is_zero():
            moved = moved + SkeinElement.basis(v.kappa, (0,) * v.kappa, perm).multiply_by_a_poly(g)
        result = result + moved.scale(coeff)
    return result


def act_sigma_inv(i: int, v: SkeinElement) -> SkeinElement:
    """Apply s_i^-1 = s_i - hbar."""
    return act_sigma(i, v) - v.scale(hbar())


def _rotated_perm(perm: Permutation) -> Permutation:
    for i in range(1, perm.size):
        perm = perm.precompose_swap(i)
    return perm


def _rotated_perm_inverse(perm: Permutation) -> Permutation:
    for i in range(perm.size - 1, 0, -1):
        perm = perm.precompose_swap(i)
    return perm


def act_y1(v: SkeinElement) -> SkeinElement:
    """Apply y_1.

    Per basis term (a^n, sigma): scale by c^(2 n_1), shift the exponents
    cyclically so that a_kappa carries n_1, replace sigma by its rotation
    (swaps at positions 1, 2, ..., kappa-1 applied in that order), then act
    by the braid chain s_{kappa-1}^-1 first, s_1^-1 last.
    """
    kappa = v.kappa
    data: dict[BasisKey, ScalarPoly] = {}
    for (exps, perm), coeff in v.terms.items():
        shifted = exps[1:] + exps[:1]
        new_coeff = coeff * c_power(2 * exps[0])
        key = (shifted, _rotated_perm(perm))
        prev = data.get(key)
        new_coeff = new_coeff if prev is None else prev + new_coeff
        if new_coeff.is_zero():
            data.pop(key, None)
        else:
            data[key] = new_coeff
    result = SkeinElement._raw(kappa, data)
    for i in range(kappa - 1, 0, -1):
        result = act_sigma_inv(i, result)
    return result


def act_y1_inv(v: SkeinElement) -> SkeinElement:
    """Apply the exact inverse of y_1 (braid chain s_1 first, then the
    inverse shift); validated by round-trip tests."""
    kappa = v.kappa
    for i in range(1, kappa):
        v = act_sigma(i, v)
    data: dict[BasisKey, ScalarPoly] = {}
    for (exps, perm), coeff in v.terms.items():
        shifted = exps[-1:] + exps[:-1]
        new_coeff = coeff * c_power(-2 * exps[-1])
        key = (shifted, _rotated_perm_inverse(perm))
        prev = data.get(key)
        new_coeff = new_coeff if prev is None else prev + new_coeff
        if new_coeff.is_zero():
            data.pop(key, None)
        else:
            data[key] = new_coeff
    return SkeinElement._raw(kappa, data)


def act_word(word: GeneratorWord, v: SkeinElement) -> SkeinElement:
    """Act by a generator word, rightmost letter first."""
    if word.kappa != v.kappa:
        raise RankMismatchError(f"word kappa {word.kappa} does not match kappa {v.kappa}")
    for letter in reversed(word.letters):
        kind, i, sign = letter.kind, letter.index, letter.sign
        if kind == "x":
            v = act_x(i, v, sign)
        elif kind == "s":
            v = act_sigma(i, v) if sign > 0 else act_sigma_inv(i, v)
        elif i == 1:
            v = act_y1(v) if sign > 0 else act_y1_inv(v)
        else:
            expansion = expand_y(i, word.kappa)
            v = act_word(expansion if sign > 0 else expansion.inverse(), v)
    return v


# -- parsing -----------------------------------------------------------------


def parse_skein(text: str, kappa: int) -> SkeinElement:
    """Parse e.g. ``c^4*(a1^-1*a2^2,[1 2])`` or ``(a1, [2 1]) - d*(1,[1 2])``.

    Each term is a product of scalar factors and exactly one basis pair; the
    permutation is given in one-line image notation.  ``0`` is the zero
    element.
    """
    ts = TokenStream(text)
    element = SkeinElement.zero(kappa)
    sign = -1 if ts.accept("-") else 1
    element = element + _parse_skein_term(ts, kappa, sign)
    while True:
        if ts.accept("+"):
            element = element + _parse_skein_term(ts, kappa, 1)
        elif ts.accept("-"):
            element = element + _parse_skein_term(ts, kappa, -1)
        elif ts.at_end():
            return element
        else:
            ts.fail(f"unexpected {ts.peek().text!r} in skein element")


def _parse_skein_term(ts: TokenStream, kappa: int, sign: int) -> SkeinElement:
    coeff = ScalarPoly.integer(sign)
    basis: tuple[ExponentVector, Permutation] | None = None
    explicit_zero = False
    while True:
        tok = ts.peek()
        if tok.kind == "int":
            ts.advance()
            value = int(tok.text)
            if value == 0:
                explicit_zero = True
            coeff = coeff * ScalarPoly.integer(value)
        elif tok.kind == "name" and tok.letter in ("s", "c", "d") and tok.index is None:
            ts.advance()
            exp = parse_signed_int(ts, "exponent") if ts.accept("^") else 1
            triple = [0, 0, 0]
            triple[("s", "c", "d").index(tok.letter)] = exp
            coeff = coeff * ScalarPoly.monomial(*triple)
        elif tok.kind == "(":
            mark = ts.save()
            try:
                pair = _parse_basis_pair(ts, kappa)
            except ParseError:
                ts.restore(mark)
                ts.advance()
                coeff = coeff * parse_scalar_sum(ts)
                ts.expect(")", "')'")
            else:
                if basis is not None:
                    ts.fail("a term may contain only one basis pair")
                basis = pair
        else:
            raise ParseError(
                f"expected a term factor, found {tok.text or 'end of input'!r}", tok.pos
            )
        if not ts.accept("*"):
            break
    if basis is None:
        if coeff.is_zero() and explicit_zero:
            return SkeinElement.zero(kappa)
        raise ParseError("term is missing its (monomial, permutation) basis pair", ts.peek().pos)
    return SkeinElement(kappa, [(basis, coeff)])


def _parse_basis_pair(ts: TokenStream, kappa: int) -> tuple[ExponentVector, Permutation]:
    ts.expect("(", "'('")
    exps = [0] * kappa
    tok = ts.peek()
    if tok.kind == "int" and tok.text == "1":
        ts.advance()
    else:
        while True:
            tok = ts.peek()
            if tok.kind != "name" or tok.letter != "a" or tok.index is None:
                ts.fail(f"expected an a-variable, found {tok.text or 'end of input'!r}")
            if not 1 <= tok.index <= kappa:
                ts.fail(f"variable index {tok.index} out of range for kappa {kappa}")
            ts.advance()
            exp = parse_signed_int(ts, "exponent") if ts.accept("^") else 1
            exps[tok.index - 1] += exp
            if not ts.accept("*"):
                break
    ts.expect(",", "','")
    ts.expect("[", "'['")
    images = []
    while not ts.accept("]"):
        images.append(int(ts.expect("int", "permutation image").text))
        ts.accept(",")
    if len(images) != kappa or sorted(images) != list(range(1, kappa + 1)):
        ts.fail(f"{images} is not a permutation of 1..{kappa}")
    ts.expect(")", "')'")
    return tuple(exps), Permutation(tuple(images))

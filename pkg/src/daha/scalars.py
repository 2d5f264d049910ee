"""Exact arithmetic in the coefficient ring Z[s^±1, c^±1, d^±1].

Every coefficient appearing in this package lives in the commutative ring of
integer Laurent polynomials in three variables:

* ``s`` -- the crossing-resolution parameter; the skein parameter is
  ``hbar = s - s^-1`` and is always kept expanded in ``s``,
* ``c`` -- the marked-point (puncture) winding parameter,
* ``d`` -- the end-slide parameter of the braid-skein module.

A :class:`ScalarPoly` is a sparse map from exponent triples ``(e_s, e_c,
e_d)`` to nonzero integer coefficients.  Python integers are arbitrary
precision, so no overflow handling is needed.  Values are immutable after
construction and all operations are pure; the canonical form (no zero terms,
unique keys) is maintained by every constructor and operation, so ``==`` is
exact ring equality.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from ._tokens import TokenStream, parse_signed_int
from .errors import ParseError

ExponentTriple = tuple[int, int, int]

_VAR_NAMES = ("s", "c", "d")


class ScalarPoly:
    """An element of Z[s^±1, c^±1, d^±1] in canonical sparse form."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[ExponentTriple, int] | Iterable[tuple[ExponentTriple, int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[ExponentTriple, int] = {}
        for exps, coeff in items:
            key = (int(exps[0]), int(exps[1]), int(exps[2]))
            if len(exps) != 3:
                raise ValueError(f"exponent triple expected, got {exps!r}")
            total = data.get(key, 0) + int(coeff)
            if total:
                data[key] = total
            else:
                data.pop(key, None)
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[ExponentTriple, int]) -> "ScalarPoly":
        """Wrap a dict already known to be canonical (internal fast path)."""
        obj = object.__new__(cls)
        obj._terms = data
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "ScalarPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "ScalarPoly":
        return _ONE

    @classmethod
    def integer(cls, n: int) -> "ScalarPoly":
        return cls._raw({(0, 0, 0): n}) if n else _ZERO

    @classmethod
    def monomial(cls, e_s: int = 0, e_c: int = 0, e_d: int = 0, coeff: int = 1) -> "ScalarPoly":
        return cls._raw({(e_s, e_c, e_d): coeff}) if coeff else _ZERO

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[ExponentTriple, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): 1}

    def has_d(self) -> bool:
        """Whether any term carries a nonzero d-exponent."""
        return any(key[2] for key in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ScalarPoly") -> "ScalarPoly":
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            total = data.get(key, 0) + coeff
            if total:
                data[key] = total
            else:
                del data[key]
        return ScalarPoly._raw(data)

    def __neg__(self) -> "ScalarPoly":
        return ScalarPoly._raw({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "ScalarPoly") -> "ScalarPoly":
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "ScalarPoly | int") -> "ScalarPoly":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return ScalarPoly._raw({key: coeff * other for key, coeff in self._terms.items()})
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        data: dict[ExponentTriple, int] = {}
        for (a_s, a_c, a_d), a_coeff in self._terms.items():
            for (b_s, b_c, b_d), b_coeff in other._terms.items():
                key = (a_s + b_s, a_c + b_c, a_d + b_d)
                total = data.get(key, 0) + a_coeff * b_coeff
                if total:
                    data[key] = total
                else:
                    del data[key]
        return ScalarPoly._raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ScalarPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomial units; "
                             "build them with ScalarPoly.monomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution and evaluation ----------------------------------------

    def substitute_d_eq_s(self) -> "ScalarPoly":
        """Set d = s: fold every d-exponent into the s-exponent.

        This is a ring homomorphism; colliding terms are merged and zero
        results pruned, e.g. d - s maps to 0.
        """
        if not any(key[2] for key in self._terms):
            return self
        data: dict[ExponentTriple, int] = {}
        for (e_s, e_c, e_d), coeff in self._terms.items():
            key = (e_s + e_d, e_c, 0)
            total = data.get(key, 0) + coeff
            if total:
                data[key] = total
            else:
                del data[key]
        return ScalarPoly._raw(data)

    def evaluate(self, s: Fraction | int = 1, c: Fraction | int = 1, d: Fraction | int = 1) -> Fraction:
        """Evaluate at nonzero rational points (test helper)."""
        total = Fraction(0)
        for (e_s, e_c, e_d), coeff in self._terms.items():
            total += coeff * Fraction(s) ** e_s * Fraction(c) ** e_c * Fraction(d) ** e_d
        return total

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for key in sorted(self._terms, reverse=True):
            sign, body = _format_term(self._terms[key], key)
            if not pieces:
                pieces.append(f"-{body}" if sign < 0 else body)
            else:
                pieces.append(f"{'-' if sign < 0 else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"<ScalarPoly {self}>"


_ZERO = ScalarPoly._raw({})
_ONE = ScalarPoly._raw({(0, 0, 0): 1})
_HBAR = ScalarPoly._raw({(1, 0, 0): 1, (-1, 0, 0): -1})


def s_power(n: int) -> ScalarPoly:
    return ScalarPoly.monomial(e_s=n)


def c_power(n: int) -> ScalarPoly:
    return ScalarPoly.monomial(e_c=n)


def d_power(n: int) -> ScalarPoly:
    return ScalarPoly.monomial(e_d=n)


def hbar() -> ScalarPoly:
    """The skein parameter s - s^-1."""
    return _HBAR


def _format_term(coeff: int, exps: ExponentTriple) -> tuple[int, str]:
    """Return (sign, unsigned rendering) of one term, e.g. (-1, "2*s^2*c")."""
    parts = []
    for name, e in zip(_VAR_NAMES, exps):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    magnitude = abs(coeff)
    if not parts:
        body = str(magnitude)
    elif magnitude == 1:
        body = "*".join(parts)
    else:
        body = str(magnitude) + "*" + "*".join(parts)
    return (1 if coeff > 0 else -1, body)


def parse_scalar(text: str) -> ScalarPoly:
    """Parse the textual form, e.g. ``s^2 - 2 + s^-2`` or ``-3*c^2*d``.

    The printer and this parser round-trip exactly.
    """
    ts = TokenStream(text)
    poly = parse_scalar_sum(ts)
    if not ts.at_end():
        ts.fail(f"unexpected {ts.peek().text!r} after scalar")
    return poly


def parse_scalar_sum(ts: TokenStream) -> ScalarPoly:
    """Parse a sum of scalar terms from the stream (used standalone and as a
    sub-parser inside parenthesized coefficients)."""
    sign = -1 if ts.accept("-") else 1
    poly = _parse_term(ts, sign)
    while True:
        if ts.accept("+"):
            poly = poly + _parse_term(ts, 1)
        elif ts.accept("-"):
            poly = poly + _parse_term(ts, -1)
        else:
            return poly


def _parse_term(ts: TokenStream, sign: int) -> ScalarPoly:
    poly = _parse_factor(ts) * sign
    while ts.accept("*"):
        poly = poly * _parse_factor(ts)
    return poly


def _parse_factor(ts: TokenStream) -> ScalarPoly:
    tok = ts.peek()
    if tok.kind == "int":
        ts.advance()
        return ScalarPoly.integer(int(tok.text))
    if tok.kind == "name":
        if tok.letter not in _VAR_NAMES or tok.index is not None:
            ts.fail(f"expected one of s, c, d, found {tok.text!r}")
        ts.advance()
        exp = parse_signed_int(ts, "exponent") if ts.accept("^") else 1
        triple = [0, 0, 0]
        triple[_VAR_NAMES.index(tok.letter)] = exp
        return ScalarPoly.monomial(*triple)
    raise ParseError(f"expected a scalar factor, found {tok.text or 'end of input'!r}", tok.pos)

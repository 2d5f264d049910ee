"""Words in the algebra generators, and the defining relation table.

The algebra on kappa strands is generated by the braid letters ``s1, ...,
s{kappa-1}`` (written sigma_i in the literature) together with the torus
loops ``x1`` and ``y1``; the remaining loops expand as

    x_i = s_{i-1} ... s_1 x_1 s_1 ... s_{i-1}     (same for y_i)

Words here are opaque letter sequences: no normal form is computed, because
equality of algebra elements is only ever tested through the two module
actions.  Each letter carries a kind ('s', 'x' or 'y'), a 1-based index, and
a sign (+1 or -1 for the inverse letter).

:func:`relation_table` returns the nine defining relations.  Most are plain
word equalities; the quadratic relation (number 8) and the torus relation
(number 9) need scalar multipliers, so each relation side is a formal linear
combination: a tuple of (ScalarPoly coefficient, word) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._tokens import TokenStream, parse_signed_int
from .scalars import ScalarPoly, c_power, hbar

_KINDS = ("s", "x", "y")


@dataclass(frozen=True)
class GeneratorLetter:
    kind: str   # 's' (braid swap), 'x' or 'y' (torus loops)
    index: int  # 1-based
    sign: int   # +1 or -1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")

    def inverse(self) -> "GeneratorLetter":
        return GeneratorLetter(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}" + ("^-1" if self.sign < 0 else "")


def _max_index(kind: str, kappa: int) -> int:
    return kappa - 1 if kind == "s" else kappa


class GeneratorWord:
    """A finite sequence of letters; the empty sequence is the identity."""

    __slots__ = ("_kappa", "_letters")

    def __init__(self, kappa: int, letters: Iterable[GeneratorLetter] = ()):
        if kappa < 1:
            raise ValueError(f"kappa must be >= 1, got {kappa}")
        letters = tuple(letters)
        for letter in letters:
            if letter.index > _max_index(letter.kind, kappa):
                raise ValueError(
                    f"letter {letter} index out of range for kappa={kappa}"
                )
        self._kappa = kappa
        self._letters = letters

    @classmethod
    def identity(cls, kappa: int) -> "GeneratorWord":
        return cls(kappa)

    @property
    def kappa(self) -> int:
        return self._kappa

    @property
    def letters(self) -> tuple[GeneratorLetter, ...]:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        if self._kappa != other._kappa:
            raise ValueError(f"cannot concatenate words with kappa {self._kappa} and {other._kappa}")
        return GeneratorWord(self._kappa, self._letters + other._letters)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(self._kappa, tuple(l.inverse() for l in reversed(self._letters)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorWord):
            return NotImplemented
        return self._kappa == other._kappa and self._letters == other._letters

    def __hash__(self) -> int:
        return hash((self._kappa, self._letters))

    def __str__(self) -> str:
        # Compress runs of an identical letter into ^n; parsing re-expands.
        if not self._letters:
            return ""
        pieces = []
        run_letter, run_len = self._letters[0], 1
        for letter in self._letters[1:]:
            if letter == run_letter:
                run_len += 1
                continue
            pieces.append(_run_string(run_letter, run_len))
            run_letter, run_len = letter, 1
        pieces.append(_run_string(run_letter, run_len))
        return "*".join(pieces)

    def __repr__(self) -> str:
        return f"<GeneratorWord kappa={self._kappa} {str(self) or '(identity)'}>"


def _run_string(letter: GeneratorLetter, run_len: int) -> str:
    exp = letter.sign * run_len
    if exp == 1:
        return f"{letter.kind}{letter.index}"
    return f"{letter.kind}{letter.index}^{exp}"


def parse_word(text: str, kappa: int) -> GeneratorWord:
    """Parse e.g. ``x1^-1 * y1 * x1 * y1^-1``; the empty string is identity.

    An exponent ``^n`` expands to |n| copies of the letter with the sign of
    n, so printing and parsing round-trip on the letter sequence.
    """
    ts = TokenStream(text)
    if ts.at_end():
        return GeneratorWord.identity(kappa)
    letters: list[GeneratorLetter] = []
    while True:
        tok = ts.peek()
        if tok.kind != "name" or tok.letter not in _KINDS:
            ts.fail(f"expected a generator letter (s/x/y with index), found {tok.text or 'end of input'!r}")
        if tok.index is None:
            ts.fail(f"generator {tok.letter!r} requires an index, e.g. {tok.letter}1")
        if not 1 <= tok.index <= _max_index(tok.letter, kappa):
            ts.fail(f"index out of range: {tok.text!r} is not valid for kappa={kappa}")
        ts.advance()
        exp = parse_signed_int(ts, "exponent") if ts.accept("^") else 1
        sign = 1 if exp >= 0 else -1
        letters.extend(GeneratorLetter(tok.letter, tok.index, sign) for _ in range(abs(exp)))
        if ts.at_end():
            return GeneratorWord(kappa, letters)
        ts.expect("*", "'*' between letters")


def _sigma_run(indices: Iterable[int]) -> list[GeneratorLetter]:
    return [GeneratorLetter("s", i, 1) for i in indices]


def expand_x(i: int, kappa: int) -> GeneratorWord:
    """The word s_{i-1} ... s_1 x_1 s_1 ... s_{i-1} representing x_i."""
    return _expand_loop("x", i, kappa)


def expand_y(i: int, kappa: int) -> GeneratorWord:
    """The word s_{i-1} ... s_1 y_1 s_1 ... s_{i-1} representing y_i."""
    return _expand_loop("y", i, kappa)


def _expand_loop(kind: str, i: int, kappa: int) -> GeneratorWord:
    if not 1 <= i <= kappa:
        raise IndexError(f"loop index {i} out of range for kappa={kappa}")
    descending = _sigma_run(range(i - 1, 0, -1))
    ascending = _sigma_run(range(1, i))
    return GeneratorWord(kappa, descending + [GeneratorLetter(kind, 1, 1)] + ascending)


Side = tuple[tuple[ScalarPoly, GeneratorWord], ...]


@dataclass(frozen=True)
class RelationPair:
    """One defining relation, as two formal linear combinations of words."""

    number: int  # 1..9
    label: str
    lhs: Side
    rhs: Side

    @property
    def kappa(self) -> int:
        return self.lhs[0][1].kappa


def _word(kappa: int, letters) -> GeneratorWord:
    return GeneratorWord(kappa, letters)


def _plain(number: int, label: str, lhs: GeneratorWord, rhs: GeneratorWord) -> RelationPair:
    one = ScalarPoly.one()
    return RelationPair(number, label, ((one, lhs),), ((one, rhs),))


def relation_table(kappa: int) -> list[RelationPair]:
    """All instances of the nine defining relations valid for this kappa.

    Relation 8 is quadratic: it is stored as s_i s_i on the left against
    ``hbar * s_i + 1`` on the right.  Relation 9 carries the scalar c^2 and
    for kappa = 1 degenerates to ``x1^-1 y1 x1 y1^-1 = c^2``.
    """
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    one = ScalarPoly.one()
    relations: list[RelationPair] = []

    def s(i: int, sign: int = 1) -> GeneratorLetter:
        return GeneratorLetter("s", i, sign)

    x1 = GeneratorLetter("x", 1, 1)
    y1 = GeneratorLetter("y", 1, 1)

    for i in range(1, kappa - 1):
        for j in range(i + 2, kappa):
            relations.append(
                _plain(1, f"R1(s{i},s{j})", _word(kappa, [s(i), s(j)]), _word(kappa, [s(j), s(i)]))
            )
    for i in range(1, kappa - 1):
        relations.append(
            _plain(
                2,
                f"R2(s{i})",
                _word(kappa, [s(i), s(i + 1), s(i)]),
                _word(kappa, [s(i + 1), s(i), s(i + 1)]),
            )
        )
    for i in range(2, kappa):
        relations.append(
            _plain(3, f"R3(s{i})", _word(kappa, [s(i), x1]), _word(kappa, [x1, s(i)]))
        )
    for i in range(2, kappa):
        relations.append(
            _plain(4, f"R4(s{i})", _word(kappa, [s(i), y1]), _word(kappa, [y1, s(i)]))
        )
    if kappa >= 2:
        relations.append(
            _plain(
                5,
                "R5",
                _word(kappa, [x1, s(1), x1, s(1)]),
                _word(kappa, [s(1), x1, s(1), x1]),
            )
        )
        relations.append(
            _plain(
                6,
                "R6",
                _word(kappa, [y1, s(1), y1, s(1)]),
                _word(kappa, [s(1), y1, s(1), y1]),
            )
        )
        relations.append(
            _plain(
                7,
                "R7",
                _word(kappa, [x1, s(1), y1, s(1, -1)]),
                _word(kappa, [s(1), y1, s(1), x1]),
            )
        )
        for i in range(1, kappa):
            relations.append(
                RelationPair(
                    8,
                    f"R8(s{i})",
                    ((one, _word(kappa, [s(i), s(i)])),),
                    ((hbar(), _word(kappa, [s(i)])), (one, GeneratorWord.identity(kappa))),
                )
            )
    torus_lhs = _word(kappa, [x1.inverse(), y1, x1, y1.inverse()])
    sigma_out_and_back = _sigma_run(range(1, kappa)) + _sigma_run(range(kappa - 1, 0, -1))
    relations.append(
        RelationPair(
            9,
            "R9",
            ((one, torus_lhs),),
            ((c_power(2), _word(kappa, sigma_out_and_back)),),
        )
    )
    return relations

"""Verification suites: relation checks, the intertwining identity, and the
symmetrized-subspace closure.

The central object is :func:`symmetrize`, the averaging map from Laurent
polynomials to the skein module,

    X_1^{n_1} ... X_k^{n_k}  |->  sum over all sigma in S_k of
                                  (a_1^{n_1} ... a_k^{n_k}, sigma),

extended linearly.  Its domain has no d, so inputs whose coefficients carry
d-exponents are rejected.

The three checks are finite, exact (zero-tolerance) test suites:

* :func:`check_relations` -- the nine defining relations as operator
  identities, in either representation, on a grid of inputs;
* :func:`check_intertwiner` -- symmetrize(poly action) equals the skein
  action of the same word on the symmetrized input, after setting d = s;
* :func:`check_subrep_closure` -- the d = s skein action maps symmetrized
  elements to elements with permutation-uniform coefficients.

Each check walks every case, never stops early, counts failures, and keeps
the first counterexample, so a systematic error is visible in full.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import polyrep
from . import skein as skein_mod
from .laurent import LaurentPoly
from .skein import SkeinElement, all_permutations
from .words import GeneratorLetter, GeneratorWord, RelationPair, relation_table


@dataclass(frozen=True)
class Counterexample:
    word: str
    input: str
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"word": self.word, "input": self.input, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check suite: case/failure counts plus the first
    counterexample, if any."""

    label: str
    kappa: int
    cases: int
    failures: int
    seed: int | None = None
    counterexample: Counterexample | None = None

    def __post_init__(self):
        if (self.failures == 0) != (self.counterexample is None):
            raise ValueError("failures == 0 must coincide with the absence of a counterexample")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        record = {
            "label": self.label,
            "kappa": self.kappa,
            "cases": self.cases,
            "failures": self.failures,
            "seed": self.seed,
        }
        record["counterexample"] = (
            self.counterexample.to_dict() if self.counterexample else None
        )
        return record


class _Tally:
    """Mutable failure accumulator used while a suite runs."""

    def __init__(self):
        self.cases = 0
        self.failures = 0
        self.first: Counterexample | None = None

    def record(self, ok: bool, word: str, value, lhs, rhs) -> None:
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.first is None:
            self.first = Counterexample(word, str(value), str(lhs), str(rhs))

    def report(self, label: str, kappa: int, seed: int | None = None) -> CheckReport:
        return CheckReport(label, kappa, self.cases, self.failures, seed, self.first)


# -- the averaging map ----------------------------------------------------------


def symmetrize(f: LaurentPoly) -> SkeinElement:
    """Send each monomial to the sum of basis pairs over all permutations.

    The coefficients of f must not involve d.
    """
    if f.coefficients_have_d():
        raise ValueError("the averaging map is not defined for coefficients involving d")
    kappa = f.rank
    perms = list(all_permutations(kappa))
    data = {}
    for exps, coeff in f.terms.items():
        for perm in perms:
            data[(exps, perm)] = coeff
    return SkeinElement(kappa, data)


def is_permutation_uniform(v: SkeinElement) -> bool:
    """Whether v lies in the symmetrized subspace: for every exponent vector
    the coefficient is the same for all kappa! permutations."""
    perms = list(all_permutations(v.kappa))
    exponent_vectors = {exps for exps, _ in v.terms}
    for exps in exponent_vectors:
        coeffs = {v.terms.get((exps, perm)) for perm in perms}
        if len(coeffs) != 1:
            return False
    return True


# -- input suites ----------------------------------------------------------------


def monomial_grid(rank: int, bound: int) -> list[LaurentPoly]:
    """All monomials with exponents in [-bound, bound], in a fixed order."""
    return [
        LaurentPoly.monomial(rank, exps)
        for exps in product(range(-bound, bound + 1), repeat=rank)
    ]


def basis_grid(kappa: int, bound: int) -> list[SkeinElement]:
    """All basis pairs with exponents in [-bound, bound], all permutations."""
    return [
        SkeinElement.basis(kappa, exps, perm)
        for exps in product(range(-bound, bound + 1), repeat=kappa)
        for perm in all_permutations(kappa)
    ]


def default_alphabet(kappa: int) -> list[GeneratorLetter]:
    """Single letters used in random words: all braid letters, all loop
    letters x_i, and y_1, with both signs."""
    letters = []
    for i in range(1, kappa):
        letters.append(GeneratorLetter("s", i, 1))
        letters.append(GeneratorLetter("s", i, -1))
    for i in range(1, kappa + 1):
        letters.append(GeneratorLetter("x", i, 1))
        letters.append(GeneratorLetter("x", i, -1))
    letters.append(GeneratorLetter("y", 1, 1))
    letters.append(GeneratorLetter("y", 1, -1))
    return letters


def single_generator_words(kappa: int) -> list[GeneratorWord]:
    """Every generator and derived loop generator, with both signs."""
    words = []
    for i in range(1, kappa):
        for sign in (1, -1):
            words.append(GeneratorWord(kappa, [GeneratorLetter("s", i, sign)]))
    for kind in ("x", "y"):
        for i in range(1, kappa + 1):
            for sign in (1, -1):
                words.append(GeneratorWord(kappa, [GeneratorLetter(kind, i, sign)]))
    return words


def random_word(kappa: int, rng: random.Random, max_len: int,
                alphabet: list[GeneratorLetter] | None = None) -> GeneratorWord:
    alphabet = alphabet if alphabet is not None else default_alphabet(kappa)
    length = rng.randint(1, max_len)
    return GeneratorWord(kappa, [rng.choice(alphabet) for _ in range(length)])


def random_words(kappa: int, count: int, max_len: int, seed: int,
                 alphabet: list[GeneratorLetter] | None = None) -> list[GeneratorWord]:
    rng = random.Random(seed)
    return [random_word(kappa, rng, max_len, alphabet) for _ in range(count)]


# -- checks ----------------------------------------------------------------------


def _act(rep: str):
    if rep == "poly":
        return polyrep.act_word
    if rep == "skein":
        return skein_mod.act_word
    raise ValueError(f"unknown representation {rep!r}; expected 'poly' or 'skein'")


def _apply_side(side, value, act):
    result = None
    for coeff, word in side:
        term = act(word, value).scale(coeff)
        result = term if result is None else result + term
    return result


def default_relation_bound(kappa: int, rep: str) -> int:
    if rep == "poly":
        return 3 if kappa <= 3 else 2
    return 2


def check_relations(
    kappa: int,
    rep: str,
    inputs: list | None = None,
    relations: list[RelationPair] | None = None,
) -> list[CheckReport]:
    """Evaluate both sides of every defining relation on every input through
    the chosen representation ('poly' or 'skein'); exact comparison."""
    act = _act(rep)
    if inputs is None:
        bound = default_relation_bound(kappa, rep)
        inputs = monomial_grid(kappa, bound) if rep == "poly" else basis_grid(kappa, bound)
    if relations is None:
        relations = relation_table(kappa)
    reports = []
    for relation in relations:
        tally = _Tally()
        for value in inputs:
            lhs = _apply_side(relation.lhs, value, act)
            rhs = _apply_side(relation.rhs, value, act)
            tally.record(lhs == rhs, relation.label, value, lhs, rhs)
        reports.append(tally.report(f"{rep}:{relation.label}", kappa))
    return reports


def check_intertwiner(
    kappa: int,
    words: list[GeneratorWord],
    monomials: list[LaurentPoly],
    label: str = "intertwiner",
    seed: int | None = None,
) -> CheckReport:
    """Check symmetrize(word . f) == (word . symmetrize(f)) at d = s."""
    tally = _Tally()
    for word in words:
        for f in monomials:
            lhs = symmetrize(polyrep.act_word(word, f))
            rhs = skein_mod.act_word(word, symmetrize(f)).substitute_d_eq_s()
            tally.record(lhs == rhs, str(word), f, lhs, rhs)
    return tally.report(label, kappa, seed)


def check_subrep_closure(
    kappa: int,
    words: list[GeneratorWord],
    monomials: list[LaurentPoly],
    label: str = "subrep",
    seed: int | None = None,
) -> CheckReport:
    """Check that the d = s skein action keeps symmetrized elements inside
    the symmetrized subspace (permutation-uniform coefficients)."""
    tally = _Tally()
    for word, f in zip(words, monomials):
        image = skein_mod.act_word(word, symmetrize(f)).substitute_d_eq_s()
        tally.record(is_permutation_uniform(image), str(word), f, image, "<permutation-uniform>")
    return tally.report(label, kappa, seed)


def check_averaging_eigenvalue(kappa: int) -> CheckReport:
    """For every permutation and braid index, s_i applied to
    (1, sigma) + (1, t_i sigma) equals s times that sum once d = s."""
    from .scalars import s_power

    tally = _Tally()
    zero_exps = (0,) * kappa
    for perm in all_permutations(kappa):
        for i in range(1, kappa):
            pair = SkeinElement.basis(kappa, zero_exps, perm) + SkeinElement.basis(
                kappa, zero_exps, perm.precompose_swap(i)
            )
            lhs = skein_mod.act_sigma(i, pair).substitute_d_eq_s()
            rhs = pair.scale(s_power(1))
            tally.record(lhs == rhs, f"s{i}", pair, lhs, rhs)
    return tally.report("averaging-eigenvalue", kappa)

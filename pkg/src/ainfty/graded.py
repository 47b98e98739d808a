"""Graded basis, sparse vectors, tensor words, and mixed-arity formal sums.

This is the substrate the rest of the package computes on.  Coefficients are
exact rationals (``fractions.Fraction``), so there is no floating point and
no tolerance anywhere: a defect either is zero or it is not.

Representation choices, shared package-wide:

* a basis element is identified by its *index* in the space; names appear
  only at parse and report boundaries,
* a word is a tuple of basis indices (arity = length >= 1),
* a vector is a sparse ``{index: coefficient}`` dict with no stored zeros,
* a tensor polynomial is a sparse ``{word: coefficient}`` dict whose words
  may have different arities, wrapped together with its space.

All values are immutable after construction (tuples, frozen dataclasses) or
treated as immutable by convention (the dicts inside vectors and
polynomials); every operation is a pure function, so values can be shared
across concurrent workers without synchronization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import InputError

# Exact rational scalar.  Fraction already guarantees lowest terms and a
# positive denominator, which is exactly the normalization we need.
Scalar = Fraction

# A tensor word: basis indices, most significant (leftmost factor) first.
Word = tuple[int, ...]

# A sparse element of the space: basis index -> nonzero coefficient.
Vector = dict[int, Fraction]

CONVENTIONS = ("cochain", "chain")


@dataclass(frozen=True)
class BasisElement:
    """A named basis vector with an integer degree."""

    name: str
    degree: int

    def __post_init__(self) -> None:
        if not self.name or not isinstance(self.name, str):
            raise InputError("basis element name must be a non-empty string")
        if not isinstance(self.degree, int):
            raise InputError("degrees must be integers")


@dataclass(frozen=True)
class GradedSpace:
    """A finite ordered basis with integer degrees.

    Degrees are always stored in the cochain convention; a space declared in
    the chain convention keeps the label in ``convention`` and stores the
    negated degrees (the file parser performs that negation).  Everything
    downstream therefore runs a single internal convention.
    """

    elements: tuple[BasisElement, ...]
    convention: str = "cochain"
    _index: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.convention not in CONVENTIONS:
            raise InputError(f"unknown convention {self.convention!r}")
        if not self.elements:
            raise InputError("a graded space needs at least one basis element")
        index: dict[str, int] = {}
        for i, el in enumerate(self.elements):
            if el.name in index:
                raise InputError(f"duplicate basis name {el.name!r}")
            index[el.name] = i
        object.__setattr__(self, "_index", index)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(el.degree for el in self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown basis name {name!r}") from None

    def name(self, i: int) -> str:
        return self.elements[i].name

    def degree(self, i: int) -> int:
        if not 0 <= i < len(self.elements):
            raise InputError(f"basis index {i} out of range")
        return self.elements[i].degree

    def check_word(self, w: Word) -> None:
        if not w:
            raise InputError("words must have arity >= 1")
        for i in w:
            if not 0 <= i < len(self.elements):
                raise InputError(f"basis index {i} out of range in word {w}")

    def basis_words(self, arity: int) -> Iterator[Word]:
        """All words of the given arity, in lexicographic index order."""
        if arity < 1:
            raise InputError("arity must be >= 1")
        return itertools.product(range(len(self.elements)), repeat=arity)

    def word_names(self, w: Word) -> tuple[str, ...]:
        return tuple(self.elements[i].name for i in w)


def word_degree(space: GradedSpace, w: Word, desuspended: bool = False) -> int:
    """Total degree of a word: sum of letter degrees.

    With ``desuspended`` set, each letter is read in the shifted space and
    contributes its degree minus one.
    """
    space.check_word(w)
    total = sum(space.elements[i].degree for i in w)
    return total - len(w) if desuspended else total


def permute_word(w: Word, sigma: tuple[int, ...]) -> Word:
    """Move letter ``i`` of ``w`` to position ``sigma[i]``.

    This is the orientation matching ``signs.koszul_permutation_sign``: the
    sign of the move is computed from degrees at the letters' original
    positions.
    """
    if len(w) != len(sigma):
        raise InputError("permutation length must match word arity")
    out = [0] * len(w)
    for i, p in enumerate(sigma):
        out[p] = w[i]
    return tuple(out)


def normalize_vector(v: Mapping[int, Fraction | int]) -> Vector:
    """Coerce coefficients to Fraction and drop zeros."""
    out: Vector = {}
    for i, c in v.items():
        c = Fraction(c)
        if c:
            out[i] = c
    return out


class TensorPoly:
    """A formal sum of tensor words with rational coefficients.

    Words of different arities may coexist (the coderivation maps an
    arity-n word to arities n-k+1 for every k <= n).  The term dict is
    normalized on construction and must not be mutated afterwards.
    """

    __slots__ = ("space", "terms")

    def __init__(
        self,
        space: GradedSpace,
        terms: Mapping[Word, Fraction | int] | Iterable[tuple[Word, Fraction | int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        normalized: dict[Word, Fraction] = {}
        for w, c in items:
            space.check_word(w)
            c = Fraction(c)
            if c:
                normalized[w] = normalized.get(w, Fraction(0)) + c
                if not normalized[w]:
                    del normalized[w]
        self.space = space
        self.terms = normalized

    @classmethod
    def _raw(cls, space: GradedSpace, terms: dict[Word, Fraction]) -> "TensorPoly":
        """Wrap an already-normalized term dict without copying or checking."""
        self = cls.__new__(cls)
        self.space = space
        self.terms = terms
        return self

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    __hash__ = None  # not hashable; term dicts are mutable containers

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        return poly_add(self, other)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return poly_add(self, poly_scale(Fraction(-1), other))

    def __rmul__(self, c) -> "TensorPoly":
        return poly_scale(c, self)

    def __repr__(self) -> str:
        if not self.terms:
            return "TensorPoly(0)"
        bits = []
        for w in sorted(self.terms):
            names = ",".join(self.space.word_names(w))
            bits.append(f"{self.terms[w]} ({names})")
        return "TensorPoly(" + " + ".join(bits) + ")"


def poly_add(a: TensorPoly, b: TensorPoly) -> TensorPoly:
    """Coefficient-wise sum, normalized."""
    if a.space != b.space:
        raise InputError("cannot add polynomials over different spaces")
    out = dict(a.terms)
    for w, c in b.terms.items():
        s = out.get(w, Fraction(0)) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return TensorPoly._raw(a.space, out)


def poly_scale(c, p: TensorPoly) -> TensorPoly:
    """Every coefficient multiplied by ``c``, normalized."""
    c = Fraction(c)
    if not c:
        return TensorPoly._raw(p.space, {})
    return TensorPoly._raw(p.space, {w: c * x for w, x in p.terms.items()})

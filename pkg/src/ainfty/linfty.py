"""Skew-symmetrization of the transferred maps and the induced bracket checks.

Everything here happens on the desuspended side, where the transferred maps
have degree 1 and symmetrization uses plain Koszul signs: the symmetrized
map is the sum of the original over all signed permutations of its inputs.
The generalized Jacobi identity is then checked in unshuffle form, summing
l_j(l_i(block) tensor rest) over all (i, n-i)-unshuffles with i + j = n + 1.
Un-priming the symmetrized family back to the unshifted space is
deliberately not offered; conventions for that step vary and nothing here
needs it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .engine import AStructure, MultiMap
from .errors import InputError
from .graded import GradedSpace, TensorPoly, Vector, Word
from .report import CheckRecord, Failure, Report
from .signs import koszul_permutation_sign


def _invert(sigma: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, p in enumerate(sigma):
        inv[p] = i
    return tuple(inv)


@dataclass(frozen=True)
class SymMultiMap:
    """A graded-symmetric degree-1 map on desuspended words.

    Construction verifies the symmetry certificate: swapping two adjacent
    letters multiplies the value by the Koszul sign of the swap.  Adjacent
    transpositions generate all permutations, so this pins full graded
    symmetry.
    """

    space: GradedSpace
    arity: int
    table: Mapping[Word, Vector] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise InputError("arity must be >= 1")
        for w in self.table:
            if len(w) != self.arity:
                raise InputError("table word arity mismatch")
            self.space.check_word(w)
        self._certify()

    def _certify(self) -> None:
        degs = self.space.degrees
        for w, vec in self.table.items():
            for pos in range(self.arity - 1):
                swapped = list(w)
                swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
                sign = -1 if (degs[w[pos]] - 1) * (degs[w[pos + 1]] - 1) % 2 else 1
                other = self.table.get(tuple(swapped), {})
                expected = {b: sign * c for b, c in vec.items()}
                if expected != dict(other):
                    raise InputError(
                        f"table is not graded-symmetric at {w} <-> {tuple(swapped)}"
                    )

    def value(self, w: Word) -> Vector:
        return dict(self.table.get(tuple(w), {}))


def symmetrize_prime(mp: MultiMap) -> SymMultiMap:
    """Sum a transferred map over all Koszul-signed permutations of its inputs.

    The result can only be supported on rearrangements of the original
    support, so only those words are tabulated.
    """
    if not mp.primed:
        raise InputError("symmetrization is defined for primed maps")
    space = mp.space
    n = mp.arity
    ddegs = [d - 1 for d in space.degrees]
    candidates: set[Word] = set()
    for w in mp.table:
        candidates.update(itertools.permutations(w))
    table: dict[Word, Vector] = {}
    for y in sorted(candidates):
        degs = [ddegs[b] for b in y]
        acc: dict[int, Fraction] = {}
        for sigma in itertools.permutations(range(n)):
            # letter i of y moves to position sigma[i]
            permuted = [0] * n
            for i, p in enumerate(sigma):
                permuted[p] = y[i]
            hit = mp.table.get(tuple(permuted))
            if hit is None:
                continue
            sign = koszul_permutation_sign(degs, sigma)
            for b, c in hit.items():
                acc[b] = acc.get(b, Fraction(0)) + sign * c
        acc = {b: c for b, c in acc.items() if c}
        if acc:
            table[y] = acc
    return SymMultiMap(space, n, table)


def unshuffles(i: int, r: int) -> list[tuple[int, ...]]:
    """All permutations of 0..i+r-1 increasing on the first i and last r slots."""
    if i < 1 or r < 0:
        raise InputError("need i >= 1 and r >= 0")
    n = i + r
    out = []
    for first in itertools.combinations(range(n), i):
        rest = tuple(sorted(set(range(n)) - set(first)))
        out.append(first + rest)
    return out


def _family_by_arity(family: Iterable[SymMultiMap]) -> dict[int, SymMultiMap]:
    by_arity: dict[int, SymMultiMap] = {}
    for m in family:
        if m.arity in by_arity:
            raise InputError(f"two maps of arity {m.arity} in one family")
        by_arity[m.arity] = m
    return by_arity


def linfty_defect(family: Iterable[SymMultiMap], y: Word) -> TensorPoly:
    """The generalized Jacobi defect of a symmetric family on one word.

    Sums l_j(l_i(selected block) tensor rest) over all unshuffle selections
    with i + j = arity + 1, each weighted by the Koszul sign of pulling the
    selected letters to the front.  Zero exactly when the relation holds.
    """
    by_arity = _family_by_arity(family)
    if not by_arity:
        raise InputError("empty map family")
    space = next(iter(by_arity.values())).space
    y = tuple(y)
    space.check_word(y)
    n = len(y)
    degs = [space.degrees[b] - 1 for b in y]
    acc: dict[int, Fraction] = {}
    for i in range(1, n + 1):
        inner = by_arity.get(i)
        outer = by_arity.get(n + 1 - i)
        if inner is None or outer is None:
            continue
        for order in unshuffles(i, n - i):
            # rearranging y into picked order costs the sign of the
            # inverse permutation (letters indexed at original slots)
            sign = koszul_permutation_sign(degs, _invert(order))
            inner_val = inner.value(tuple(y[p] for p in order[:i]))
            if not inner_val:
                continue
            rest = tuple(y[p] for p in order[i:])
            for b, c in inner_val.items():
                outer_val = outer.value((b,) + rest)
                for b2, c2 in outer_val.items():
                    acc[b2] = acc.get(b2, Fraction(0)) + sign * c * c2
    return TensorPoly(space, {(b,): c for b, c in acc.items() if c})


def verify_linfty(s: AStructure, max_arity: int) -> Report:
    """Symmetrize the transferred maps and sweep the Jacobi relation.

    Checks every basis word of arity 1..max_arity; reported exactly like
    the structure checks, under the check name ``linfty``.
    """
    if max_arity < 1:
        raise InputError("max_arity must be >= 1")
    primed = s.primed_version()
    space = s.space
    family: dict[int, SymMultiMap] = {}
    for k in range(1, max_arity + 1):
        m = primed.map_at(k)
        if m is not None:
            family[k] = symmetrize_prime(m)
    maps = list(family.values())
    records = []
    for arity in range(1, max_arity + 1):
        failures = []
        for word in space.basis_words(arity):
            if not maps:
                break  # no maps at all: every relation is an empty sum
            defect = linfty_defect(maps, word)
            if not defect.is_zero():
                terms = tuple(
                    (c, space.word_names(dw))
                    for dw, c in sorted(defect.terms.items())
                )
                failures.append(Failure(word=space.word_names(word), defect=terms))
        records.append(
            CheckRecord(
                check="linfty",
                arity=arity,
                words=space.dim**arity,
                failures=tuple(failures),
            )
        )
    return Report(
        structure=s.name,
        convention=space.convention,
        max_arity=max_arity,
        checks=tuple(records),
    )

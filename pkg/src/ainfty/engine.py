"""Structure maps, the degree-shift transfer, coderivations, and both checks.

A structure is a family of multilinear maps m_k, one per arity, acting on
tensor words over a graded basis.  Two equivalent formulations of the
defining identities are implemented side by side:

* the *direct* check evaluates the quadratic identity
  sum_{lam,k} alpha * m_{n-k+1}(x_1 .. m_k(window) .. x_n) on each word,
* the *coderivation* check transfers the family to degree-1 maps on the
  shifted space, extends them to a coderivation D of the tensor coalgebra,
  and evaluates D(D(word)), which must vanish.

The per-word functions here are the pure reference path; ``_backend``
selects a compiled twin of the exhaustive sweeps when it is available.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .errors import InputError
from .graded import (
    GradedSpace,
    TensorPoly,
    Vector,
    Word,
    normalize_vector,
    word_degree,
)
from .report import Report
from .signs import desusp_word_sign, susp_iso_sign

# Internal sweep representation: arity -> {word: {basis: coeff}}.
Tables = dict[int, dict[Word, Vector]]


@dataclass(frozen=True)
class MultiMap:
    """An arity-k multilinear map given by a sparse word -> vector table.

    Unprimed maps act on the space itself and have degree 2-k; primed maps
    act on desuspended words and have degree 1.  Either way every table
    entry must satisfy degree(output) = degree(input word) + 2 - k, which
    is the same numeric constraint in both readings.  Words absent from
    the table map to zero.
    """

    space: GradedSpace
    arity: int
    table: Mapping[Word, Vector] = field(default_factory=dict)
    primed: bool = False

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise InputError("map arity must be >= 1")
        clean: dict[Word, Vector] = {}
        for w, vec in self.table.items():
            w = tuple(w)
            if len(w) != self.arity:
                raise InputError(
                    f"table word {w} has arity {len(w)}, map has arity {self.arity}"
                )
            self.space.check_word(w)
            vec = normalize_vector(vec)
            if not vec:
                continue
            in_deg = word_degree(self.space, w)
            for b in vec:
                if self.space.degree(b) != in_deg + 2 - self.arity:
                    raise InputError(
                        f"inhomogeneous entry: {w} -> basis {self.space.name(b)}"
                    )
            clean[w] = vec
        object.__setattr__(self, "table", clean)

    @property
    def degree(self) -> int:
        return 1 if self.primed else 2 - self.arity


def apply_map(m: MultiMap, w: Word) -> Vector:
    """Evaluate the map on one basis word; absent words give the zero vector."""
    w = tuple(w)
    if len(w) != m.arity:
        raise InputError(f"word arity {len(w)} does not match map arity {m.arity}")
    m.space.check_word(w)
    return dict(m.table.get(w, {}))


def prime(m: MultiMap) -> MultiMap:
    """Transfer an unprimed map to the degree-1 map on desuspended words.

    Entry by entry this composes three signs: the defining global factor
    (-1)**(k(k-1)/2), the sign identifying a word of desuspended letters
    with a desuspended word, and the same (-1)**(k(k-1)/2) again from
    cancelling the k suspensions against the k desuspensions.  The two
    arity factors cancel; they are kept visible so each step of the
    pipeline is auditable.
    """
    if m.primed:
        raise InputError("prime() expects an unprimed map")
    k = m.arity
    table: dict[Word, Vector] = {}
    for w, vec in m.table.items():
        degs = [m.space.degree(i) for i in w]
        s = susp_iso_sign(k) * desusp_word_sign(degs) * susp_iso_sign(k)
        table[w] = {b: s * c for b, c in vec.items()}
    return MultiMap(m.space, k, table, primed=True)


def unprime(mp: MultiMap) -> MultiMap:
    """Invert the transfer; unprime(prime(m)) == m entry for entry."""
    if not mp.primed:
        raise InputError("unprime() expects a primed map")
    k = mp.arity
    table: dict[Word, Vector] = {}
    for w, vec in mp.table.items():
        degs = [mp.space.degree(i) for i in w]
        # the transfer sign is +-1, hence self-inverse
        s = susp_iso_sign(k) * desusp_word_sign(degs) * susp_iso_sign(k)
        table[w] = {b: s * c for b, c in vec.items()}
    return MultiMap(mp.space, k, table, primed=False)


class AStructure:
    """A family {m_k} over one space: at most one map per arity.

    Backed either by a finite arity -> MultiMap dict or by a generator rule
    producing the map for any requested arity (the built-in example exists
    at every arity).  Generated maps are cached; instances are immutable
    after construction apart from that cache.
    """

    def __init__(
        self,
        space: GradedSpace,
        maps: Mapping[int, MultiMap] | None = None,
        generator: Callable[[int], MultiMap | None] | None = None,
        primed: bool = False,
        name: str = "structure",
    ):
        if (maps is None) == (generator is None):
            raise InputError("provide exactly one of maps or generator")
        self.space = space
        self.primed = primed
        self.name = name
        self._generator = generator
        self._maps: dict[int, MultiMap | None] = {}
        if maps is not None:
            for k, m in maps.items():
                self._check_member(k, m)
                self._maps[int(k)] = m

    def _check_member(self, k: int, m: MultiMap) -> None:
        if m.arity != k:
            raise InputError(f"map of arity {m.arity} registered under arity {k}")
        if m.space != self.space:
            raise InputError("structure maps must share the structure's space")
        if m.primed != self.primed:
            raise InputError("structure maps must match the structure's primed flag")

    @property
    def is_finite(self) -> bool:
        return self._generator is None

    def map_at(self, k: int) -> MultiMap | None:
        """The arity-k map, or None where the family has no entry."""
        if k < 1:
            raise InputError("arity must be >= 1")
        if k not in self._maps:
            if self._generator is None:
                return None
            m = self._generator(k)
            if m is not None:
                self._check_member(k, m)
            self._maps[k] = m
        return self._maps[k]

    @property
    def arities(self) -> list[int]:
        """All arities carrying a map; finite structures only."""
        if not self.is_finite:
            raise InputError("a generator-backed family has no finite arity list")
        return sorted(k for k, m in self._maps.items() if m is not None)

    def arities_up_to(self, n: int) -> list[int]:
        if self._generator is not None:
            return [k for k in range(1, n + 1) if self.map_at(k) is not None]
        return sorted(k for k, m in self._maps.items() if k <= n and m is not None)

    def tables_up_to(self, n: int) -> Tables:
        out: Tables = {}
        for k in self.arities_up_to(n):
            out[k] = self.map_at(k).table
        return out

    def primed_version(self) -> "AStructure":
        if self.primed:
            return self
        return self._transformed(prime, primed=True)

    def unprimed_version(self) -> "AStructure":
        if not self.primed:
            return self
        return self._transformed(unprime, primed=False)

    def _transformed(self, fn: Callable[[MultiMap], MultiMap], primed: bool) -> "AStructure":
        if self.is_finite:
            maps = {k: fn(m) for k, m in self._maps.items() if m is not None}
            return AStructure(self.space, maps=maps, primed=primed, name=self.name)
        gen = self._generator

        def transformed_rule(k: int) -> MultiMap | None:
            m = gen(k)
            return None if m is None else fn(m)

        return AStructure(
            self.space, generator=transformed_rule, primed=primed, name=self.name
        )

    def snapshot(self, max_arity: int) -> "AStructure":
        """A finite copy holding the maps of arity 1..max_arity (picklable)."""
        maps = {}
        for k in range(1, max_arity + 1):
            m = self.map_at(k)
            if m is not None:
                maps[k] = m
        return AStructure(self.space, maps=maps, primed=self.primed, name=self.name)


# ---------------------------------------------------------------------------
# coderivation side
# ---------------------------------------------------------------------------


def _coderivation_terms(
    tables: Tables,
    degrees: tuple[int, ...],
    word: Word,
    coeff: Fraction,
    acc: dict[Word, Fraction],
) -> None:
    """Accumulate the full coderivation applied to coeff * word into acc.

    Applying a degree-1 map after the first i letters costs the Koszul sign
    of passing it across the prefix: (-1)**(desuspended prefix degree).
    """
    n = len(word)
    parities = [0] * (n + 1)
    p = 0
    for i, b in enumerate(word):
        p ^= (degrees[b] - 1) & 1
        parities[i + 1] = p
    for k, table in tables.items():
        if k > n:
            continue
        for i in range(n - k + 1):
            hit = table.get(word[i : i + k])
            if hit is None:
                continue
            pre = word[:i]
            suf = word[i + k :]
            negate = parities[i]
            for b, c in hit.items():
                term = -coeff * c if negate else coeff * c
                nw = pre + (b,) + suf
                prev = acc.get(nw)
                acc[nw] = term if prev is None else prev + term


def _prune(acc: dict[Word, Fraction]) -> dict[Word, Fraction]:
    return {w: c for w, c in acc.items() if c}


def coderivation_apply(mp: MultiMap, w: Word) -> TensorPoly:
    """Extend one primed map over an input word, summing over positions.

    An arity-k map on an arity-n word contributes one term per offset
    0..n-k, each carrying the prefix-passing sign; k > n gives zero.
    """
    if not mp.primed:
        raise InputError("coderivation extension is defined for primed maps")
    w = tuple(w)
    mp.space.check_word(w)
    acc: dict[Word, Fraction] = {}
    _coderivation_terms(
        {mp.arity: mp.table}, mp.space.degrees, w, Fraction(1), acc
    )
    return TensorPoly._raw(mp.space, _prune(acc))


def d_apply(s: AStructure, p: TensorPoly) -> TensorPoly:
    """Apply the full coderivation D = sum of extended maps to a polynomial.

    Only maps of arity <= the word's arity can act on a given word, so the
    sum is arity-local and finite even for generator-backed families.
    """
    if not s.primed:
        raise InputError("d_apply needs a primed structure")
    if p.space != s.space:
        raise InputError("polynomial and structure live over different spaces")
    degrees = s.space.degrees
    acc: dict[Word, Fraction] = {}
    for word, coeff in p.terms.items():
        tables = s.tables_up_to(len(word))
        _coderivation_terms(tables, degrees, word, coeff, acc)
    return TensorPoly._raw(s.space, _prune(acc))


def d_squared(s: AStructure, w: Word) -> TensorPoly:
    """D(D(word)); the zero polynomial exactly when the identities hold there."""
    if not s.primed:
        raise InputError("d_squared needs a primed structure")
    w = tuple(w)
    s.space.check_word(w)
    degrees = s.space.degrees
    tables = s.tables_up_to(len(w))
    first: dict[Word, Fraction] = {}
    _coderivation_terms(tables, degrees, w, Fraction(1), first)
    acc: dict[Word, Fraction] = {}
    for word, coeff in first.items():
        if coeff:
            _coderivation_terms(tables, degrees, word, coeff, acc)
    return TensorPoly._raw(s.space, _prune(acc))


# ---------------------------------------------------------------------------
# direct identity side
# ---------------------------------------------------------------------------


def _alpha_parity(k: int, lam: int, n: int, prefix_degree_sum: int) -> int:
    return (k + lam + k * lam + k * n + k * prefix_degree_sum) & 1


def _stasheff_vec(tables: Tables, degrees: tuple[int, ...], x: Word) -> Vector:
    """Evaluate the arity-n quadratic identity on one word, as a raw vector."""
    n = len(x)
    prefix_sums = [0] * n
    acc_deg = 0
    for i in range(n):
        prefix_sums[i] = acc_deg
        acc_deg += degrees[x[i]]
    acc: Vector = {}
    for lam in range(n):
        for k in range(1, n - lam + 1):
            inner_table = tables.get(k)
            outer_table = tables.get(n - k + 1)
            if inner_table is None or outer_table is None:
                continue
            inner = inner_table.get(x[lam : lam + k])
            if inner is None:
                continue
            negate = _alpha_parity(k, lam, n, prefix_sums[lam])
            pre = x[:lam]
            suf = x[lam + k :]
            for b, c in inner.items():
                outer = outer_table.get(pre + (b,) + suf)
                if outer is None:
                    continue
                for b2, c2 in outer.items():
                    term = -c * c2 if negate else c * c2
                    prev = acc.get(b2)
                    acc[b2] = term if prev is None else prev + term
    return {b: c for b, c in acc.items() if c}


def stasheff_defect(s: AStructure, x: Word) -> Vector:
    """The (expected-zero) value of the defining identity on one word.

    Nonzero results are homogeneous of degree deg(x) + 3 - n; absent maps
    are treated as zero.
    """
    if s.primed:
        raise InputError("the direct identity is evaluated on unprimed maps")
    x = tuple(x)
    s.space.check_word(x)
    return _stasheff_vec(s.tables_up_to(len(x)), s.space.degrees, x)


def verify_structure(s: AStructure, max_arity: int, mode: str = "both") -> Report:
    """Exhaustively check all basis words of arity 1..max_arity.

    ``mode`` selects the direct identity, the coderivation square, or both.
    Enumeration is lexicographic in basis index and the report ordering is
    deterministic regardless of worker count or backend.
    """
    from . import _backend  # deferred: _backend imports this module's internals

    if max_arity < 1:
        raise InputError("max_arity must be >= 1")
    checks = {"direct": ["direct"], "coderivation": ["coderivation"],
              "both": ["direct", "coderivation"]}.get(mode)
    if checks is None:
        raise InputError(f"unknown mode {mode!r}")
    snap = s.snapshot(max_arity)
    unprimed = snap.unprimed_version() if "direct" in checks else None
    primed = snap.primed_version() if "coderivation" in checks else None
    records = _backend.run_checks(unprimed, primed, checks, max_arity)
    return Report(
        structure=s.name,
        convention=s.space.convention,
        max_arity=max_arity,
        checks=tuple(records),
    )

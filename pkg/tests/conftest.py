"""Shared hypothesis strategies and small helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from ainfty import AStructure, BasisElement, GradedSpace, MultiMap

# small exact rationals, zero excluded where noted
coefficients = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=6
)
nonzero_coefficients = coefficients.filter(lambda c: c != 0)


@st.composite
def graded_spaces(draw, max_dim: int = 4, min_degree: int = -2, max_degree: int = 3):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    degrees = draw(
        st.lists(
            st.integers(min_value=min_degree, max_value=max_degree),
            min_size=dim,
            max_size=dim,
        )
    )
    elements = tuple(BasisElement(f"e{i}", d) for i, d in enumerate(degrees))
    return GradedSpace(elements)


@st.composite
def words_over(draw, space: GradedSpace, min_arity: int = 1, max_arity: int = 4):
    arity = draw(st.integers(min_value=min_arity, max_value=max_arity))
    return tuple(
        draw(st.integers(min_value=0, max_value=space.dim - 1)) for _ in range(arity)
    )


@st.composite
def homogeneous_multimaps(
    draw,
    space: GradedSpace | None = None,
    min_arity: int = 1,
    max_arity: int = 4,
    primed: bool = False,
):
    """A random degree-homogeneous map: only entries the grading allows."""
    if space is None:
        space = draw(graded_spaces())
    arity = draw(st.integers(min_value=min_arity, max_value=max_arity))
    n_entries = draw(st.integers(min_value=0, max_value=4))
    table = {}
    for _ in range(n_entries):
        w = draw(words_over(space, min_arity=arity, max_arity=arity))
        target = sum(space.degree(i) for i in w) + 2 - arity
        allowed = [b for b in range(space.dim) if space.degree(b) == target]
        if not allowed:
            continue
        vec = {}
        for b in draw(st.lists(st.sampled_from(allowed), min_size=1, max_size=2)):
            vec[b] = draw(nonzero_coefficients)
        table[w] = vec
    return MultiMap(space, arity, table, primed=primed)


@st.composite
def square_zero_differentials(draw):
    """A valid one-map structure: the map raises degree from level 0 to 1.

    With only two degree levels the composite of the map with itself has
    nowhere to land, so the single defining identity holds by construction
    and the structure is valid at every arity.
    """
    n0 = draw(st.integers(min_value=1, max_value=3))
    n1 = draw(st.integers(min_value=1, max_value=2))
    elements = tuple(
        BasisElement(f"a{i}", 0) for i in range(n0)
    ) + tuple(BasisElement(f"b{i}", 1) for i in range(n1))
    space = GradedSpace(elements)
    table = {}
    for i in range(n0):
        vec = {}
        for j in range(n1):
            c = draw(coefficients)
            if c:
                vec[n0 + j] = c
        if vec:
            table[(i,)] = vec
    maps = {1: MultiMap(space, 1, table)} if table else {}
    if not maps:
        maps = {1: MultiMap(space, 1, {})}
    return AStructure(space, maps=maps, name="random-differential")


@st.composite
def scaled_idempotent_algebras(draw):
    """A valid two-map-free structure: one degree-0 element with x*x = c*x.

    Associativity of the product holds for any scale c, and with no other
    maps every higher identity is vacuous.
    """
    c = draw(coefficients)
    space = GradedSpace((BasisElement("x", 0),))
    table = {(0, 0): {0: c}} if c else {}
    return AStructure(
        space, maps={2: MultiMap(space, 2, table)}, name="scaled-idempotent"
    )


def valid_structures():
    """Structures that satisfy the identities at every arity."""
    return st.one_of(square_zero_differentials(), scaled_idempotent_algebras())


@st.composite
def permutations_of(draw, n: int):
    return tuple(draw(st.permutations(list(range(n)))))

"""The brute-force side: extension enumeration and dimension search."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cobwebs import (
    Chain,
    ConstantSequence,
    FinitePoset,
    TooLargeError,
    brute_force_dim_le_2,
    build_cobweb,
    enumerate_linear_extensions,
    intersect_chains,
    order_dimension,
    reachability,
    verify_realizer,
)

from helpers import (
    fib_cobweb,
    graph_on,
    permutation_extensions,
    row,
    standard_3d_poset,
    v,
)


def poset_of(g) -> FinitePoset:
    return FinitePoset.from_digraph(g)


def cobweb_poset(p) -> FinitePoset:
    from cobwebs import strict_order_relation

    return FinitePoset(p.hasse.vertices, strict_order_relation(p).pairs)


@st.composite
def small_posets(draw, max_vertices=5):
    n = draw(st.integers(0, max_vertices))
    vs = row(n)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                arcs.append((vs[i], vs[j]))
    from cobwebs import Digraph

    return poset_of(Digraph(vs, arcs))


class TestFinitePoset:
    def test_rejects_reflexive_pair(self):
        with pytest.raises(ValueError, match="irreflexive"):
            FinitePoset(tuple(row(2)), frozenset([(v(1), v(1))]))

    def test_rejects_symmetric_pair(self):
        with pytest.raises(ValueError, match="antisymmetric"):
            FinitePoset(
                tuple(row(2)), frozenset([(v(1), v(2)), (v(2), v(1))])
            )

    def test_rejects_missing_transitive_pair(self):
        with pytest.raises(ValueError, match="transitive"):
            FinitePoset(
                tuple(row(3)), frozenset([(v(1), v(2)), (v(2), v(3))])
            )

    def test_rejects_foreign_elements(self):
        with pytest.raises(ValueError, match="non-element"):
            FinitePoset(tuple(row(2)), frozenset([(v(1), v(9))]))

    def test_from_digraph_takes_reachability(self):
        g = graph_on(3, [(0, 1), (1, 2)])
        assert poset_of(g).strict == reachability(g).pairs

    def test_strict_digraph_round_trip(self):
        p = poset_of(graph_on(4, [(0, 1), (1, 2), (0, 3)]))
        assert reachability(p.strict_digraph()).pairs == p.strict


class TestEnumerateLinearExtensions:
    def test_chain_has_one(self):
        p = poset_of(graph_on(3, [(0, 1), (1, 2)]))
        assert list(enumerate_linear_extensions(p)) == [Chain(row(3))]

    def test_antichain_has_factorial_many(self):
        p = poset_of(graph_on(4, []))
        assert sum(1 for _ in enumerate_linear_extensions(p)) == 24

    def test_cobweb_level_3_has_two(self):
        exts = list(enumerate_linear_extensions(cobweb_poset(fib_cobweb(3))))
        assert len(exts) == 2

    def test_limit(self):
        p = poset_of(graph_on(4, []))
        assert sum(1 for _ in enumerate_linear_extensions(p, limit=7)) == 7
        with pytest.raises(ValueError):
            next(enumerate_linear_extensions(p, limit=0))

    def test_size_guard(self):
        p = poset_of(graph_on(13, [(i, i + 1) for i in range(12)]))
        with pytest.raises(TooLargeError):
            next(enumerate_linear_extensions(p))

    def test_guard_boundary_is_inclusive(self):
        p = poset_of(graph_on(12, [(i, i + 1) for i in range(11)]))
        assert len(list(enumerate_linear_extensions(p))) == 1

    @settings(max_examples=40, deadline=None)
    @given(small_posets())
    def test_matches_permutation_filter(self, p):
        got = [c.order for c in enumerate_linear_extensions(p)]
        assert got == permutation_extensions(p)

    @settings(max_examples=30, deadline=None)
    @given(small_posets())
    def test_every_extension_contains_the_order(self, p):
        for c in enumerate_linear_extensions(p):
            assert all(c.rank(a) < c.rank(b) for a, b in p.strict)


class TestBruteForceDimLe2:
    def test_chain_realized_by_itself_twice(self):
        p = poset_of(graph_on(3, [(0, 1), (1, 2)]))
        result = brute_force_dim_le_2(p)
        assert result
        assert result.witness.first == result.witness.second == Chain(row(3))

    def test_witness_realizer_verifies(self):
        for p in (
            cobweb_poset(fib_cobweb(4)),
            cobweb_poset(build_cobweb(ConstantSequence(2), 2)),
            poset_of(graph_on(4, [(0, 2), (1, 2), (1, 3)])),
        ):
            result = brute_force_dim_le_2(p)
            assert result
            assert verify_realizer(result.witness)

    def test_witness_intersection_is_the_order(self):
        p = cobweb_poset(fib_cobweb(4))
        r = brute_force_dim_le_2(p).witness
        diagonal = {(e, e) for e in p.elements}
        assert intersect_chains(r.first, r.second) == p.strict | diagonal

    def test_standard_3d_poset_fails(self):
        assert not brute_force_dim_le_2(standard_3d_poset())

    def test_empty_and_singleton(self):
        assert brute_force_dim_le_2(poset_of(graph_on(0, [])))
        assert brute_force_dim_le_2(poset_of(graph_on(1, [])))

    def test_size_guard(self):
        p = poset_of(graph_on(10, [(i, i + 1) for i in range(9)]))
        with pytest.raises(TooLargeError):
            brute_force_dim_le_2(p)

    def test_nine_element_two_word_path(self):
        # 9 elements pushes pair masks past one 64-bit word
        p = cobweb_poset(build_cobweb(ConstantSequence(3), 2))
        result = brute_force_dim_le_2(p)
        assert result
        assert verify_realizer(result.witness)


class TestOrderDimension:
    def test_empty_and_singleton_are_chains(self):
        assert order_dimension(poset_of(graph_on(0, []))) == 1
        assert order_dimension(poset_of(graph_on(1, []))) == 1

    def test_chain_is_dimension_1(self):
        assert order_dimension(poset_of(graph_on(4, [(i, i + 1) for i in range(3)]))) == 1

    def test_antichain_is_dimension_2(self):
        assert order_dimension(poset_of(graph_on(2, []))) == 2

    def test_cobweb_is_dimension_2(self):
        assert order_dimension(cobweb_poset(fib_cobweb(3))) == 2

    def test_standard_3d_poset_is_dimension_3(self):
        assert order_dimension(standard_3d_poset()) == 3

    def test_max_k_cuts_off(self):
        assert order_dimension(poset_of(graph_on(2, [])), max_k=1) is None
        assert order_dimension(standard_3d_poset(), max_k=2) is None

    def test_max_k_validation(self):
        p = poset_of(graph_on(2, []))
        with pytest.raises(ValueError):
            order_dimension(p, max_k=0)
        with pytest.raises(ValueError):
            order_dimension(p, max_k=4)

    def test_size_guard(self):
        p = poset_of(graph_on(8, []))
        with pytest.raises(TooLargeError):
            order_dimension(p)

    @settings(max_examples=25, deadline=None)
    @given(small_posets())
    def test_consistent_with_pair_search(self, p):
        dim = order_dimension(p)
        assert dim is not None  # 5 elements never exceed dimension 3
        assert (dim <= 2) == bool(brute_force_dim_le_2(p))
        if dim == 1:
            assert len(p.strict) == len(p) * (len(p) - 1) // 2

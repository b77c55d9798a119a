"""Poset construction, validation, queries, and the cover reduction."""

import pytest

from posetswap import (
    CycleError,
    DuplicateElementError,
    Poset,
    ReflexivePairError,
    UnknownElementError,
    enumerate_labeled_posets,
)


class TestConstruction:
    def test_chain_closes_transitively(self):
        p = Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert p.less("a", "c")
        assert not p.less("c", "a")

    def test_element_order_preserved(self):
        p = Poset(["z", "m", "a"])
        assert p.elements == ("z", "m", "a")

    def test_singleton(self):
        p = Poset(["a"])
        assert p.n == 1
        assert p.relation_pairs() == []

    def test_empty(self):
        p = Poset([])
        assert p.n == 0
        assert list(p) == []

    def test_generating_set_and_covers_build_the_same_order(self):
        covers = Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
        closed = Poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        assert covers == closed

    def test_deterministic(self):
        mk = lambda: Poset(["a", "b", "c"], [("b", "c"), ("a", "b")])
        assert mk() == mk()
        assert hash(mk()) == hash(mk())

    def test_duplicate_element(self):
        with pytest.raises(DuplicateElementError) as exc:
            Poset(["a", "a"])
        assert exc.value.element == "a"

    def test_unknown_relation_endpoint(self):
        with pytest.raises(UnknownElementError) as exc:
            Poset(["a", "b"], [("a", "c")])
        assert exc.value.element == "c"

    def test_reflexive_pair(self):
        with pytest.raises(ReflexivePairError):
            Poset(["a", "b"], [("a", "a")])

    def test_two_cycle_witness(self):
        with pytest.raises(CycleError) as exc:
            Poset(["a", "b"], [("a", "b"), ("b", "a")])
        assert exc.value.witness == ("a", "b", "a")

    def test_longer_cycle_witness(self):
        with pytest.raises(CycleError) as exc:
            Poset(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "a"), ("a", "d")])
        assert exc.value.witness == ("a", "b", "c", "a")

    def test_indirect_cycle_through_closure(self):
        # no single pair is reversed, the cycle only appears after closing
        with pytest.raises(CycleError):
            Poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])

    def test_empty_label_rejected(self):
        with pytest.raises(ValueError):
            Poset([""])


class TestQueries:
    def test_less_examples(self, chain3, antichain3):
        assert chain3.less("a", "c")
        assert not chain3.less("c", "a")
        assert not antichain3.less("a", "b")

    def test_incomparable_examples(self, diamond):
        assert diamond.incomparable("x", "y")
        assert not diamond.incomparable("0", "1")
        assert not diamond.incomparable("x", "x")

    def test_unknown_element_query(self, chain3):
        with pytest.raises(UnknownElementError):
            chain3.less("a", "zzz")
        with pytest.raises(UnknownElementError):
            chain3.incomparable("zzz", "a")

    def test_contains_and_len(self, chain3):
        assert "a" in chain3 and "zzz" not in chain3
        assert len(chain3) == 3


class TestCoverRelations:
    def test_chain_drops_composite_pair(self, chain3):
        assert chain3.cover_relations() == [("a", "b"), ("b", "c")]

    def test_diamond_has_no_bottom_to_top_edge(self, diamond):
        assert diamond.cover_relations() == [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")]

    def test_antichain_has_no_covers(self, antichain3):
        assert antichain3.cover_relations() == []


def test_exactly_one_pair_relation_holds_everywhere():
    """Trichotomy: for each pair, less one way, the other, incomparable, or equal."""
    for n in range(5):
        for p in enumerate_labeled_posets(n):
            for x in p.elements:
                for y in p.elements:
                    stati = [p.less(x, y), p.less(y, x), p.incomparable(x, y), x == y]
                    assert sum(stati) == 1


def test_cover_closure_rebuilds_every_small_poset():
    for n in range(5):
        for p in enumerate_labeled_posets(n):
            assert Poset(p.elements, p.cover_relations()) == p

"""Fence detection, pair classification, and simulation-free prediction.

The exhaustive searcher and the engine are the independent referees here:
whatever the analytic side claims is checked against breadth-first ground
truth or an actual run.
"""

import pytest
from hypothesis import given, settings

from posetswap import (
    OrderViolationError,
    OutcomeKind,
    Poset,
    Random,
    UnknownElementError,
    certificate_is_valid,
    classify_pair,
    critical_pairs,
    fence_exists,
    fenced_pairs,
    find_fence,
    is_terminal,
    predict_swap_count,
    predict_terminal,
    reachable_set,
    run_to_terminal,
)

from instances import poset_with_arrangement


class TestFences:
    def test_fence_through_an_isolated_element(self, pair_plus_isolated):
        assert fence_exists(pair_plus_isolated, ("a", "c", "b"), "a", "b")

    def test_no_fence_when_everything_is_comparable(self, chain3):
        assert not fence_exists(chain3, ("a", "b", "c"), "a", "c")

    def test_no_fence_can_start_at_the_bottom(self, diamond):
        assert not fence_exists(diamond, ("0", "x", "y", "1"), "0", "1")

    def test_shortest_certificate(self, pair_plus_isolated):
        cert = find_fence(pair_plus_isolated, ("a", "c", "b"), "a", "b")
        assert cert is not None
        assert cert.chain == ("a", "c", "b")
        assert certificate_is_valid(pair_plus_isolated, ("a", "c", "b"), cert)

    def test_direct_incomparability_is_a_length_two_fence(self, diamond):
        cert = find_fence(diamond, ("0", "x", "y", "1"), "x", "y")
        assert cert is not None
        assert cert.chain == ("x", "y")

    def test_absent_fence(self, chain3):
        assert find_fence(chain3, ("a", "b", "c"), "a", "b") is None

    def test_order_violation(self, chain3):
        with pytest.raises(OrderViolationError):
            fence_exists(chain3, ("a", "b", "c"), "c", "a")
        with pytest.raises(OrderViolationError):
            find_fence(chain3, ("a", "b", "c"), "a", "a")

    def test_unknown_element(self, chain3):
        with pytest.raises(UnknownElementError):
            fence_exists(chain3, ("a", "b", "c"), "a", "zzz")

    def test_fence_may_pass_between_comparable_endpoints(self):
        # u < v, but w sits between them and is incomparable to both
        p = Poset(["u", "w", "v"], [("u", "v")])
        cert = find_fence(p, ("u", "w", "v"), "u", "v")
        assert cert is not None
        assert cert.chain == ("u", "w", "v")


class TestClassifyPair:
    def test_settled_order_wins(self, chain3):
        outcome = classify_pair(chain3, ("c", "b", "a"), "c", "a")
        assert outcome.kind is OutcomeKind.PRESERVED_BY_ORDER
        assert outcome.certificate is None

    def test_fence_preserves(self, pair_plus_isolated):
        outcome = classify_pair(pair_plus_isolated, ("a", "c", "b"), "a", "b")
        assert outcome.kind is OutcomeKind.PRESERVED_BY_FENCE
        assert outcome.certificate.chain == ("a", "c", "b")

    def test_critical_pair_reverses(self, chain3):
        outcome = classify_pair(chain3, ("a", "b", "c"), "a", "b")
        assert outcome.kind is OutcomeKind.REVERSED
        assert not outcome.preserved


class TestCriticalPairs:
    def test_ascending_chain_is_all_critical(self, chain3):
        assert critical_pairs(chain3, ("a", "b", "c")) == {("a", "b"), ("a", "c"), ("b", "c")}

    def test_fence_excludes_the_pair(self, pair_plus_isolated):
        assert critical_pairs(pair_plus_isolated, ("a", "c", "b")) == set()

    def test_antichain_has_none(self, antichain3):
        assert critical_pairs(antichain3, ("b", "c", "a")) == set()


class TestPredictions:
    def test_chain_fully_reverses(self, chain3):
        assert predict_terminal(chain3, ("a", "b", "c")) == ("c", "b", "a")

    def test_diamond(self, diamond):
        # exhaustive search finds exactly one terminal, (1,x,y,0), at depth 5
        assert predict_terminal(diamond, ("0", "x", "y", "1")) == ("1", "x", "y", "0")
        assert predict_swap_count(diamond, ("0", "x", "y", "1")) == 5

    def test_terminal_input_predicts_itself(self, pair_plus_isolated):
        assert predict_terminal(pair_plus_isolated, ("a", "c", "b")) == ("a", "c", "b")
        assert is_terminal(pair_plus_isolated, ("a", "c", "b"))

    def test_ten_chain_counts_like_a_bubble_sort(self):
        labels = [f"e{i}" for i in range(1, 11)]
        p = Poset(labels, list(zip(labels, labels[1:])))
        assert predict_swap_count(p, tuple(labels)) == 45

    def test_antichain_needs_no_swaps(self, antichain3):
        assert predict_swap_count(antichain3, ("c", "a", "b")) == 0


@given(poset_with_arrangement())
@settings(max_examples=120)
def test_prediction_matches_an_actual_run(instance):
    poset, arr = instance
    terminal, trace = run_to_terminal(poset, arr)
    assert predict_terminal(poset, arr) == terminal
    assert predict_swap_count(poset, arr) == len(trace.events)


@given(poset_with_arrangement(max_n=5))
@settings(max_examples=60)
def test_prediction_matches_exhaustive_search(instance):
    poset, arr = instance
    reachable = reachable_set(poset, arr)
    terminals = {a for a in reachable if is_terminal(poset, a)}
    assert terminals == {predict_terminal(poset, arr)}


@given(poset_with_arrangement())
@settings(max_examples=120)
def test_terminality_is_exactly_the_absence_of_critical_pairs(instance):
    poset, arr = instance
    assert is_terminal(poset, arr) == (not critical_pairs(poset, arr))


@given(poset_with_arrangement())
@settings(max_examples=80)
def test_pairwise_verdicts_match_the_predicted_terminal(instance):
    poset, arr = instance
    predicted = predict_terminal(poset, arr)
    rank = {el: i for i, el in enumerate(predicted)}
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            outcome = classify_pair(poset, arr, arr[i], arr[j])
            assert outcome.preserved == (rank[arr[i]] < rank[arr[j]])
            if outcome.certificate is not None:
                assert certificate_is_valid(poset, arr, outcome.certificate)


@given(poset_with_arrangement())
@settings(max_examples=80)
def test_fences_survive_every_step_of_a_run(instance):
    poset, arr = instance
    _, trace = run_to_terminal(poset, arr, strategy=Random(11))
    states = trace.replay()
    fences = [fenced_pairs(poset, state) for state in states]
    for (a, fa), (b, fb) in zip(zip(states, fences), zip(states[1:], fences[1:])):
        pos_b = {el: i for i, el in enumerate(b)}
        for x, y in fa:
            assert pos_b[x] < pos_b[y], "a fenced pair changed order"
        pos_a = {el: i for i, el in enumerate(a)}
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                x, y = a[i], a[j]
                if pos_b[x] < pos_b[y]:
                    assert ((x, y) in fa) == ((x, y) in fb)

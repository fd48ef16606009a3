from fractions import Fraction

from hypothesis import given, settings, strategies as st

from prefixcodes import (
    Source,
    SwapKind,
    available_swaps,
    code_from_lengths,
    code_from_tree,
    expected_length,
    huffman_build,
    is_complete,
    is_monotone,
    kraft_sum,
    node_swap,
    sibling_property,
    sibling_property_exhaustive,
    strong_monotonicity_check,
    tree_from_code,
)
from prefixcodes.oracle import min_expected_length


@st.composite
def sources(draw, min_symbols=2, max_symbols=6):
    n = draw(st.integers(min_symbols, max_symbols))
    weights = draw(st.lists(st.integers(1, 40), min_size=n, max_size=n))
    return Source.from_weights(
        ("s%d" % i, w) for i, w in enumerate(weights))


@st.composite
def trees(draw):
    """A random complete code tree: a Huffman tree, then random swaps."""
    source = draw(sources())
    tree = huffman_build(source)
    for _ in range(draw(st.integers(0, 4))):
        moves = available_swaps(tree, {SwapKind.SAME_PARENT,
                                       SwapKind.SAME_ROW})
        if not moves:
            break
        tree = node_swap(tree, draw(st.sampled_from(moves)))
    return tree


@given(sources())
def test_huffman_tree_is_complete_with_kraft_one(source):
    tree = huffman_build(source)
    assert tree.is_complete
    assert kraft_sum(code_from_tree(tree)) == 1


@given(sources(max_symbols=5))
@settings(max_examples=40, deadline=None)
def test_huffman_matches_brute_force_minimum(source):
    code = code_from_tree(huffman_build(source))
    assert expected_length(source, code) == min_expected_length(source)


@given(sources())
def test_huffman_tree_is_monotone_and_strongly_monotone(source):
    tree = huffman_build(source)
    assert is_monotone(source, tree)
    assert strong_monotonicity_check(source, code_from_tree(tree)) is None


@given(trees())
@settings(max_examples=60, deadline=None)
def test_tree_code_round_trip(tree):
    code = code_from_tree(tree)
    again = tree_from_code(tree.source, code)
    assert again.label == tree.label
    assert code_from_tree(again) == code


@given(trees())
@settings(max_examples=60, deadline=None)
def test_code_from_lengths_reproduces_lengths(tree):
    lengths = code_from_tree(tree).lengths()
    rebuilt = code_from_lengths(tree.source, lengths)
    assert rebuilt.lengths() == lengths  # ctor enforced prefix-freeness


@given(trees(), st.data())
@settings(max_examples=60, deadline=None)
def test_swaps_preserve_rows_and_expected_length(tree, data):
    moves = available_swaps(tree, {SwapKind.SAME_PARENT, SwapKind.SAME_ROW,
                                   SwapKind.SAME_PROBABILITY})
    if not moves:
        return
    move = data.draw(st.sampled_from(moves))
    swapped = node_swap(tree, move)
    assert swapped.expected_length() == tree.expected_length()
    assert is_complete(swapped)
    if move.kind in (SwapKind.SAME_PARENT, SwapKind.SAME_ROW):
        rows_before = [len(r) for r in tree.rows()]
        rows_after = [len(r) for r in swapped.rows()]
        assert rows_before == rows_after


@given(trees())
@settings(max_examples=40, deadline=None)
def test_greedy_sibling_check_matches_backtracking(tree):
    greedy = sibling_property(tree.source, tree)
    full = sibling_property_exhaustive(tree.source, tree)
    assert (greedy is None) == (full is None)


@given(sources())
def test_source_probabilities_sum_to_one(source):
    assert sum(source.prob(s) for s in source.symbols) == Fraction(1)

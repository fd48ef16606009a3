from fractions import Fraction

import pytest

from prefixcodes import (
    PrefixCode,
    Source,
    code_from_lengths,
    code_from_tree,
    expected_length,
    kraft_sum,
    tree_from_code,
)
from prefixcodes.errors import (
    AlphabetMismatch,
    DuplicateSymbol,
    InvalidSource,
    KraftExceeded,
    PrefixViolation,
    UnknownSymbol,
)
from conftest import load_code, load_source, load_tree


class TestSource:
    def test_valid(self, ex1):
        assert ex1.symbols == ("a", "b", "c", "d")
        assert ex1.prob("a") == Fraction(1, 2)
        assert ex1.prob_of(["c", "d"]) == Fraction(1, 4)

    def test_from_weights(self):
        src = Source.from_weights([("x", 3), ("y", 1)])
        assert src.prob("x") == Fraction(3, 4)

    def test_rejects_bad_sum(self):
        with pytest.raises(InvalidSource):
            Source([("x", Fraction(1, 2)), ("y", Fraction(1, 4))])

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidSource):
            Source([("x", Fraction(0)), ("y", Fraction(1))])

    def test_rejects_single_symbol(self):
        with pytest.raises(InvalidSource):
            Source([("x", Fraction(1))])

    def test_rejects_duplicates(self):
        with pytest.raises(DuplicateSymbol):
            Source([("x", Fraction(1, 2)), ("x", Fraction(1, 2))])


class TestPrefixCode:
    def test_prefix_free_enforced(self):
        with pytest.raises(PrefixViolation):
            PrefixCode({"a": "0", "b": "00"})

    def test_empty_word_rejected(self):
        with pytest.raises(PrefixViolation):
            PrefixCode({"a": "", "b": "1"})

    def test_duplicate_symbol(self):
        with pytest.raises(DuplicateSymbol):
            PrefixCode([("a", "0"), ("a", "1")])


class TestTreeFromCode:
    def test_ex1_h1(self, ex1):
        tree = tree_from_code(ex1, load_code("ex1_h1.code"))
        assert tree.label == "(a,(b,(c,d)))"
        assert tree.node(tree.root).prob == 1

    def test_two_leaves(self):
        src = Source([("x", Fraction(1, 2)), ("y", Fraction(1, 2))])
        tree = tree_from_code(src, {"x": "0", "y": "1"})
        assert tree.label == "(x,y)"
        assert tree.max_depth == 1

    def test_prefix_violation(self):
        src = Source([("a", Fraction(1, 2)), ("b", Fraction(1, 2))])
        with pytest.raises(PrefixViolation):
            tree_from_code(src, {"a": "0", "b": "00"})

    def test_alphabet_mismatch(self, ex1):
        with pytest.raises(AlphabetMismatch):
            tree_from_code(ex1, {"a": "0", "b": "1"})

    def test_one_child_nodes_representable(self):
        src = Source([("a", Fraction(1, 2)), ("b", Fraction(1, 2))])
        tree = tree_from_code(src, {"a": "0", "b": "10"})
        assert not tree.is_complete
        assert tree.label == "(a,(b,_))"

    def test_node_probability_consistency(self, ex1):
        tree = tree_from_code(ex1, load_code("ex1_h1.code"))
        for node in tree.nodes:
            if not node.is_leaf:
                kids = [tree.node(c).prob
                        for c in (node.left, node.right) if c is not None]
                assert node.prob == sum(kids)


class TestCodeFromTree:
    def test_ex1_h2(self, ex1):
        tree = tree_from_code(ex1, load_code("ex1_h2.code"))
        code = code_from_tree(tree)
        assert code.words == {"a": "0", "b": "11", "c": "100", "d": "101"}

    def test_ex4_c(self, ex4):
        _, tree = load_tree("ex4.src", "ex4_c.code")
        assert code_from_tree(tree).words == {"a": "00", "c": "01",
                                              "b": "10", "d": "11"}

    def test_mirror_two_leaves(self):
        src = Source([("x", Fraction(1, 2)), ("y", Fraction(1, 2))])
        tree = tree_from_code(src, {"x": "1", "y": "0"})
        assert code_from_tree(tree).words == {"x": "1", "y": "0"}

    def test_round_trip(self, ex1, ex3, ex4):
        for src, name in [(ex1, "ex1_h1.code"), (ex3, "ex3_h.code"),
                          (ex4, "ex4_c.code")]:
            code = load_code(name)
            tree = tree_from_code(src, code)
            assert code_from_tree(tree) == code
            assert tree_from_code(src, code_from_tree(tree)).label == tree.label


class TestCanonicalLabel:
    def test_known_labels(self, ex1):
        h1 = tree_from_code(ex1, load_code("ex1_h1.code"))
        h2 = tree_from_code(ex1, load_code("ex1_h2.code"))
        assert h1.label == "(a,(b,(c,d)))"
        assert h2.label == "(a,((c,d),b))"
        assert h1.label != h2.label


class TestCodeFromLengths:
    def test_canonical_assignment(self, ex1):
        code = code_from_lengths(ex1, {"a": 1, "b": 2, "c": 3, "d": 3})
        assert code.words == {"a": "0", "b": "10", "c": "110", "d": "111"}

    def test_forced(self):
        src = Source([("x", Fraction(1, 2)), ("y", Fraction(1, 2))])
        assert code_from_lengths(src, {"x": 1, "y": 1}).words == \
            {"x": "0", "y": "1"}

    def test_kraft_exceeded(self):
        src = Source([("x", Fraction(1, 3)), ("y", Fraction(1, 3)),
                      ("z", Fraction(1, 3))])
        with pytest.raises(KraftExceeded):
            code_from_lengths(src, {"x": 1, "y": 1, "z": 1})

    def test_lengths_and_prefix_freeness_preserved(self, ex3):
        lengths = {"a": 2, "b": 2, "c": 3, "d": 3}
        code = code_from_lengths(ex3, lengths)
        assert code.lengths() == lengths  # PrefixCode ctor checked freeness


class TestKraftSum:
    def test_ex3_values(self, ex3):
        code = load_code("ex3_c.code")
        assert kraft_sum(code, {"c", "d"}) == Fraction(1, 2)
        assert kraft_sum(code, {"a"}) == Fraction(1, 4)
        assert kraft_sum(code, set()) == 0
        assert kraft_sum(code) == 1

    def test_unknown_symbol(self, ex3):
        with pytest.raises(UnknownSymbol):
            kraft_sum(load_code("ex3_c.code"), {"zz"})


class TestExpectedLength:
    def test_ex3(self, ex3):
        assert expected_length(ex3, load_code("ex3_h.code")) == Fraction(15, 8)
        assert expected_length(ex3, load_code("ex3_c.code")) == 2

    def test_two_symbols(self):
        src = Source([("x", Fraction(1, 3)), ("y", Fraction(2, 3))])
        assert expected_length(src, PrefixCode({"x": "0", "y": "1"})) == 1

    def test_mismatch(self, ex3):
        with pytest.raises(AlphabetMismatch):
            expected_length(ex3, PrefixCode({"a": "0", "b": "1"}))

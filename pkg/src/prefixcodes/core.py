"""Sources, code trees, prefix codes, and exact-rational helpers.

All probabilities and expected lengths are `fractions.Fraction` values;
nothing in this package ever rounds.  A code tree is stored both as a
nested "shape" (leaf = symbol string, internal node = pair of child
shapes, a missing child = None) and as a flat node arena with ids
assigned in breadth-first order, so that (row, index-in-row) addressing
is stable across rebuilds of the same tree.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple, Union

from .errors import (
    AlphabetMismatch,
    DuplicateSymbol,
    InvalidSource,
    InvalidTree,
    KraftExceeded,
    PrefixViolation,
    UnknownSymbol,
)

# Characters that would make canonical labels ambiguous.
_FORBIDDEN_IN_SYMBOLS = set("(),_ \t\n")

Shape = Union[str, Tuple[Optional["Shape"], Optional["Shape"]]]


class Source:
    """An ordered alphabet with strictly positive probabilities summing to 1."""

    def __init__(self, entries: Iterable[Tuple[str, Fraction]]):
        pairs = [(sym, Fraction(prob)) for sym, prob in entries]
        if len(pairs) < 2:
            raise InvalidSource("a source needs at least 2 symbols")
        seen = set()
        for sym, prob in pairs:
            if not isinstance(sym, str) or not sym:
                raise InvalidSource("symbols must be nonempty strings")
            if _FORBIDDEN_IN_SYMBOLS & set(sym):
                raise InvalidSource(
                    "symbol %r contains a reserved character" % sym)
            if sym in seen:
                raise DuplicateSymbol(sym)
            seen.add(sym)
            if prob <= 0:
                raise InvalidSource("probability of %r is not positive" % sym)
        total = sum(p for _, p in pairs)
        if total != 1:
            raise InvalidSource("probabilities sum to %s, expected 1" % total)
        self.entries: Tuple[Tuple[str, Fraction], ...] = tuple(pairs)
        self.symbols: Tuple[str, ...] = tuple(s for s, _ in pairs)
        self._prob = dict(pairs)
        self._index = {s: i for i, s in enumerate(self.symbols)}

    @classmethod
    def from_weights(cls, entries: Iterable[Tuple[str, int]]) -> "Source":
        """Build a source from positive integer weights, normalized by their sum."""
        pairs = list(entries)
        total = sum(w for _, w in pairs)
        if total <= 0:
            raise InvalidSource("weights must be positive")
        return cls((sym, Fraction(w, total)) for sym, w in pairs)

    def __len__(self) -> int:
        return len(self.entries)

    def prob(self, symbol: str) -> Fraction:
        try:
            return self._prob[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def prob_of(self, symbols: Iterable[str]) -> Fraction:
        return sum((self.prob(s) for s in symbols), Fraction(0))

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def __eq__(self, other) -> bool:
        return isinstance(other, Source) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = ", ".join("%s:%s" % (s, p) for s, p in self.entries)
        return "Source(%s)" % body


class PrefixCode:
    """A prefix-free symbol -> bit-string map."""

    def __init__(self, words):
        if isinstance(words, Mapping):
            pairs = list(words.items())
        else:
            pairs = list(words)
        table = {}
        for sym, word in pairs:
            if sym in table:
                raise DuplicateSymbol(sym)
            if not word or set(word) - {"0", "1"}:
                raise PrefixViolation(
                    "codeword for %r must be a nonempty 0/1 string" % sym)
            table[sym] = word
        by_word = sorted(table.items(), key=lambda kv: kv[1])
        for (s1, w1), (s2, w2) in zip(by_word, by_word[1:]):
            if w2.startswith(w1):
                raise PrefixViolation(
                    "codeword of %r is a prefix of codeword of %r" % (s1, s2))
        self.words: dict = table

    def word(self, symbol: str) -> str:
        try:
            return self.words[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    @property
    def symbols(self):
        return tuple(self.words)

    def lengths(self) -> dict:
        return {s: len(w) for s, w in self.words.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, PrefixCode) and self.words == other.words

    def __hash__(self) -> int:
        return hash(frozenset(self.words.items()))

    def __repr__(self) -> str:
        body = ", ".join("%s:%s" % kv for kv in self.words.items())
        return "PrefixCode(%s)" % body


class Node:
    """One arena slot of a CodeTree; ids are breadth-first positions."""

    __slots__ = ("id", "parent", "left", "right", "depth", "prob", "symbol")

    def __init__(self, id, parent, left, right, depth, prob, symbol):
        self.id = id
        self.parent = parent
        self.left = left
        self.right = right
        self.depth = depth
        self.prob = prob
        self.symbol = symbol

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


def shape_label(shape: Shape) -> str:
    """Nested-pair rendering; identical trees <=> identical labels."""
    if isinstance(shape, str):
        return shape
    left, right = shape
    ls = "_" if left is None else shape_label(left)
    rs = "_" if right is None else shape_label(right)
    return "(%s,%s)" % (ls, rs)


def shape_leaves(shape: Shape):
    """Leaf symbols of a shape in left-to-right order."""
    if isinstance(shape, str):
        yield shape
        return
    for child in shape:
        if child is not None:
            yield from shape_leaves(child)


class CodeTree:
    """A rooted binary code tree over a source, with cached probabilities.

    Node ids are assigned in breadth-first, left-to-right order, so id 0
    is always the root and `rows()[r]` lists row r left to right.
    """

    __slots__ = ("source", "shape", "nodes", "root", "_label", "_rows",
                 "_leaf_id")

    def __init__(self, source: Source, shape: Shape):
        leaves = list(shape_leaves(shape))
        if len(set(leaves)) != len(leaves):
            raise InvalidTree("duplicate leaf symbols")
        if set(leaves) != set(source.symbols):
            raise InvalidTree("tree leaves do not match the source alphabet")
        if isinstance(shape, str):
            raise InvalidTree("the root of a code tree cannot be a leaf")
        self.source = source
        self.shape = shape
        nodes = []
        queue = deque([(shape, None)])
        while queue:
            shp, parent = queue.popleft()
            nid = len(nodes)
            depth = 0 if parent is None else nodes[parent].depth + 1
            if isinstance(shp, str):
                node = Node(nid, parent, None, None, depth,
                            source.prob(shp), shp)
            else:
                node = Node(nid, parent, None, None, depth, None, None)
                left, right = shp
                if left is None and right is None:
                    raise InvalidTree("internal node with no children")
                if left is not None:
                    queue.append((left, nid))
                if right is not None:
                    queue.append((right, nid))
            nodes.append(node)
        # second pass: wire child pointers from shapes, breadth-first again
        self.nodes: Tuple[Node, ...] = tuple(nodes)
        self._wire_children(shape)
        # probabilities bottom-up (children have larger ids than parents)
        for node in reversed(self.nodes):
            if node.symbol is None:
                prob = Fraction(0)
                if node.left is not None:
                    prob += self.nodes[node.left].prob
                if node.right is not None:
                    prob += self.nodes[node.right].prob
                node.prob = prob
        self.root = 0
        self._label = None
        self._rows = None
        self._leaf_id = {n.symbol: n.id for n in self.nodes if n.symbol}

    def _wire_children(self, shape: Shape) -> None:
        queue = deque([(shape, 0)])
        next_id = 1
        while queue:
            shp, nid = queue.popleft()
            if isinstance(shp, str):
                continue
            left, right = shp
            node = self.nodes[nid]
            if left is not None:
                node.left = next_id
                queue.append((left, next_id))
                next_id += 1
            if right is not None:
                node.right = next_id
                queue.append((right, next_id))
                next_id += 1

    @property
    def label(self) -> str:
        if self._label is None:
            self._label = shape_label(self.shape)
        return self._label

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        if self._rows is None:
            depth_max = max(n.depth for n in self.nodes)
            rows = [[] for _ in range(depth_max + 1)]
            for n in self.nodes:  # id order within a row = left-to-right
                rows[n.depth].append(n.id)
            self._rows = tuple(tuple(r) for r in rows)
        return self._rows

    def node(self, node_id: int) -> Node:
        return self.nodes[node_id]

    def leaf_id(self, symbol: str) -> int:
        try:
            return self._leaf_id[symbol]
        except KeyError:
            raise UnknownSymbol(symbol) from None

    def depth_of(self, symbol: str) -> int:
        return self.nodes[self.leaf_id(symbol)].depth

    @property
    def max_depth(self) -> int:
        return len(self.rows()) - 1

    @property
    def internal_ids(self) -> Tuple[int, ...]:
        return tuple(n.id for n in self.nodes if not n.is_leaf)

    @property
    def is_complete(self) -> bool:
        return all(n.is_leaf or (n.left is not None and n.right is not None)
                   for n in self.nodes)

    def path(self, node_id: int) -> str:
        """Bit path from the root to a node (0 = left edge, 1 = right edge)."""
        bits = []
        node = self.nodes[node_id]
        while node.parent is not None:
            parent = self.nodes[node.parent]
            bits.append("0" if parent.left == node.id else "1")
            node = parent
        return "".join(reversed(bits))

    def shape_at(self, node_id: int) -> Shape:
        shp = self.shape
        for bit in self.path(node_id):
            shp = shp[0] if bit == "0" else shp[1]
        return shp

    def expected_length(self) -> Fraction:
        return sum((n.prob * n.depth for n in self.nodes if n.is_leaf),
                   Fraction(0))

    def __eq__(self, other) -> bool:
        return (isinstance(other, CodeTree) and self.source == other.source
                and self.label == other.label)

    def __hash__(self) -> int:
        return hash((self.source, self.label))

    def __repr__(self) -> str:
        return "CodeTree(%s)" % self.label


def canonical_label(tree: CodeTree) -> str:
    """Deterministic identity string of a tree (shape, orientation, leaves)."""
    return tree.label


def tree_from_code(source: Source, code) -> CodeTree:
    """Build the code tree whose root-to-leaf paths spell the codewords."""
    if not isinstance(code, PrefixCode):
        code = PrefixCode(code)
    if set(code.words) != set(source.symbols):
        raise AlphabetMismatch(
            "code covers %s, source has %s" %
            (sorted(code.words), sorted(source.symbols)))
    trie: dict = {}
    for sym, word in code.words.items():
        cur = trie
        for bit in word:
            cur = cur.setdefault(bit, {})
        cur["sym"] = sym

    def build(node: dict) -> Shape:
        if "sym" in node:
            return node["sym"]
        left = build(node["0"]) if "0" in node else None
        right = build(node["1"]) if "1" in node else None
        return (left, right)

    return CodeTree(source, build(trie))


def code_from_tree(tree: CodeTree) -> PrefixCode:
    """Read codewords off a tree: left edges are 0, right edges are 1."""
    words = {}
    for sym in tree.source.symbols:
        words[sym] = tree.path(tree.leaf_id(sym))
    return PrefixCode(words)


def kraft_sum(code: PrefixCode, subset: Optional[Iterable[str]] = None
              ) -> Fraction:
    """Exact sum of 2^-len(word) over a subset of the code's symbols."""
    if subset is None:
        subset = code.words
    total = Fraction(0)
    for sym in subset:
        total += Fraction(1, 2 ** len(code.word(sym)))
    return total


def expected_length(source: Source, code: PrefixCode) -> Fraction:
    """Exact average codeword length of `code` under `source`."""
    if set(code.words) != set(source.symbols):
        raise AlphabetMismatch("code does not cover the source alphabet")
    return sum((source.prob(s) * len(w) for s, w in code.words.items()),
               Fraction(0))


def code_from_lengths(source: Source, lengths: Mapping[str, int]
                      ) -> PrefixCode:
    """Canonical prefix code realizing the requested codeword lengths.

    Symbols are ordered by (length ascending, source order) and each is
    assigned the numerically smallest codeword of its length that does
    not conflict with previously assigned prefixes.
    """
    if set(lengths) != set(source.symbols):
        raise AlphabetMismatch("length map does not cover the alphabet")
    for sym, ln in lengths.items():
        if not isinstance(ln, int) or ln < 1:
            raise KraftExceeded("length of %r must be a positive integer" % sym)
    total = sum(Fraction(1, 2 ** ln) for ln in lengths.values())
    if total > 1:
        raise KraftExceeded("Kraft sum %s exceeds 1" % total)
    ordered = sorted(source.symbols, key=lambda s: (lengths[s], source.index(s)))
    words = {}
    value = 0
    prev_len = lengths[ordered[0]]
    for pos, sym in enumerate(ordered):
        ln = lengths[sym]
        if pos:
            value = (value + 1) << (ln - prev_len)
        words[sym] = format(value, "b").rjust(ln, "0")
        prev_len = ln
    return PrefixCode({s: words[s] for s in source.symbols})

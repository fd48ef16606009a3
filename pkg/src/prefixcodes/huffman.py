"""Huffman construction, tie-break enumeration, and the sibling property."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple

from .core import CodeTree, Shape, Source, code_from_tree, shape_label
from .errors import CapExceeded, NotComplete, NotOptimal

DEFAULT_ENUMERATE_CAP = 100_000


class Selector(enum.Enum):
    """Which of several equally small nodes the merge loop picks."""
    FIRST_INDEX = "first"
    LAST_INDEX = "last"


class ChildOrder(enum.Enum):
    """Which side of a merge the smaller-probability node lands on."""
    SMALLER_LEFT = "smaller-left"
    SMALLER_RIGHT = "smaller-right"


@dataclass(frozen=True)
class TiePolicy:
    """Deterministic resolution of every choice in one merge-loop run."""
    selector: Selector = Selector.FIRST_INDEX
    child_order: ChildOrder = ChildOrder.SMALLER_LEFT


DEFAULT_POLICY = TiePolicy()


@dataclass(frozen=True)
class SiblingListing:
    """Non-root node ids in non-increasing probability, siblings adjacent."""
    order: Tuple[int, ...]


def huffman_build(source: Source, policy: TiePolicy = DEFAULT_POLICY
                  ) -> CodeTree:
    """One deterministic run of the merge loop under a tie policy."""
    items = [(prob, shape) for shape, prob in
             ((sym, prob) for sym, prob in source.entries)]

    def pick_min(pool):
        best = None
        for idx, (prob, _) in enumerate(pool):
            if best is None or prob < pool[best][0]:
                best = idx
            elif prob == pool[best][0] and policy.selector is Selector.LAST_INDEX:
                best = idx
        return best

    while len(items) > 1:
        i = pick_min(items)
        small = items.pop(i)
        j = pick_min(items)
        second = items.pop(j)
        if policy.child_order is ChildOrder.SMALLER_LEFT:
            merged = (small[1], second[1])
        else:
            merged = (second[1], small[1])
        items.append((small[0] + second[0], merged))
    return CodeTree(source, items[0][1])


def huffman_enumerate(source: Source, cap: int = DEFAULT_ENUMERATE_CAP
                      ) -> Tuple[CodeTree, ...]:
    """Every tree some run of the merge loop can build, deduplicated.

    Branches at each merge step over (a) every unordered node pair whose
    probabilities can occupy the two smallest positions of the current
    probability multiset and (b) both left/right child orders.  Results
    are returned sorted by canonical label.
    """
    start = tuple(sorted(
        ((sym, prob, sym) for sym, prob in source.entries),
        key=lambda t: t[0]))
    memo: Dict[Tuple[str, ...], FrozenSet[Shape]] = {}

    def rec(state) -> FrozenSet[Shape]:
        # state: tuple of (label, prob, shape), sorted by label
        if len(state) == 1:
            return frozenset({state[0][2]})
        key = tuple(lbl for lbl, _, _ in state)
        hit = memo.get(key)
        if hit is not None:
            return hit
        probs = sorted(p for _, p, _ in state)
        smallest_two = (probs[0], probs[1])
        out = set()
        for i in range(len(state)):
            for j in range(i + 1, len(state)):
                pi, pj = state[i][1], state[j][1]
                if (min(pi, pj), max(pi, pj)) != smallest_two:
                    continue
                rest = state[:i] + state[i + 1:j] + state[j + 1:]
                for left, right in ((state[i], state[j]),
                                    (state[j], state[i])):
                    shape = (left[2], right[2])
                    merged = (shape_label(shape), pi + pj, shape)
                    nxt = tuple(sorted(rest + (merged,), key=lambda t: t[0]))
                    out.update(rec(nxt))
        result = frozenset(out)
        memo[key] = result
        return result

    shapes = rec(start)
    if len(shapes) > cap:
        raise CapExceeded(
            "%d distinct Huffman trees exceed cap %d" % (len(shapes), cap))
    ordered = sorted(shapes, key=shape_label)
    return tuple(CodeTree(source, s) for s in ordered)


def _sibling_pairs(tree: CodeTree):
    """(hi, lo) child pairs of each internal node, hi >= lo by probability."""
    pairs = []
    for nid in tree.internal_ids:
        node = tree.node(nid)
        left, right = tree.node(node.left), tree.node(node.right)
        if left.prob >= right.prob:
            pairs.append((left, right))
        else:
            pairs.append((right, left))
    return pairs


def sibling_property(source: Source, tree: CodeTree
                     ) -> Optional[SiblingListing]:
    """A sibling listing of the tree if one exists, else None.

    Greedy check: sibling pairs sorted by (hi, lo) descending form a
    valid listing whenever any valid listing exists; the exhaustive
    search in `sibling_property_exhaustive` cross-checks this on small
    trees.
    """
    if not tree.is_complete:
        raise NotComplete("a non-root node lacks a sibling")
    pairs = _sibling_pairs(tree)
    pairs.sort(key=lambda hl: (hl[0].prob, hl[1].prob), reverse=True)
    for (_, lo), (hi, _) in zip(pairs, pairs[1:]):
        if lo.prob < hi.prob:
            return None
    order = []
    for hi, lo in pairs:
        order.extend((hi.id, lo.id))
    return SiblingListing(tuple(order))


def sibling_property_exhaustive(source: Source, tree: CodeTree
                                ) -> Optional[SiblingListing]:
    """Backtracking search over all tied pair orderings; test oracle."""
    if not tree.is_complete:
        raise NotComplete("a non-root node lacks a sibling")
    pairs = _sibling_pairs(tree)

    def search(remaining, prev_lo, acc):
        if not remaining:
            return acc
        for k, (hi, lo) in enumerate(remaining):
            if prev_lo is not None and hi.prob > prev_lo:
                continue
            found = search(remaining[:k] + remaining[k + 1:], lo.prob,
                           acc + [hi.id, lo.id])
            if found is not None:
                return found
        return None

    order = search(pairs, None, [])
    return None if order is None else SiblingListing(tuple(order))


def is_huffman(source: Source, tree: CodeTree) -> bool:
    """True iff the tree could result from some run of the merge loop."""
    try:
        return sibling_property(source, tree) is not None
    except NotComplete:
        return False


def _shape_prob(source: Source, shape: Shape) -> Fraction:
    if isinstance(shape, str):
        return source.prob(shape)
    total = Fraction(0)
    for child in shape:
        if child is not None:
            total += _shape_prob(source, child)
    return total


def huffmanize(source: Source, tree: CodeTree) -> CodeTree:
    """Row-permute an optimal tree into a length-equivalent Huffman tree.

    Working upward from the bottom row, each row's nodes (with their
    subtrees) are stably reordered into non-increasing probability, so
    non-leaves keep their relative order.  The result satisfies the
    sibling property.
    """
    from .analysis import is_optimal  # local import to avoid a cycle

    if not tree.is_complete:
        raise NotComplete("huffmanize requires a complete tree")
    if not is_optimal(source, code_from_tree(tree)):
        raise NotOptimal("huffmanize requires an optimal code")
    rows = tree.rows()
    below = [tree.shape_at(nid) for nid in rows[-1]]
    below.sort(key=lambda s: _shape_prob(source, s), reverse=True)
    for depth in range(len(rows) - 2, -1, -1):
        feed = iter(below)
        current = []
        for nid in rows[depth]:
            node = tree.node(nid)
            if node.is_leaf:
                current.append(node.symbol)
            else:
                current.append((next(feed), next(feed)))
        current.sort(key=lambda s: _shape_prob(source, s), reverse=True)
        below = current
    return CodeTree(source, below[0])

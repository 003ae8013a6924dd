"""Decorated rooted trees and their exact weighted sums.

A decorated tree for a genus g and a leaf count n is a rooted tree with
unordered children in which exactly n vertices are leaves, exactly g
vertices have one child, and exactly n - 1 vertices have two children.
Leaves carry a bijective labelling by 1..n, no one-child vertex sits
directly above a leaf, and every internal vertex carries a step label with:

* all step labels distinct, drawn from 1..2g+n-1;
* the label of a one-child vertex exceeds 1, and the label immediately
  below it is used by no vertex (the "skipped slot");
* labels strictly increase from the root towards the leaves;
* used labels plus skipped slots exactly fill 1..2g+n-1, which forces the
  root label to be 1 for a two-child root and 2 for a one-child root.

Such trees are generated from build histories: start with the n labelled
leaves as separate roots and walk a step counter from 2g+n-1 down to zero.
At each step either two roots are joined under a new two-child vertex
carrying the current counter (counter drops by one), or one root with at
least two leaves is capped by a one-child vertex carrying the counter
(counter drops by two, reserving the skipped slot). Each valid decorated
tree arises from exactly one history, so the walk is duplicate-free.

The weight of a tree divides, for every two-child vertex, its number of
leaf descendants by its step label, and for every one-child vertex with m
leaf descendants, (m**3 - m)/12 by its step label, all times an overall
1/n**(n+g-1). Weighted sums over all (g, n) trees are evaluated without
materializing trees, by aggregating histories over the multiset of root
leaf counts; the per-step factors depend only on those counts, so the
aggregation is an exact regrouping of the per-tree sum.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple, Union

__all__ = [
    "Leaf",
    "Unary",
    "Binary",
    "DecoratedTree",
    "canonical_encoding",
    "enumerate_trees",
    "iter_trees",
    "iter_encoded_trees",
    "count_trees",
    "tree_sum",
    "tree_weight",
    "validate_tree",
]


class Leaf(NamedTuple):
    label: int


class Unary(NamedTuple):
    step: int
    child: "DecoratedTree"


class Binary(NamedTuple):
    step: int
    first: "DecoratedTree"
    second: "DecoratedTree"


DecoratedTree = Union[Leaf, Unary, Binary]


def canonical_encoding(tree: DecoratedTree) -> str:
    """Deterministic text form; equal as unordered labelled trees iff equal text.

    Leaves render as ``L<label>``, one-child vertices as ``U<step>(child)``,
    two-child vertices as ``B<step>(x,y)`` with the children's encodings in
    lexicographic order, so sibling order in the value is irrelevant.
    """
    if isinstance(tree, Leaf):
        return f"L{tree.label}"
    if isinstance(tree, Unary):
        return f"U{tree.step}({canonical_encoding(tree.child)})"
    if isinstance(tree, Binary):
        a = canonical_encoding(tree.first)
        b = canonical_encoding(tree.second)
        if b < a:
            a, b = b, a
        return f"B{tree.step}({a},{b})"
    raise TypeError(f"not a decorated tree node: {tree!r}")


def _check_parameters(genus: int, leaves: int) -> None:
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if leaves < 1:
        raise ValueError("leaf count must be positive")


def iter_encoded_trees(genus: int, leaves: int) -> Iterator[tuple[str, DecoratedTree]]:
    """Yield (encoding, tree) for every (genus, leaves) decorated tree.

    One tree per build history; encodings come out of the walk itself, so
    no re-traversal is needed when both are wanted.
    """
    _check_parameters(genus, leaves)
    start = [(Leaf(i), f"L{i}", 1) for i in range(1, leaves + 1)]
    yield from _walk(start, 2 * genus + leaves - 1, genus)


def iter_trees(genus: int, leaves: int) -> Iterator[DecoratedTree]:
    """Yield every (genus, leaves) decorated tree, one per build history."""
    for _, tree in iter_encoded_trees(genus, leaves):
        yield tree


def _walk(roots, step, budget):
    if step == 0:
        if len(roots) == 1 and budget == 0:
            yield roots[0][1], roots[0][0]
        return
    m = len(roots)
    for i in range(m):
        node_i, enc_i, size_i = roots[i]
        for j in range(i + 1, m):
            node_j, enc_j, size_j = roots[j]
            if enc_i <= enc_j:
                joined = (Binary(step, node_i, node_j), f"B{step}({enc_i},{enc_j})")
            else:
                joined = (Binary(step, node_j, node_i), f"B{step}({enc_j},{enc_i})")
            rest = roots[:i] + roots[i + 1 : j] + roots[j + 1 :]
            rest.append((joined[0], joined[1], size_i + size_j))
            yield from _walk(rest, step - 1, budget)
    if budget > 0 and step >= 2:
        for i in range(m):
            node_i, enc_i, size_i = roots[i]
            if size_i >= 2:
                capped = (Unary(step, node_i), f"U{step}({enc_i})", size_i)
                yield from _walk(roots[:i] + [capped] + roots[i + 1 :], step - 2, budget - 1)


def enumerate_trees(genus: int, leaves: int) -> list[DecoratedTree]:
    """All (genus, leaves) decorated trees, sorted by canonical encoding."""
    found = sorted(iter_encoded_trees(genus, leaves), key=lambda pair: pair[0])
    return [t for _, t in found]


def _aggregate(
    sizes: tuple[int, ...],
    budget: int,
    join_factor: Callable[[int, int], Fraction | int],
    cap_factor: Callable[[int, int], Fraction | int],
    memo: dict,
):
    """Sum of per-step factor products over all histories from this state.

    ``sizes`` is the sorted multiset of root leaf counts, ``budget`` the
    number of one-child caps still owed. The step counter is determined:
    one join per surplus root plus two steps per cap. Factors receive the
    vertex's leaf count and the current step counter.
    """
    if len(sizes) == 1 and budget == 0:
        return 1
    state = (sizes, budget)
    hit = memo.get(state)
    if hit is not None:
        return hit
    step = len(sizes) - 1 + 2 * budget
    counts = Counter(sizes)
    distinct = sorted(counts)
    total = 0
    for a_pos, a in enumerate(distinct):
        for b in distinct[a_pos:]:
            if a == b:
                multiplicity = counts[a] * (counts[a] - 1) // 2
            else:
                multiplicity = counts[a] * counts[b]
            if not multiplicity:
                continue
            merged = list(sizes)
            merged.remove(a)
            merged.remove(b)
            merged.append(a + b)
            merged.sort()
            total += (
                multiplicity
                * join_factor(a + b, step)
                * _aggregate(tuple(merged), budget, join_factor, cap_factor, memo)
            )
    if budget > 0:
        eligible = 0
        for a in distinct:
            if a >= 2:
                eligible += counts[a] * cap_factor(a, step)
        if eligible:
            total += eligible * _aggregate(
                sizes, budget - 1, join_factor, cap_factor, memo
            )
    memo[state] = total
    return total


def count_trees(genus: int, leaves: int) -> int:
    """Number of (genus, leaves) decorated trees, i.e. of build histories."""
    _check_parameters(genus, leaves)
    return _aggregate((1,) * leaves, genus, lambda s, t: 1, lambda s, t: 1, {})


def tree_sum(genus: int, leaves: int) -> Fraction:
    """Exact sum of tree weights over all (genus, leaves) decorated trees."""
    _check_parameters(genus, leaves)
    raw = _aggregate(
        (1,) * leaves,
        genus,
        lambda s, t: Fraction(s, t),
        lambda s, t: Fraction(s * s * s - s, 12 * t),
        {},
    )
    return Fraction(raw) / leaves ** (leaves + genus - 1)


class _Survey(NamedTuple):
    leaf_labels: list[int]
    unary_steps: list[int]
    binary_steps: list[int]
    unary_under: list[tuple[int, DecoratedTree]]
    pairs: list[tuple[int, int]]  # (parent step, child step) for internal children


def _survey(tree: DecoratedTree) -> tuple[_Survey, int]:
    """Collect labels, steps, descent pairs; returns the survey and leaf count."""
    survey = _Survey([], [], [], [], [])

    def visit(node: DecoratedTree) -> int:
        if isinstance(node, Leaf):
            survey.leaf_labels.append(node.label)
            return 1
        if isinstance(node, Unary):
            survey.unary_steps.append(node.step)
            survey.unary_under.append((node.step, node.child))
            if not isinstance(node.child, Leaf):
                survey.pairs.append((node.step, node.child.step))
            return visit(node.child)
        if isinstance(node, Binary):
            survey.binary_steps.append(node.step)
            for child in (node.first, node.second):
                if not isinstance(child, Leaf):
                    survey.pairs.append((node.step, child.step))
            return visit(node.first) + visit(node.second)
        raise TypeError(f"not a decorated tree node: {node!r}")

    return survey, visit(tree)


def validate_tree(tree: DecoratedTree) -> str | None:
    """Check every decoration rule; returns None or the first violated rule."""
    survey, _ = _survey(tree)
    n = len(survey.leaf_labels)
    g = len(survey.unary_steps)
    if sorted(survey.leaf_labels) != list(range(1, n + 1)):
        return "leaf labels are not a bijection onto 1..n"
    for _, child in survey.unary_under:
        if isinstance(child, Leaf):
            return "a one-child vertex sits directly above a leaf"
    if len(survey.binary_steps) != n - 1:
        return "two-child vertex count differs from leaf count minus one"
    steps = survey.unary_steps + survey.binary_steps
    if len(set(steps)) != len(steps):
        return "step labels are not distinct"
    top = 2 * g + n - 1
    if steps and not all(1 <= s <= top for s in steps):
        return f"step label outside 1..{top}"
    for parent, child in survey.pairs:
        if child <= parent:
            return "step labels do not increase from root to leaves"
    used = set(steps)
    for s in survey.unary_steps:
        if s < 2 or (s - 1) in used:
            return "a one-child vertex fails to reserve its skipped slot"
    skipped = {s - 1 for s in survey.unary_steps}
    if used | skipped != set(range(1, top + 1)):
        return f"used and skipped labels do not fill 1..{top}"
    if isinstance(tree, Unary) and tree.step != 2:
        return "a one-child root must carry step label 2"
    if isinstance(tree, Binary) and tree.step != 1:
        return "a two-child root must carry step label 1"
    return None


def tree_weight(tree: DecoratedTree) -> Fraction:
    """Exact weight of one decorated tree; rejects malformed trees."""
    problem = validate_tree(tree)
    if problem is not None:
        raise ValueError(f"malformed decorated tree: {problem}")
    weights: list[Fraction] = []

    def visit(node: DecoratedTree) -> int:
        if isinstance(node, Leaf):
            return 1
        if isinstance(node, Unary):
            m = visit(node.child)
            weights.append(Fraction(m * m * m - m, 12 * node.step))
            return m
        m = visit(node.first) + visit(node.second)
        weights.append(Fraction(m, node.step))
        return m

    survey, n = _survey(tree)
    g = len(survey.unary_steps)
    visit(tree)
    value = Fraction(1, n ** (n + g - 1))
    for factor in weights:
        value *= factor
    return value

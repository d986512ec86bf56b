"""Product trees: every parenthesization of an n-factor product.

A ProductTree is a full binary tree whose leaves carry the 1-based factor
positions 1..n in left-to-right order; it encodes one evaluation order of
the product without ever reordering the factors.  There are Catalan(n-1)
such trees.

Canonical enumeration order: for leaves lo..hi, iterate the split point
s = lo..hi-1 (left subtree over lo..s, right over s+1..hi), recursing on
the left first.  For n = 4 this yields, in order:

    x1*(x2*(x3*x4)), x1*((x2*x3)*x4), (x1*x2)*(x3*x4),
    (x1*(x2*x3))*x4, ((x1*x2)*x3)*x4
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .core import FLOAT, Octonion
from .errors import OutOfRangeError, ShapeMismatchError, ZeroInverseError

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786)

MAX_ENUMERATE_FACTORS = 12
MAX_MATRIX_FACTORS = 8


@dataclass(frozen=True)
class Leaf:
    position: int  # 1-based factor index


@dataclass(frozen=True)
class Node:
    left: "ProductTree"
    right: "ProductTree"


ProductTree = Union[Leaf, Node]


def leaf_positions(tree: ProductTree) -> list[int]:
    """Leaf positions in in-order traversal."""
    if isinstance(tree, Leaf):
        return [tree.position]
    return leaf_positions(tree.left) + leaf_positions(tree.right)


def leaf_count(tree: ProductTree) -> int:
    if isinstance(tree, Leaf):
        return 1
    return leaf_count(tree.left) + leaf_count(tree.right)


@lru_cache(maxsize=None)
def _span_trees(lo: int, hi: int) -> tuple:
    if lo == hi:
        return (Leaf(lo),)
    acc = []
    for split in range(lo, hi):
        for left in _span_trees(lo, split):
            for right in _span_trees(split + 1, hi):
                acc.append(Node(left, right))
    return tuple(acc)


def enumerate_trees(n: int) -> list[ProductTree]:
    """All parenthesizations of an n-factor product, in canonical order."""
    if not 1 <= n <= MAX_ENUMERATE_FACTORS:
        raise OutOfRangeError(
            f"factor count must be in 1..{MAX_ENUMERATE_FACTORS}, got {n}"
        )
    return list(_span_trees(1, n))


def left_comb(n: int) -> ProductTree:
    """The fully left-nested tree ((x1*x2)*x3)*..."""
    tree: ProductTree = Leaf(1)
    for k in range(2, n + 1):
        tree = Node(tree, Leaf(k))
    return tree


def right_comb(n: int) -> ProductTree:
    """The fully right-nested tree x1*(x2*(...*xn))."""
    tree: ProductTree = Leaf(n)
    for k in range(n - 1, 0, -1):
        tree = Node(Leaf(k), tree)
    return tree


def render_tree(tree: ProductTree, labels: Sequence[str] | None = None) -> str:
    """Render as an expression, e.g. ``(x1*x2)*x3``."""
    if labels is None:
        labels = [f"x{k}" for k in range(1, leaf_count(tree) + 1)]

    def part(t: ProductTree) -> str:
        if isinstance(t, Leaf):
            return labels[t.position - 1]
        return f"({part(t.left)}*{part(t.right)})"

    if isinstance(tree, Leaf):
        return labels[tree.position - 1]
    return f"{part(tree.left)}*{part(tree.right)}"


def evaluate(tree: ProductTree, factors: Sequence[Octonion]) -> Octonion:
    """Evaluate the product of ``factors`` in the order the tree encodes."""
    if leaf_positions(tree) != list(range(1, len(factors) + 1)):
        raise ShapeMismatchError(
            f"tree leaves must be positions 1..{len(factors)} in order"
        )
    return _evaluate(tree, factors)


def _evaluate(tree: ProductTree, factors: Sequence[Octonion]) -> Octonion:
    if isinstance(tree, Leaf):
        return factors[tree.position - 1]
    return _evaluate(tree.left, factors) * _evaluate(tree.right, factors)


def _require_nonzero_factors(factors: Sequence[Octonion]) -> None:
    for k, f in enumerate(factors, start=1):
        if not f:
            raise ZeroInverseError(f"factor {k} is zero; all factors must be invertible")


def generalized_associator(i: int, j: int, factors: Sequence[Octonion]) -> Octonion:
    """inverse(p_i) * p_j, where p_k is the product under the k-th canonical
    tree; multiplying p_i by the result gives p_j."""
    trees = enumerate_trees(len(factors))
    if not (0 <= i < len(trees) and 0 <= j < len(trees)):
        raise IndexError(
            f"tree indices must be in 0..{len(trees) - 1}, got ({i}, {j})"
        )
    _require_nonzero_factors(factors)
    p_i = evaluate(trees[i], factors)
    p_j = evaluate(trees[j], factors)
    return p_i.inverse() * p_j


@dataclass(frozen=True)
class AssociatorMatrix:
    """Every pairwise evaluation-order associator of one factor sequence.

    entries[i][j] converts the product under tree i into the product under
    tree j.  The diagonal is 1 and entries[j][i] is the conjugate of
    entries[i][j].
    """

    n: int
    trees: tuple[ProductTree, ...]
    entries: tuple[tuple[Octonion, ...], ...]

    @property
    def size(self) -> int:
        return len(self.trees)

    def entry(self, i: int, j: int) -> Octonion:
        return self.entries[i][j]


def associator_matrix(factors: Sequence[Octonion]) -> AssociatorMatrix:
    """Materialize all pairwise order-conversion factors for one sequence."""
    n = len(factors)
    if not 1 <= n <= MAX_MATRIX_FACTORS:
        raise OutOfRangeError(
            f"matrix factor count must be in 1..{MAX_MATRIX_FACTORS}, got {n}"
        )
    _require_nonzero_factors(factors)
    trees = tuple(enumerate_trees(n))
    products = [evaluate(t, factors) for t in trees]
    if factors[0].backend == FLOAT:
        entries = _entries_float(products)
    else:
        inverses = [p.inverse() for p in products]
        entries = tuple(
            tuple(inverses[i] * products[j] for j in range(len(trees)))
            for i in range(len(trees))
        )
    return AssociatorMatrix(n=n, trees=trees, entries=entries)


def _entries_float(products: list[Octonion]) -> tuple:
    """Batched float path; agrees with the scalar loop bit for bit."""
    from . import kernels

    count = len(products)
    p = kernels.from_octonions(products)
    inv = kernels.inverse(p)
    flat = kernels.multiply(np.repeat(inv, count, axis=0), np.tile(p, (count, 1)))
    grid = flat.reshape(count, count, 8)
    return tuple(
        tuple(Octonion([float(v) for v in grid[i, j]]) for j in range(count))
        for i in range(count)
    )


def format_matrix_text(matrix: AssociatorMatrix, labels: Sequence[str] | None = None) -> str:
    """Aligned plain-text table of the matrix entries."""
    cells = [
        [str(matrix.entries[i][j]) for j in range(matrix.size)]
        for i in range(matrix.size)
    ]
    widths = [
        max(len(cells[i][j]) for i in range(matrix.size)) for j in range(matrix.size)
    ]
    lines = []
    for i, row in enumerate(cells):
        padded = "   ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip()
        lines.append(f"[{i + 1}] {padded}")
    return "\n".join(lines)


def format_matrix_machine(matrix: AssociatorMatrix) -> str:
    """One line per entry: ``i<TAB>j<TAB>coefficients`` (1-based indices)."""
    from .textform import format_coefficients

    lines = []
    for i in range(matrix.size):
        for j in range(matrix.size):
            lines.append(f"{i + 1}\t{j + 1}\t{format_coefficients(matrix.entries[i][j])}")
    return "\n".join(lines)

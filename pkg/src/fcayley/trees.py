"""Rooted binary trees and the balanced-parentheses encoding used for vertex keys.

A tree is either a leaf (encoded ".") or a caret over two subtrees
(encoded "(" + left + right + ")").  Heights: a leaf has height 0, a caret
has height max(children) + 1.
"""

from __future__ import annotations

from functools import lru_cache


class Tree:
    """Immutable rooted binary tree. Construct leaves via LEAF, carets via caret()."""

    __slots__ = ("left", "right", "leaves", "height", "enc")

    def __init__(self, left: "Tree | None" = None, right: "Tree | None" = None):
        if (left is None) != (right is None):
            raise ValueError("a caret needs both subtrees")
        self.left = left
        self.right = right
        if left is None:
            self.leaves = 1
            self.height = 0
            self.enc = "."
        else:
            self.leaves = left.leaves + right.leaves
            self.height = max(left.height, right.height) + 1
            self.enc = "(" + left.enc + right.enc + ")"

    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other):
        return isinstance(other, Tree) and self.enc == other.enc

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.enc)

    def __repr__(self):
        return f"Tree({self.enc!r})"


LEAF = Tree()


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def parse_tree(s: str) -> Tree:
    """Parse the balanced-parentheses encoding. Inverse of Tree.enc."""
    pos = 0

    def go() -> Tree:
        nonlocal pos
        if pos >= len(s):
            raise ValueError(f"truncated tree encoding: {s!r}")
        c = s[pos]
        if c == ".":
            pos += 1
            return LEAF
        if c == "(":
            pos += 1
            left = go()
            right = go()
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"unbalanced tree encoding: {s!r}")
            pos += 1
            return caret(left, right)
        raise ValueError(f"bad character {c!r} in tree encoding: {s!r}")

    t = go()
    if pos != len(s):
        raise ValueError(f"trailing junk in tree encoding: {s!r}")
    return t


def sibling_leaf_pairs(t: Tree) -> set[int]:
    """Indices i such that leaves i and i+1 are the two children of one caret."""
    out: set[int] = set()

    def go(node: Tree, offset: int) -> None:
        if node.is_leaf():
            return
        if node.left.is_leaf() and node.right.is_leaf():
            out.add(offset)
            return
        go(node.left, offset)
        go(node.right, offset + node.left.leaves)

    go(t, 0)
    return out


def collapse_sibling(t: Tree, i: int) -> Tree:
    """Replace the caret whose children are leaves i, i+1 by a single leaf."""
    if t.is_leaf():
        raise ValueError("no caret to collapse in a leaf")
    if t.leaves == 2:
        if i != 0:
            raise ValueError(f"index {i} out of range")
        return LEAF
    nl = t.left.leaves
    if i <= nl - 2:
        return caret(collapse_sibling(t.left, i), t.right)
    if i >= nl:
        return caret(t.left, collapse_sibling(t.right, i - nl))
    raise ValueError(f"leaves {i},{i + 1} are not siblings")


def merge(a: Tree, b: Tree) -> Tree:
    """Least common extension of two trees (union of their caret sets)."""
    if a.is_leaf():
        return b
    if b.is_leaf():
        return a
    return caret(merge(a.left, b.left), merge(a.right, b.right))


def align(t: Tree, e: Tree) -> list[Tree]:
    """Subtrees of e sitting under the leaves of t, left to right.

    Requires e to be an extension of t.
    """
    if t.is_leaf():
        return [e]
    if e.is_leaf():
        raise ValueError("tree does not extend the pattern")
    return align(t.left, e.left) + align(t.right, e.right)


def graft(t: Tree, subs: list[Tree]) -> Tree:
    """Replace the leaves of t, left to right, by the given subtrees."""
    if len(subs) != t.leaves:
        raise ValueError(f"need {t.leaves} subtrees, got {len(subs)}")
    it = iter(subs)

    def go(node: Tree) -> Tree:
        if node.is_leaf():
            return next(it)
        return caret(go(node.left), go(node.right))

    return go(t)


@lru_cache(maxsize=None)
def enumerate_trees(leaves: int, max_height: int) -> tuple[Tree, ...]:
    """All trees with the given leaf count and height <= max_height."""
    if leaves < 1:
        raise ValueError("a tree has at least one leaf")
    if leaves == 1:
        return (LEAF,)
    if max_height < 1 or leaves > 2 ** max_height:
        return ()
    out = []
    for nl in range(1, leaves):
        for lt in enumerate_trees(nl, max_height - 1):
            for rt in enumerate_trees(leaves - nl, max_height - 1):
                out.append(caret(lt, rt))
    return tuple(out)

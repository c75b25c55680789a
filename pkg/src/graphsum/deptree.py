"""Rooted ordered labeled trees for sentences, plus the traversal tables
needed by the tree-edit-distance dynamic program.

Children are ordered by surface word position: dependency trees are
unordered mathematically, but the edit-distance algorithm requires ordered
trees and word order is the deterministic, linguistically natural choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .corpus import ConlluToken
from .errors import CycleDetected, EmptySentence, MultipleRoots, NoRoot


@dataclass(frozen=True)
class DepTree:
    labels: tuple[str, ...]
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def root(self) -> int:
        return self.parent.index(None)

    @staticmethod
    def from_parents(labels: Sequence[str], parent: Sequence[int | None]) -> "DepTree":
        """Build a tree from a parent array (None marks the root)."""
        n = len(labels)
        if n == 0:
            raise EmptySentence("cannot build a tree with no nodes")
        if len(parent) != n:
            raise ValueError("labels and parent arrays must have equal length")
        roots = [i for i, p in enumerate(parent) if p is None]
        if len(roots) > 1:
            raise MultipleRoots(f"nodes {roots} all have no parent")

        # Every node has at most one parent, so any node that never reaches
        # a root by walking up sits on a cycle.
        state = [0] * n  # 0 unvisited, 1 on current walk, 2 done
        for start in range(n):
            path = []
            v: int | None = start
            while v is not None and state[v] == 0:
                state[v] = 1
                path.append(v)
                v = parent[v]
            if v is not None and state[v] == 1:
                raise CycleDetected(f"head chain from node {start} revisits node {v}")
            for u in path:
                state[u] = 2
        if not roots:
            raise NoRoot("no node has head 0")

        children: list[list[int]] = [[] for _ in range(n)]
        for i, p in enumerate(parent):
            if p is not None:
                children[p].append(i)  # ascending node index == word order
        return DepTree(
            labels=tuple(labels),
            parent=tuple(parent),
            children=tuple(tuple(c) for c in children),
        )


def tree_from_conllu(tokens: Sequence[ConlluToken]) -> DepTree:
    """Tree for one parsed sentence; node labels are lowercased lemmas."""
    if not tokens:
        raise EmptySentence("empty token table")
    ordered = sorted(tokens, key=lambda t: t.index)
    position = {tok.index: i for i, tok in enumerate(ordered)}
    labels = []
    parent: list[int | None] = []
    for tok in ordered:
        lemma = tok.lemma if tok.lemma and tok.lemma != "_" else tok.form
        labels.append(lemma.lower())
        parent.append(None if tok.head == 0 else position[tok.head])
    return DepTree.from_parents(labels, parent)


def fallback_tree(lemmas: Sequence[str]) -> DepTree:
    """Right-leaning chain: token k parents token k+1, first token is root.

    Used when no parse is available; preserves adjacency so the tree edit
    distance degrades to a sequence edit distance.
    """
    if not lemmas:
        raise EmptySentence("cannot build a tree for an empty sentence")
    parent: list[int | None] = [None] + list(range(len(lemmas) - 1))
    return DepTree.from_parents(list(lemmas), parent)


@dataclass(frozen=True)
class TedTables:
    postorder: tuple[int, ...]  # original node ids in postorder
    lml: tuple[int, ...]        # postorder index of each node's leftmost leaf
    keyroots: tuple[int, ...]   # ascending postorder indices


def prepare_ted_tables(tree: DepTree) -> TedTables:
    """Postorder numbering, leftmost-leaf table, and keyroots for a tree.

    A node is a keyroot iff it is the root or not the first child of its
    parent; there are exactly as many keyroots as leaves.
    """
    order: list[int] = []
    stack: list[tuple[int, bool]] = [(tree.root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
        else:
            stack.append((node, True))
            for child in reversed(tree.children[node]):
                stack.append((child, False))

    pos = {node: k for k, node in enumerate(order)}
    lml = [0] * len(order)
    for k, node in enumerate(order):
        kids = tree.children[node]
        lml[k] = k if not kids else lml[pos[kids[0]]]

    keyroots = []
    for k, node in enumerate(order):
        p = tree.parent[node]
        if p is None or tree.children[p][0] != node:
            keyroots.append(k)
    keyroots.sort()

    return TedTables(postorder=tuple(order), lml=tuple(lml), keyroots=tuple(keyroots))

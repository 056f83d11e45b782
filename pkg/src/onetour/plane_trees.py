"""Labeled rooted plane trees and their bijection with digraphs that have a
unique Eulerian tour.

Trees live on the labels ``0..n`` with root 0. ``L_n`` holds the trees whose
leftmost root child is 1; ``L'_n`` the ones in ``L_n`` that also have 2
below 1. ``involution_f`` swaps the two halves of ``L_n``, and ``map_g``
turns a tree of ``L'_n`` into a digraph in which every parent closes a cycle
through its children.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .digraph import (
    DiGraph,
    PreconditionError,
    cycle_edges,
    explain_not_in_A,
    simple_cycles,
    unique_simple_path,
)

# a shape is a plane tree on preorder positions 0..n: children lists by position
Shape = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class RootedPlaneTree:
    n: int
    children: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.n
        kids = tuple(tuple(int(c) for c in cs) for cs in self.children)
        if len(kids) != n + 1:
            raise ValueError(f"need child lists for labels 0..{n}")
        seen = {0}
        for x in range(n + 1):
            for c in kids[x]:
                if not 1 <= c <= n:
                    raise ValueError(f"child label {c} outside 1..{n}")
                if c in seen:
                    raise ValueError(f"label {c} has two parents or is the root")
                seen.add(c)
        if len(seen) != n + 1:
            raise ValueError("not every label is reachable from the root")
        # n edges, n+1 nodes, every non-root label has one parent: check acyclic
        parent = {c: x for x in range(n + 1) for c in kids[x]}
        for v in range(1, n + 1):
            x, steps = v, 0
            while x != 0:
                x = parent[x]
                steps += 1
                if steps > n:
                    raise ValueError("child lists contain a cycle")
        object.__setattr__(self, "children", kids)

    @classmethod
    def from_children(cls, n: int, mapping: Mapping[int, Sequence[int]]) -> "RootedPlaneTree":
        kids = [()] * (n + 1)
        for x, cs in mapping.items():
            x = int(x)
            if not 0 <= x <= n:
                raise ValueError(f"node label {x} outside 0..{n}")
            kids[x] = tuple(cs)
        return cls(n, tuple(kids))

    def child(self, x: int, j: int) -> int:
        """The ``j``-th child of ``x`` counting from 1, left to right."""
        return self.children[x][j - 1]

    def parent_map(self) -> Dict[int, int]:
        return {c: x for x in range(self.n + 1) for c in self.children[x]}

    def subtree(self, x: int) -> set:
        out = {x}
        stack = [x]
        while stack:
            for c in self.children[stack.pop()]:
                out.add(c)
                stack.append(c)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "children": {str(x): list(cs) for x, cs in enumerate(self.children) if cs},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "RootedPlaneTree":
        try:
            n = obj["n"]
            children = obj["children"]
        except (KeyError, TypeError):
            raise ValueError('tree JSON needs keys "n" and "children"') from None
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f'"n" must be a positive integer, got {n!r}')
        if not isinstance(children, Mapping):
            raise ValueError('"children" must be an object mapping labels to lists')
        mapping = {}
        for key, cs in children.items():
            try:
                x = int(key)
            except ValueError:
                raise ValueError(f"node key {key!r} is not an integer") from None
            if not isinstance(cs, list) or not all(isinstance(c, int) for c in cs):
                raise ValueError(f"children of {key} must be a list of integers")
            mapping[x] = cs
        return cls.from_children(n, mapping)


def is_in_L(T: RootedPlaneTree) -> bool:
    return bool(T.children[0]) and T.children[0][0] == 1


def is_in_Lprime(T: RootedPlaneTree) -> bool:
    return is_in_L(T) and T.n >= 2 and 2 in T.subtree(1)


def involution_f(T: RootedPlaneTree) -> RootedPlaneTree:
    """Swap the later root children with the children of vertex 1."""
    if not is_in_L(T):
        raise PreconditionError("tree is not in L_n: the leftmost child of the root must be 1")
    kids = list(T.children)
    root_rest = kids[0][1:]
    kids[0] = (1,) + kids[1]
    kids[1] = root_rest
    return RootedPlaneTree(T.n, tuple(kids))


def g_edges(T: RootedPlaneTree) -> List[Tuple[int, int]]:
    edges = []
    for x, cs in enumerate(T.children):
        r = len(cs)
        if r == 0:
            continue
        edges.extend(zip(cs, cs[1:]))
        if x == 0:
            # a lone root child would give a loop at 1; no edge in that case
            if r >= 2:
                edges.append((cs[-1], cs[0]))
        else:
            edges.append((cs[-1], x))
            edges.append((x, cs[0]))
    return edges


def map_g(T: RootedPlaneTree) -> DiGraph:
    """Each non-root vertex forms a cycle with its children (x, first child,
    ..., last child, back to x); the root's children form a cycle of their
    own."""
    if not is_in_Lprime(T):
        raise PreconditionError("tree is not in L'_n: needs root child 1 first and 2 under 1")
    return DiGraph(T.n, tuple(g_edges(T)))


def inverse_g(D: DiGraph) -> RootedPlaneTree:
    """The tree ``T`` in ``L'_n`` with ``map_g(T) == D``."""
    if D.n < 2:
        raise PreconditionError("need n >= 2")
    reason = explain_not_in_A(D)
    if reason is not None:
        raise PreconditionError(reason)

    cycles = simple_cycles(D)
    through: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    for c in cycles:
        for v in c:
            through[v].append(c)

    kids: List[List[int]] = [[] for _ in range(D.n + 1)]

    def build_subtree(r: int, cycle: Tuple[int, ...], first: int) -> None:
        i = cycle.index(first)
        for v in cycle[i:] + cycle[:i]:
            if v == r:
                continue
            kids[r].append(v)
            others = [c for c in through[v] if c != cycle]
            if others:
                (other,) = others
                build_subtree(v, other, _successor(other, v))

    mine = through[1]
    if len(mine) == 1:
        kids[0].append(1)
        build_subtree(1, mine[0], _successor(mine[0], 1))
    else:
        path = unique_simple_path(D, 1, 2)
        path_edges = set(zip(path, path[1:]))
        c1, c2 = mine
        if path_edges & set(cycle_edges(c1)):
            c1, c2 = c2, c1
        build_subtree(0, c1, 1)
    return RootedPlaneTree(D.n, tuple(tuple(k) for k in kids))


def _successor(cycle: Tuple[int, ...], v: int) -> int:
    i = cycle.index(v)
    return cycle[(i + 1) % len(cycle)]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def dyck_words(n: int) -> Iterator[Tuple[int, ...]]:
    """Balanced words of length 2n over {1 (open), 0 (close)}, lexicographic
    with open before close."""
    word: List[int] = []

    def rec(opened: int, closed: int) -> Iterator[Tuple[int, ...]]:
        if closed == n:
            yield tuple(word)
            return
        if opened < n:
            word.append(1)
            yield from rec(opened + 1, closed)
            word.pop()
        if closed < opened:
            word.append(0)
            yield from rec(opened, closed + 1)
            word.pop()

    yield from rec(0, 0)


def shape_from_dyck(word: Sequence[int]) -> Shape:
    """Plane tree whose nodes are numbered in preorder; each open step enters
    a new child of the current node."""
    kids: List[List[int]] = [[]]
    stack = [0]
    for step in word:
        if step:
            node = len(kids)
            kids.append([])
            kids[stack[-1]].append(node)
            stack.append(node)
        else:
            stack.pop()
    return tuple(tuple(k) for k in kids)


def enumerate_unlabeled(n: int) -> List[Shape]:
    """All rooted plane trees with n+1 nodes (there are Catalan(n) of them)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [shape_from_dyck(w) for w in dyck_words(n)]


def _labelings(n: int, want_prime: bool) -> Iterator[RootedPlaneTree]:
    if n < 1:
        raise ValueError("n must be at least 1")
    for shape in enumerate_unlabeled(n):
        # preorder position 1 is the leftmost root child; its subtree is the
        # contiguous block 1..last
        last = 1
        stack = [1]
        while stack:
            for c in shape[stack.pop()]:
                last = max(last, c)
                stack.append(c)
        for perm in permutations(range(2, n + 1)):
            label = (0, 1) + perm
            if want_prime and (n < 2 or label.index(2) > last):
                continue
            kids = [()] * (n + 1)
            for pos, cs in enumerate(shape):
                kids[label[pos]] = tuple(label[c] for c in cs)
            yield RootedPlaneTree(n, tuple(kids))


def enumerate_L(n: int) -> Iterator[RootedPlaneTree]:
    return _labelings(n, want_prime=False)


def enumerate_Lprime(n: int) -> Iterator[RootedPlaneTree]:
    if n < 2:
        raise ValueError("L'_n needs n >= 2")
    return _labelings(n, want_prime=True)

"""Arborescence counting and the BEST formula for Eulerian tours.

Counts are exact: the Matrix-Tree minor is evaluated with fraction-free
(Bareiss) elimination over Python integers, so nothing can overflow.
"""
from __future__ import annotations

from itertools import combinations
from math import factorial, prod
from typing import List

from .digraph import (
    DiGraph,
    Edge,
    PreconditionError,
    degrees,
    is_balanced,
    is_strongly_connected,
)

Matrix = List[List[int]]


def laplacian(D: DiGraph) -> Matrix:
    """Out-degree Laplacian, 0-indexed (row ``v - 1`` is vertex ``v``).

    Loops are dropped: they cancel on the diagonal and never lie on an
    arborescence.
    """
    n = D.n
    L = [[0] * n for _ in range(n)]
    for u, v in D.edges:
        if u == v:
            continue
        L[u - 1][u - 1] += 1
        L[u - 1][v - 1] -= 1
    return L


def bareiss_determinant(M: Matrix) -> int:
    """Exact determinant of a square integer matrix."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def count_in_trees(D: DiGraph, v: int) -> int:
    """Number of spanning arborescences with every edge pointing toward ``v``."""
    if not 1 <= v <= D.n:
        raise ValueError(f"root {v} is not a vertex")
    L = laplacian(D)
    keep = [i for i in range(D.n) if i != v - 1]
    return bareiss_determinant([[L[i][j] for j in keep] for i in keep])


def count_in_trees_bruteforce(D: DiGraph, v: int) -> int:
    """Reference count: test every (n-1)-subset of non-loop edges."""
    if not 1 <= v <= D.n:
        raise ValueError(f"root {v} is not a vertex")
    candidates = [e for e in D.edges if e[0] != e[1] and e[0] != v]
    total = 0
    for subset in combinations(candidates, D.n - 1):
        parent = {}
        for a, b in subset:
            if a in parent:
                break
            parent[a] = b
        else:
            if _all_reach_root(parent, v, D.n):
                total += 1
    return total


def _all_reach_root(parent: dict, root: int, n: int) -> bool:
    for start in range(1, n + 1):
        x = start
        steps = 0
        while x != root:
            x = parent.get(x)
            steps += 1
            if x is None or steps > n:
                return False
    return True


def best_count(D: DiGraph, e: Edge) -> int:
    """Number of Eulerian tours starting with ``e``: the arborescence count at
    ``init(e)`` times the product of ``(outdeg(u) - 1)!``."""
    e = tuple(e)
    if e not in D.edge_set:
        raise PreconditionError(f"{e} is not an edge of the digraph")
    if not is_balanced(D):
        raise PreconditionError("digraph is not balanced")
    if not is_strongly_connected(D):
        raise PreconditionError("digraph is not connected")
    weight = prod(factorial(o - 1) for _, o in degrees(D).values())
    return count_in_trees(D, e[0]) * weight


def corollary_membership(D: DiGraph) -> bool:
    """Exactly one in-arborescence at every root and every outdegree 1 or 2.

    Returns False for digraphs with a loop or an isolated vertex.
    """
    return explain_corollary_failure(D) is None


def explain_corollary_failure(D: DiGraph):
    if not D.is_loopless():
        return "digraph has a loop"
    for v, (i, o) in degrees(D).items():
        if i + o == 0:
            return f"vertex {v} is isolated"
        if o not in (1, 2):
            return f"vertex {v} has outdegree {o}; every outdegree must be 1 or 2"
    for v in D.vertices:
        t = count_in_trees(D, v)
        if t != 1:
            return f"{t} spanning in-arborescences rooted at vertex {v}; exactly one is required"
    return None

"""Counting loopless digraphs with a unique Eulerian tour, three ways.

* brute force: scan every edge subset of the complete loopless digraph;
* trees: push every tree of ``L'_n`` through ``map_g``;
* parentheses: count valid arrangements and divide by the 2n marked edges.

All three must equal ``(n-1)! * Catalan(n) / 2`` (OEIS A102693).
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb, factorial
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .digraph import DiGraph, in_A
from .parens import enumerate_valid
from .plane_trees import enumerate_Lprime, map_g

BRUTE_FORCE_MAX_N = 5
PARENS_MAX_N = 4


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return comb(2 * n, n) // (n + 1)


def expected_A_count(n: int) -> int:
    if n < 2:
        raise ValueError("the count (n-1)! C_n / 2 is only an integer for n >= 2")
    return factorial(n - 1) * catalan(n) // 2


def _candidate_edges(n: int) -> List[Tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]


def _scan_range(n: int, lo: int, hi: int) -> List[Tuple[Tuple[int, int], ...]]:
    """Edge subsets with mask in [lo, hi) that give a digraph in A_n."""
    edges = _candidate_edges(n)
    masks = np.arange(lo, hi, dtype=np.int64)
    indeg = np.zeros((n, masks.size), dtype=np.int8)
    outdeg = np.zeros((n, masks.size), dtype=np.int8)
    for bit, (u, v) in enumerate(edges):
        present = ((masks >> bit) & 1).astype(np.int8)
        outdeg[u - 1] += present
        indeg[v - 1] += present
    # vectorized prefilter on necessary conditions only: balanced, no isolated vertex
    keep = np.all(indeg == outdeg, axis=0) & np.all(outdeg > 0, axis=0)
    found = []
    for mask in masks[keep].tolist():
        D = DiGraph(n, tuple(e for bit, e in enumerate(edges) if mask >> bit & 1))
        if in_A(D):
            found.append(D.edges)
    return found


def brute_force_A(n: int, workers: int = 1, chunks: int = 8) -> Iterator[DiGraph]:
    """Every loopless digraph on [n] without isolated vertices and with a
    unique Eulerian tour, sorted by edge list."""
    if not 2 <= n <= BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force supports 2 <= n <= {BRUTE_FORCE_MAX_N}")
    total = 1 << (n * (n - 1))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    ranges = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range, [n] * len(ranges), *zip(*ranges)))
    else:
        parts = [_scan_range(n, lo, hi) for lo, hi in ranges]
    found = sorted(e for part in parts for e in part)
    return (DiGraph(n, e) for e in found)


def enumerate_A_via_g(n: int) -> Iterator[DiGraph]:
    return (map_g(T) for T in enumerate_Lprime(n))


@dataclass
class CountReport:
    n: int
    expected: int
    via_bruteforce: Optional[int]
    via_tree_bijection: int
    via_parens: Optional[int]
    agree: bool

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def verify_theorem1(
    n: int,
    bruteforce_max: int = BRUTE_FORCE_MAX_N,
    parens_max: int = PARENS_MAX_N,
) -> CountReport:
    """Count A_n by every leg that is feasible for this ``n``; a leg that is
    skipped reports None and does not take part in ``agree``."""
    expected = expected_A_count(n)
    brute = sum(1 for _ in brute_force_A(n)) if n <= min(bruteforce_max, BRUTE_FORCE_MAX_N) else None
    trees = len(set(enumerate_A_via_g(n)))
    parens = None
    if n <= parens_max:
        arrangements = sum(1 for _ in enumerate_valid(n))
        q, r = divmod(arrangements, 2 * n)
        parens = q if r == 0 else -1
    legs = [x for x in (brute, trees, parens) if x is not None]
    return CountReport(n, expected, brute, trees, parens, all(x == expected for x in legs))


def count_table(ns: Sequence[int], **kwargs) -> List[CountReport]:
    return [verify_theorem1(n, **kwargs) for n in ns]

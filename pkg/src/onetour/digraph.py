"""Simple digraphs on the vertex set 1..n, structural predicates and a
brute-force Eulerian tour oracle.

A digraph here never has two edges with the same (init, fin) pair. Loops are
allowed (at most one per vertex) because the degree-2 digraphs used by the
parenthesis bijection need them.

Note on terminology: an "Eulerian digraph" in this package means a digraph
with no isolated vertex and *exactly one* Eulerian tour up to cyclic shift,
not merely one that admits a tour.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

Edge = Tuple[int, int]
Cycle = Tuple[int, ...]


class PreconditionError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class DiGraph:
    """Immutable simple digraph; ``edges`` is kept in lexicographic order so
    that two digraphs with the same edge set compare (and hash) equal."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = tuple(sorted((int(u), int(v)) for u, v in self.edges))
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{self.n}")
        for a, b in zip(edges, edges[1:]):
            if a == b:
                raise ValueError(f"repeated edge {a}; parallel edges are not supported")
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def out_edges(self) -> Dict[int, Tuple[Edge, ...]]:
        out: Dict[int, List[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e[0]].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def successors(self) -> Dict[int, Tuple[int, ...]]:
        return {v: tuple(f for _, f in es) for v, es in self.out_edges.items()}

    @cached_property
    def predecessors(self) -> Dict[int, Tuple[int, ...]]:
        pred: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            pred[v].append(u)
        return {v: tuple(ps) for v, ps in pred.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    @property
    def loops(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if e[0] == e[1])

    def is_loopless(self) -> bool:
        return not self.loops

    def with_edges(self, edges) -> "DiGraph":
        return DiGraph(self.n, tuple(edges))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "DiGraph":
        try:
            n = obj["n"]
            edges = obj["edges"]
        except (KeyError, TypeError):
            raise ValueError('digraph JSON needs keys "n" and "edges"') from None
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f'"n" must be an integer, got {n!r}')
        pairs = []
        for item in edges:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ValueError(f"edge must be a pair [init, fin], got {item!r}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in item):
                raise ValueError(f"edge endpoints must be integers, got {item!r}")
            pairs.append((item[0], item[1]))
        return cls(n, tuple(pairs))

    def to_dot(self, name: str = "D", highlight: Optional[Edge] = None) -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {v};")
        for u, v in self.edges:
            attr = " [color=red, penwidth=2]" if (u, v) == highlight else ""
            lines.append(f"  {u} -> {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EulerianTour:
    """A closed trail given as its edge sequence.

    Two tours that differ by a cyclic shift have the same ``canonical()``
    form, the rotation that starts with the lexicographically smallest edge.
    """

    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        if not edges:
            raise ValueError("a tour needs at least one edge")
        if len(set(edges)) != len(edges):
            raise ValueError("a tour uses every edge at most once")
        for a, b in zip(edges, edges[1:] + edges[:1]):
            if a[1] != b[0]:
                raise ValueError(f"edges {a} and {b} are not chained")
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.edges)

    def canonical(self) -> "EulerianTour":
        return EulerianTour(canonical_rotation(self.edges))

    def vertex_sequence(self) -> Tuple[int, ...]:
        return tuple(e[0] for e in self.edges)

    def covers(self, D: DiGraph) -> bool:
        return len(self.edges) == len(D.edges) and set(self.edges) == D.edge_set


def canonical_rotation(seq: Sequence) -> tuple:
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


# ---------------------------------------------------------------------------
# degrees and connectivity
# ---------------------------------------------------------------------------

def degrees(D: DiGraph) -> Dict[int, Tuple[int, int]]:
    """Map each vertex to ``(indegree, outdegree)``. A loop adds one to both."""
    indeg = dict.fromkeys(D.vertices, 0)
    outdeg = dict.fromkeys(D.vertices, 0)
    for u, v in D.edges:
        outdeg[u] += 1
        indeg[v] += 1
    return {v: (indeg[v], outdeg[v]) for v in D.vertices}


def is_balanced(D: DiGraph) -> bool:
    return all(i == o for i, o in degrees(D).values())


def isolated_vertices(D: DiGraph) -> List[int]:
    return [v for v, (i, o) in degrees(D).items() if i + o == 0]


def _reach(start: int, nbrs: Mapping[int, Sequence[int]]) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_strongly_connected(D: DiGraph) -> bool:
    if D.n == 1:
        return True
    return (len(_reach(1, D.successors)) == D.n
            and len(_reach(1, D.predecessors)) == D.n)


# ---------------------------------------------------------------------------
# cycles and paths
# ---------------------------------------------------------------------------

def simple_cycles(D: DiGraph) -> List[Cycle]:
    """All simple oriented cycles, each rotated to start at its smallest
    vertex, sorted. A loop ``(v, v)`` is reported as the 1-cycle ``(v,)``."""
    succ = D.successors
    found: List[Cycle] = []

    for s in D.vertices:
        path = [s]
        on_path = {s}

        def dfs(x: int) -> None:
            for y in succ[x]:
                if y == s:
                    found.append(tuple(path))
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    dfs(y)
                    path.pop()
                    on_path.discard(y)

        dfs(s)
    return sorted(found)


def cycle_edges(cycle: Cycle) -> List[Edge]:
    return [(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])]


def iter_simple_paths(D: DiGraph, u: int, v: int) -> Iterator[Tuple[int, ...]]:
    succ = D.successors
    path = [u]
    on_path = {u}

    def dfs(x: int) -> Iterator[Tuple[int, ...]]:
        for y in succ[x]:
            if y == v:
                yield tuple(path) + (v,)
            elif y not in on_path:
                path.append(y)
                on_path.add(y)
                yield from dfs(y)
                path.pop()
                on_path.discard(y)

    yield from dfs(u)


def count_simple_paths(D: DiGraph, u: int, v: int, limit: Optional[int] = None) -> int:
    """Number of simple oriented paths from ``u`` to ``v`` (stops counting at
    ``limit`` when given)."""
    if u == v:
        raise ValueError("endpoints of a path must differ")
    count = 0
    for _ in iter_simple_paths(D, u, v):
        count += 1
        if limit is not None and count >= limit:
            break
    return count


def unique_simple_path(D: DiGraph, u: int, v: int) -> Optional[Tuple[int, ...]]:
    """The simple path from ``u`` to ``v`` if it is the only one, else None."""
    if u == v:
        raise ValueError("endpoints of a path must differ")
    paths = []
    for p in iter_simple_paths(D, u, v):
        paths.append(p)
        if len(paths) > 1:
            return None
    return paths[0] if paths else None


# ---------------------------------------------------------------------------
# Eulerian tours (exhaustive backtracking)
# ---------------------------------------------------------------------------

def iter_eulerian_tours(D: DiGraph, e: Edge) -> Iterator[EulerianTour]:
    """Every Eulerian tour whose first edge is ``e``."""
    e = tuple(e)
    if e not in D.edge_set:
        raise ValueError(f"{e} is not an edge of the digraph")
    out = D.out_edges
    m = len(D.edges)
    used = {e}
    path = [e]

    def extend(x: int) -> Iterator[Tuple[Edge, ...]]:
        if len(path) == m:
            if x == e[0]:
                yield tuple(path)
            return
        for f in out[x]:
            if f not in used:
                used.add(f)
                path.append(f)
                yield from extend(f[1])
                path.pop()
                used.discard(f)

    for edges in extend(e[1]):
        yield EulerianTour(edges)


def eulerian_tours_from_edge(D: DiGraph, e: Edge) -> List[EulerianTour]:
    return list(iter_eulerian_tours(D, e))


def count_tours_from_edge(D: DiGraph, e: Edge, limit: Optional[int] = None) -> int:
    """Count Eulerian tours starting with ``e`` without materializing them."""
    e = tuple(e)
    if e not in D.edge_set:
        raise ValueError(f"{e} is not an edge of the digraph")
    index = {f: i for i, f in enumerate(D.edges)}
    out = {v: [(index[f], f[1]) for f in fs] for v, fs in D.out_edges.items()}
    used = [False] * len(D.edges)
    used[index[e]] = True
    start = e[0]
    cap = limit if limit is not None else -1

    def extend(x: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if x == start else 0
        total = 0
        for i, y in out[x]:
            if not used[i]:
                used[i] = True
                total += extend(y, remaining - 1)
                used[i] = False
                if total == cap:
                    break
        return total

    return extend(e[1], len(D.edges) - 1)


def count_tours_up_to_shift(D: DiGraph, limit: Optional[int] = None) -> int:
    """Number of Eulerian tours up to cyclic shift.

    Every shift class contains exactly one tour starting with a fixed edge,
    so this is the count of tours starting with the first edge.
    """
    if not D.edges:
        raise ValueError("digraph has no edges")
    return count_tours_from_edge(D, D.edges[0], limit=limit)


# ---------------------------------------------------------------------------
# membership in A_n and its characterizations
# ---------------------------------------------------------------------------

def explain_not_in_A(D: DiGraph) -> Optional[str]:
    """None when ``D`` is a loopless digraph with no isolated vertex and a
    single Eulerian tour; otherwise a message naming the first violation."""
    for u, _ in D.loops:
        return f"vertex {u} has a loop; the digraph must be loopless"
    degs = degrees(D)
    for v, (i, o) in degs.items():
        if i + o == 0:
            return f"vertex {v} is isolated"
    for v, (i, o) in degs.items():
        if i != o:
            return f"vertex {v} is unbalanced (indegree {i}, outdegree {o}); no Eulerian tour exists"
    if not is_strongly_connected(D):
        return "digraph is not strongly connected; no Eulerian tour exists"
    k = count_tours_up_to_shift(D, limit=2)
    if k != 1:
        return "digraph has more than one Eulerian tour up to cyclic shift"
    return None


def in_A(D: DiGraph) -> bool:
    """Loopless, no isolated vertex, exactly one Eulerian tour up to shift."""
    # balance and strong connectivity are necessary for any tour, so they only
    # short-circuit the backtracking count
    return explain_not_in_A(D) is None


def satisfies_lemma1(D: DiGraph) -> bool:
    """Unique simple path between every ordered pair of distinct vertices,
    and every vertex on one or two simple cycles.

    Returns False for digraphs with a loop or an isolated vertex.
    """
    if not D.is_loopless() or isolated_vertices(D):
        return False
    for u in D.vertices:
        for v in D.vertices:
            if u != v and count_simple_paths(D, u, v, limit=2) != 1:
                return False
    on_cycles = dict.fromkeys(D.vertices, 0)
    for c in simple_cycles(D):
        for v in c:
            on_cycles[v] += 1
    return all(k in (1, 2) for k in on_cycles.values())


def cycles_edge_disjoint(D: DiGraph) -> bool:
    seen = set()
    for c in simple_cycles(D):
        for e in cycle_edges(c):
            if e in seen:
                return False
            seen.add(e)
    return True

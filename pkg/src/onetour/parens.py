"""Labeled parenthesis arrangements and the degree-2 digraphs they encode.

Adding a loop at every outdegree-1 vertex of a digraph in ``A_n`` gives a
digraph in ``B_n`` (every in/outdegree 2, unique tour); removing loops goes
back. Walking the unique tour of a ``B_n`` digraph from a marked edge and
opening/closing pair ``i`` on the first/second arrival at ``i`` gives a valid
arrangement, and reading consecutive labels of an arrangement as edges gives
the marked digraph back.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Mapping, NamedTuple, Tuple

from .digraph import (
    DiGraph,
    Edge,
    PreconditionError,
    count_tours_from_edge,
    count_tours_up_to_shift,
    degrees,
    explain_not_in_A,
    iter_eulerian_tours,
)
from .plane_trees import dyck_words

OPEN = "open"
CLOSE = "close"


class Token(NamedTuple):
    kind: str
    label: int

    def __str__(self) -> str:
        return ("(" if self.kind == OPEN else ")") + str(self.label)


@dataclass(frozen=True)
class ParenArrangement:
    """``2n`` labeled tokens; each label in 1..n opens once, then closes once.

    Well-formedness is enforced on construction. Validity (no interlaced
    pairs) is a separate question answered by ``is_valid``.
    """

    tokens: Tuple[Token, ...]

    def __post_init__(self) -> None:
        toks = tuple(Token(k, int(l)) for k, l in self.tokens)
        if not toks or len(toks) % 2:
            raise ValueError("an arrangement has an even, positive number of tokens")
        n = len(toks) // 2
        state = {}
        for kind, label in toks:
            if kind not in (OPEN, CLOSE):
                raise ValueError(f"token kind must be 'open' or 'close', got {kind!r}")
            if not 1 <= label <= n:
                raise ValueError(f"label {label} outside 1..{n}")
            if kind == OPEN:
                if label in state:
                    raise ValueError(f"label {label} is opened twice")
                state[label] = OPEN
            else:
                if state.get(label) != OPEN:
                    raise ValueError(f"label {label} is closed before it is opened (or twice)")
                state[label] = CLOSE
        object.__setattr__(self, "tokens", toks)

    @property
    def n(self) -> int:
        return len(self.tokens) // 2

    def labels(self) -> Tuple[int, ...]:
        return tuple(t.label for t in self.tokens)

    def to_text(self) -> str:
        return " ".join(str(t) for t in self.tokens)

    @classmethod
    def from_text(cls, text: str) -> "ParenArrangement":
        toks = []
        for word in text.split():
            if len(word) < 2 or word[0] not in "()" or not word[1:].isdigit():
                raise ValueError(f"bad token {word!r}; expected '(i' or ')i'")
            toks.append(Token(OPEN if word[0] == "(" else CLOSE, int(word[1:])))
        return cls(tuple(toks))

    def to_json(self) -> dict:
        return {"n": self.n, "tokens": [[t.kind, t.label] for t in self.tokens]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ParenArrangement":
        try:
            toks = obj["tokens"]
        except (KeyError, TypeError):
            raise ValueError('arrangement JSON needs key "tokens"') from None
        out = []
        for item in toks:
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise ValueError(f"token must be [kind, label], got {item!r}")
            out.append(Token(item[0], item[1]))
        w = cls(tuple(out))
        if "n" in obj and obj["n"] != w.n:
            raise ValueError(f'"n" is {obj["n"]} but there are {len(out)} tokens')
        return w


@dataclass(frozen=True)
class MarkedDigraph:
    graph: DiGraph
    marked_edge: Edge

    def __post_init__(self) -> None:
        e = tuple(self.marked_edge)
        if e not in self.graph.edge_set:
            raise ValueError(f"marked edge {e} is not an edge of the digraph")
        bad = [v for v, d in degrees(self.graph).items() if d != (2, 2)]
        if bad:
            raise ValueError(f"vertex {bad[0]} does not have indegree and outdegree 2")
        object.__setattr__(self, "marked_edge", e)

    def to_json(self) -> dict:
        obj = self.graph.to_json()
        obj["marked"] = list(self.marked_edge)
        return obj

    @classmethod
    def from_json(cls, obj: Mapping) -> "MarkedDigraph":
        if "marked" not in obj:
            raise ValueError('marked digraph JSON needs key "marked"')
        return cls(DiGraph.from_json(obj), tuple(obj["marked"]))


def is_valid(w: ParenArrangement) -> bool:
    """True iff no two pairs interlace, i.e. closes match opens like a stack."""
    stack: List[int] = []
    for kind, label in w.tokens:
        if kind == OPEN:
            stack.append(label)
        elif not stack or stack.pop() != label:
            return False
    return True


def explain_not_in_B(D: DiGraph):
    if D.n < 2:
        return "need n >= 2"
    for v, d in degrees(D).items():
        if d != (2, 2):
            return f"vertex {v} has (indegree, outdegree) = {d}; both must be 2"
    if count_tours_up_to_shift(D, limit=2) != 1:
        return "digraph does not have exactly one Eulerian tour"
    return None


def in_B(D: DiGraph) -> bool:
    return explain_not_in_B(D) is None


def add_loops(D: DiGraph) -> DiGraph:
    reason = explain_not_in_A(D)
    if reason is not None:
        raise PreconditionError(reason)
    loops = [(v, v) for v, (_, o) in degrees(D).items() if o == 1]
    return DiGraph(D.n, D.edges + tuple(loops))


def remove_loops(D: DiGraph) -> DiGraph:
    reason = explain_not_in_B(D)
    if reason is not None:
        raise PreconditionError(reason)
    return DiGraph(D.n, tuple(e for e in D.edges if e[0] != e[1]))


def map_h(M: MarkedDigraph) -> ParenArrangement:
    """Follow the unique tour from the marked edge; the first arrival at
    vertex ``i`` opens pair ``i``, the second closes it."""
    D = M.graph
    if D.n < 2:
        raise PreconditionError("need n >= 2")
    if count_tours_from_edge(D, M.marked_edge, limit=2) != 1:
        raise PreconditionError("digraph does not have exactly one Eulerian tour")
    tour = next(iter_eulerian_tours(D, M.marked_edge))
    seen = set()
    toks = []
    for _, v in tour.edges:
        toks.append(Token(CLOSE if v in seen else OPEN, v))
        seen.add(v)
    return ParenArrangement(tuple(toks))


def inverse_h(w: ParenArrangement) -> MarkedDigraph:
    """Edges join consecutive labels, plus one from the last label back to the
    first; that closing edge is the marked one."""
    if w.n < 2:
        raise PreconditionError("need n >= 2")
    if not is_valid(w):
        raise PreconditionError(f"arrangement has interlaced pairs: {w.to_text()}")
    seq = w.labels()
    edges = list(zip(seq, seq[1:])) + [(seq[-1], seq[0])]
    return MarkedDigraph(DiGraph(w.n, tuple(edges)), (seq[-1], seq[0]))


def enumerate_valid(n: int) -> Iterator[ParenArrangement]:
    """All valid arrangements of n labeled pairs: every balanced word with
    every assignment of labels to pairs (in order of opening)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    words = list(dyck_words(n))
    for word in words:
        for perm in permutations(range(1, n + 1)):
            stack = []
            toks = []
            k = 0
            for step in word:
                if step:
                    stack.append(perm[k])
                    toks.append(Token(OPEN, perm[k]))
                    k += 1
                else:
                    toks.append(Token(CLOSE, stack.pop()))
            yield ParenArrangement(tuple(toks))

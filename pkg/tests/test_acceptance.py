"""Exit criteria. Each test logs one PASS/FAIL line, printed in the pytest
terminal summary under "acceptance criteria".

Run just these with ``pytest tests/test_acceptance.py``.
"""
import io
import random
import time
from functools import lru_cache
from math import factorial

from onetour.best import best_count, corollary_membership
from onetour.cli import main
from onetour.digraph import (
    DiGraph,
    count_tours_from_edge,
    count_tours_up_to_shift,
    degrees,
    in_A,
    is_balanced,
    is_strongly_connected,
    satisfies_lemma1,
)
from onetour.enumeration import brute_force_A, catalan, enumerate_A_via_g, expected_A_count
from onetour.parens import (
    CLOSE,
    OPEN,
    MarkedDigraph,
    ParenArrangement,
    Token,
    add_loops,
    enumerate_valid,
    inverse_h,
    is_valid,
    map_h,
)
from onetour.plane_trees import (
    RootedPlaneTree,
    enumerate_L,
    enumerate_Lprime,
    inverse_g,
    involution_f,
    is_in_Lprime,
    map_g,
    shape_from_dyck,
)

TIME_LIMIT = 60.0


@lru_cache(maxsize=None)
def brute(n):
    return tuple(brute_force_A(n))


# -- random generators ----------------------------------------------------------

def random_dyck(rng, n):
    word, opened = [], 0
    while len(word) < 2 * n:
        closed = len(word) - opened
        if opened < n and (closed == opened or rng.random() < 0.5):
            word.append(1)
            opened += 1
        else:
            word.append(0)
    return word


def random_Lprime_tree(rng, n):
    shape = shape_from_dyck(random_dyck(rng, n))
    perm = list(range(2, n + 1))
    rng.shuffle(perm)
    label = [0, 1] + perm
    kids = [()] * (n + 1)
    for pos, cs in enumerate(shape):
        kids[label[pos]] = tuple(label[c] for c in cs)
    T = RootedPlaneTree(n, tuple(kids))
    return T if is_in_Lprime(T) else involution_f(T)


def random_valid_arrangement(rng, n):
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    toks, stack, k = [], [], 0
    for step in random_dyck(rng, n):
        if step:
            toks.append(Token(OPEN, labels[k]))
            stack.append(labels[k])
            k += 1
        else:
            toks.append(Token(CLOSE, stack.pop()))
    return ParenArrangement(tuple(toks))


def random_balanced_connected(rng, n, max_tours=20000):
    """Union of edge-disjoint random simple cycles (loops allowed), kept only
    when strongly connected. Dense draws with huge tour counts are redrawn so
    the backtracking side stays fast."""
    while True:
        edges = set()
        for _ in range(rng.randint(2, n + 2)):
            k = rng.randint(1, n)
            cyc = rng.sample(range(1, n + 1), k)
            ce = list(zip(cyc, cyc[1:] + cyc[:1]))
            if not edges.intersection(ce):
                edges.update(ce)
        D = DiGraph(n, edges)
        if is_strongly_connected(D) and best_count(D, D.edges[0]) <= max_tours:
            return D


# -- criteria ---------------------------------------------------------------------

def test_ac1_theorem1_counts_by_brute_force(record):
    start = time.perf_counter()
    counts = {}
    for n in (2, 3, 4, 5):
        counts[n] = len(brute(n))
    elapsed = time.perf_counter() - start
    ok = counts == {2: 1, 3: 5, 4: 42, 5: 504} \
        and all(counts[n] == expected_A_count(n) for n in counts) and elapsed <= TIME_LIMIT
    record("AC1 brute-force |A_n| = 1, 5, 42, 504 for n=2..5", ok, f"{counts}, {elapsed:.1f}s")
    assert ok


def test_ac2_bijective_leg_agrees_with_brute_force(record):
    start = time.perf_counter()
    same = {}
    for n in (2, 3, 4, 5):
        via_g = list(enumerate_A_via_g(n))
        same[n] = len(via_g) == len(set(via_g)) and sorted(set(via_g), key=lambda D: D.edges) == list(brute(n))
    sizes = {}
    for n in (6, 7):
        images = list(enumerate_A_via_g(n))
        sizes[n] = (len(images), len(set(images)))
    elapsed = time.perf_counter() - start
    ok = all(same.values()) and sizes == {6: (7920, 7920), 7: (154440, 154440)} \
        and 154440 == factorial(6) * catalan(7) // 2 and elapsed <= TIME_LIMIT
    record("AC2 via-g sets equal brute force (n=2..5); n=6,7 sizes without duplicates", ok,
           f"equal={same}, sizes={sizes}, {elapsed:.1f}s")
    assert ok


def test_ac3_round_trips(record):
    g_ok = {}
    for n in range(2, 7):
        g_ok[n] = all(inverse_g(map_g(T)) == T for T in enumerate_Lprime(n))

    h_exhaustive = {}
    for n in (2, 3):
        words = list(enumerate_valid(n))
        marked = [MarkedDigraph(add_loops(D), e) for D in brute(n) for e in add_loops(D).edges]
        h_exhaustive[n] = (
            len(words) == len(marked) == factorial(n) * catalan(n)
            and all(map_h(inverse_h(w)) == w for w in words)
            and all(inverse_h(map_h(M)) == M for M in marked)
            and {map_h(M) for M in marked} == set(words)
        )

    rng = random.Random(20241016)
    h_random = {}
    for n in (4, 5):
        words = [random_valid_arrangement(rng, n) for _ in range(1000)]
        marked = []
        for _ in range(1000):
            B = add_loops(map_g(random_Lprime_tree(rng, n)))
            marked.append(MarkedDigraph(B, rng.choice(B.edges)))
        h_random[n] = (all(map_h(inverse_h(w)) == w for w in words)
                       and all(inverse_h(map_h(M)) == M for M in marked))

    ok = all(g_ok.values()) and all(h_exhaustive.values()) and all(h_random.values())
    record("AC3 g round trip on L'_n (n<=6); h round trips exhaustive n<=3, 1000+1000 random n=4,5",
           ok, f"g={g_ok}, h_exhaustive={h_exhaustive}, h_random={h_random}")
    assert ok


def test_ac4_involution_f(record):
    result = {}
    for n in range(1, 6):
        L = list(enumerate_L(n))
        involutive = all(involution_f(involution_f(T)) == T for T in L)
        swaps = True
        if n >= 2:
            Lp = {T for T in L if is_in_Lprime(T)}
            swaps = {involution_f(T) for T in Lp} == set(L) - Lp
        result[n] = involutive and swaps
    ok = all(result.values())
    record("AC4 f o f = id on L_n (n<=5), f(L'_n) = L_n minus L'_n (2<=n<=5)", ok, str(result))
    assert ok


def test_ac5_best_equals_backtracking(record):
    checked = 0
    mismatches = []
    for n in (1, 2, 3):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
        for mask in range(1, 1 << len(pairs)):
            D = DiGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if not (is_balanced(D) and is_strongly_connected(D)):
                continue
            for e in D.edges:
                checked += 1
                if best_count(D, e) != count_tours_from_edge(D, e):
                    mismatches.append((D, e))
    exhaustive = checked

    rng = random.Random(5)
    graphs = 0
    for n in (4, 5):
        for _ in range(100):
            D = random_balanced_connected(rng, n)
            graphs += 1
            for e in D.edges:
                checked += 1
                if best_count(D, e) != count_tours_from_edge(D, e):
                    mismatches.append((D, e))
    ok = not mismatches and graphs >= 200
    record("AC5 BEST count = backtracking count (exhaustive n<=3, 100 random each n=4,5)", ok,
           f"{exhaustive} exhaustive + {checked - exhaustive} random (digraph, edge) pairs, "
           f"{len(mismatches)} mismatches")
    assert ok


def test_ac6_characterizations_agree(record):
    candidates = {}
    members = {}
    disagreements = []
    for n in (1, 2, 3, 4):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
        candidates[n] = 1 << len(pairs)
        members[n] = 0
        for mask in range(1 << len(pairs)):
            D = DiGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if any(i + o == 0 for i, o in degrees(D).values()):
                continue
            a, l, c = in_A(D), satisfies_lemma1(D), corollary_membership(D)
            members[n] += a
            if not a == l == c:
                disagreements.append(D)
    ok = not disagreements and candidates[4] == 4096 and members == {1: 0, 2: 1, 3: 5, 4: 42}
    record("AC6 in_A = lemma-1 test = arborescence/outdegree test on all loopless digraphs n<=4",
           ok, f"members={members}, disagreements={len(disagreements)}")
    assert ok


def _cli(argv, stdin_text, tmp_path):
    path = tmp_path / "in.txt"
    path.write_text(stdin_text)
    out = io.StringIO()
    code = main(argv + [str(path)], out=out)
    return code, out.getvalue()


# frozen golden outputs, byte for byte
F_LEFT = '{"children": {"0": [1, 4, 5], "1": [2, 3], "5": [6]}, "n": 6}\n'
F_RIGHT = '{"children": {"0": [1, 2, 3], "1": [4, 5], "5": [6]}, "n": 6}\n'
G_TREE = '{"children": {"0": [1, 4, 5], "1": [2, 7, 3], "5": [6], "7": [9, 8]}, "n": 9}\n'
G_DIGRAPH = ('{"edges": [[1, 2], [1, 4], [2, 7], [3, 1], [4, 5], [5, 1], [5, 6], [6, 5], '
             '[7, 3], [7, 9], [8, 7], [9, 8]], "n": 9}\n')
INV_DIGRAPH = '{"edges": [[1, 4], [1, 5], [2, 1], [3, 1], [4, 6], [5, 2], [6, 3]], "n": 6}\n'
INV_TREE = '{"children": {"0": [1, 4, 6, 3], "1": [5, 2]}, "n": 6}\n'
B3_TEXT = "(1 )1 (2 (3 )3 )2\n"
B3_MARKED = '{"edges": [[1, 1], [1, 2], [2, 1], [2, 3], [3, 2], [3, 3]], "marked": [2, 1], "n": 3}\n'
B3_LOOPLESS = '{"edges": [[1, 2], [2, 1], [2, 3], [3, 2]], "n": 3}\n'


def test_ac7_figure_golden_outputs_through_cli(record, tmp_path):
    checks = {
        "f: left -> right": (["involution"], F_LEFT, F_RIGHT),
        "f: right -> left": (["involution"], F_RIGHT, F_LEFT),
        "g: tree -> digraph": (["tree2digraph"], G_TREE, G_DIGRAPH),
        "g: digraph -> tree": (["digraph2tree"], G_DIGRAPH, G_TREE),
        "inverse map: digraph -> tree": (["digraph2tree"], INV_DIGRAPH, INV_TREE),
        "inverse map: tree -> digraph": (["tree2digraph"], INV_TREE, INV_DIGRAPH),
        "parens -> marked B3*": (["parens2digraph"], B3_TEXT, B3_MARKED),
        "parens -> loopless": (["parens2digraph", "--strip-loops"], B3_TEXT, B3_LOOPLESS),
        "loopless -> parens": (["digraph2parens", "--mark", "2,1"], B3_LOOPLESS, B3_TEXT),
        "marked B3* -> parens": (["digraph2parens", "--mark", "2,1"], B3_MARKED, B3_TEXT),
    }
    failed = [name for name, (argv, given, want) in checks.items()
              if _cli(argv, given, tmp_path) != (0, want)]
    ok = not failed
    record("AC7 figure golden tests reproduce byte-exactly through the CLI", ok,
           f"{len(checks) - len(failed)}/{len(checks)} exact" + (f"; failed: {failed}" if failed else ""))
    assert ok


def test_ac8_parenthesis_counts_and_images(record):
    sizes = {}
    images_ok = {}
    for n in (1, 2, 3, 4):
        words = list(enumerate_valid(n))
        sizes[n] = len(set(words)) if all(is_valid(w) for w in words) else -1
        if n >= 2:
            images_ok[n] = all(
                all(d == (2, 2) for d in degrees(M.graph).values())
                and count_tours_up_to_shift(M.graph) == 1
                for M in map(inverse_h, words)
            )
    ok = sizes == {n: factorial(n) * catalan(n) for n in sizes} == {1: 1, 2: 4, 3: 30, 4: 336} \
        and all(images_ok.values())
    record("AC8 |valid arrangements| = n! C_n (n<=4); every inverse_h image has degrees (2,2), one tour",
           ok, f"sizes={sizes}, images_ok={images_ok}")
    assert ok

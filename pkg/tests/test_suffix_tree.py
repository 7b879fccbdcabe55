import random
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, settings, strategies as st

from strsearch import Counters, build_suffix_tree, make_text
from strsearch import _backend
from strsearch.errors import AlreadyFinalized, MissingSentinel, NotFinalized, SentinelCollision
from strsearch.suffix_tree import TREE_NODE_BYTES

from helpers import ALPHABETS, compact_trie, random_body, scan_oracle


def tree_for(body, backend):
    return build_suffix_tree(body, backend=backend)


# --- construction ------------------------------------------------------------

def test_node_count_mississippi(backend):
    assert tree_for(b"mississippi", backend).node_count == 19


def test_node_count_banana(backend):
    index = tree_for(b"banana", backend)
    assert index.node_count == 11
    assert index.internal_count == 3
    assert index.leaf_count_total == 7


def test_degenerate_text_aaa(backend):
    index = tree_for(b"aaa", backend)
    assert index.leaf_count_total == 4
    # unary spine: root -> "a" -> "a" with leaves hanging off each level
    assert index.internal_count == 2
    assert index.node_count == 7


def test_missing_sentinel(backend):
    with pytest.raises(MissingSentinel):
        build_suffix_tree(make_text(b"abc"), backend=backend)


def test_empty_body_rejected(backend):
    with pytest.raises(ValueError):
        build_suffix_tree(b"", backend=backend)


# --- finalize ------------------------------------------------------------------

def test_finalize_required_for_queries(backend):
    index = build_suffix_tree(b"banana", finalize=False, backend=backend)
    with pytest.raises(NotFinalized):
        index.find_all(b"a")
    with pytest.raises(NotFinalized):
        index.count(b"a")
    with pytest.raises(NotFinalized):
        index.descend(b"a")
    index.finalize()
    assert index.find_all(b"ana") == [1, 3]


def test_finalize_twice_rejected(backend):
    index = build_suffix_tree(b"banana", backend=backend)
    with pytest.raises(AlreadyFinalized):
        index.finalize()


def test_root_leaf_count_banana(backend):
    index = tree_for(b"banana", backend)
    assert index.leaf_count_of(0) == 7


def test_leaf_suffix_indexes_are_permutation(backend):
    rng = random.Random(11)
    for _ in range(20):
        body = random_body(rng, b"abc", rng.randint(1, 90))
        index = tree_for(body, backend)
        leaves = [v for v in range(index.node_count) if index.is_leaf(v)]
        assert sorted(index.suffix_index_of(v) for v in leaves) == list(range(len(body) + 1))


def test_leaf_count_under_a_in_banana(backend):
    index = tree_for(b"banana", backend)
    locus = index.descend(b"a")
    assert locus is not None
    assert index.leaf_count_of(locus.node) == 3  # suffixes at 1, 3, 5


# --- descend -----------------------------------------------------------------------

def test_descend_examples(backend):
    index = tree_for(b"banana", backend)
    locus = index.descend(b"ana")
    assert index.leaf_count_of(locus.node) == 2
    assert index.descend(b"nab") is None
    locus = index.descend(b"b")
    assert index.is_leaf(locus.node)
    assert index.suffix_index_of(locus.node) == 0
    assert locus.edge_offset == 1


def test_descend_comparisons_at_most_pattern_length(backend):
    rng = random.Random(13)
    for _ in range(60):
        body = random_body(rng, b"ab", rng.randint(1, 200))
        index = tree_for(body, backend)
        for _ in range(10):
            m = rng.randint(1, 16)
            if rng.random() < 0.5 and m <= len(body):
                i = rng.randrange(len(body) - m + 1)
                pat = body[i : i + m]
            else:
                pat = random_body(rng, b"ab", m)
            c = Counters()
            index.descend(pat, counters=c)
            assert c.comparisons <= m


def test_pattern_with_sentinel_rejected(backend):
    index = tree_for(b"abc", backend)
    with pytest.raises(SentinelCollision):
        index.find_all(b"a\x00")


# --- count / find_all -----------------------------------------------------------

def test_count_examples(backend):
    index = tree_for(b"mississippi", backend)
    assert index.count(b"issi") == 2
    assert index.count(b"q") == 0
    assert tree_for(b"aaaa", backend).count(b"a") == 4


def test_find_all_examples(backend):
    assert tree_for(b"banana", backend).find_all(b"ana") == [1, 3]
    assert tree_for(b"mississippi", backend).find_all(b"issi") == [1, 4]
    assert tree_for(b"banana", backend).find_all(b"banana") == [0]


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_queries_match_scan_oracle(data):
    from conftest import _available_backends

    symbols = ALPHABETS[data.draw(st.sampled_from(sorted(ALPHABETS)))]
    body = bytes(data.draw(st.lists(st.sampled_from(symbols), min_size=1, max_size=150)))
    pats = []
    for _ in range(3):
        if data.draw(st.booleans()):
            m = data.draw(st.integers(1, min(8, len(body))))
            start = data.draw(st.integers(0, len(body) - m))
            pats.append(body[start : start + m])
        else:
            pats.append(bytes(data.draw(st.lists(st.sampled_from(symbols), min_size=1, max_size=8))))
    for bk in _available_backends():
        index = tree_for(body, bk)
        for pat in pats:
            want = scan_oracle(body, pat)
            assert index.find_all(pat) == want
            assert index.count(pat) == len(want)


# --- structure invariants ----------------------------------------------------------

def _representative_leaf_starts(index):
    """suffix start of one leaf in each node's subtree, by reverse DFS order."""
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(w for _b, w in index.children_of(v))
    rep = [-1] * index.node_count
    for v in reversed(order):
        if index.is_leaf(v):
            rep[v] = index.suffix_index_of(v)
        else:
            rep[v] = rep[index.children_of(v)[0][1]]
    return rep


def check_structure(index, body):
    n = len(body)
    data = body + b"\x00"
    assert index.leaf_count_total == n + 1
    assert n + 2 <= index.node_count <= 2 * (n + 1) - 1
    rep = _representative_leaf_starts(index)
    for v in range(index.node_count):
        kids = index.children_of(v)
        if index.is_leaf(v):
            assert not kids
            continue
        if v != 0:
            assert len(kids) >= 2  # internal nodes are true branch points
        # sibling edges start with distinct bytes, ascending
        first_bytes = [b for b, _w in kids]
        assert first_bytes == sorted(set(first_bytes))
        # leaf counts add up
        assert index.leaf_count_of(v) == sum(index.leaf_count_of(w) for _b, w in kids)
        # suffix link drops exactly the first character of the path string
        if v != 0:
            link = index.suffix_link_of(v)
            d = index.path_depth_of(v)
            dl = index.path_depth_of(link)
            assert dl == d - 1
            path = data[rep[v] : rep[v] + d]
            link_path = data[rep[link] : rep[link] + dl]
            assert link_path == path[1:]
    # edge lengths >= 1 and path depths consistent with spans
    for v in range(1, index.node_count):
        s, e = index.edge_span(v)
        assert e - s >= 1


def test_structure_invariants(backend):
    rng = random.Random(402)
    for body in [b"mississippi", b"banana", b"aaaa", b"ab"]:
        check_structure(tree_for(body, backend), body)
    for _ in range(40):
        symbols = ALPHABETS[rng.choice(sorted(ALPHABETS))]
        body = random_body(rng, symbols, rng.randint(1, 250))
        check_structure(tree_for(body, backend), body)


def test_compacted_trie_is_isomorphic(backend):
    rng = random.Random(77)
    for _ in range(60):
        symbols = ALPHABETS[rng.choice(sorted(ALPHABETS))]
        body = random_body(rng, symbols, rng.randint(1, 160))
        data = body + b"\x00"
        want_count, want_labels = compact_trie(data)
        index = tree_for(body, backend)
        assert index.node_count == want_count
        assert sorted(index.edge_labels()) == want_labels


def test_stats_report(backend):
    stats = tree_for(b"mississippi", backend).stats()
    assert stats.node_count == 19
    assert stats.leaf_count == 12
    assert stats.internal_count == 6
    assert stats.max_depth == 12
    assert stats.logical_bytes == 19 * TREE_NODE_BYTES
    assert tree_for(b"a", backend).stats().node_count == 3
    assert tree_for(b"abab", backend).stats().leaf_count == 5


# --- online construction ---------------------------------------------------------

def _spelled_strings(kernel, data):
    """Every string readable from the root, byte by byte, incl. mid-edge."""
    n = len(data)
    spelled = set()
    stack = [(0, b"")]
    while stack:
        v, path = stack.pop()
        for _b, w in kernel.children_of(v):
            s, e = kernel.edge_span(w)
            if e == -1:
                e = n
            for k in range(s + 1, e + 1):
                spelled.add(path + data[s:k])
            stack.append((w, path + data[s:e]))
    return spelled


def test_online_property_implicit_prefixes(backend):
    # after processing any prefix, the implicit tree spells exactly the
    # substrings of that prefix (hence covers all its suffixes)
    rng = random.Random(31)
    for _ in range(12):
        body = random_body(rng, b"ab", rng.randint(1, 40))
        for i in range(1, len(body) + 1):
            prefix = body[:i]
            kernel = _backend.kernel(backend).TreeKernel(prefix)
            kernel.build(True)
            substrings = {
                prefix[a:b] for a in range(i) for b in range(a + 1, i + 1)
            }
            assert _spelled_strings(kernel, prefix) == substrings


# --- scaling -----------------------------------------------------------------------

def test_build_steps_scale_linearly(backend):
    from strsearch.datagen import DNA_UNIFORM, GenSpec, generate_text

    per_char = {}
    for n in (1_000, 10_000, 100_000):
        body = generate_text(GenSpec(alphabet=DNA_UNIFORM, length=n, seed=n)).body
        index = tree_for(body, backend)
        per_char[n] = index.build_steps / n
        assert index.build_steps <= 20 * n
        assert index.node_count <= 2 * (n + 1) - 1
    ratio = max(per_char.values()) / min(per_char.values())
    assert ratio < 3


# --- concurrency ----------------------------------------------------------------

def test_concurrent_queries(backend):
    rng = random.Random(88)
    body = random_body(rng, b"ACGT", 5000)
    index = tree_for(body, backend)
    pats = [body[rng.randrange(0, 4990) :][:10] for _ in range(40)]
    want = [scan_oracle(body, p) for p in pats]
    with ThreadPoolExecutor(max_workers=4) as pool:
        got = list(pool.map(index.find_all, pats))
    assert got == want

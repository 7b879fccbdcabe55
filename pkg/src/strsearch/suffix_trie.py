"""Uncompressed suffix trie, used for node-count comparison and as an oracle.

One trie node per distinct non-empty substring of the sentinel-terminated
text, plus the root, so ``node_count`` equals the distinct-substring count
plus one. Because the sentinel is unique, every suffix (including the
sentinel-only one) ends at its own leaf: exactly body_len + 1 leaves.

Construction is deliberately the naive per-suffix insertion. The trie exists
for structural comparison against the compressed tree, not for speed, and the
simple build keeps it trustworthy. Quadratic node growth makes long bodies
expensive, so builds refuse bodies beyond a configurable cap.

Counting convention: the root and sentinel-bearing nodes are included. This
is the convention under which "mississippi" yields 66 nodes.
"""

from __future__ import annotations

import gc
from dataclasses import dataclass

from .core import Text, Pattern, as_pattern
from .errors import MissingSentinel, SentinelCollision, TrieCapExceeded

DEFAULT_BODY_CAP = 100_000

# per-node accounting size for the logical memory report: one child-map slot
# (32) plus the stored suffix start (8)
TRIE_NODE_BYTES = 40


class TrieNode:
    __slots__ = ("children", "suffix_start")

    def __init__(self) -> None:
        self.children: dict[int, TrieNode] = {}
        self.suffix_start = -1


@dataclass(frozen=True)
class IndexStats:
    node_count: int
    internal_count: int
    leaf_count: int
    max_depth: int
    logical_bytes: int


class SuffixTrieIndex:
    """Immutable after construction; safe for concurrent reads."""

    def __init__(self, root: TrieNode, text: Text, node_count: int):
        self.root = root
        self.text = text
        self.node_count = node_count

    def find_all(self, pattern: Pattern | bytes | str) -> list[int]:
        """Descend one byte per pattern character, then gather the subtree."""
        pat = as_pattern(pattern)
        if self.text.sentinel in pat.data:
            raise SentinelCollision("pattern contains the text's sentinel byte")
        node = self.root
        for c in pat.data:
            nxt = node.children.get(c)
            if nxt is None:
                return []
            node = nxt
        out = []
        stack = [node]
        while stack:
            v = stack.pop()
            if v.children:
                stack.extend(v.children.values())
            else:
                out.append(v.suffix_start)
        out.sort()
        return out

    def stats(self) -> IndexStats:
        leaves = 0
        max_depth = 0
        stack = [(self.root, 0)]
        while stack:
            v, d = stack.pop()
            if d > max_depth:
                max_depth = d
            if v.children:
                stack.extend((w, d + 1) for w in v.children.values())
            else:
                leaves += 1
        return IndexStats(
            node_count=self.node_count,
            internal_count=self.node_count - leaves - 1,
            leaf_count=leaves,
            max_depth=max_depth,
            logical_bytes=self.node_count * TRIE_NODE_BYTES,
        )


def build_suffix_trie(text: Text | bytes | str, body_cap: int = DEFAULT_BODY_CAP) -> SuffixTrieIndex:
    """Insert every suffix of the sentinel-terminated text, one path each.

    Accepts raw bytes or str for convenience, appending the sentinel; a Text
    argument must already carry one.
    """
    if not isinstance(text, Text):
        from .core import make_text

        text = make_text(text, append_sentinel=True)
    if not text.has_sentinel:
        raise MissingSentinel("suffix trie requires sentinel-terminated text")
    if text.body_len < 1:
        raise ValueError("suffix trie requires a non-empty body")
    if text.body_len > body_cap:
        raise TrieCapExceeded(f"body length {text.body_len} exceeds cap {body_cap}")

    data = text.data
    n_total = len(data)
    root = TrieNode()
    count = 1
    # bulk allocation of up to n^2/2 nodes; cyclic GC passes over the growing
    # object graph dominate the build otherwise
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for i in range(n_total):
            node = root
            j = i
            # walk the shared prefix, then grow a fresh chain for the rest
            while j < n_total:
                nxt = node.children.get(data[j])
                if nxt is None:
                    break
                node = nxt
                j += 1
            while j < n_total:
                nxt = TrieNode()
                node.children[data[j]] = nxt
                node = nxt
                count += 1
                j += 1
            node.suffix_start = i
    finally:
        if gc_was_enabled:
            gc.enable()
    return SuffixTrieIndex(root, text, count)

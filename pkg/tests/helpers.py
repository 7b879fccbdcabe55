"""Independent oracles used across the test suite.

Everything here is deliberately brute force and shares no code with the
library kernels: direct scans, substring set enumeration, and trie
compaction implemented on plain dicts.
"""

from __future__ import annotations

import random


def scan_oracle(body: bytes, pat: bytes) -> list[int]:
    """Character-by-character comparison at every alignment."""
    n, m = len(body), len(pat)
    out = []
    for i in range(n - m + 1):
        if all(body[i + k] == pat[k] for k in range(m)):
            out.append(i)
    return out


def distinct_substring_count(data: bytes) -> int:
    subs = set()
    for i in range(len(data)):
        for j in range(i + 1, len(data) + 1):
            subs.add(data[i:j])
    return len(subs)


def all_borders(pat: bytes) -> list[int]:
    """Lengths of all proper borders (prefix == suffix), descending."""
    return [k for k in range(len(pat) - 1, -1, -1) if pat[:k] == pat[len(pat) - k:]]


def reference_trie(data: bytes) -> dict:
    """Plain dict-of-dicts suffix trie over already-terminated data."""
    root: dict = {}
    for i in range(len(data)):
        node = root
        for c in data[i:]:
            node = node.setdefault(c, {})
    return root


def compact_trie(data: bytes) -> tuple[int, list[bytes]]:
    """Merge unary chains of the reference trie into single edges.

    Returns (node_count, sorted edge-label list) of the compacted tree,
    which must be isomorphic to the suffix tree over the same data.
    """
    root = reference_trie(data)
    labels: list[bytes] = []
    count = 1
    stack = [root]
    while stack:
        node = stack.pop()
        for c, child in node.items():
            label = [c]
            while len(child) == 1:
                (c2, nxt), = child.items()
                label.append(c2)
                child = nxt
            labels.append(bytes(label))
            count += 1
            stack.append(child)
    labels.sort()
    return count, labels


ALPHABETS = {
    "binary": b"ab",
    "dna": b"ACGT",
    "bytes": bytes(range(1, 256)),  # NUL excluded: it is the index sentinel
}


def random_body(rng: random.Random, alphabet: bytes, n: int) -> bytes:
    return bytes(rng.choice(alphabet) for _ in range(n))

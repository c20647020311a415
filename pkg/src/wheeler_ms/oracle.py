"""Brute-force references and test-instance generators.

Nothing here goes through forward search, predecessor tables or the RMQ:
the reference routines work from ``A.edges`` and ``A.labels`` alone so that
they can be trusted to check the fast paths.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .automaton import SENTINEL, Interval, WheelerDFA, validate_wheeler
from .string_index import MatchingStatistic
from .wlcp import INF, WheelerLcpArray


class OracleError(AssertionError):
    """A brute-force result contradicts a structural expectation."""


class _Relaxer:
    """Edge lists grouped by target label, for set-based pattern reading."""

    def __init__(self, A: WheelerDFA):
        self.n = A.n
        self.by_label: dict[str, list[tuple[int, int]]] = {}
        for u, v in A.edges:
            self.by_label.setdefault(A.label(v), []).append((u, v))

    def read(self, pattern: str) -> set[int]:
        states = set(range(1, self.n + 1))
        for c in pattern:
            states = {v for u, v in self.by_label.get(c, ()) if u in states}
            if not states:
                break
        return states

    def interval(self, pattern: str) -> Optional[Interval]:
        states = self.read(pattern)
        if not states:
            return None
        lo, hi = min(states), max(states)
        if hi - lo + 1 != len(states):
            raise OracleError(f"states reading {pattern!r} are not contiguous: {sorted(states)}")
        return Interval(lo, hi)


def brute_T(A: WheelerDFA, pattern: str) -> Optional[Interval]:
    """States at which ``pattern`` can be read, by full edge relaxation.

    Raises :class:`OracleError` if the set is not an interval.
    """
    return _Relaxer(A).interval(pattern)


def brute_matching_statistics(A: WheelerDFA, pattern: str) -> list[MatchingStatistic]:
    """Try every suffix of every pattern prefix, longest first."""
    relax = _Relaxer(A)
    out = []
    for i in range(1, len(pattern) + 1):
        for length in range(i, 0, -1):
            iv = relax.interval(pattern[i - length:i])
            if iv is not None:
                out.append(MatchingStatistic(i, length, iv.l, iv.r))
                break
        else:
            out.append(MatchingStatistic(i, 0, 1, A.n))
    return out


def brute_extreme_strings(A: WheelerDFA, length: int) -> tuple[list[str], list[str]]:
    """Length-``length`` prefixes of the smallest and largest incoming strings.

    Computed by dynamic programming over all predecessors with true
    lexicographic comparison, without assuming anything about the order.
    Index 0 of each list is unused.
    """
    enc = {SENTINEL: chr(1)}
    enc.update((ch, chr(2 + k)) for k, ch in enumerate(A.sigma))
    dec = {v: k for k, v in enc.items()}
    preds: dict[int, list[int]] = {1: [1]}
    for u, v in A.edges:
        preds.setdefault(v, []).append(u)
    code = [""] + [enc[A.label(i)] for i in range(1, A.n + 1)]
    lo = [""] * (A.n + 1)
    hi = [""] * (A.n + 1)
    for _ in range(length):
        lo, hi = (
            [""] + [code[i] + min(lo[p] for p in preds[i]) for i in range(1, A.n + 1)],
            [""] + [code[i] + max(hi[p] for p in preds[i]) for i in range(1, A.n + 1)],
        )
    decode = lambda s: "".join(dec[ch] for ch in s)  # noqa: E731
    return [decode(s) for s in lo], [decode(s) for s in hi]


def _lcp(a: str, b: str):
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k
    return INF


def brute_lcp_array(A: WheelerDFA, cap: Optional[int] = None) -> WheelerLcpArray:
    """Materialise all ``cap``-prefixes (default ``3n``) and compare pairwise."""
    cap = 3 * A.n if cap is None else cap
    lo, hi = brute_extreme_strings(A, cap)
    values = []
    for i in range(1, A.n + 1):
        values.append(_lcp(lo[i], hi[i]))
        if i < A.n:
            values.append(_lcp(hi[i], lo[i + 1]))
    return WheelerLcpArray(values, A.n, cap)


def _colex_automaton(prefixes, sigma: Optional[str]) -> WheelerDFA:
    """Automaton over a prefix-closed string set, states sorted co-lexicographically."""
    prefixes = set(prefixes) | {""}
    if sigma is None:
        sigma = "".join(sorted({ch for p in prefixes for ch in p}))
    rank = {ch: k for k, ch in enumerate(sigma)}
    order = sorted(prefixes, key=lambda p: tuple(rank[ch] for ch in reversed(p)) + (-1,))
    index = {p: k for k, p in enumerate(order, start=1)}
    labels = [SENTINEL] + [p[-1] for p in order[1:]]
    edges = [(index[p[:-1]], index[p]) for p in order[1:]]
    return WheelerDFA(labels, edges, sigma=sigma)


def gen_path_automaton(text: str, sigma: Optional[str] = None) -> WheelerDFA:
    """Chain of ``len(text) + 1`` states reading ``text`` from the initial state."""
    if not text:
        raise ValueError("text must be non-empty")
    A = _colex_automaton((text[:k] for k in range(len(text) + 1)), sigma)
    _require_wheeler(A)
    return A


def gen_trie_automaton(strings: Sequence[str], sigma: Optional[str] = None) -> WheelerDFA:
    """Trie of ``strings`` with states in co-lexicographic order."""
    if not strings:
        raise ValueError("need at least one string")
    A = _colex_automaton((s[:k] for s in strings for k in range(len(s) + 1)), sigma)
    _require_wheeler(A)
    return A


def _require_wheeler(A):
    report = validate_wheeler(A)
    if not report:
        raise OracleError(f"generated automaton is not Wheeler: {report}")


def random_trie_automaton(rng: random.Random, n_strings: int, sigma: str,
                          max_len: int, retries: int = 10) -> WheelerDFA:
    """Trie of random strings; resamples if the result fails validation."""
    for _ in range(retries):
        strings = [_random_string(rng, sigma, rng.randint(1, max_len))
                   for _ in range(n_strings)]
        try:
            return gen_trie_automaton(strings, sigma)
        except OracleError:
            continue
    raise OracleError(f"no valid trie after {retries} attempts")


def random_wheeler_dfa(rng: random.Random, n: int, sigma: str, extra_edges: int = 2,
                       retries: int = 200) -> WheelerDFA:
    """Random automaton built to satisfy both axioms, with in-degrees above one.

    Labels are sorted along the order; for each character the edges are a
    monotone map from distinct sources onto the block of states carrying
    that label.  Samples that leave a state unreachable are discarded.
    """
    if n < 2:
        raise ValueError("need at least two states")
    for _ in range(retries):
        labels = [SENTINEL] + sorted((rng.choice(sigma) for _ in range(n - 1)), key=sigma.index)
        edges = []
        for c in set(labels[1:]):
            block = [i for i, lab in enumerate(labels, start=1) if lab == c]
            count = min(n, len(block) + rng.randint(0, extra_edges))
            sources = sorted(rng.sample(range(1, n + 1), count))
            cuts = sorted(rng.sample(range(1, count), len(block) - 1))
            t = 0
            for k, u in enumerate(sources):
                while t < len(cuts) and cuts[t] <= k:
                    t += 1
                edges.append((u, block[t]))
        try:
            A = WheelerDFA(labels, edges, sigma=sigma)
        except ValueError:
            continue
        _require_wheeler(A)
        return A
    raise OracleError(f"no reachable automaton after {retries} attempts")


def _random_string(rng, sigma, length):
    return "".join(rng.choice(sigma) for _ in range(length))


def random_walk_string(A: WheelerDFA, rng: random.Random, length: int) -> str:
    """Labels along a random forward walk, so the result is readable on ``A``."""
    out_edges: dict[int, list[int]] = {}
    for u, v in sorted(A.edges):
        out_edges.setdefault(u, []).append(v)
    u = rng.randint(1, A.n)
    chars = []
    for _ in range(length):
        nxt = out_edges.get(u)
        if not nxt:
            u = 1
            nxt = out_edges.get(1)
            if not nxt:
                break
        u = rng.choice(nxt)
        chars.append(A.label(u))
    return "".join(chars)


def sample_patterns(A: WheelerDFA, rng: random.Random, count: int, max_len: int,
                    sigma: Optional[str] = None) -> list[str]:
    """Mix of uniform random strings and mutated or spliced walk strings."""
    sigma = sigma or A.sigma or "a"
    patterns = []
    for k in range(count):
        m = rng.randint(1, max_len)
        kind = k % 3
        if kind == 0 or not A.edges:
            p = _random_string(rng, sigma, m)
        else:
            chunks = []
            while sum(map(len, chunks)) < m:
                chunks.append(random_walk_string(A, rng, rng.randint(1, m)))
                if kind == 2:
                    chunks.append(rng.choice(sigma))
            p = "".join(chunks)[:m]
            if not p:
                p = _random_string(rng, sigma, m)
        patterns.append(p)
    return patterns


@dataclass
class TestInstance:
    """An automaton with patterns to run against it, plus how it was made."""

    __test__ = False  # not a pytest class

    automaton: WheelerDFA
    patterns: list
    seed: int
    provenance: str
    params: dict = field(default_factory=dict)


def generate_instances(seed: int, count: int, kinds=("path", "trie", "random"),
                       patterns_per_instance: int = 5, max_pattern: int = 40,
                       max_path: int = 200, max_trie_strings: int = 12,
                       max_random_states: int = 30) -> list[TestInstance]:
    """Deterministic corpus of validated instances cycling through ``kinds``."""
    instances = []
    for k in range(count):
        s = seed * 100003 + k
        rng = random.Random(s)
        kind = kinds[k % len(kinds)]
        sigma = "abcd"[: rng.randint(1, 4)]
        if kind == "path":
            text = _random_string(rng, sigma, rng.randint(1, max_path))
            A = gen_path_automaton(text, sigma)
            params = {"text": text, "sigma": sigma}
        elif kind == "trie":
            # keep the trie at most 60 states
            n_strings = rng.randint(1, max_trie_strings)
            max_len = min(8, max(1, 59 // n_strings))
            A = random_trie_automaton(rng, n_strings, sigma, max_len)
            params = {"strings": n_strings, "max_len": max_len, "sigma": sigma}
        else:
            n = rng.randint(2, max_random_states)
            A = random_wheeler_dfa(rng, n, sigma, extra_edges=rng.randint(0, 4))
            params = {"n": n, "sigma": sigma}
        patterns = sample_patterns(A, rng, patterns_per_instance, max_pattern, sigma)
        instances.append(TestInstance(A, patterns, s, kind, params))
    return instances


def write_golden(path, rows, header: Sequence[str] = ()):
    """Write whitespace-separated records, each header line as a ``#`` comment."""
    with open(path, "w", encoding="utf-8") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")


def read_golden(path) -> list[list[str]]:
    with open(path, encoding="utf-8") as fh:
        return [line.split() for line in fh
                if line.strip() and not line.startswith("#")]

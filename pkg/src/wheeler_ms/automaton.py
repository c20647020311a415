"""Wheeler DFA model, text parser, axiom validator and forward search.

States are numbered ``1..n`` in Wheeler order and state 1 is the initial
state.  Labels live on states (input-consistency): the label of an edge is
the label of its target, and the initial state carries the sentinel ``#``.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

SENTINEL = "#"


class AutomatonError(ValueError):
    """Structurally invalid automaton."""


class ParseError(AutomatonError):
    """Malformed automaton text. ``lineno`` is 1-based, 0 when unknown."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class Interval(NamedTuple):
    """Closed range ``[l, r]`` of Wheeler-order positions.

    The empty interval is represented by ``None`` throughout the package.
    """

    l: int
    r: int

    @property
    def size(self) -> int:
        return self.r - self.l + 1


class WheelerDFA:
    """Deterministic, input-consistent automaton with states in Wheeler order.

    Construction checks the structural invariants (initial state without
    in-edges, determinism, reachability, ``#`` only on state 1).  It does not
    check the Wheeler axioms; use :func:`validate_wheeler` for that.

    Parameters
    ----------
    labels : sequence of str
        ``labels[k]`` is the label of state ``k + 1``; ``labels[0]`` must be ``#``.
    edges : iterable of (int, int)
        ``(source, target)`` pairs, 1-based.
    finals : iterable of int
        Final states. Carried for format fidelity only.
    sigma : str, optional
        Alphabet in increasing order. Defaults to the sorted set of labels.
    """

    def __init__(self, labels, edges, finals=(), sigma: Optional[str] = None):
        labels = tuple(labels)
        if not labels or labels[0] != SENTINEL:
            raise AutomatonError("state 1 must be labelled '#'")
        if sigma is None:
            sigma = "".join(sorted(set(labels[1:])))
        if len(set(sigma)) != len(sigma) or SENTINEL in sigma:
            raise AutomatonError(f"invalid alphabet {sigma!r}")
        self.n = len(labels)
        self.sigma = sigma
        self.labels = labels
        self._rank = {SENTINEL: -1}
        self._rank.update((ch, k) for k, ch in enumerate(sigma))
        for i, lab in enumerate(labels[1:], start=2):
            if lab == SENTINEL:
                raise AutomatonError(f"state {i}: label '#' is reserved for state 1")
            if lab not in self._rank:
                raise AutomatonError(f"state {i}: label {lab!r} not in alphabet")

        self.edges = frozenset((int(u), int(v)) for u, v in edges)
        self.finals = frozenset(int(f) for f in finals)
        for f in self.finals:
            if not 1 <= f <= self.n:
                raise AutomatonError(f"final state {f} out of range")

        n = self.n
        out_labels: dict[int, set[str]] = {}
        min_pred = [0] * (n + 1)
        max_pred = [0] * (n + 1)
        min_pred[1] = max_pred[1] = 1
        by_char: dict[str, list[tuple[int, int]]] = {}
        for u, v in sorted(self.edges):
            if not (1 <= u <= n and 1 <= v <= n):
                raise AutomatonError(f"edge ({u}, {v}) out of range")
            if v == 1:
                raise AutomatonError(f"edge ({u}, {v}) enters the initial state")
            c = labels[v - 1]
            seen = out_labels.setdefault(u, set())
            if c in seen:
                raise AutomatonError(f"state {u} is nondeterministic on {c!r}")
            seen.add(c)
            by_char.setdefault(c, []).append((u, v))
            if min_pred[v] == 0:
                min_pred[v] = u
            max_pred[v] = u
        self._min_pred = min_pred
        self._max_pred = max_pred
        # per character: sources ascending, targets in the same order
        self._sources = {c: [u for u, _ in es] for c, es in by_char.items()}
        self._targets = {c: [v for _, v in es] for c, es in by_char.items()}

        unreachable = _unreachable(n, self.edges)
        if unreachable:
            raise AutomatonError(f"state {unreachable[0]} is unreachable from state 1")

    def label(self, i: int) -> str:
        return self.labels[i - 1]

    def rank(self, ch: str) -> Optional[int]:
        """Position of ``ch`` in the alphabet, ``-1`` for ``#``, None if unknown."""
        return self._rank.get(ch)

    @property
    def full(self) -> Interval:
        return Interval(1, self.n)

    def __repr__(self):
        return f"WheelerDFA(n={self.n}, edges={len(self.edges)}, sigma={self.sigma!r})"

    def to_text(self) -> str:
        """Serialise in the line-oriented ``wdfa`` text format."""
        lines = [f"wdfa {self.n} {self.sigma}".rstrip()]
        for i in range(1, self.n + 1):
            fin = " final" if i in self.finals else ""
            lines.append(f"state {i} {self.label(i)}{fin}")
        lines.extend(f"edge {u} {v}" for u, v in sorted(self.edges))
        return "\n".join(lines) + "\n"


def _unreachable(n, edges) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return [i for i in range(1, n + 1) if i not in seen]


def parse_wdfa(text: str) -> WheelerDFA:
    """Parse the ``wdfa`` text format.

    ::

        # comment
        wdfa <n> <sigma>
        state <index> <label> [final]
        edge <source> <target>

    Errors are raised as :class:`ParseError` carrying the offending line.
    """
    header = None
    labels: dict[int, str] = {}
    state_line: dict[int, int] = {}
    finals = []
    edges: list[tuple[int, int]] = []
    edge_line: dict[tuple[int, int], int] = {}
    out_chars: dict[tuple[int, str], int] = {}
    pending: list[tuple[int, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        kind = tok[0]
        if header is None:
            if kind != "wdfa" or len(tok) < 2:
                raise ParseError("expected header 'wdfa <n> <sigma>'", lineno)
            n = _parse_int(tok[1], lineno)
            if n < 1:
                raise ParseError("automaton needs at least one state", lineno)
            sigma = "".join(tok[2:])
            if len(set(sigma)) != len(sigma) or SENTINEL in sigma:
                raise ParseError(f"invalid alphabet {sigma!r}", lineno)
            header = (n, sigma)
        elif kind == "state":
            if len(tok) not in (3, 4) or (len(tok) == 4 and tok[3] != "final"):
                raise ParseError("expected 'state <index> <label> [final]'", lineno)
            i = _parse_int(tok[1], lineno)
            if i != len(labels) + 1:
                raise ParseError(f"expected state {len(labels) + 1}, got {i}", lineno)
            if i > header[0]:
                raise ParseError(f"state {i} exceeds declared count {header[0]}", lineno)
            lab = tok[2]
            if (i == 1) != (lab == SENTINEL):
                raise ParseError("label '#' is required on state 1 and only there", lineno)
            if i > 1 and (len(lab) != 1 or lab not in header[1]):
                raise ParseError(f"label {lab!r} not in alphabet", lineno)
            labels[i] = lab
            state_line[i] = lineno
            if len(tok) == 4:
                finals.append(i)
        elif kind == "edge":
            if len(tok) != 3:
                raise ParseError("expected 'edge <source> <target>'", lineno)
            pending.append((_parse_int(tok[1], lineno), _parse_int(tok[2], lineno), lineno))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)

    if header is None:
        raise ParseError("missing 'wdfa' header")
    n, sigma = header
    if len(labels) != n:
        raise ParseError(f"declared {n} states, found {len(labels)}")

    for u, v, lineno in pending:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) out of range", lineno)
        if v == 1:
            raise ParseError("edge enters the initial state", lineno)
        if (u, v) in edge_line:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        key = (u, labels[v])
        if key in out_chars:
            raise ParseError(
                f"nondeterministic: state {u} already has a {labels[v]!r}-edge "
                f"(line {out_chars[key]})", lineno)
        out_chars[key] = lineno
        edge_line[(u, v)] = lineno
        edges.append((u, v))

    unreachable = _unreachable(n, edges)
    if unreachable:
        i = unreachable[0]
        raise ParseError(f"state {i} is unreachable from state 1", state_line[i])

    return WheelerDFA([labels[i] for i in range(1, n + 1)], edges, finals, sigma)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def read_wdfa(path) -> WheelerDFA:
    with open(path, encoding="utf-8") as fh:
        return parse_wdfa(fh.read())


@dataclass(frozen=True)
class WheelerReport:
    """Outcome of :func:`validate_wheeler`; truthy when the order is Wheeler."""

    ok: bool
    axiom: Optional[int] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "OK"
        if self.axiom == 1:
            u, v = self.witness
            return f"axiom 1 violated: state {u} < state {v} but label({u}) > label({v})"
        (u1, v1), (u2, v2) = self.witness
        return (f"axiom 2 violated: edges ({u1}, {v1}) and ({u2}, {v2}) "
                f"have target {v1} < {v2} but source {u1} >= {u2}")


def validate_wheeler(A: WheelerDFA) -> WheelerReport:
    """Check both Wheeler axioms, reporting the first violation found."""
    for i in range(1, A.n):
        if A.rank(A.label(i)) > A.rank(A.label(i + 1)):
            return WheelerReport(False, 1, (i, i + 1))
    by_char: dict[str, list[tuple[int, int]]] = {}
    for u, v in A.edges:
        by_char.setdefault(A.label(v), []).append((u, v))
    for c in sorted(by_char, key=A.rank):
        es = sorted(by_char[c], key=lambda e: (e[1], e[0]))
        for a, (u1, v1) in enumerate(es):
            for u2, v2 in es[a + 1:]:
                if v1 < v2 and u1 >= u2:
                    return WheelerReport(False, 2, ((u1, v1), (u2, v2)))
    return WheelerReport(True)


def forward_step(A: WheelerDFA, iv: Interval, c: str) -> Optional[Interval]:
    """States reachable through a ``c``-edge from some state in ``iv``.

    Sources of ``c``-edges are distinct and, by the second axiom, their
    targets are non-decreasing in source order, so the answer is the
    target range of the ``c``-edges whose source falls in ``[l, r]``.
    Returns None for the empty interval.
    """
    sources = A._sources.get(c)
    if sources is None:
        return None
    lo = bisect_left(sources, iv[0])
    hi = bisect_right(sources, iv[1]) - 1
    if lo > hi:
        return None
    targets = A._targets[c]
    return Interval(targets[lo], targets[hi])


def read_forward(A: WheelerDFA, pattern: Iterable[str]) -> Optional[Interval]:
    """Interval of states where ``pattern`` can be read, starting from all states."""
    iv = A.full
    for c in pattern:
        iv = forward_step(A, iv, c)
        if iv is None:
            return None
    return iv


def min_predecessor(A: WheelerDFA, i: int) -> int:
    """Smallest state with an edge into ``i``; the initial state loops on ``#``."""
    return A._min_pred[i]


def max_predecessor(A: WheelerDFA, i: int) -> int:
    return A._max_pred[i]

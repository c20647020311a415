"""scikit-learn style front end.

``fit`` indexes an automaton (or a text), ``transform`` maps a list of
patterns to their per-position matching statistics::

    >>> matcher = WheelerMatcher().fit(read_wdfa("sample19.wdfa"))  # doctest: +SKIP
    >>> matcher.transform(["heba"])  # doctest: +SKIP
"""
from __future__ import annotations

import os

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .automaton import SENTINEL, WheelerDFA, parse_wdfa, read_wdfa, validate_wheeler
from .matching_stats import wdfa_matching_statistics
from .oracle import brute_matching_statistics
from .string_index import TERMINATOR, build_index, string_matching_statistics
from .wlcp import build_lcp_array

RESERVED = SENTINEL + TERMINATOR


def check_pattern(pattern, reserved: str = RESERVED) -> str:
    """Return ``pattern`` if it is a string free of sentinel characters."""
    if not isinstance(pattern, str):
        raise TypeError(f"patterns must be strings, got {type(pattern).__name__}")
    bad = sorted(set(pattern) & set(reserved))
    if bad:
        raise ValueError(f"pattern {pattern!r} contains reserved character(s) {''.join(bad)!r}")
    return pattern


def check_patterns(X, reserved: str = RESERVED) -> list[str]:
    """Validate an iterable of patterns. A bare string is rejected as ambiguous."""
    if isinstance(X, str):
        raise TypeError("expected an iterable of patterns, got a single string; "
                        "wrap it in a list")
    return [check_pattern(p, reserved) for p in X]


def check_automaton(X) -> WheelerDFA:
    """Accept a :class:`WheelerDFA`, its text form, or a path to a ``.wdfa`` file."""
    if isinstance(X, WheelerDFA):
        return X
    if isinstance(X, str) and X.lstrip().startswith(("wdfa", "#")) and "\n" in X:
        return parse_wdfa(X)
    if isinstance(X, (str, os.PathLike)):
        return read_wdfa(X)
    raise TypeError(f"cannot build an automaton from {type(X).__name__}")


class WheelerMatcher(BaseEstimator):
    """Matching statistics over a Wheeler DFA.

    Parameters
    ----------
    method : {"lcp", "brute"}
        ``"lcp"`` runs the LCP-array algorithm; ``"brute"`` the quadratic
        reference, for differential checks.
    validate : bool
        Reject automata whose state numbering is not a Wheeler order.

    Attributes
    ----------
    automaton_ : WheelerDFA
    lcp_ : WheelerLcpArray or None
    n_states_ : int
    """

    def __init__(self, method="lcp", validate=True):
        self.method = method
        self.validate = validate

    def fit(self, X, y=None):
        if self.method not in ("lcp", "brute"):
            raise ValueError(f"unknown method {self.method!r}")
        A = check_automaton(X)
        if self.validate:
            report = validate_wheeler(A)
            if not report:
                raise ValueError(str(report))
        self.automaton_ = A
        self.lcp_ = build_lcp_array(A) if self.method == "lcp" else None
        self.n_states_ = A.n
        return self

    def transform(self, X):
        """List of per-position :class:`MatchingStatistic` lists, one per pattern."""
        check_is_fitted(self, "automaton_")
        patterns = check_patterns(X)
        if self.method == "brute":
            return [brute_matching_statistics(self.automaton_, p) for p in patterns]
        return [wdfa_matching_statistics(self.automaton_, self.lcp_, p) for p in patterns]


class StringMatcher(BaseEstimator):
    """Classical matching statistics against a single text.

    Parameters
    ----------
    append_terminator : bool
        Append ``$`` to the fitted text when it does not already end with it.
    """

    def __init__(self, append_terminator=True):
        self.append_terminator = append_terminator

    def fit(self, X, y=None):
        if not isinstance(X, str):
            raise TypeError("StringMatcher.fit expects the text as a string")
        text = X
        if self.append_terminator and not text.endswith(TERMINATOR):
            text += TERMINATOR
        self.index_ = build_index(text)
        return self

    def transform(self, X):
        check_is_fitted(self, "index_")
        return [string_matching_statistics(self.index_, p) for p in check_patterns(X)]

"""Matching statistics on Wheeler DFAs via an LCP array over automaton states."""
from .automaton import (
    AutomatonError,
    Interval,
    ParseError,
    WheelerDFA,
    WheelerReport,
    forward_step,
    max_predecessor,
    min_predecessor,
    parse_wdfa,
    read_wdfa,
    validate_wheeler,
)
from .estimator import StringMatcher, WheelerMatcher
from .matching_stats import MsState, case1_update, case2_shrink, wdfa_matching_statistics
from .rmq import RangeMinQuery, build_rmq
from .string_index import (
    MatchingStatistic,
    StringIndex,
    backward_step,
    build_index,
    shrink_interval,
    string_matching_statistics,
)
from .wlcp import (
    INF,
    WheelerLcpArray,
    build_lcp_array,
    max_string_prefix,
    min_string_prefix,
)

__version__ = "0.1.0"

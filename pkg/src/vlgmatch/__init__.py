"""Streaming matcher for patterns with variable-length gaps.

A pattern is a sequence of literal strings separated by gaps with lower
and upper length bounds, e.g. ``A.{6,7}CC.{2,6}GT``.  The package scans a
text once, decides which positions end a match, and can enumerate the
exact occurrence combinations behind every match in output-proportional
time with bounded working memory.
"""

from .automaton import Automaton, OccEvent, build_automaton
from .gapgraph import (DualLists, GraphBuilder, GraphNode, ImplicitGapGraph,
                       build_implicit_gap_graph, iter_graph_lines,
                       max_dual_ranges, tail_span_bounds)
from .matcher import (MatcherState, RangeList, find_endpoints,
                      max_live_ranges, start_pos)
from .pattern import (GapBounds, PatternStats, PatternSyntaxError, VlgPattern,
                      parse_pattern, pattern_stats, render_pattern)
from .reporter import (ChunkPlan, count_combinations, expand_combinations,
                       plan_chunks, report_chunked, report_on_the_fly)

__version__ = "0.1.0"

__all__ = [
    "Automaton", "OccEvent", "build_automaton",
    "DualLists", "GraphBuilder", "GraphNode", "ImplicitGapGraph",
    "build_implicit_gap_graph", "iter_graph_lines", "max_dual_ranges",
    "tail_span_bounds",
    "MatcherState", "RangeList", "find_endpoints", "max_live_ranges",
    "start_pos",
    "GapBounds", "PatternStats", "PatternSyntaxError", "VlgPattern",
    "parse_pattern", "pattern_stats", "render_pattern",
    "ChunkPlan", "count_combinations", "expand_combinations", "plan_chunks",
    "report_chunked", "report_on_the_fly",
]

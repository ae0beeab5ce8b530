"""Enumerate full match combinations from the predecessor graph.

A combination is the tuple of end positions (e1, ..., ek), one per layer,
of occurrences that chain together into a match.  Expansion walks from
each final-layer node through contiguous predecessor runs, so the work is
proportional to the output.

Two drivers are provided.  ``report_chunked`` rebuilds the graph over
overlapping text windows and keeps memory bounded by the window size
regardless of text length; ``report_on_the_fly`` streams the text once and
emits every combination the moment its final occurrence appears, pruning
nodes that can no longer contribute.  Both require bounded gaps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .automaton import build_automaton
from .gapgraph import (GraphBuilder, GraphCounters, GraphNode,
                       ImplicitGapGraph)
from .pattern import VlgPattern, ensure_bytes

Combination = tuple[int, ...]
Sink = Callable[[Combination], None]


def _expand(node: GraphNode, run_between, combo: list[int], sink: Sink) -> int:
    combo[node.layer - 1] = node.endpos
    if node.layer == 1:
        sink(tuple(combo))
        return 1
    emitted = 0
    for pred in run_between(node.first, node.last):
        emitted += _expand(pred, run_between, combo, sink)
    return emitted


def expand_combinations(graph: ImplicitGapGraph, sink: Sink) -> int:
    """Emit every combination encoded in ``graph``; returns the count."""
    combo = [0] * graph.num_layers
    emitted = 0
    for node in graph.layer(graph.num_layers):
        emitted += _expand(node, graph.run_between, combo, sink)
    return emitted


def count_combinations(graph: ImplicitGapGraph) -> int:
    """Number of combinations in a finished graph, without enumerating.

    Path counting with prefix sums; exact (Python integers do not
    overflow), linear in the number of nodes.
    """
    counts = [1] * len(graph.layer(1))
    for layer in range(2, graph.num_layers + 1):
        prefix = [0]
        for value in counts:
            prefix.append(prefix[-1] + value)
        counts = [prefix[node.last.seq + 1] - prefix[node.first.seq]
                  for node in graph.layer(layer)]
    return sum(counts)


class ChunkPlan(NamedTuple):
    """Overlapping window layout over a text of ``text_len`` characters.

    Window i (0-based) covers positions [i*stride + 1, i*stride + length],
    clipped to the text.  Consecutive windows overlap in length - stride
    positions, which is at least the longest possible match span, so every
    match lies wholly inside some window.
    """

    length: int
    stride: int
    count: int


def plan_chunks(span: int, text_len: int, length: int | None = None) -> ChunkPlan:
    """Window layout for a maximum match span; length defaults to 2*span."""
    if span < 1:
        raise ValueError("span must be positive")
    if length is None:
        length = 2 * span
    if length < span:
        raise ValueError(
            f"chunk length {length} is shorter than the match span bound {span}")
    stride = max(1, length - span)
    if text_len <= length:
        count = 1
    else:
        count = 1 + -(-(text_len - length) // stride)
    return ChunkPlan(length, stride, count)


@dataclass
class ChunkCounters:
    chunks: int = 0
    peak_graphs: int = 0
    emitted: int = 0


def report_chunked(pattern: VlgPattern, text: bytes | str, sink: Sink, *,
                   chunk_len: int | None = None) -> ChunkCounters:
    """Emit all combinations window by window, each exactly once.

    A window claims a combination iff the match start falls inside the
    window's leading stride positions (the final window claims through the
    end of the text); the claim windows partition the text, and a claimed
    match always fits inside its window.  The current and previous window
    graphs are retained, nothing older.
    """
    data = ensure_bytes(text)
    span = pattern.max_match_span
    if span is None:
        raise ValueError("combination reporting requires bounded gaps")
    counters = ChunkCounters()
    text_len = len(data)
    if pattern.literal_length > text_len:
        return counters
    plan = plan_chunks(span, text_len, chunk_len)
    head_len = len(pattern.subpatterns[0])
    auto = build_automaton(pattern.subpatterns)
    retained: deque[ImplicitGapGraph] = deque(maxlen=2)
    for index in range(plan.count):
        offset = index * plan.stride
        builder = GraphBuilder(pattern)
        auto.stream(data[offset:offset + plan.length], builder.feed)
        graph = builder.finish()
        retained.append(graph)
        counters.chunks += 1
        if len(retained) > counters.peak_graphs:
            counters.peak_graphs = len(retained)
        claim_lo = offset + 1
        claim_hi = text_len if index == plan.count - 1 else offset + plan.stride

        def claim(local: Combination, _offset: int = offset) -> None:
            start = local[0] + _offset - head_len + 1
            if claim_lo <= start <= claim_hi:
                sink(tuple(end + _offset for end in local))
                counters.emitted += 1

        expand_combinations(graph, claim)
    return counters


def report_on_the_fly(pattern: VlgPattern, text: bytes | str,
                      sink: Sink) -> GraphCounters:
    """Stream once; emit each combination as its final occurrence arrives.

    Combinations arrive in nondecreasing order of their last end position.
    Returns the graph builder's counters, whose peak_live_nodes field
    witnesses the bounded working set.
    """
    data = ensure_bytes(text)
    combo = [0] * pattern.num_subpatterns

    def on_match(node: GraphNode) -> None:
        _expand(node, builder.run_between, combo, sink)

    builder = GraphBuilder(pattern, prune=True, on_match=on_match)
    if pattern.literal_length <= len(data):
        build_automaton(pattern.subpatterns).stream(data, builder.feed)
    return builder.counters

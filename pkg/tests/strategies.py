"""Shared hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from iasi import Graph, IntSet

int_sets = st.builds(
    IntSet.from_iterable,
    st.lists(st.integers(0, 24), min_size=1, max_size=5),
)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph.make(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.make(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7):
    """Random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        edges.update(extra)
    return Graph.make(n, edges)

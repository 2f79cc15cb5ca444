"""Maximum rank of a generalized sign pattern.

The largest rank over all real matrices with a given zero/nonzero pattern
is the size of a maximum matching between rows and columns along nonzero
entries. Matching is Kuhn's augmenting-path method, scanning edges in
row-major order so the result (and the matching) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .signs import SignMatrix


@dataclass(frozen=True)
class NonzeroBipartiteGraph:
    m: int
    n: int
    edges: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_matrix(cls, S: SignMatrix) -> "NonzeroBipartiteGraph":
        edges = tuple((i, j) for i in range(S.m) for j in range(S.n) if S.rows[i][j] != 0)
        return cls(S.m, S.n, edges)

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.m)]
        for i, j in self.edges:
            adj[i].append(j)
        return adj


def maximum_matching(graph: NonzeroBipartiteGraph) -> Dict[int, int]:
    """Maximum matching as a dict row -> column."""
    adj = graph.adjacency()
    match_col: Dict[int, int] = {}

    def augment(i: int, seen: set) -> bool:
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if j not in match_col or augment(match_col[j], seen):
                match_col[j] = i
                return True
        return False

    for i in range(graph.m):
        augment(i, set())
    return {i: j for j, i in match_col.items()}


def maxrank(S: SignMatrix) -> int:
    return len(maximum_matching(NonzeroBipartiteGraph.from_matrix(S)))

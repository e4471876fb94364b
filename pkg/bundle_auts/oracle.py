from typing import Dict, Iterator, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .words import FreeWord, SurfaceContext, concat

DEFAULT_DEPTH = 6
DEFAULT_FRONTIER_CAP = 1_000_000


class TrivialWordOracle:
    """
    Breadth-first search for a derivation of the empty word.

    A move inserts one tagged rotation of the relator (or of its inverse) at
    a position where it cancels against a neighbouring letter. Inserting a
    copy tagged e multiplies the word by z^(k*e), so it contributes -e to the
    relator count of the starting word. Deleting a copy is the insertion of
    its inverse and is covered by the same moves.
    """

    def __init__(
        self,
        ctx: SurfaceContext,
        depth: int = DEFAULT_DEPTH,
        frontier_cap: int = DEFAULT_FRONTIER_CAP,
        slack: int = 0,
    ):
        self.ctx = ctx
        self.depth = depth
        self.frontier_cap = frontier_cap
        self.slack = slack

    def _moves(self, word: FreeWord) -> Iterator[Tuple[FreeWord, int]]:
        n = len(word)
        for position in range(n + 1):
            candidates = []
            if position > 0:
                candidates.extend(self.ctx.starting_with.get(-word[position - 1], []))
            if position < n:
                candidates.extend(self.ctx.ending_with.get(-word[position], []))
            seen = set()
            for rotation, tag in candidates:
                if rotation in seen:
                    continue
                seen.add(rotation)
                yield concat(word[:position], rotation, word[position:]), -tag

    def search(self, word: Sequence[int]) -> Optional[int]:
        start = self.ctx.check(word)
        if not start:
            return 0
        limit = len(start) + self.slack
        visited: Dict[FreeWord, int] = {start: 0}
        frontier = [start]
        for _ in range(self.depth):
            next_frontier = []
            for current in frontier:
                count = visited[current]
                for candidate, delta in self._moves(current):
                    if not candidate:
                        return count + delta
                    if len(candidate) > limit or candidate in visited:
                        continue
                    visited[candidate] = count + delta
                    next_frontier.append(candidate)
                    if len(visited) > self.frontier_cap:
                        raise ResourceLimitError(
                            f"Oracle explored more than {self.frontier_cap} words"
                        )
            if not next_frontier:
                break
            frontier = next_frontier
        return None


def bfs_oracle_trivial(
    ctx: SurfaceContext,
    word: Sequence[int],
    depth: int = DEFAULT_DEPTH,
    frontier_cap: int = DEFAULT_FRONTIER_CAP,
    slack: int = 0,
) -> Optional[int]:
    oracle = TrivialWordOracle(ctx, depth=depth, frontier_cap=frontier_cap, slack=slack)
    return oracle.search(word)
